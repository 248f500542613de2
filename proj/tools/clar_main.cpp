// clar: check proofs, play metered matches, audit boundclass triples.

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "clar/arena.hpp"
#include "clar/bounds.hpp"
#include "clar/cl12.hpp"
#include "clar/cla11.hpp"
#include "clar/strategies.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Exit codes: 0 success; 2 usage; 3 unreadable file; 4 parse error;
// 5 negative verdict (rejected proof, lost match, falsified audit);
// 6 inconclusive within budget; 7 internal fault.
enum ExitCode {
  kOk = 0,
  kUsage = 2,
  kUnreadable = 3,
  kParse = 4,
  kNegative = 5,
  kInconclusive = 6,
  kFault = 7,
};

struct Options {
  std::string format = "plain";
  bool json() const { return format == "json"; }
};

int check_one(const std::string& path, const std::string& theory_path, bool permissive,
              bool extended, const Options& fmt) {
  fs::path p(path);
  if (!fs::exists(p)) {
    std::cerr << "error: no such file: " << path << "\n";
    return kUnreadable;
  }
  std::string ext = p.extension().string();
  json out;
  out["file"] = path;
  bool accepted = false;
  std::string rendered;
  if (ext == ".cl12") {
    auto proof = clar::cl12::Proof::parse_file(path);
    clar::cl12::CheckOptions opts;
    opts.permissive = permissive;
    auto report = clar::cl12::check_proof(proof, opts);
    accepted = report.accepted();
    rendered = report.to_string();
    out["outcome"] = accepted ? "accepted" : "rejected";
    out["obligations"] = report.obligations();
  } else if (ext == ".cla11") {
    if (theory_path.empty()) {
      std::cerr << "error: checking a .cla11 proof needs --theory <cfg>\n";
      return kUsage;
    }
    auto params = clar::cla11::TheoryParams::parse_file(theory_path);
    auto proof = clar::cla11::TheoryProof::parse_file(path);
    clar::cla11::CheckOptions opts;
    opts.permissive = permissive;
    opts.extended = extended;
    opts.base_dir = p.parent_path().string();
    auto report = clar::cla11::check_theory_proof(params, proof, opts);
    accepted = report.accepted();
    rendered = report.to_string();
    out["outcome"] = accepted ? "accepted" : "rejected";
    out["obligations"] = report.obligations();
  } else {
    std::cerr << "error: unknown proof extension '" << ext << "' (want .cl12 or .cla11)\n";
    return kUsage;
  }
  if (fmt.json()) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "== " << path << "\n" << rendered;
  }
  return accepted ? kOk : kNegative;
}

std::string read_game_text(const std::string& arg) {
  if (fs::exists(arg)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

int run_play(const std::string& game_arg, const std::string& agent_spec,
             const std::string& env_spec, clar::MatchConfig cfg, bool permissive,
             const Options& fmt) {
  auto agent = clar::strat::make_agent(agent_spec, permissive);
  clar::Formula game;
  if (game_arg.empty()) {
    auto declared = agent->declared_game();
    if (!declared) {
      std::cerr << "error: agent '" << agent_spec << "' needs an explicit game sentence\n";
      return kUsage;
    }
    game = *declared;
  } else {
    game = clar::parse_formula(read_game_text(game_arg));
    if (!game.is_sentence()) {
      std::cerr << "error: the game must be a sentence\n";
      return kUsage;
    }
    if (auto declared = agent->declared_game()) {
      if (!clar::alpha_eq(game, *declared)) {
        std::cerr << "error: agent '" << agent_spec << "' plays '"
                  << declared->to_string() << "', not '" << game.to_string() << "'\n";
        return kUsage;
      }
      game = *declared;
    }
  }
  auto env = clar::strat::make_env(env_spec, game);
  auto result = clar::run_match(*agent, *env, game, cfg);
  if (fmt.json()) {
    json out;
    out["game"] = game.to_string();
    json moves = json::array();
    for (const auto& lm : result.transcript) moves.push_back(clar::to_string(lm));
    out["transcript"] = moves;
    if (result.aborted()) {
      out["aborted"] = result.fault;
    } else {
      out["verdict"] = result.verdict.to_string();
      out["meter"] = {{"time", result.meter.time()},
                      {"space", result.meter.space_peak()},
                      {"amplitude", result.meter.amplitude()},
                      {"background", result.meter.background()}};
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << render_match_report(result);
  }
  if (result.aborted()) return kFault;
  switch (result.verdict.kind) {
    case clar::Verdict::Kind::TopWon: return kOk;
    case clar::Verdict::Kind::Illegal:
      return result.verdict.offender == clar::Player::Bot ? kOk : kNegative;
    case clar::Verdict::Kind::BotWon: return kNegative;
    default: return kInconclusive;
  }
}

int run_eval(const std::string& text, uint64_t blind_bound, bool decision_rules,
             const Options& fmt) {
  clar::EvalOptions opts;
  opts.blind_bound = blind_bound;
  opts.decision_rules = decision_rules;
  // A bare pseudo-term evaluates to its numeral; anything else is a formula.
  try {
    clar::PTerm t = clar::parse_pterm(text);
    clar::BigNat v = clar::eval_closed(t);
    if (fmt.json()) {
      std::cout << json{{"value", "#" + v.to_binary()}}.dump(2) << "\n";
    } else {
      std::cout << "#" << v.to_binary() << "\n";
    }
    return kOk;
  } catch (const clar::ParseError&) {
  } catch (const std::invalid_argument&) {
  }
  clar::Formula f = clar::parse_formula(text);
  if (!f.is_elementary()) {
    std::cerr << "error: evaluation needs an elementary formula; interactive "
                 "games are played with 'clar play'\n";
    return kUsage;
  }
  clar::Truth v = clar::eval_elementary(f, opts);
  std::string verdict = v == clar::Truth::True    ? "true"
                        : v == clar::Truth::False ? "false"
                                                  : "unknown";
  if (fmt.json()) {
    std::cout << json{{"verdict", verdict}}.dump(2) << "\n";
  } else {
    std::cout << verdict << "\n";
  }
  return v == clar::Truth::Unknown ? kInconclusive : kOk;
}

clar::bounds::AuditConfig audit_config(size_t budget, const std::string& grid_text,
                                       bool with_witness) {
  clar::bounds::AuditConfig cfg;
  cfg.budget = budget;
  if (!grid_text.empty()) {
    cfg.grid.clear();
    std::stringstream ss(grid_text);
    std::string item;
    while (std::getline(ss, item, ',')) cfg.grid.push_back(std::stoull(item));
    if (cfg.grid.empty()) throw std::invalid_argument("empty grid");
  }
  if (with_witness) cfg.witness = clar::strat::make_bound_witness();
  return cfg;
}

json report_json(const clar::bounds::RegularityReport& rep) {
  auto name = [](clar::bounds::CondStatus s) {
    switch (s) {
      case clar::bounds::CondStatus::VerifiedAtSamples: return "verified-at-samples";
      case clar::bounds::CondStatus::Witnessed: return "witnessed";
      case clar::bounds::CondStatus::Falsified: return "falsified";
      default: return "inconclusive";
    }
  };
  json out;
  for (size_t i = 0; i < rep.triple.size(); ++i) {
    out["conditions"][std::to_string(i + 1)] = {{"status", name(rep.triple[i].status)},
                                                {"detail", rep.triple[i].detail}};
  }
  for (size_t i = 0; i < rep.theory.size(); ++i) {
    out["theory"][std::to_string(i + 1)] = {{"status", name(rep.theory[i].status)},
                                            {"detail", rep.theory[i].detail}};
  }
  out["falsified"] = rep.any_falsified();
  return out;
}

int run_regularity(const std::string& triple_spec, size_t budget, const std::string& grid,
                   bool witness, const Options& fmt) {
  // "(B3,B1^1,B5)" or "linear{x},linear{|x|},poly{x}"
  std::string s = triple_spec;
  if (!s.empty() && s.front() == '(') s = s.substr(1);
  if (!s.empty() && s.back() == ')') s.pop_back();
  std::vector<std::string> parts;
  size_t depth = 0, start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    } else if (s[i] == '{') {
      ++depth;
    } else if (s[i] == '}') {
      --depth;
    }
  }
  if (parts.size() != 3) {
    std::cerr << "error: a triple looks like (B3,B1^1,B5) or three class literals\n";
    return kUsage;
  }
  clar::bounds::Triple t{clar::bounds::parse_boundclass(parts[0]),
                         clar::bounds::parse_boundclass(parts[1]),
                         clar::bounds::parse_boundclass(parts[2])};
  auto cfg = audit_config(budget, grid, witness);
  auto rep = clar::bounds::check_regularity(t, cfg);
  if (fmt.json()) {
    json out = report_json(rep);
    out["triple"] = t.to_string();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << t.to_string() << "\n" << rep.to_string();
  }
  return rep.any_falsified() ? kNegative : kOk;
}

int run_table(size_t budget, const std::string& grid, bool witness, size_t jobs,
              const Options& fmt) {
  auto cfg = audit_config(budget, grid, witness);
  auto triples = clar::bounds::catalog_triples();
  std::vector<clar::bounds::CatalogRow> rows(triples.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < triples.size(); ++i)
      rows[i] = {triples[i], clar::bounds::check_regularity(triples[i], cfg)};
  } else {
    std::vector<std::future<clar::bounds::CatalogRow>> futs;
    for (const auto& t : triples) {
      futs.push_back(std::async(std::launch::async, [&cfg, t] {
        return clar::bounds::CatalogRow{t, clar::bounds::check_regularity(t, cfg)};
      }));
    }
    for (size_t i = 0; i < futs.size(); ++i) rows[i] = futs[i].get();
  }
  bool falsified = false;
  for (const auto& r : rows) falsified = falsified || r.report.any_falsified();
  if (fmt.json()) {
    json out = json::array();
    for (const auto& r : rows) {
      json row = report_json(r.report);
      row["triple"] = r.triple.to_string();
      out.push_back(row);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << clar::bounds::render_catalog(rows);
  }
  return falsified ? kNegative : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clar: a toolchain for choice-operator arithmetic: parse the "
               "language, adjudicate games, check sequent and theory proofs, "
               "audit boundclass triples, and play metered matches"};
  app.require_subcommand(1);
  app.fallthrough();
  Options fmt;
  app.add_option("--format", fmt.format, "Output format")
      ->check(CLI::IsMember({"plain", "json"}))
      ->capture_default_str();

  // check
  auto* check = app.add_subcommand("check", "Check .cl12 / .cla11 proof files");
  std::vector<std::string> check_paths;
  std::string theory_path;
  bool permissive = false, non_extended = false;
  size_t jobs = 1;
  check->add_option("paths", check_paths, "Proof files")->required();
  check->add_option("--theory", theory_path, "Theory config for .cla11 proofs");
  check->add_flag("--permissive", permissive,
                  "Record unproved stability as obligations instead of rejecting");
  check->add_flag("--non-extended", non_extended,
                  "Allow LC lines without attached proofs (listed as obligations)");
  check->add_option("--jobs", jobs, "Check files in parallel");

  // play
  auto* play = app.add_subcommand("play", "Run a metered match");
  std::string game_arg, agent_spec, env_spec = "silent";
  clar::MatchConfig mcfg;
  play->add_option("game", game_arg, "Game sentence or file (defaults to the agent's game)");
  play->add_option("--agent", agent_spec, "Machine strategy")->required();
  play->add_option("--env", env_spec, "Environment strategy")->capture_default_str();
  play->add_option("--blind-bound", mcfg.blind_bound, "Blind quantifier search bound")
      ->capture_default_str();
  play->add_option("--max-moves", mcfg.max_moves, "Move cap")->capture_default_str();
  play->add_option("--seed", mcfg.seed, "Scheduler seed (recorded in reports)");
  play->add_flag("--permissive", permissive, "Extract from proofs with obligations");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a closed term or elementary formula");
  std::string eval_text;
  uint64_t blind_bound = 4096;
  bool no_rules = false;
  eval->add_option("formula", eval_text, "Term or formula")->required();
  eval->add_option("--blind-bound", blind_bound, "Blind quantifier search bound")
      ->capture_default_str();
  eval->add_flag("--no-decision-rules", no_rules, "Disable the syntactic decision rules");

  // regularity
  auto* reg = app.add_subcommand("regularity", "Audit one boundclass triple");
  std::string triple_spec, grid;
  size_t budget = 500;
  bool no_witness = false;
  reg->add_option("triple", triple_spec, "e.g. (B3,B1^1,B5)")->required();
  reg->add_option("--budget", budget, "Closure search budget")->capture_default_str();
  reg->add_option("--grid", grid, "Comma-separated sample grid");
  reg->add_flag("--no-witness", no_witness, "Skip strategy witnesses for condition 1");

  // table-dds
  auto* table = app.add_subcommand("table-dds", "Audit the catalogued adequacy triples");
  table->add_option("--budget", budget, "Closure search budget")->capture_default_str();
  table->add_option("--grid", grid, "Comma-separated sample grid");
  table->add_option("--jobs", jobs, "Audit rows in parallel");
  table->add_flag("--no-witness", no_witness, "Skip strategy witnesses for condition 1");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      int worst = kOk;
      if (jobs <= 1 || check_paths.size() == 1) {
        for (const auto& p : check_paths) {
          int rc = check_one(p, theory_path, permissive, !non_extended, fmt);
          worst = std::max(worst, rc);
        }
      } else {
        std::vector<std::future<std::pair<int, std::string>>> futs;
        for (const auto& p : check_paths) {
          futs.push_back(std::async(std::launch::async, [&, p] {
            std::stringstream buffer;
            auto* old = std::cout.rdbuf(buffer.rdbuf());
            int rc = check_one(p, theory_path, permissive, !non_extended, fmt);
            std::cout.rdbuf(old);
            return std::make_pair(rc, buffer.str());
          }));
        }
        for (auto& f : futs) {
          auto [rc, text] = f.get();
          std::cout << text;
          worst = std::max(worst, rc);
        }
      }
      return worst;
    }
    if (play->parsed()) return run_play(game_arg, agent_spec, env_spec, mcfg, permissive, fmt);
    if (eval->parsed()) return run_eval(eval_text, blind_bound, !no_rules, fmt);
    if (reg->parsed()) return run_regularity(triple_spec, budget, grid, !no_witness, fmt);
    if (table->parsed()) return run_table(budget, grid, !no_witness, jobs, fmt);
  } catch (const clar::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const clar::BlowupError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kInconclusive;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "fault: " << e.what() << "\n";
    return kFault;
  }
  return kUsage;
}
