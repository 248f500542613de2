#include "clar/cla11.hpp"

#include <fstream>
#include <sstream>

#include "clar/arena.hpp"

namespace clar::cla11 {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

Formula meet_closure(const Formula& f) { return close(f, FKind::MeetQ); }

}  // namespace

TheoryParams TheoryParams::parse_text(const std::string& text) {
  TheoryParams p;
  bool have_amp = false, have_space = false, have_time = false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto colon = t.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("theory config: expected 'key: value' in '" + t + "'");
    std::string key = trim(t.substr(0, colon));
    std::string val = trim(t.substr(colon + 1));
    if (key == "amplitude") {
      p.amplitude = bounds::parse_boundclass(val);
      have_amp = true;
    } else if (key == "space") {
      p.space = bounds::parse_boundclass(val);
      have_space = true;
    } else if (key == "time") {
      p.time = bounds::parse_boundclass(val);
      have_time = true;
    } else if (key == "trusted-true") {
      p.trusted_true = val == "on" || val == "true" || val == "yes";
    } else if (key == "blind-bound") {
      p.blind_bound = std::stoull(val);
    } else if (key == "closure-budget") {
      p.closure_budget = std::stoull(val);
    } else if (key.rfind("axiom", 0) == 0) {
      Supplementary s;
      std::string rest = trim(key.substr(5));
      auto sp = rest.find(' ');
      if (sp != std::string::npos) {
        s.name = rest.substr(0, sp);
        std::string hint = trim(rest.substr(sp + 1));
        if (hint.rfind("strategy=", 0) == 0) s.strategy = hint.substr(9);
      } else {
        s.name = rest;
      }
      if (s.name.empty()) throw std::invalid_argument("supplementary axiom needs a name");
      s.sentence = parse_formula(val);
      if (!s.sentence.is_sentence())
        throw std::invalid_argument("supplementary axiom '" + s.name + "' is not a sentence");
      p.supplementary.push_back(std::move(s));
    } else {
      throw std::invalid_argument("theory config: unknown key '" + key + "'");
    }
  }
  if (!have_amp || !have_space || !have_time)
    throw std::invalid_argument("theory config must set amplitude, space and time");
  return p;
}

TheoryParams TheoryParams::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read theory config: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

// ---------------------------------------------------------------- axioms

namespace {

Formula peano_axiom(int i) {
  PTerm x = PTerm::var("x");
  PTerm y = PTerm::var("y");
  switch (i) {
    case 1:
      return Formula::forall("x", Formula::negation(Formula::eq(PTerm::zero(), x.succ())));
    case 2:
      return Formula::forall(
          "x", Formula::forall("y", Formula::imp(Formula::eq(x.succ(), y.succ()),
                                                 Formula::eq(x, y))));
    case 3:
      return Formula::forall("x", Formula::eq(PTerm::sum(x, PTerm::zero()), x));
    case 4:
      return Formula::forall(
          "x", Formula::forall("y", Formula::eq(PTerm::sum(x, y.succ()),
                                                PTerm::sum(x, y).succ())));
    case 5:
      return Formula::forall("x", Formula::eq(PTerm::prod(x, PTerm::zero()), PTerm::zero()));
    case 6:
      return Formula::forall(
          "x", Formula::forall("y", Formula::eq(PTerm::prod(x, y.succ()),
                                                PTerm::sum(PTerm::prod(x, y), x))));
    default: throw std::invalid_argument("peano_axiom");
  }
}

Formula successor_axiom() {
  return parse_formula("call x . cex y . y = x'");
}

Formula log_axiom() { return parse_formula("call x . cex y . y = |x|"); }

Formula bit_axiom() { return parse_formula("call x . call y . (Bit(y, x) cor ~Bit(y, x))"); }

// The elementary induction scheme: a universal closure of
// p(0) & all x . (p(x) -> p(x')) -> all x . p(x).
std::optional<std::pair<std::string, Formula>> match_induction_scheme(const Formula& f) {
  Formula body = f;
  while (body.kind() == FKind::Forall) body = body.child(0);
  if (body.kind() != FKind::Imp) return std::nullopt;
  const Formula& rhs = body.child(1);
  if (rhs.kind() != FKind::Forall) return std::nullopt;
  std::string x = rhs.var();
  Formula p = rhs.child(0);
  if (!p.is_elementary()) return std::nullopt;
  Formula expected_lhs;
  try {
    expected_lhs = Formula::conj(
        p.substitute(x, PTerm::zero()),
        Formula::forall(x, Formula::imp(p, p.substitute(x, PTerm::var(x).succ()))));
  } catch (const CaptureError&) {
    return std::nullopt;
  }
  if (!alpha_eq(body.child(0), expected_lhs)) return std::nullopt;
  return std::make_pair(x, p);
}

}  // namespace

std::string AxiomClass::canonical_name() const {
  switch (kind) {
    case AxiomKind::Peano1: return "peano1";
    case AxiomKind::Peano2: return "peano2";
    case AxiomKind::Peano3: return "peano3";
    case AxiomKind::Peano4: return "peano4";
    case AxiomKind::Peano5: return "peano5";
    case AxiomKind::Peano6: return "peano6";
    case AxiomKind::PeanoInduction: return "peano7";
    case AxiomKind::Successor: return "successor";
    case AxiomKind::Log: return "log";
    case AxiomKind::Bit: return "bit";
    case AxiomKind::Supplementary: return "supp:" + supp_name;
    default: return "not-an-axiom";
  }
}

AxiomClass recognize_axiom(const Formula& sentence, const TheoryParams& params) {
  AxiomClass out;
  if (!sentence.is_sentence()) return out;
  for (int i = 1; i <= 6; ++i) {
    if (alpha_eq(sentence, peano_axiom(i))) {
      out.kind = static_cast<AxiomKind>(static_cast<int>(AxiomKind::Peano1) + i - 1);
      return out;
    }
  }
  if (auto ind = match_induction_scheme(sentence)) {
    out.kind = AxiomKind::PeanoInduction;
    out.induction_var = ind->first;
    out.induction_formula = ind->second;
    return out;
  }
  if (alpha_eq(sentence, successor_axiom())) {
    out.kind = AxiomKind::Successor;
    return out;
  }
  if (alpha_eq(sentence, log_axiom())) {
    out.kind = AxiomKind::Log;
    return out;
  }
  if (alpha_eq(sentence, bit_axiom())) {
    out.kind = AxiomKind::Bit;
    return out;
  }
  for (const auto& s : params.supplementary) {
    if (alpha_eq(sentence, s.sentence)) {
      out.kind = AxiomKind::Supplementary;
      out.supp_name = s.name;
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------- bounded

namespace {

// Reverse the length application: wherever the pseudo-term has |v| for a
// variable v, recover v; any variable occurring outside a length is not of
// the b|s| shape.
std::optional<PTerm> unlength(const PTerm& pt) {
  if (pt.kind() == PtKind::Len && pt.args()[0].kind() == PtKind::Var) return pt.args()[0];
  switch (pt.kind()) {
    case PtKind::Var: return std::nullopt;
    case PtKind::Const: return pt;
    default: {
      std::vector<PTerm> args;
      for (const auto& a : pt.args()) {
        auto r = unlength(a);
        if (!r) return std::nullopt;
        args.push_back(std::move(*r));
      }
      return PTerm::make(pt.kind(), std::move(args));
    }
  }
}

void collect_blind_bound(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == FKind::Forall || f.kind() == FKind::Exists) out.insert(f.var());
  for (const auto& k : f.kids()) collect_blind_bound(k, out);
}

struct BoundedCheck {
  const bounds::Boundclass& cls;
  size_t budget;
  const std::set<std::string>& blind_vars;

  bool walk(const Formula& f) {
    switch (f.kind()) {
      case FKind::MeetQ:
      case FKind::JoinQ: {
        const std::string& z = f.var();
        const Formula& body = f.child(0);
        FKind want = f.kind() == FKind::MeetQ ? FKind::Imp : FKind::And;
        if (body.kind() != want) return false;
        const Formula& guard = body.child(0);
        if (guard.kind() != FKind::Cmp || guard.rel() != Rel::Le) return false;
        if (!(guard.pts()[0] == PTerm::len(PTerm::var(z)))) return false;
        auto b = unlength(guard.pts()[1]);
        if (!b || !bounds::is_bound_expr(*b)) return false;
        auto svars = b->vars();
        if (svars.count(z)) return false;
        if (blind_vars.count(z)) return false;
        for (const auto& s : svars) {
          if (blind_vars.count(s)) return false;
        }
        if (!bounds::closure_contains(cls, *b, budget).found) return false;
        return walk(body.child(1));
      }
      default:
        for (const auto& k : f.kids()) {
          if (!walk(k)) return false;
        }
        return true;
    }
  }
};

}  // namespace

bool is_bounded_formula(const Formula& f, const bounds::Boundclass& b, size_t budget) {
  std::set<std::string> blind;
  collect_blind_bound(f, blind);
  BoundedCheck check{b, budget, blind};
  return check.walk(f);
}

// ---------------------------------------------------------------- rules

Report check_lc(const Formula& conclusion, const std::vector<Formula>& cited,
                const cl12::Proof& attached, const CheckOptions& opts) {
  cl12::Sequent expected;
  for (const auto& e : cited) expected.antecedent.push_back(meet_closure(e));
  expected.succedent = meet_closure(conclusion);

  const cl12::Sequent& got = attached.final_sequent();
  bool match = got.antecedent.size() == expected.antecedent.size() &&
               alpha_eq(got.succedent, expected.succedent);
  for (size_t i = 0; match && i < expected.antecedent.size(); ++i) {
    if (!alpha_eq(got.antecedent[i], expected.antecedent[i])) match = false;
  }
  if (!match) {
    return {false, "attached proof ends with '" + got.to_string() + "', expected '" +
                       expected.to_string() + "'", {}};
  }
  cl12::CheckOptions copts;
  copts.permissive = opts.permissive;
  copts.budget = opts.budget;
  auto rep = cl12::check_proof(attached, copts);
  if (!rep.accepted()) {
    return {false, "attached proof rejected at line " + std::to_string(rep.rejected_line) +
                       ": " + rep.reason, {}};
  }
  return {true, "", rep.obligations()};
}

namespace {

// The bound applied to the lengths of its argument variables.
PTerm bound_at_lengths(const PTerm& b) {
  std::map<std::string, PTerm> sub;
  for (const auto& v : b.vars()) sub.emplace(v, PTerm::len(PTerm::var(v)));
  return b.substitute(sub);
}

struct SideConditions {
  std::vector<std::string> errors;
  void require(bool ok, const std::string& what) {
    if (!ok) errors.push_back(what);
  }
};

bool distinct(const std::vector<std::string>& names) {
  std::set<std::string> s(names.begin(), names.end());
  return s.size() == names.size();
}

}  // namespace

Report check_induction(const Formula& conclusion, const Formula& basis, const Formula& step,
                       const TheoryParams& params, const std::string& x, const PTerm& bound,
                       const std::vector<std::string>& s_vars, bool reasonable) {
  SideConditions cond;
  std::vector<std::string> names = s_vars;
  names.push_back(x);
  cond.require(distinct(names), "induction variable and bound variables must be pairwise distinct");
  cond.require(bounds::is_bound_expr(bound), "bound is outside the bound grammar");
  {
    auto bv = bound.vars();
    cond.require(bv == std::set<std::string>(s_vars.begin(), s_vars.end()),
                 "bound variables do not match the declared s-variables");
  }
  PTerm pt = bound_at_lengths(bound);
  Formula guard = Formula::cmp(Rel::Le, PTerm::var(x), pt);

  // Recover the induction formula from the conclusion.
  Formula body = conclusion;
  while (body.kind() == FKind::MeetQ) body = body.child(0);
  Formula f;
  if (body.kind() == FKind::Imp && body.child(0) == guard) {
    f = body.child(1);
  } else {
    cond.require(false, "conclusion is not the closure of x <= " + pt.to_string() + " -> F(x)");
  }
  if (cond.errors.empty()) {
    cond.require(alpha_eq(conclusion, meet_closure(Formula::imp(guard, f))),
                 "conclusion is not the canonical choice closure");
    try {
      Formula expected_basis = meet_closure(f.substitute(x, PTerm::zero()));
      cond.require(alpha_eq(basis, expected_basis),
                   "basis does not match F(0): expected '" + expected_basis.to_string() + "'");
      Formula stepped = f.substitute(x, PTerm::var(x).succ());
      Formula plain_step = Formula::imp(f, stepped);
      Formula reasonable_step =
          Formula::imp(Formula::conj(Formula::cmp(Rel::Lt, PTerm::var(x), pt), f), stepped);
      Formula expected_step = meet_closure(reasonable ? reasonable_step : plain_step);
      cond.require(alpha_eq(step, expected_step),
                   "step does not match: expected '" + expected_step.to_string() + "'");
    } catch (const CaptureError& e) {
      cond.require(false, std::string("instantiating the induction variable captures: ") + e.what());
    }
    cond.require(is_bounded_formula(f, params.space, params.closure_budget),
                 "induction formula is not space-bounded");
  }
  cond.require(bounds::closure_contains(params.time, bound, params.closure_budget).found,
               "induction bound " + bound.to_string() + " is not in the time class " +
                   params.time.spec_string());
  if (!cond.errors.empty()) {
    std::string all;
    for (size_t i = 0; i < cond.errors.size(); ++i) {
      if (i) all += "; ";
      all += cond.errors[i];
    }
    return {false, all, {}};
  }
  return {};
}

Report check_comprehension(const Formula& conclusion, const Formula& premise,
                           const TheoryParams& params, const std::string& x,
                           const std::string& y, const PTerm& bound,
                           const std::vector<std::string>& s_vars, bool reasonable) {
  SideConditions cond;
  std::vector<std::string> names = s_vars;
  names.push_back(x);
  names.push_back(y);
  cond.require(distinct(names), "x, y and the bound variables must be pairwise distinct");
  cond.require(bounds::is_bound_expr(bound), "bound is outside the bound grammar");
  {
    auto bv = bound.vars();
    cond.require(bv == std::set<std::string>(s_vars.begin(), s_vars.end()),
                 "bound variables do not match the declared s-variables");
  }
  PTerm pt = bound_at_lengths(bound);

  // Recover the comprehension formula from the premise.
  Formula body = premise;
  while (body.kind() == FKind::MeetQ) body = body.child(0);
  if (reasonable) {
    Formula lt = Formula::cmp(Rel::Lt, PTerm::var(y), pt);
    if (body.kind() == FKind::Imp && body.child(0) == lt) body = body.child(1);
    else cond.require(false, "premise is not y < bound -> p(y) cor ~p(y)");
  }
  Formula p;
  if (body.kind() == FKind::Join && body.child(1).kind() == FKind::Not &&
      body.child(1).child(0) == body.child(0)) {
    p = body.child(0);
  } else {
    cond.require(false, "premise is not of the form p(y) cor ~p(y)");
  }
  if (cond.errors.empty()) {
    cond.require(p.is_elementary(), "comprehension formula must be elementary");
    cond.require(!p.free_vars().count(x), "comprehension formula must not contain x");
    Formula prem_core = reasonable
                            ? Formula::imp(Formula::cmp(Rel::Lt, PTerm::var(y), pt),
                                           Formula::join(p, Formula::negation(p)))
                            : Formula::join(p, Formula::negation(p));
    cond.require(alpha_eq(premise, meet_closure(prem_core)),
                 "premise is not the canonical choice closure");
    Formula bit = Formula::bit(PTerm::var(y), PTerm::var(x));
    Formula iff = Formula::conj(Formula::imp(bit, p), Formula::imp(p, bit));
    Formula concl_core = Formula::join_q(
        x, Formula::conj(Formula::cmp(Rel::Le, PTerm::len(PTerm::var(x)), pt),
                         Formula::forall(y, Formula::imp(Formula::cmp(Rel::Lt, PTerm::var(y), pt),
                                                         iff))));
    cond.require(alpha_eq(conclusion, meet_closure(concl_core)),
                 "conclusion does not match the comprehension shape: expected '" +
                     meet_closure(concl_core).to_string() + "'");
  }
  cond.require(bounds::closure_contains(params.amplitude, bound, params.closure_budget).found,
               "comprehension bound " + bound.to_string() + " is not in the amplitude class " +
                   params.amplitude.spec_string());
  if (!cond.errors.empty()) {
    std::string all;
    for (size_t i = 0; i < cond.errors.size(); ++i) {
      if (i) all += "; ";
      all += cond.errors[i];
    }
    return {false, all, {}};
  }
  return {};
}

// ---------------------------------------------------------------- proofs

std::string Justification::to_string() const {
  std::string out;
  auto premises = [&] {
    std::string s;
    for (size_t i = 0; i < cited.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(cited[i]);
    }
    return s;
  };
  switch (kind) {
    case Kind::Axiom: return "AX(" + axiom_name + ")";
    case Kind::LC:
      out = "LC(" + premises();
      if (!proof_path.empty()) out += "; proof=" + proof_path;
      return out + ")";
    case Kind::Induction:
    case Kind::Comprehension: {
      out = (kind == Kind::Induction ? "IND(" : "COMP(") + premises();
      out += "; x=" + var_x;
      if (kind == Kind::Comprehension) out += "; y=" + var_y;
      out += "; bound=" + (bound ? bound->to_string() : "");
      out += "; s=";
      for (size_t i = 0; i < s_vars.size(); ++i) {
        if (i) out += ",";
        out += s_vars[i];
      }
      if (reasonable) out += "; reasonable";
      return out + ")";
    }
    case Kind::TrustedTrue: return trusted_flag ? "TT(trusted)" : "TT";
  }
  return out;
}

std::string TheoryProof::to_string() const {
  std::string out;
  for (const auto& l : lines) {
    out += "line " + std::to_string(l.number) + ": " + l.sentence.to_string() + " ;; " +
           l.just.to_string() + "\n";
  }
  return out;
}

namespace {

Justification parse_theory_justification(const std::string& text) {
  std::string t = trim(text);
  Justification j;
  if (t == "TT") {
    j.kind = Justification::Kind::TrustedTrue;
    return j;
  }
  if (t == "TT(trusted)") {
    j.kind = Justification::Kind::TrustedTrue;
    j.trusted_flag = true;
    return j;
  }
  auto open = t.find('(');
  if (open == std::string::npos || t.empty() || t.back() != ')')
    throw ParseError("expected rule name followed by '(...)'", 0);
  std::string name = trim(t.substr(0, open));
  std::string args = t.substr(open + 1, t.size() - open - 2);
  if (name == "AX") {
    j.kind = Justification::Kind::Axiom;
    j.axiom_name = trim(args);
    return j;
  }
  if (name == "LC") j.kind = Justification::Kind::LC;
  else if (name == "IND") j.kind = Justification::Kind::Induction;
  else if (name == "COMP") j.kind = Justification::Kind::Comprehension;
  else throw ParseError("unknown rule '" + name + "'", 0);

  auto parts = split(args, ';');
  std::string prem = trim(parts[0]);
  if (!prem.empty()) {
    for (const auto& n : split(prem, ',')) {
      std::string v = trim(n);
      if (!v.empty()) j.cited.push_back(std::stoull(v));
    }
  }
  for (size_t i = 1; i < parts.size(); ++i) {
    std::string kv = trim(parts[i]);
    if (kv == "reasonable") {
      j.reasonable = true;
      continue;
    }
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in rule arguments", 0);
    std::string key = trim(kv.substr(0, eq));
    std::string val = trim(kv.substr(eq + 1));
    if (key == "proof") j.proof_path = val;
    else if (key == "x") j.var_x = val;
    else if (key == "y") j.var_y = val;
    else if (key == "bound") j.bound = parse_pterm(val);
    else if (key == "s") {
      for (const auto& v : split(val, ',')) {
        std::string s = trim(v);
        if (!s.empty()) j.s_vars.push_back(s);
      }
    } else {
      throw ParseError("unknown rule argument '" + key + "'", 0);
    }
  }
  return j;
}

}  // namespace

TheoryProof TheoryProof::parse_text(const std::string& text, const ParseOptions& opts) {
  TheoryProof proof;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("line", 0) != 0) throw ParseError("expected 'line <n>: ...'", 0);
    auto colon = t.find(':');
    if (colon == std::string::npos) throw ParseError("expected ':' after line number", 0);
    TheoryLine tl;
    tl.number = std::stoull(trim(t.substr(4, colon - 4)));
    std::string rest = t.substr(colon + 1);
    auto sep = rest.find(";;");
    if (sep == std::string::npos) throw ParseError("expected ';;' before the rule", 0);
    tl.sentence = parse_formula(trim(rest.substr(0, sep)), opts);
    tl.just = parse_theory_justification(rest.substr(sep + 2));
    proof.lines.push_back(std::move(tl));
  }
  if (proof.lines.empty()) throw ParseError("empty proof", 0);
  return proof;
}

TheoryProof TheoryProof::parse_file(const std::string& path, const ParseOptions& opts) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read proof file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), opts);
}

std::vector<std::string> TheoryReport::obligations() const {
  std::vector<std::string> out;
  for (const auto& l : lines) out.insert(out.end(), l.obligations.begin(), l.obligations.end());
  return out;
}

std::string TheoryReport::to_string() const {
  std::string out;
  for (const auto& l : lines) {
    out += "line " + std::to_string(l.line) + ": " + (l.ok ? "ok" : "rejected");
    if (!l.message.empty()) out += " - " + l.message;
    out += "\n";
    for (const auto& ob : l.obligations) out += "  obligation: " + ob + "\n";
  }
  switch (outcome) {
    case Outcome::Accepted: out += "accepted\n"; break;
    case Outcome::AcceptedWithObligations:
      out += "accepted with " + std::to_string(obligations().size()) + " obligation(s)\n";
      break;
    case Outcome::Rejected:
      out += "rejected at line " + std::to_string(rejected_line) + ": " + reason + "\n";
      break;
  }
  return out;
}

TheoryReport check_theory_proof(const TheoryParams& params, const TheoryProof& proof,
                                const CheckOptions& opts) {
  TheoryReport report;
  for (size_t i = 0; i < proof.lines.size(); ++i) {
    const TheoryLine& line = proof.lines[i];
    LineStatus status;
    status.line = line.number;
    auto reject = [&](const std::string& why) {
      status.ok = false;
      status.message = why;
      report.lines.push_back(status);
      report.outcome = TheoryReport::Outcome::Rejected;
      report.rejected_line = line.number;
      report.reason = why;
    };
    if (line.number != i + 1) {
      reject("lines must be numbered consecutively from 1");
      return report;
    }
    bool bad = false;
    for (size_t pr : line.just.cited) {
      if (pr == 0 || pr > i) {
        reject("cited line " + std::to_string(pr) + " does not precede this line");
        bad = true;
        break;
      }
    }
    if (bad) return report;
    Formula closed = meet_closure(line.sentence);
    if (!closed.is_sentence()) {
      reject("line is not a sentence after the choice closure");
      return report;
    }

    Report r;
    switch (line.just.kind) {
      case Justification::Kind::Axiom: {
        auto cls = recognize_axiom(closed, params);
        if (cls.kind == AxiomKind::NotAxiom) {
          r = {false, "sentence is not an axiom of the theory", {}};
        } else if (cls.canonical_name() != line.just.axiom_name) {
          r = {false, "sentence is the " + cls.canonical_name() + " axiom, not " +
                          line.just.axiom_name, {}};
        }
        break;
      }
      case Justification::Kind::LC: {
        std::vector<Formula> cited;
        for (size_t pr : line.just.cited)
          cited.push_back(meet_closure(proof.lines[pr - 1].sentence));
        if (line.just.proof_path.empty()) {
          if (opts.extended) {
            r = {false, "extended checking requires an attached proof for LC", {}};
          } else {
            r.obligations.push_back("LC at line " + std::to_string(line.number) +
                                    " taken on trust (no attached proof)");
          }
        } else {
          std::string path = line.just.proof_path;
          if (!opts.base_dir.empty() && path.front() != '/')
            path = opts.base_dir + "/" + path;
          try {
            cl12::Proof attached = cl12::Proof::parse_file(path);
            r = check_lc(closed, cited, attached, opts);
          } catch (const std::exception& e) {
            r = {false, std::string("cannot check attached proof: ") + e.what(), {}};
          }
        }
        break;
      }
      case Justification::Kind::Induction: {
        if (line.just.cited.size() != 2 || !line.just.bound) {
          r = {false, "IND takes basis and step line numbers plus x=, bound=, s=", {}};
          break;
        }
        r = check_induction(closed, meet_closure(proof.lines[line.just.cited[0] - 1].sentence),
                            meet_closure(proof.lines[line.just.cited[1] - 1].sentence), params,
                            line.just.var_x, *line.just.bound, line.just.s_vars,
                            line.just.reasonable);
        break;
      }
      case Justification::Kind::Comprehension: {
        if (line.just.cited.size() != 1 || !line.just.bound) {
          r = {false, "COMP takes a premise line number plus x=, y=, bound=, s=", {}};
          break;
        }
        r = check_comprehension(closed, meet_closure(proof.lines[line.just.cited[0] - 1].sentence),
                                params, line.just.var_x, line.just.var_y, *line.just.bound,
                                line.just.s_vars, line.just.reasonable);
        break;
      }
      case Justification::Kind::TrustedTrue: {
        if (!params.trusted_true) {
          r = {false, "trusted-truth justifications are disabled by the theory config", {}};
          break;
        }
        if (!line.sentence.is_elementary()) {
          r = {false, "trusted-truth applies to elementary sentences only", {}};
          break;
        }
        Formula truth_view = close(line.sentence, FKind::Forall);
        EvalOptions eopts;
        eopts.blind_bound = params.blind_bound;
        Truth v = eval_elementary(truth_view, eopts);
        if (v == Truth::False) {
          r = {false, "sentence evaluates to false", {}};
        } else if (v == Truth::True) {
          status.message = "evaluated true";
        } else if (line.just.trusted_flag) {
          r.obligations.push_back("line " + std::to_string(line.number) +
                                  " accepted on explicit trust: " + line.sentence.to_string());
        } else {
          r = {false,
               "evaluation is inconclusive at the configured bound; mark the line "
               "TT(trusted) to accept it on explicit trust", {}};
        }
        break;
      }
    }
    if (!r.ok) {
      reject(r.error);
      return report;
    }
    status.ok = true;
    status.obligations = r.obligations;
    report.lines.push_back(status);
  }
  report.outcome = report.obligations().empty() ? TheoryReport::Outcome::Accepted
                                                : TheoryReport::Outcome::AcceptedWithObligations;
  return report;
}

}  // namespace clar::cla11
