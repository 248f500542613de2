#include "doctest.h"

#include <random>

#include "clar/strategies.hpp"

using namespace clar;
using namespace clar::strat;

namespace {

MatchResult play(Agent& top, Agent& env, const Formula& game, size_t max_moves = 64) {
  MatchConfig cfg;
  cfg.max_moves = max_moves;
  return run_match(top, env, game, cfg);
}

MatchResult play_scripted(std::unique_ptr<Agent> top, std::vector<std::string> env_moves) {
  auto env = env_script(std::move(env_moves));
  Formula game = *top->declared_game();
  return play(*top, *env, game);
}

BigNat final_numer(const MatchResult& r) {
  for (auto it = r.transcript.rbegin(); it != r.transcript.rend(); ++it) {
    if (it->player == Player::Top) return numer_of_move(it->move);
  }
  return BigNat();
}

}  // namespace

TEST_CASE("axiom agents: successor, log, bit") {
  auto r = play_scripted(axiom_agent(AxiomAgentKind::Successor), {"#101"});
  CHECK(r.verdict == Verdict::top_won());
  CHECK(final_numer(r) == BigNat(6));

  r = play_scripted(axiom_agent(AxiomAgentKind::Log), {"#1111"});
  CHECK(r.verdict == Verdict::top_won());
  CHECK(final_numer(r) == BigNat(4));

  // x = #1011, y = #10: bit 2 of 11 is 0, so the right disjunct is true.
  r = play_scripted(axiom_agent(AxiomAgentKind::Bit), {"#1011", "#10"});
  CHECK(r.verdict == Verdict::top_won());
  REQUIRE(!r.transcript.empty());
  CHECK(r.transcript.back() == Labmove{Player::Top, "1"});
}

TEST_CASE("numeral agent: counts provider calls and verifies answers") {
  auto agent = numeral_agent(2);
  auto env = env_silent();
  auto r = play(*agent, *env, *agent->declared_game());
  CHECK(r.verdict == Verdict::top_won());
  CHECK(final_numer(r) == BigNat(2));
  CHECK(numeral_provider_calls(*agent) == 2);

  auto zero = numeral_agent(0);
  auto r0 = play(*zero, *env, *zero->declared_game());
  CHECK(r0.verdict == Verdict::top_won());
  CHECK(numeral_provider_calls(*zero) == 0);
  REQUIRE(r0.transcript.size() == 1);
  CHECK(r0.transcript[0].move == "#0");

  for (uint64_t n = 1; n <= 20; n += 6) {
    auto a = numeral_agent(n);
    auto rr = play(*a, *env, *a->declared_game());
    CHECK(rr.verdict == Verdict::top_won());
    CHECK(numeral_provider_calls(*a) == n);
    CHECK(final_numer(rr) == BigNat(n));
  }
}

TEST_CASE("numeral agent: a silent-then-responsive provider still works") {
  struct Sleepy : Agent {
    int naps = 3;
    std::string name() const override { return "sleepy"; }
    std::optional<std::string> offer(Player, const Position& pos, Meter&) override {
      if (naps > 0) {
        --naps;
        return std::nullopt;
      }
      if (!pos.empty() && pos.back().player == Player::Bot) {
        return "#" + numer_of_move(pos.back().move).succ().to_binary();
      }
      return std::nullopt;
    }
  };
  auto agent = numeral_agent(2, std::make_shared<Sleepy>());
  auto env = env_silent();
  auto r = play(*agent, *env, *agent->declared_game(), 128);
  CHECK(r.verdict == Verdict::top_won());
  CHECK(final_numer(r) == BigNat(2));
}

TEST_CASE("numeral agent: a misbehaving provider is flagged") {
  struct LyingProvider : Agent {
    std::string name() const override { return "liar"; }
    std::optional<std::string> offer(Player, const Position& pos, Meter&) override {
      if (!pos.empty() && pos.back().player == Player::Bot) return "#111";
      return std::nullopt;
    }
  };
  auto agent = numeral_agent(2, std::make_shared<LyingProvider>());
  auto env = env_silent();
  auto r = play(*agent, *env, *agent->declared_game());
  CHECK(r.aborted());
  CHECK(r.fault.find("misbehaved") != std::string::npos);
}

TEST_CASE("arithmetic figures: the worked examples") {
  auto r = play_scripted(add_agent(), {"#10101", "#1101"});
  CHECK(r.verdict == Verdict::top_won());
  CHECK(final_numer(r).to_binary() == "100010");

  r = play_scripted(mult_agent(), {"#11011", "#101"});
  CHECK(r.verdict == Verdict::top_won());
  CHECK(final_numer(r).to_binary() == "10000111");

  // 111 against 100: greater but not longer.
  r = play_scripted(tri_agent(), {"#111", "#100"});
  CHECK(r.verdict == Verdict::top_won());
  REQUIRE(!r.transcript.empty());
  CHECK(r.transcript.back() == Labmove{Player::Top, "1"});

  r = play_scripted(sub_agent(), {"#110", "#101"});
  CHECK(r.verdict == Verdict::top_won());
  CHECK(final_numer(r).to_binary() == "1");
}

TEST_CASE("trichotomy: less-than takes the inner choice") {
  auto r = play_scripted(tri_agent(), {"#11", "#100"});
  CHECK(r.verdict == Verdict::top_won());
  REQUIRE(r.transcript.size() >= 4);
  CHECK(r.transcript[2].move == "0");
  CHECK(r.transcript[3].move == "0");

  r = play_scripted(tri_agent(), {"#100", "#100"});
  CHECK(r.verdict == Verdict::top_won());
  CHECK(r.transcript.back() == Labmove{Player::Top, "1"});
}

TEST_CASE("bit replacement and halving and bitsum") {
  auto r = play_scripted(br_agent(0), {"#1011", "#0"});
  CHECK(r.verdict == Verdict::top_won());
  CHECK(final_numer(r) == BigNat(10));

  r = play_scripted(br_agent(1), {"#1011", "#10"});
  CHECK(r.verdict == Verdict::top_won());
  CHECK(final_numer(r) == BigNat(15));

  // Out-of-range index: the guard is false and waiting wins.
  r = play_scripted(br_agent(0), {"#1011", "#101"});
  CHECK(r.verdict == Verdict::top_won());
  CHECK(r.transcript.size() == 2);

  r = play_scripted(div2_agent(), {"#111"});
  CHECK(final_numer(r) == BigNat(3));

  r = play_scripted(bitsum_agent(), {"#1111", "#1111", "#10", "#10"});
  CHECK(r.verdict == Verdict::top_won());
  CHECK(final_numer(r) == BigNat(3));  // bits 0,1,2 pair up across y=2
}

TEST_CASE("oracle agreement: serial arithmetic equals native arithmetic") {
  std::mt19937_64 rng(20240603);
  for (int i = 0; i < 150; ++i) {
    uint64_t u = rng() % (1ull << 32);
    uint64_t v = rng() % (1ull << 32);
    auto add = play_scripted(add_agent(), {"#" + BigNat(u).to_binary(), "#" + BigNat(v).to_binary()});
    REQUIRE(add.verdict == Verdict::top_won());
    CHECK(final_numer(add) == BigNat(u + v));

    auto sub = play_scripted(sub_agent(), {"#" + BigNat(u).to_binary(), "#" + BigNat(v).to_binary()});
    REQUIRE(sub.verdict == Verdict::top_won());
    CHECK(final_numer(sub) == BigNat(u > v ? u - v : 0));

    uint64_t a = u >> 16, b = v >> 16;
    auto mul = play_scripted(mult_agent(), {"#" + BigNat(a).to_binary(), "#" + BigNat(b).to_binary()});
    REQUIRE(mul.verdict == Verdict::top_won());
    CHECK(final_numer(mul) == BigNat(a * b));

    auto half = play_scripted(div2_agent(), {"#" + BigNat(u).to_binary()});
    CHECK(final_numer(half) == BigNat(u / 2));
  }
}

TEST_CASE("metering: addition stays within the contract bounds") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 80; ++i) {
    uint64_t u = rng() % (1ull << 48);
    uint64_t v = rng() % (1ull << 48);
    auto r = play_scripted(add_agent(), {"#" + BigNat(u).to_binary(), "#" + BigNat(v).to_binary()});
    REQUIRE(r.verdict == Verdict::top_won());
    uint64_t lu = BigNat(u).bit_length(), lv = BigNat(v).bit_length();
    CHECK(r.meter.space_peak() <= 64 * (lu + lv) + 64);
    CHECK(r.meter.amplitude() <= lu + lv);
    CHECK(r.meter.amplitude() <= 2 * r.meter.background());
    CHECK(r.meter.time() >= lu + lv);
  }
}

TEST_CASE("legality: no agent moves illegally across ten thousand random matches") {
  std::vector<std::string> specs = {"add",    "sub", "mult", "tri",      "div2",
                                    "bitsum", "br0", "br1",  "successor", "log", "bit"};
  auto proof = cl12::Proof::parse_file(std::string(CLAR_TEST_DATA) + "/numerals2.cl12");
  for (const auto& spec : specs) {
    size_t illegal_by_top = 0;
    for (uint64_t seed = 1; seed <= 10000; ++seed) {
      auto agent = make_agent(spec);
      Formula game = *agent->declared_game();
      auto env = env_random(seed, game);
      auto r = play(*agent, *env, game, 24);
      if (r.aborted() ||
          (r.verdict.kind == Verdict::Kind::Illegal && r.verdict.offender == Player::Top))
        ++illegal_by_top;
    }
    CAPTURE(spec);
    CHECK(illegal_by_top == 0);
  }
  size_t extractor_illegal = 0;
  for (uint64_t seed = 1; seed <= 10000; ++seed) {
    auto agent = extract_agent(proof, ProviderBundle::auto_wire(proof.final_sequent()));
    Formula game = *agent->declared_game();
    auto env = env_random(seed, game);
    auto r = play(*agent, *env, game, 24);
    if (r.aborted() ||
        (r.verdict.kind == Verdict::Kind::Illegal && r.verdict.offender == Player::Top))
      ++extractor_illegal;
  }
  CHECK(extractor_illegal == 0);
}

TEST_CASE("extractor compositionality: a checked corpus wins exhaustively") {
  struct Entry {
    std::string text_or_file;
    bool is_file;
  };
  std::vector<Entry> corpus = {
      {"/numerals2.cl12", true},
      {"/log_value.cl12", true},
      {"/bit_query.cl12", true},
      {"line 1: |o- x1 = x1 ;; Wait()\n"
       "line 2: |o- cex y . y = x1 ;; JoinChoose(1; path=; inst=x1)\n"
       "line 3: |o- call x . cex y . y = x ;; Wait(2)\n",
       false},
      {"line 1: |o- 0 + 0' = 0' ;; Wait()\n", false},
      {"line 1: |o- 0 = 0 & x1 = x1 ;; Wait()\n"
       "line 2: |o- 0 = 0 & (x1 = x1 cor x1 = 0) ;; JoinChoose(1; path=1; inst=0)\n"
       "line 3: |o- 0 = 0 & call x . (x = x cor x = 0) ;; Wait(2)\n",
       false},
      {"line 1: |o- 0 = 0' -> 0 = 0 ;; Wait()\n"
       "line 2: |o- (0 = 0' cand 0 = 0) -> 0 = 0 ;; JoinChoose(1; path=0; inst=0)\n",
       false},
      {"line 1: |o- all x . 0 = 0 ;; Wait()\n"
       "line 2: |o- all x . (0 = 0 cor 0 = 0') ;; JoinChoose(1; path=; inst=0)\n",
       false},
      {"line 1: |o- #1 = 0' ;; Wait()\n"
       "line 2: |o- cex z . z = 0' ;; JoinChoose(1; path=; inst=#1)\n",
       false},
      {"line 1: |o- 0 = 0 cor 0 = 0' ;; JoinChoose(2; path=; inst=0)\n"
       "line 2: |o- 0 = 0 ;; Wait()\n",
       false},
  };
  // The last corpus entry cites forward on purpose; rewrite it in order.
  corpus.back().text_or_file =
      "line 1: |o- 0 = 0 ;; Wait()\n"
      "line 2: |o- 0 = 0 cor 0 = 0' ;; JoinChoose(1; path=; inst=0)\n";
  REQUIRE(corpus.size() == 10);
  for (size_t ci = 0; ci < corpus.size(); ++ci) {
    cl12::Proof proof = corpus[ci].is_file
                            ? cl12::Proof::parse_file(std::string(CLAR_TEST_DATA) +
                                                      corpus[ci].text_or_file)
                            : cl12::Proof::parse_text(corpus[ci].text_or_file);
    REQUIRE(cl12::check_proof(proof).accepted());
    Formula game = proof.final_sequent().succedent;
    for (uint64_t k = 0; k < 40; ++k) {
      auto agent = extract_agent(proof, ProviderBundle::auto_wire(proof.final_sequent()));
      auto env = env_exhaustive(k, game);
      auto r = play(*agent, *env, game);
      CAPTURE(ci);
      CAPTURE(k);
      REQUIRE(!r.aborted());
      bool top_ok = r.verdict == Verdict::top_won() ||
                    (r.verdict.kind == Verdict::Kind::Illegal &&
                     r.verdict.offender == Player::Bot);
      CHECK(top_ok);
    }
  }
}

TEST_CASE("bound evaluation agents") {
  auto r = play_scripted(bound_eval_agent(parse_pterm("|x|")), {"#1111"});
  CHECK(r.verdict == Verdict::top_won());
  CHECK(final_numer(r) == BigNat(3));  // | |15| | = |4| = 3

  r = play_scripted(bound_eval_agent(parse_pterm("x")), {"#101"});
  CHECK(final_numer(r) == BigNat(3));  // |5| = 3

  r = play_scripted(bound_eval_agent(parse_pterm("2^x")), {"#11"});
  CHECK(final_numer(r) == BigNat(4));  // 2^|3| = 4

  r = play_scripted(bound_eval_agent(parse_pterm("u + v")), {"#1111", "#11"});
  CHECK(final_numer(r) == BigNat(6));  // |15| + |3|
}

TEST_CASE("bound witness reports wins") {
  auto witness = make_bound_witness();
  auto rep = witness(parse_pterm("x + x"));
  CHECK(rep.status == bounds::CondStatus::Witnessed);
  rep = witness(parse_pterm("2^x^3"));
  CHECK(rep.status == bounds::CondStatus::Witnessed);
}

TEST_CASE("extractor: the numerals proof compiles to a winning strategy") {
  auto proof = cl12::Proof::parse_file(std::string(CLAR_TEST_DATA) + "/numerals2.cl12");
  auto agent = extract_agent(proof, ProviderBundle::auto_wire(proof.final_sequent()));
  auto env = env_silent();
  Formula game = *agent->declared_game();
  auto r = play(*agent, *env, game);
  CHECK(r.verdict == Verdict::top_won());
  REQUIRE(r.transcript.size() == 1);
  CHECK(r.transcript[0] == Labmove{Player::Top, "#10"});
}

TEST_CASE("extractor: random environments across seeds") {
  auto proof = cl12::Proof::parse_file(std::string(CLAR_TEST_DATA) + "/numerals2.cl12");
  for (uint64_t seed = 0; seed < 25; ++seed) {
    auto agent = extract_agent(proof, ProviderBundle::auto_wire(proof.final_sequent()));
    Formula game = *agent->declared_game();
    auto env = env_random(seed, game);
    auto r = play(*agent, *env, game);
    CAPTURE(seed);
    CHECK(r.verdict == Verdict::top_won());
  }
}

TEST_CASE("extractor: waiting proofs of true elementary goals never move") {
  cl12::Proof p = cl12::Proof::parse_text("line 1: |o- 0 + 0' = 0' ;; Wait()\n");
  auto agent = extract_agent(p, ProviderBundle{});
  auto env = env_silent();
  auto r = play(*agent, *env, p.final_sequent().succedent);
  CHECK(r.verdict == Verdict::top_won());
  CHECK(r.transcript.empty());
}

TEST_CASE("extractor: rejected proofs cannot be compiled") {
  cl12::Proof p = cl12::Proof::parse_text("line 1: |o- 0 = 0' ;; Wait()\n");
  CHECK_THROWS_AS(extract_agent(p, ProviderBundle{}), std::invalid_argument);
}

TEST_CASE("extractor: environment choices steer the walk") {
  // call x . cex y . y = x is won by echoing the environment's choice.
  cl12::Proof p = cl12::Proof::parse_text(
      "line 1: |o- x1 = x1 ;; Wait()\n"
      "line 2: |o- cex y . y = x1 ;; JoinChoose(1; path=; inst=x1)\n"
      "line 3: |o- call x . cex y . y = x ;; Wait(2)\n");
  for (uint64_t k = 0; k < 12; ++k) {
    auto agent = extract_agent(p, ProviderBundle{});
    Formula game = p.final_sequent().succedent;
    auto env = env_exhaustive(k, game);
    auto r = play(*agent, *env, game);
    CAPTURE(k);
    CHECK(r.verdict == Verdict::top_won());
  }
}

TEST_CASE("registry specs resolve") {
  CHECK(make_agent("numeral:5")->declared_game());
  CHECK(make_agent("bound:|x|+|x|")->name() == "bound:|x| + |x|");
  CHECK_THROWS(make_agent("warp"));
  Formula g = parse_formula("0 = 0");
  CHECK(make_env("silent", g)->name() == "silent");
  CHECK(make_env("random:9", g)->name() == "random");
  CHECK_THROWS(make_env("psychic", g));
}
