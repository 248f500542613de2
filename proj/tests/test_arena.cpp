#include "doctest.h"

#include "clar/arena.hpp"
#include "clar/numeric.hpp"
#include "gen.hpp"

using namespace clar;

TEST_CASE("eval_closed: sums, products, unary numerals") {
  CHECK(eval_closed(parse_pterm("0'' + 0''")) == BigNat(4));
  for (uint64_t n = 0; n <= 64; ++n) {
    CHECK(eval_closed(unary_numeral(n)) == BigNat(n));
  }
  // Independent oracle: native machine arithmetic.
  CHECK(eval_closed(parse_pterm("#10101 * #101")) == BigNat(21u * 5u));
  CHECK(eval_closed(parse_pterm("#10101 * #101")).to_binary() == "1101001");
}

TEST_CASE("eval_closed: defined function letters") {
  CHECK(eval_closed(parse_pterm("|#1111|")) == BigNat(4));
  CHECK(eval_closed(parse_pterm("|0|")) == BigNat(0));
  CHECK(eval_closed(parse_pterm("2^0''")) == BigNat(4));
  CHECK(eval_closed(parse_pterm("monus(#101, #110)")) == BigNat(0));
  CHECK(eval_closed(parse_pterm("monus(#110, #101)")) == BigNat(1));
  CHECK(eval_closed(parse_pterm("half(#111)")) == BigNat(3));
  CHECK(eval_closed(parse_pterm("br0(0, #1011)")) == BigNat(10));
  CHECK(eval_closed(parse_pterm("br1(0'', #1011)")) == BigNat(15));
}

TEST_CASE("numeric: school-arithmetic predicates against native arithmetic") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    uint64_t u = rng() % (1ull << 40);
    uint64_t v = rng() % (1ull << 40);
    uint64_t y = rng() % 45;
    bool carry = ((u & ((2ull << y) - 1)) + (v & ((2ull << y) - 1))) >> (y + 1);
    CHECK(num::carry1(BigNat(y), BigNat(u), BigNat(v)) == carry);
    bool borrow = u >= v && (u & ((2ull << y) - 1)) < (v & ((2ull << y) - 1));
    CHECK(num::borrow1(BigNat(y), BigNat(u), BigNat(v)) == borrow);
  }
  // Figures from the worked subtraction 110 - 101.
  CHECK(num::borrow1(BigNat(0), BigNat(6), BigNat(5)) == true);
  CHECK(num::borrow1(BigNat(1), BigNat(6), BigNat(5)) == false);
  CHECK(num::borrow1(BigNat(2), BigNat(6), BigNat(5)) == false);
}

TEST_CASE("eval_elementary: three-valued contract") {
  EvalOptions opts;
  CHECK(eval_elementary(parse_formula("0 = 0"), opts) == Truth::True);
  CHECK(eval_elementary(parse_formula("0 = 0'"), opts) == Truth::False);

  Formula succ_never_zero = parse_formula("ex x . x' = 0");
  CHECK(eval_elementary(succ_never_zero, opts) == Truth::False);
  EvalOptions no_rules;
  no_rules.decision_rules = false;
  CHECK(eval_elementary(succ_never_zero, no_rules) == Truth::Unknown);

  EvalOptions small;
  small.blind_bound = 5;
  CHECK(eval_elementary(parse_formula("ex x . x = #101"), small) == Truth::True);
  small.blind_bound = 4;
  CHECK(eval_elementary(parse_formula("ex x . x = #101"), small) == Truth::Unknown);

  // Free variables act as unknowns unless the verdict is forced.
  CHECK(eval_elementary(parse_formula("x = x"), opts) == Truth::True);
  CHECK(eval_elementary(parse_formula("x = y"), opts) == Truth::Unknown);
  CHECK(eval_elementary(parse_formula("x = x | y = 0"), opts) == Truth::True);
}

TEST_CASE("adjudicate: worked examples") {
  EvalOptions opts;
  CHECK(adjudicate({}, parse_formula("0 = 0"), opts) == Verdict::top_won());

  Formula game = parse_formula("call x . cex y . y = x'");
  Position pos = {{Player::Bot, "#101"}, {Player::Top, "#110"}};
  CHECK(adjudicate(pos, game, opts) == Verdict::top_won());
  Position wrong = {{Player::Bot, "#101"}, {Player::Top, "#111"}};
  CHECK(adjudicate(wrong, game, opts) == Verdict::bot_won());

  CHECK(adjudicate({{Player::Top, "0"}}, parse_formula("0 = 0"), opts) ==
        Verdict::illegal(Player::Top, 0));
}

namespace {

struct Scripted : Agent {
  std::vector<std::string> moves;
  size_t at = 0;
  std::string name() const override { return "scripted"; }
  std::optional<std::string> offer(Player, const Position&, Meter&) override {
    if (at < moves.size()) return moves[at++];
    return std::nullopt;
  }
};

struct Silent : Agent {
  std::string name() const override { return "silent"; }
  std::optional<std::string> offer(Player, const Position&, Meter&) override {
    return std::nullopt;
  }
};

}  // namespace

TEST_CASE("run_match: silent environment on a true elementary game") {
  Silent top, env;
  auto r = run_match(top, env, parse_formula("0 = 0"));
  CHECK(r.verdict == Verdict::top_won());
  CHECK(r.transcript.empty());
  CHECK(!r.aborted());
}

TEST_CASE("run_match: transcripts stay legal and meters observe moves") {
  Scripted top;
  top.moves = {"#110"};
  Scripted env;
  env.moves = {"#101"};
  auto r = run_match(top, env, parse_formula("call x . cex y . y = x'"));
  CHECK(r.verdict == Verdict::top_won());
  REQUIRE(r.transcript.size() == 2);
  CHECK(r.transcript[0] == Labmove{Player::Bot, "#101"});
  CHECK(r.meter.background() == 3);
  CHECK(r.meter.amplitude() == 3);
  CHECK(first_illegal(r.transcript, parse_formula("call x . cex y . y = x'")) ==
        std::nullopt);

  std::string report = render_match_report(r);
  CHECK(report.find("verdict: T-won") != std::string::npos);
  CHECK(report == render_match_report(r));  // byte-stable
}

TEST_CASE("run_match: illegal environment move is pinned") {
  Scripted env;
  env.moves = {"1.0"};
  Silent top;
  auto r = run_match(top, env, parse_formula("call x . cex y . y = x'"));
  CHECK(r.verdict == Verdict::illegal(Player::Bot, 0));
}

TEST_CASE("run_match: agent fault aborts without a verdict") {
  struct Faulty : Agent {
    std::string name() const override { return "faulty"; }
    std::optional<std::string> offer(Player, const Position&, Meter&) override {
      throw AgentFault("internal inconsistency");
    }
  } top;
  Scripted env;
  env.moves = {"#101"};
  auto r = run_match(top, env, parse_formula("call x . cex y . y = x'"));
  CHECK(r.aborted());
  CHECK(r.fault.find("faulty") != std::string::npos);
}

TEST_CASE("adjudicate: undetermined on bound exhaustion") {
  EvalOptions opts;
  opts.blind_bound = 3;
  opts.decision_rules = false;
  // ex x . x = #10000 cannot be settled below the bound.
  CHECK(adjudicate({}, parse_formula("ex x . x = #10000"), opts) ==
        Verdict::undetermined());
}

TEST_CASE("run_match: passes are scheduler events, not labmoves") {
  // An environment that interleaves a pass into its play produces the same
  // recorded labmoves, and adjudication is a pure function of those.
  Formula game = parse_formula("call x . cex y . y = x'");
  struct Answerer : Agent {
    bool done = false;
    std::string name() const override { return "answerer"; }
    std::optional<std::string> offer(Player, const Position& pos, Meter&) override {
      if (pos.empty() || done) return std::nullopt;
      done = true;
      return "#110";
    }
  } top1, top2;
  Scripted env1;
  env1.moves = {"#101"};
  struct LatePass : Agent {
    size_t turn = 0;
    std::string name() const override { return "latepass"; }
    std::optional<std::string> offer(Player, const Position&, Meter&) override {
      // Moves, then passes while the machine answers, then would move again.
      if (turn++ == 0) return "#101";
      return std::nullopt;
    }
  } env2;
  auto a = run_match(top1, env1, game);
  auto b = run_match(top2, env2, game);
  CHECK(a.transcript == b.transcript);
  CHECK(a.verdict == b.verdict);
  CHECK(adjudicate(a.transcript, game) == adjudicate(b.transcript, game));
  for (const auto& lm : a.transcript) CHECK(lm.move != "pass");
}

TEST_CASE("meter: counters are nondecreasing across a play") {
  struct Snapshotting : Agent {
    std::vector<std::array<uint64_t, 4>> snaps;
    size_t turn = 0;
    std::string name() const override { return "snapshotting"; }
    std::optional<std::string> offer(Player, const Position&, Meter& m) override {
      m.tick();
      m.register_space(4);
      m.release_space(2);
      snaps.push_back({m.time(), m.space_peak(), m.amplitude(), m.background()});
      if (turn++ == 0) return "#11";
      return std::nullopt;
    }
  } top;
  Scripted env;
  env.moves = {"#101"};
  auto r = run_match(top, env, parse_formula("call x . cex y . y = x + 0"));
  REQUIRE(top.snaps.size() >= 2);
  for (size_t i = 1; i < top.snaps.size(); ++i) {
    for (size_t k = 0; k < 4; ++k) CHECK(top.snaps[i - 1][k] <= top.snaps[i][k]);
  }
  CHECK(r.meter.space_peak() >= 2);
}

TEST_CASE("critical formulas: existential closure of elementarization is false") {
  testgen::Gen gen(2718);
  EvalOptions opts;
  opts.blind_bound = 16;
  for (int i = 0; i < 120; ++i) {
    Formula f = gen.critical(3);
    REQUIRE(is_critical(f));
    Formula closed = close(elementarize(f), FKind::Exists);
    CHECK(eval_elementary(closed, opts) == Truth::False);
  }
}
