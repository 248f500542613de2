#include "doctest.h"

#include <fstream>

#include "clar/cl12.hpp"
#include "gen.hpp"

using namespace clar;
using namespace clar::cl12;

namespace {

Proof seven_line_proof() {
  return Proof::parse_file(std::string(CLAR_TEST_DATA) + "/numerals2.cl12");
}

}  // namespace

TEST_CASE("stability: equality chaining through congruence") {
  Sequent s = Sequent::parse("y1 = 0', y2 = y1' |o- y2 = 0''");
  auto r = stability(s);
  CHECK(r.status == Stability::Valid);
}

TEST_CASE("stability: evaluable falsity and reflexivity") {
  CHECK(stability(Sequent::parse("|o- 0 = 0'")).status == Stability::Invalid);
  CHECK(stability(Sequent::parse("|o- x = x")).status == Stability::Valid);
}

TEST_CASE("stability: a choice antecedent elementarizes to falsity") {
  Sequent s = Sequent::parse("y1 = 0', cex y . y = y1' |o- 0 = 0'");
  CHECK(stability(s).status == Stability::Valid);
}

TEST_CASE("stability: countermodels are genuine") {
  Sequent s = Sequent::parse("y1 = 0', y2 = y1' |o- y2 = 0'");
  auto r = stability(s);
  CHECK(r.status == Stability::Invalid);
  CHECK(r.detail.find("countermodel") != std::string::npos);
}

TEST_CASE("stability: propositional route over atom identity") {
  Sequent s = Sequent::parse("|o- x = y | ~(x = y)");
  CHECK(stability(s).status == Stability::Valid);
}

TEST_CASE("stability: never valid on ground-falsifiable sequents") {
  testgen::Gen gen(555);
  EvalOptions eopts;
  eopts.blind_bound = 24;
  int valid_seen = 0;
  for (int i = 0; i < 150; ++i) {
    Sequent s;
    s.succedent = gen.formula(3);
    for (uint64_t k = 0; k < gen.below(3); ++k) s.antecedent.push_back(gen.formula(2));
    auto st = stability(s);
    if (st.status != Stability::Valid) continue;
    ++valid_seen;
    // Sample ground instantiations; the elementarization must never be false.
    Formula phi = elementarize(s.succedent);
    Formula ants = Formula::truth();
    for (const auto& a : s.antecedent) ants = Formula::conj(ants, elementarize(a));
    Formula imp = Formula::imp(ants, phi);
    for (uint64_t sample = 0; sample < 8; ++sample) {
      Formula ground = imp;
      for (const auto& v : imp.free_vars())
        ground = ground.substitute(v, PTerm::constant(BigNat(gen.below(6))));
      CHECK(eval_elementary(ground, eopts) != Truth::False);
    }
  }
  CHECK(valid_seen > 5);
}

TEST_CASE("check_wait: freshness is enforced") {
  // The premise instantiates the antecedent's choice at y1, which already
  // occurs in the conclusion.
  Sequent concl = Sequent::parse("y1 = 0', cex y . y = y1' |o- cex z . z = 0''");
  Sequent bad = Sequent::parse("y1 = 0', y1 = y1' |o- cex z . z = 0''");
  auto r = check_wait(concl, {bad}, {});
  CHECK(!r.ok);
  CHECK(r.error.find("not fresh") != std::string::npos);
}

TEST_CASE("check_wait: binary choice needs both components") {
  Sequent concl = Sequent::parse("|o- 0 = 0 cand 0 = 0'");
  // Conclusion is stable (elementarization is 0=0) but one premise is missing.
  Sequent p0 = Sequent::parse("|o- 0 = 0");
  auto r = check_wait(concl, {p0}, {});
  CHECK(!r.ok);
  CHECK(r.error.find("missing premise") != std::string::npos);

  Sequent p1 = Sequent::parse("|o- 0 = 0'");
  CHECK(check_wait(concl, {p0, p1}, {}).ok);
}

TEST_CASE("check_wait: extra premises are flagged") {
  Sequent concl = Sequent::parse("|o- x = x");
  Sequent extra = Sequent::parse("|o- 0 = 0");
  auto r = check_wait(concl, {extra}, {});
  CHECK(!r.ok);
  CHECK(r.error.find("does not match any required occurrence") != std::string::npos);
}

TEST_CASE("check_choose: worked examples from the seven-line proof") {
  Proof p = seven_line_proof();
  // line 2 from line 1: succedent instantiated at y2
  CHECK(check_choose(p.lines[1].sequent, p.lines[0].sequent, false, 0, {}, "y2").ok);
  // line 6 from line 5: antecedent 0 instantiated at 0
  CHECK(check_choose(p.lines[5].sequent, p.lines[4].sequent, true, 0, {}, "0").ok);
  // wrong instance
  CHECK(!check_choose(p.lines[1].sequent, p.lines[0].sequent, false, 0, {}, "y1").ok);
}

TEST_CASE("check_choose: instance capture is rejected") {
  // Instantiating the succedent choice at the premise's bound variable.
  Sequent concl = Sequent::parse("|o- cex z . all y . z = y");
  Sequent prem = Sequent::parse("|o- all y . y = y");
  auto r = check_choose(concl, prem, false, 0, {}, "y");
  CHECK(!r.ok);
}

TEST_CASE("check_replicate: shape discipline") {
  Proof p = seven_line_proof();
  CHECK(check_replicate(p.lines[6].sequent, p.lines[5].sequent, 0).ok);
  CHECK(!check_replicate(p.lines[6].sequent, p.lines[4].sequent, 0).ok);
  Sequent empty = Sequent::parse("|o- 0 = 0");
  CHECK(!check_replicate(empty, empty, 0).ok);
}

TEST_CASE("check_proof: the seven-line proof is accepted with no obligations") {
  Proof p = seven_line_proof();
  auto report = check_proof(p);
  CHECK(report.outcome == ProofReport::Outcome::Accepted);
  CHECK(report.obligations().empty());
  CHECK(p.final_sequent() ==
        Sequent::parse("call x . cex y . y = x' |o- cex z . z = 0''"));
}

TEST_CASE("check_proof: empty and malformed proofs") {
  CHECK_THROWS_AS(Proof::parse_text(""), ParseError);
  CHECK_THROWS_AS(Proof::parse_text("line 1: |o- 0 = 0"), ParseError);
}

TEST_CASE("check_proof: twelve single-token mutations are rejected") {
  const std::string original = seven_line_proof().to_string();
  auto mutate = [&](const std::string& from, const std::string& to) {
    std::string text = original;
    auto at = text.find(from);
    REQUIRE(at != std::string::npos);
    text.replace(at, from.size(), to);
    Proof p = Proof::parse_text(text);
    auto report = check_proof(p);
    CAPTURE(from);
    CAPTURE(to);
    CHECK(report.outcome == ProofReport::Outcome::Rejected);
  };

  mutate("JoinChoose(1; path=; inst=y2)", "JoinChoose(1; path=; inst=y1)");  // wrong instance
  mutate("JoinChoose(1; path=; inst=y2)", "JoinChoose(2; path=; inst=y2)");  // self citation
  mutate("MeetChoose(3; ant=1; path=; inst=y1)",
         "MeetChoose(3; ant=0; path=; inst=y1)");  // wrong antecedent index
  mutate("MeetChoose(3; ant=1; path=; inst=y1)",
         "MeetChoose(3; ant=1; path=; inst=y2)");  // wrong instance
  mutate("MeetChoose(5; ant=0; path=; inst=0)",
         "MeetChoose(5; ant=0; path=; inst=#1)");  // wrong constant
  mutate("Replicate(6; ant=0)", "Replicate(5; ant=0)");   // wrong premise
  mutate("line 3: y1 = 0',", "line 3: y2 = 0',");         // corrupted context
  mutate("|o- y2 = 0'' ;;", "|o- y2 = 0' ;;");            // unstable Wait conclusion
  mutate("line 5: cex y . y = 0',", "line 5: cex y . y = 0'',");  // corrupted antecedent
  mutate("MeetChoose(5; ant=0; path=; inst=0)",
         "MeetChoose(5; ant=1; path=; inst=0)");  // wrong index again
  mutate("line 7: call x . cex y . y = x' |o- cex z . z = 0''",
         "line 7: call x . cex y . y = x' |o- cex z . z = 0'");  // corrupted goal
  mutate("Wait(2)", "Wait()");  // dropped premise
}

TEST_CASE("check_proof: permissive mode records unproved stability") {
  // A true universal the oracle cannot settle: strict mode rejects the Wait,
  // permissive mode lists an obligation.
  Proof p = Proof::parse_text("line 1: |o- all y . ex z . z = y * y ;; Wait()\n");
  auto strict = check_proof(p);
  CHECK(strict.outcome == ProofReport::Outcome::Rejected);
  CheckOptions opts;
  opts.permissive = true;
  auto lax = check_proof(p, opts);
  CHECK(lax.outcome == ProofReport::Outcome::AcceptedWithObligations);
  REQUIRE(lax.obligations().size() == 1);
}

TEST_CASE("check_proof: rule locality under line permutation") {
  // Swap lines 1 and 2's positions: 2,1,3..7 with citations remapped.
  Proof p = seven_line_proof();
  Proof q;
  // new order: old2, old1, old3..old7; mapping old->new: 1->2, 2->1, rest same
  auto remap = [](size_t n) { return n == 1 ? 2 : n == 2 ? 1 : n; };
  std::vector<size_t> order = {1, 0, 2, 3, 4, 5, 6};
  for (size_t i = 0; i < order.size(); ++i) {
    ProofLine l = p.lines[order[i]];
    l.number = i + 1;
    for (auto& pr : l.just.premises) pr = remap(pr);
    q.lines.push_back(l);
  }
  // Old line 2 (JoinChoose citing 1) now sits first and cites line 2, which
  // does not precede it; locality holds for orderings that respect premises.
  auto bad = check_proof(q);
  CHECK(bad.outcome == ProofReport::Outcome::Rejected);

  // A premise-respecting permutation: duplicate-free topological reshuffle.
  // Insert an unused but valid extra Wait line between 1 and 2.
  Proof r;
  r.lines.push_back(p.lines[0]);
  ProofLine pad;
  pad.number = 2;
  pad.sequent = Sequent::parse("|o- 0 = 0");
  pad.just.kind = RuleKind::Wait;
  r.lines.push_back(pad);
  for (size_t i = 1; i < p.lines.size(); ++i) {
    ProofLine l = p.lines[i];
    l.number = i + 2;
    for (auto& pr : l.just.premises) pr = pr == 1 ? 1 : pr + 1;
    r.lines.push_back(l);
  }
  auto verdict = check_proof(r);
  CHECK(verdict.outcome == ProofReport::Outcome::Accepted);
  CHECK(verdict.lines.size() == 8);
}

TEST_CASE("proof files round trip") {
  Proof p = seven_line_proof();
  Proof q = Proof::parse_text(p.to_string());
  REQUIRE(q.lines.size() == p.lines.size());
  for (size_t i = 0; i < p.lines.size(); ++i) {
    CHECK(q.lines[i].sequent == p.lines[i].sequent);
    CHECK(q.lines[i].just.to_string() == p.lines[i].just.to_string());
  }
  CHECK(p.to_string() == q.to_string());
}

TEST_CASE("logical validity: a choice-quantifier tautology has a three-line proof") {
  Proof p = Proof::parse_text(
      "line 1: |o- x1 = x1 ;; Wait()\n"
      "line 2: |o- cex y . y = x1 ;; JoinChoose(1; path=; inst=x1)\n"
      "line 3: |o- call x . cex y . y = x ;; Wait(2)\n");
  auto report = check_proof(p);
  CHECK(report.outcome == ProofReport::Outcome::Accepted);
}
