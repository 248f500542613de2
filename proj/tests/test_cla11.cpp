#include "doctest.h"

#include "clar/cla11.hpp"

using namespace clar;
using namespace clar::cla11;

namespace {

TheoryParams lin_log_poly() {
  return TheoryParams::parse_file(std::string(CLAR_TEST_DATA) + "/lin-log-poly.cfg");
}

CheckOptions data_opts() {
  CheckOptions opts;
  opts.base_dir = CLAR_TEST_DATA;
  return opts;
}

}  // namespace

TEST_CASE("theory config parses classes and flags") {
  auto p = lin_log_poly();
  CHECK(p.amplitude.spec_string() == "linear{x}");
  CHECK(p.space.spec_string() == "linear{|x|}");
  CHECK(p.time.spec_string() == "poly{x}");
  CHECK(!p.trusted_true);
  CHECK_THROWS(TheoryParams::parse_text("amplitude: linear{x}\n"));
}

TEST_CASE("recognize_axiom: the named axioms") {
  auto p = lin_log_poly();
  CHECK(recognize_axiom(parse_formula("call x . cex y . y = x'"), p).kind ==
        AxiomKind::Successor);
  CHECK(recognize_axiom(parse_formula("call u . cex v . v = u'"), p).kind ==
        AxiomKind::Successor);
  CHECK(recognize_axiom(parse_formula("call x . cex y . y = |x|"), p).kind == AxiomKind::Log);
  CHECK(recognize_axiom(parse_formula("call x . call y . (Bit(y,x) cor ~Bit(y,x))"), p).kind ==
        AxiomKind::Bit);
  CHECK(recognize_axiom(parse_formula("all x . 0 != x'"), p).kind == AxiomKind::Peano1);
  CHECK(recognize_axiom(parse_formula("all x . all y . (x' = y' -> x = y)"), p).kind ==
        AxiomKind::Peano2);
  CHECK(recognize_axiom(parse_formula("call x . cex y . y = x + x"), p).kind ==
        AxiomKind::NotAxiom);
  CHECK(recognize_axiom(parse_formula("cex y . y = x'"), p).kind == AxiomKind::NotAxiom);
}

TEST_CASE("recognize_axiom: elementary induction scheme extracts p") {
  auto p = lin_log_poly();
  Formula scheme = parse_formula(
      "0 + 0 = 0 & (all z2 . (z2 + 0 = z2 -> z2' + 0 = z2')) -> all z3 . z3 + 0 = z3");
  // Induction on the formula p(x) = x + 0 = x, alpha-renamed per position.
  auto cls = recognize_axiom(scheme, p);
  CHECK(cls.kind == AxiomKind::PeanoInduction);
  CHECK(alpha_eq(Formula::forall(cls.induction_var, cls.induction_formula),
                 parse_formula("all w . w + 0 = w")));
}

TEST_CASE("recognize_axiom: supplementary sentences by alpha equivalence") {
  TheoryParams p = TheoryParams::parse_text(
      "amplitude: B3\nspace: B1^1\ntime: B5\n"
      "axiom halving: call u . cex z . z = half(u)\n");
  auto cls = recognize_axiom(parse_formula("call v . cex w . w = half(v)"), p);
  CHECK(cls.kind == AxiomKind::Supplementary);
  CHECK(cls.supp_name == "halving");
}

TEST_CASE("is_bounded_formula: quantifier shapes and side conditions") {
  auto p = lin_log_poly();
  CHECK(is_bounded_formula(parse_formula("cex |z| <= |u| + |v| . z = u + v"), p.amplitude));
  CHECK(!is_bounded_formula(parse_formula("cex z . z = u"), p.amplitude));
  // The bound variable must not be blindly bound elsewhere.
  CHECK(!is_bounded_formula(
      parse_formula("(call |z| <= |s| . z = z) & all z . z = z"), p.amplitude));
  // Binary choices carry no bound requirement.
  CHECK(is_bounded_formula(parse_formula("x = x cor x = x'"), p.amplitude));
  // The bound itself must come from the class.
  CHECK(!is_bounded_formula(parse_formula("cex |z| <= 2^u . z = u"), p.amplitude));
}

TEST_CASE("check_lc: the numerals derivation and a sequent mismatch") {
  auto proof = cl12::Proof::parse_file(std::string(CLAR_TEST_DATA) + "/numerals2.cl12");
  Formula succ_axiom = parse_formula("call x . cex y . y = x'");
  Formula target = parse_formula("cex z . z = 0''");
  CHECK(check_lc(target, {succ_axiom}, proof, data_opts()).ok);

  Formula wrong = parse_formula("cex z . z = 0'");
  auto r = check_lc(wrong, {succ_axiom}, proof, data_opts());
  CHECK(!r.ok);
  CHECK(r.error.find("expected") != std::string::npos);
}

TEST_CASE("check_lc: logically valid conclusions take zero premises") {
  cl12::Proof p = cl12::Proof::parse_text(
      "line 1: |o- x1 = x1 ;; Wait()\n"
      "line 2: |o- cex y . y = x1 ;; JoinChoose(1; path=; inst=x1)\n"
      "line 3: |o- call x . cex y . y = x ;; Wait(2)\n");
  CHECK(check_lc(parse_formula("call x . cex y . y = x"), {}, p, data_opts()).ok);
}

TEST_CASE("check_theory_proof: the two-line derivation in extended mode") {
  auto proof = TheoryProof::parse_file(std::string(CLAR_TEST_DATA) + "/numerals2.cla11");
  auto report = check_theory_proof(lin_log_poly(), proof, data_opts());
  CHECK(report.outcome == TheoryReport::Outcome::Accepted);

  // Dropping the attachment is fatal in extended mode ...
  TheoryProof stripped = proof;
  stripped.lines[1].just.proof_path.clear();
  auto rejected = check_theory_proof(lin_log_poly(), stripped, data_opts());
  CHECK(rejected.outcome == TheoryReport::Outcome::Rejected);
  CHECK(rejected.rejected_line == 2);

  // ... and an explicit obligation otherwise.
  CheckOptions lax = data_opts();
  lax.extended = false;
  auto trusted = check_theory_proof(lin_log_poly(), stripped, lax);
  CHECK(trusted.outcome == TheoryReport::Outcome::AcceptedWithObligations);
}

namespace {

// The school-addition bookkeeping formula: carry and sum bits are decidable.
Formula carry_sum_formula(const std::string& y) {
  PTerm u = PTerm::var("u"), v = PTerm::var("v");
  Formula c = Formula::carry1(PTerm::var(y), u, v);
  Formula b = Formula::bit(PTerm::var(y), PTerm::sum(u, v));
  return Formula::conj(Formula::join(c, Formula::negation(c)),
                       Formula::join(b, Formula::negation(b)));
}

}  // namespace

TEST_CASE("check_induction: the addition bookkeeping application") {
  auto params = lin_log_poly();
  PTerm bound = parse_pterm("u + v");
  Formula f = carry_sum_formula("y");
  Formula guard = Formula::cmp(Rel::Le, PTerm::var("y"), parse_pterm("|u| + |v|"));
  Formula concl = close(Formula::imp(guard, f), FKind::MeetQ);
  Formula basis = close(carry_sum_formula("y").substitute("y", PTerm::zero()), FKind::MeetQ);
  Formula step =
      close(Formula::imp(f, f.substitute("y", PTerm::var("y").succ())), FKind::MeetQ);

  CHECK(check_induction(concl, basis, step, params, "y", bound, {"u", "v"}, false).ok);

  // The reasonable variant accepts the weakened step.
  Formula rstep = close(Formula::imp(Formula::conj(Formula::cmp(Rel::Lt, PTerm::var("y"),
                                                                parse_pterm("|u| + |v|")),
                                                   f),
                                     f.substitute("y", PTerm::var("y").succ())),
                        FKind::MeetQ);
  CHECK(check_induction(concl, basis, rstep, params, "y", bound, {"u", "v"}, true).ok);

  // A bound outside the time class is rejected.
  TheoryParams strict = params;
  strict.time = bounds::parse_boundclass("poly{|x|}");
  auto r = check_induction(concl, basis, step, strict, "y", bound, {"u", "v"}, false);
  CHECK(!r.ok);
  CHECK(r.error.find("time class") != std::string::npos);

  // An unbounded choice quantifier inside F(x) is rejected.
  Formula bad_f = Formula::conj(f, parse_formula("cex z . z = u"));
  Formula bad_concl = close(Formula::imp(guard, bad_f), FKind::MeetQ);
  Formula bad_basis = close(bad_f.substitute("y", PTerm::zero()), FKind::MeetQ);
  Formula bad_step =
      close(Formula::imp(bad_f, bad_f.substitute("y", PTerm::var("y").succ())), FKind::MeetQ);
  auto r2 = check_induction(bad_concl, bad_basis, bad_step, params, "y", bound, {"u", "v"}, false);
  CHECK(!r2.ok);
  CHECK(r2.error.find("space-bounded") != std::string::npos);
}

TEST_CASE("check_comprehension: bit assembly from a decidable predicate") {
  auto params = lin_log_poly();
  PTerm bound = PTerm::var("s");
  // p(y) := y = y, the always-true predicate.
  Formula p = parse_formula("y = y");
  Formula premise = close(Formula::join(p, Formula::negation(p)), FKind::MeetQ);
  Formula concl = close(
      parse_formula("cex |x| <= |s| . all y < |s| . "
                    "((Bit(y, x) -> y = y) & (y = y -> Bit(y, x)))"),
      FKind::MeetQ);
  CHECK(check_comprehension(concl, premise, params, "x", "y", bound, {"s"}, false).ok);

  // Reasonable form weakens the premise.
  Formula rpremise = close(Formula::imp(Formula::cmp(Rel::Lt, PTerm::var("y"),
                                                     PTerm::len(PTerm::var("s"))),
                                        Formula::join(p, Formula::negation(p))),
                           FKind::MeetQ);
  CHECK(check_comprehension(concl, rpremise, params, "x", "y", bound, {"s"}, true).ok);

  // p containing x is rejected.
  Formula px = parse_formula("x = y");
  Formula bad_premise = close(Formula::join(px, Formula::negation(px)), FKind::MeetQ);
  auto r = check_comprehension(concl, bad_premise, params, "x", "y", bound, {"s"}, false);
  CHECK(!r.ok);

  // A non-elementary p is rejected.
  Formula pc = parse_formula("y = y cand y = 0");
  Formula bad2 = close(Formula::join(pc, Formula::negation(Formula::truth())), FKind::MeetQ);
  CHECK(!check_comprehension(concl, bad2, params, "x", "y", bound, {"s"}, false).ok);
}

TEST_CASE("reasonable variants re-accept weakened plain applications") {
  auto params = lin_log_poly();
  // A small corpus of accepted plain inductions; each weakened step must
  // pass the reasonable checker.
  struct App {
    Formula f;
    std::string x;
    PTerm bound;
    std::vector<std::string> s;
  };
  std::vector<App> apps;
  apps.push_back({carry_sum_formula("y"), "y", parse_pterm("u + v"), {"u", "v"}});
  apps.push_back({parse_formula("Bit(y, s) cor ~Bit(y, s)"), "y", parse_pterm("s"), {"s"}});
  for (const auto& app : apps) {
    PTerm pt = app.bound;
    std::map<std::string, PTerm> sub;
    for (const auto& v : pt.vars()) sub.emplace(v, PTerm::len(PTerm::var(v)));
    pt = pt.substitute(sub);
    Formula guard = Formula::cmp(Rel::Le, PTerm::var(app.x), pt);
    Formula concl = close(Formula::imp(guard, app.f), FKind::MeetQ);
    Formula basis = close(app.f.substitute(app.x, PTerm::zero()), FKind::MeetQ);
    Formula stepped = app.f.substitute(app.x, PTerm::var(app.x).succ());
    Formula plain = close(Formula::imp(app.f, stepped), FKind::MeetQ);
    REQUIRE(check_induction(concl, basis, plain, params, app.x, app.bound, app.s, false).ok);
    Formula weakened = close(
        Formula::imp(Formula::conj(Formula::cmp(Rel::Lt, PTerm::var(app.x), pt), app.f), stepped),
        FKind::MeetQ);
    CHECK(check_induction(concl, basis, weakened, params, app.x, app.bound, app.s, true).ok);
  }
}

TEST_CASE("trusted-truth lines: evaluation, trust flags, and shape limits") {
  auto params = TheoryParams::parse_file(std::string(CLAR_TEST_DATA) + "/trusted.cfg");
  REQUIRE(params.trusted_true);

  auto accepted = check_theory_proof(
      params, TheoryProof::parse_text("line 1: 0 + 0' = 0' ;; TT\n"), data_opts());
  CHECK(accepted.outcome == TheoryReport::Outcome::Accepted);

  auto false_line = check_theory_proof(
      params, TheoryProof::parse_text("line 1: 0 = 0' ;; TT\n"), data_opts());
  CHECK(false_line.outcome == TheoryReport::Outcome::Rejected);

  // Beyond the evaluator: rejected unless explicitly trusted.
  auto inconclusive = check_theory_proof(
      params, TheoryProof::parse_text("line 1: all y . ex z . z = y * y ;; TT\n"), data_opts());
  CHECK(inconclusive.outcome == TheoryReport::Outcome::Rejected);
  auto flagged = check_theory_proof(
      params, TheoryProof::parse_text("line 1: all y . ex z . z = y * y ;; TT(trusted)\n"),
      data_opts());
  CHECK(flagged.outcome == TheoryReport::Outcome::AcceptedWithObligations);

  // Non-elementary sentences are never trusted.
  auto non_elem = check_theory_proof(
      params, TheoryProof::parse_text("line 1: cex y . y = 0 ;; TT(trusted)\n"), data_opts());
  CHECK(non_elem.outcome == TheoryReport::Outcome::Rejected);

  // And the whole mechanism is off unless the config enables it.
  auto off = check_theory_proof(
      lin_log_poly(), TheoryProof::parse_text("line 1: 0 = 0 ;; TT\n"), data_opts());
  CHECK(off.outcome == TheoryReport::Outcome::Rejected);
}

TEST_CASE("theory proofs round trip") {
  auto proof = TheoryProof::parse_file(std::string(CLAR_TEST_DATA) + "/numerals2.cla11");
  auto again = TheoryProof::parse_text(proof.to_string());
  CHECK(proof.to_string() == again.to_string());
  REQUIRE(again.lines.size() == 2);
  CHECK(again.lines[1].just.proof_path == "numerals2.cl12");
}

TEST_CASE("axiom recognition is checked against the declared name") {
  auto proof = TheoryProof::parse_text("line 1: call x . cex y . y = x' ;; AX(log)\n");
  auto report = check_theory_proof(lin_log_poly(), proof, data_opts());
  CHECK(report.outcome == TheoryReport::Outcome::Rejected);
  CHECK(report.reason.find("successor") != std::string::npos);
}
