#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clar/bounds.hpp"
#include "clar/cl12.hpp"

namespace clar::cla11 {

struct Supplementary {
  std::string name;
  Formula sentence;
  std::string strategy;  // optional hint used by regularity audits
};

// The boundclass triple plus supplementary axioms a proof is checked against.
struct TheoryParams {
  bounds::Boundclass amplitude;
  bounds::Boundclass space;
  bounds::Boundclass time;
  std::vector<Supplementary> supplementary;
  bool trusted_true = false;  // enables per-line trusted-truth justifications
  uint64_t blind_bound = 4096;
  size_t closure_budget = 500;

  bounds::Triple triple() const { return {amplitude, space, time}; }
  static TheoryParams parse_text(const std::string& text);
  static TheoryParams parse_file(const std::string& path);
};

enum class AxiomKind {
  Peano1, Peano2, Peano3, Peano4, Peano5, Peano6, PeanoInduction,
  Successor, Log, Bit, Supplementary, NotAxiom,
};

struct AxiomClass {
  AxiomKind kind = AxiomKind::NotAxiom;
  Formula induction_formula;  // the p(x) of the elementary induction scheme
  std::string induction_var;
  std::string supp_name;
  std::string canonical_name() const;
};

AxiomClass recognize_axiom(const Formula& sentence, const TheoryParams& params);

// Every choice-quantifier subformula must have the bounded shape
// (call z . |z| <= b|s| -> H, cex z . |z| <= b|s| & H) with the bound drawn
// from the class, z and the bound's variables pairwise distinct and never
// blindly bound in the formula.
bool is_bounded_formula(const Formula& f, const bounds::Boundclass& b, size_t budget = 500);

struct Justification {
  enum class Kind { Axiom, LC, Induction, Comprehension, TrustedTrue };
  Kind kind = Kind::Axiom;
  std::string axiom_name;        // AX(<name>)
  std::vector<size_t> cited;     // LC lines; IND basis,step; COMP premise
  std::string proof_path;        // LC attached sequent proof
  std::string var_x, var_y;      // IND: x; COMP: x, y
  std::optional<PTerm> bound;    // over the s variables
  std::vector<std::string> s_vars;
  bool reasonable = false;
  bool trusted_flag = false;     // TT(trusted)
  std::string to_string() const;
};

struct TheoryLine {
  size_t number = 0;
  Formula sentence;  // as written; its meaning is the choice closure
  Justification just;
};

struct TheoryProof {
  std::vector<TheoryLine> lines;
  std::string to_string() const;
  static TheoryProof parse_text(const std::string& text, const ParseOptions& opts = {});
  static TheoryProof parse_file(const std::string& path, const ParseOptions& opts = {});
};

struct CheckOptions {
  bool extended = true;    // logical-consequence lines carry attached proofs
  bool permissive = false;
  std::string base_dir;    // resolves relative attached-proof paths
  cl12::StabilityBudget budget;
};

using cl12::Report;

Report check_lc(const Formula& conclusion, const std::vector<Formula>& cited,
                const cl12::Proof& attached, const CheckOptions& opts = {});

Report check_induction(const Formula& conclusion, const Formula& basis, const Formula& step,
                       const TheoryParams& params, const std::string& x, const PTerm& bound,
                       const std::vector<std::string>& s_vars, bool reasonable);

Report check_comprehension(const Formula& conclusion, const Formula& premise,
                           const TheoryParams& params, const std::string& x,
                           const std::string& y, const PTerm& bound,
                           const std::vector<std::string>& s_vars, bool reasonable);

struct LineStatus {
  size_t line = 0;
  bool ok = false;
  std::string message;
  std::vector<std::string> obligations;
};

struct TheoryReport {
  enum class Outcome { Accepted, AcceptedWithObligations, Rejected };
  Outcome outcome = Outcome::Rejected;
  size_t rejected_line = 0;
  std::string reason;
  std::vector<LineStatus> lines;
  bool accepted() const { return outcome != Outcome::Rejected; }
  std::vector<std::string> obligations() const;
  std::string to_string() const;
};

TheoryReport check_theory_proof(const TheoryParams& params, const TheoryProof& proof,
                                const CheckOptions& opts = {});

}  // namespace clar::cla11
