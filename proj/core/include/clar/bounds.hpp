#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "clar/term.hpp"

namespace clar::bounds {

// Bound expressions are the monotone fragment of the pseudo-term grammar:
// variables, 0, successor, sum, product, length and base-2 exponentiation.
// Every constructor is monotone, so monotonicity holds by construction.
bool is_bound_expr(const PTerm& t);

// b is a syntactic variation of original: a variable mapping from the
// original's variables onto b's variables rewrites one into the other.
// The relation is directional; collapsing variables is allowed.
bool syntactic_variation(const PTerm& b, const PTerm& original);

enum class ClosureMode { None, Linear, Polynomial };

struct Boundclass {
  std::vector<PTerm> generators;
  ClosureMode mode = ClosureMode::Linear;
  std::string name;      // short handle, e.g. "B3"
  std::string nickname;  // descriptive, e.g. "linear"

  std::string spec_string() const;  // "linear{x}" form
};

// Construction tree returned by membership tests.
struct Derivation {
  struct Step {
    enum class Op { Generator, Zero, Succ, Sum, Prod };
    Op op = Op::Zero;
    size_t generator = 0;     // Op::Generator
    size_t arg1 = 0, arg2 = 0;  // indices of earlier steps
    PTerm term;               // the term this step constructs
  };
  std::vector<Step> steps;
  const PTerm& result() const { return steps.back().term; }
  // Recompute every step from its parents and compare with the stored terms.
  bool replays() const;
};

struct ClosureResult {
  bool found = false;
  Derivation derivation;  // meaningful when found
  size_t nodes = 0;       // membership work performed
};

// Exact membership in the closure of the generators under 0, successor, sum
// (and product for polynomial mode), quotiented by syntactic variation.
// Budget caps the number of subterm nodes examined.
ClosureResult closure_contains(const Boundclass& c, const PTerm& b, size_t budget = 500);

struct DominatedResult {
  bool falsified = false;
  std::vector<BigNat> point;  // a concrete violation when falsified
};

// Pointwise comparison on a sample grid; falsification is definitive while
// "holds" is evidence only. Unary bounds lift to tuples through max().
DominatedResult dominated(const PTerm& b, const PTerm& c, const std::vector<uint64_t>& grid);

// The standard boundclass families; infinite generator families are
// truncated at the given index.
std::vector<Boundclass> standard_classes(size_t truncate = 3);
std::optional<Boundclass> standard_class(const std::string& name, size_t truncate = 3);

// "B3", "B1^2", or a literal like "linear{x}" / "poly{2^|x|, 2^|x|^2}" /
// "set{...}".
Boundclass parse_boundclass(const std::string& spec, size_t truncate = 3);

struct Triple {
  Boundclass amplitude, space, time;
  std::string to_string() const;
};

enum class CondStatus { VerifiedAtSamples, Witnessed, Falsified, Inconclusive };

struct CondReport {
  CondStatus status = CondStatus::Inconclusive;
  std::string detail;
};

// A strategy-level witness for one bound: plays the bound-evaluation game on
// sample inputs and reports conformance. Injected by the strategy layer.
using BoundWitness = std::function<CondReport(const PTerm& bound)>;

struct AuditConfig {
  size_t budget = 500;
  std::vector<uint64_t> grid = {0, 1, 2, 3, 5, 8, 16, 64};
  size_t candidates = 512;
  BoundWitness witness;          // empty: condition 1 reports inconclusive
  size_t supplementary_axioms = 0;
  bool supplementary_witnessed = false;
};

struct RegularityReport {
  // Regular-triple conditions 1..5 and regular-theory conditions 1..2.
  std::array<CondReport, 5> triple;
  std::array<CondReport, 2> theory;
  bool any_falsified() const;
  std::string to_string() const;
};

RegularityReport check_regularity(const Triple& t, const AuditConfig& cfg = {});

// The catalogued adequacy triples (families truncated).
std::vector<Triple> catalog_triples(size_t truncate = 3);

struct CatalogRow {
  Triple triple;
  RegularityReport report;
};

std::vector<CatalogRow> audit_catalog(const AuditConfig& cfg = {});
std::string render_catalog(const std::vector<CatalogRow>& rows);

}  // namespace clar::bounds
