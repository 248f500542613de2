#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "clar/arena.hpp"
#include "clar/moves.hpp"
#include "clar/parse.hpp"

namespace clar::cl12 {

struct Sequent {
  std::vector<Formula> antecedent;
  Formula succedent;

  bool operator==(const Sequent&) const = default;
  std::set<std::string> all_vars() const;
  std::string to_string() const;  // "E1, E2 |o- F"
  static Sequent parse(const std::string& text, const ParseOptions& opts = {});
};

// ---- stability ----

enum class Stability { Valid, Invalid, Unknown };

struct StabilityBudget {
  // Instantiation attempts for quantified hypotheses / existential goals.
  size_t instantiations = 24;
  // Ground assignments probed when looking for a countermodel.
  size_t samples = 16;
  // Atom letters admitted into the propositional truth-table route.
  size_t letters = 12;
  uint64_t blind_bound = 64;
};

struct StabilityResult {
  Stability status = Stability::Unknown;
  std::string detail;  // route taken or counterexample
};

// Three-valued validity of the elementarization of a sequent: elementarize
// all formulas and decide (and antecedents) -> succedent with ground
// evaluation, congruence closure over the function letters, a propositional
// truth table over atom identity, and budgeted quantifier instantiation.
// Valid and Invalid are only reported when certain.
StabilityResult stability(const Sequent& s, const StabilityBudget& budget = {});

// ---- proofs ----

enum class RuleKind { Wait, MeetChoose, JoinChoose, Replicate };

struct Justification {
  RuleKind kind = RuleKind::Wait;
  std::vector<size_t> premises;  // Wait: any number; others: exactly one
  size_t ant_index = 0;          // MeetChoose, Replicate
  bool has_ant_index = false;
  std::vector<int> path;         // Choose rules
  std::string instance;          // Choose rules; raw: "0", "1", "y2", "#101"
  std::string to_string() const;
};

struct ProofLine {
  size_t number = 0;
  Sequent sequent;
  Justification just;
};

struct Proof {
  std::vector<ProofLine> lines;
  const Sequent& final_sequent() const { return lines.back().sequent; }
  std::string to_string() const;
  static Proof parse_text(const std::string& text, const ParseOptions& opts = {});
  static Proof parse_file(const std::string& path, const ParseOptions& opts = {});
};

struct CheckOptions {
  // With permissive set, an unproved (Unknown) stability obligation is
  // listed instead of rejecting the line.
  bool permissive = false;
  StabilityBudget budget;
};

struct Report {
  bool ok = true;
  std::string error;
  std::vector<std::string> obligations;
};

struct LineStatus {
  size_t line = 0;
  bool ok = false;
  std::string message;
  std::vector<std::string> obligations;
};

struct ProofReport {
  enum class Outcome { Accepted, AcceptedWithObligations, Rejected };
  Outcome outcome = Outcome::Rejected;
  size_t rejected_line = 0;  // meaningful when Rejected
  std::string reason;
  std::vector<LineStatus> lines;
  bool accepted() const { return outcome != Outcome::Rejected; }
  std::vector<std::string> obligations() const;
  std::string to_string() const;
};

// Wait: the conclusion must be stable and the premises must cover every
// environment-owned surface choice occurrence (both components of binary
// choices, a fresh-variable instance of quantifier choices).
Report check_wait(const Sequent& conclusion, const std::vector<Sequent>& premises,
                  const CheckOptions& opts = {});

// Choose: join acts on a machine-owned occurrence in the succedent, meet on
// one in the antecedent formula at ant_index; the premise must equal the
// conclusion with that occurrence resolved per the instance.
Report check_choose(const Sequent& conclusion, const Sequent& premise, bool meet,
                    size_t ant_index, const std::vector<int>& path,
                    const std::string& instance);

// Replicate: the premise repeats the conclusion's antecedent formula at
// ant_index as an adjacent copy.
Report check_replicate(const Sequent& conclusion, const Sequent& premise, size_t ant_index);

ProofReport check_proof(const Proof& p, const CheckOptions& opts = {});

}  // namespace clar::cl12
