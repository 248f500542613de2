#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "clar/term.hpp"

namespace clar {

enum class Rel { Eq, Le, Lt };

enum class FKind {
  Cmp,      // pt rel pt
  Bit,      // Bit(y, x) atom
  Carry1,   // Carry1(y, u, v) atom
  Borrow1,  // Borrow1(y, u, v) atom
  Not,      // ~F, F elementary
  And,      // F & G
  Or,       // F | G
  Imp,      // F -> G
  Forall,   // all x . F   (blind)
  Exists,   // ex x . F    (blind)
  Meet,     // F cand G    (choice, environment picks)
  Join,     // F cor G     (choice, machine picks)
  MeetQ,    // call x . F
  JoinQ,    // cex x . F
};

// Raised by substitution when the replacement would be captured by a binder.
struct CaptureError : std::runtime_error {
  std::string binder;
  explicit CaptureError(const std::string& b)
      : std::runtime_error("substitution captured by binder '" + b + "'"), binder(b) {}
};

class Formula {
public:
  Formula() : Formula(truth()) {}

  static Formula cmp(Rel rel, PTerm a, PTerm b);
  static Formula eq(PTerm a, PTerm b) { return cmp(Rel::Eq, std::move(a), std::move(b)); }
  static Formula bit(PTerm y, PTerm x);
  static Formula carry1(PTerm y, PTerm u, PTerm v);
  static Formula borrow1(PTerm y, PTerm u, PTerm v);
  static Formula negation(Formula f);  // requires f.is_elementary()
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  static Formula forall(std::string x, Formula f);
  static Formula exists(std::string x, Formula f);
  static Formula meet(Formula a, Formula b);
  static Formula join(Formula a, Formula b);
  static Formula meet_q(std::string x, Formula f);
  static Formula join_q(std::string x, Formula f);

  // Canonical moveless true and false atoms: 0 = 0 and 0 = 0'.
  static Formula truth();
  static Formula falsity();

  FKind kind() const;
  Rel rel() const;                       // Cmp only
  const std::vector<PTerm>& pts() const; // atoms only
  const std::string& var() const;        // quantifier forms
  const std::vector<Formula>& kids() const;
  const Formula& child(size_t i) const { return kids()[i]; }

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

  bool is_atom() const;
  // Free of choice operators (Meet/Join/MeetQ/JoinQ).
  bool is_elementary() const;
  // Contains a binary constant other than 0 somewhere.
  bool has_nonzero_const() const;
  bool is_sentence() const { return free_vars().empty(); }

  std::set<std::string> free_vars() const;
  std::set<std::string> all_vars() const;  // free and bound

  // Capture-avoiding substitution of a pseudo-term for a free variable;
  // throws CaptureError instead of renaming.
  Formula substitute(const std::string& x, const PTerm& t) const;

  std::string to_string() const;

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  static Formula mk2(FKind k, Formula a, Formula b);
  static Formula mkq(FKind k, std::string x, Formula f);
  std::shared_ptr<const Node> p_;
};

// Quantifier closure over the free variables in lexicographic order;
// kind must be Forall, Exists, MeetQ or JoinQ.
Formula close(const Formula& f, FKind kind);

// Replace every surface Join/JoinQ subformula by the canonical false atom and
// every surface Meet/MeetQ subformula by the canonical true atom.
Formula elementarize(const Formula& f);

// The four-clause inductive notion of a formula whose elementarization's
// existential closure is necessarily false.
bool is_critical(const Formula& f);

// Equality up to renaming of bound variables.
bool alpha_eq(const Formula& a, const Formula& b);

// The negation of f with ~ pushed inward over the classical connectives and
// the choice operators dualized, so that ~ lands on atoms only.
Formula negate_normalized(const Formula& f);

// First variable of the scheme w1, w2, ... not contained in `avoid`.
std::string fresh_var(const std::set<std::string>& avoid);

}  // namespace clar
