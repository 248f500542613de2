#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "clar/bignat.hpp"

namespace clar {

// Pseudo-term heads. Var/Const/Succ/Sum/Prod form the term fragment proper;
// the rest are the standard defined functions (with fixed numeric meaning)
// that the language treats as if they were genuine function letters.
enum class PtKind {
  Var,     // variable
  Const,   // binary-numeral constant (0 included)
  Succ,    // t'
  Sum,     // t + t
  Prod,    // t * t
  Len,     // |t|
  Pow2,    // 2^t
  Monus,   // monus(t, t) = max(0, a - b)
  Half,    // half(t) = floor(t / 2)
  Br0,     // br0(x, s): bit x of s set to 0
  Br1,     // br1(x, s): bit x of s set to 1
  Bitsum,  // bitsum(x, y, u, v)
  Carry,   // carry(y, u, v): school-multiplication carry
};

class PTerm {
public:
  PTerm() : PTerm(constant(BigNat())) {}

  static PTerm var(std::string name);
  static PTerm constant(BigNat v);
  static PTerm zero() { return constant(BigNat()); }
  static PTerm make(PtKind k, std::vector<PTerm> args);

  PTerm succ() const { return make(PtKind::Succ, {*this}); }
  static PTerm sum(PTerm a, PTerm b) { return make(PtKind::Sum, {std::move(a), std::move(b)}); }
  static PTerm prod(PTerm a, PTerm b) { return make(PtKind::Prod, {std::move(a), std::move(b)}); }
  static PTerm len(PTerm a) { return make(PtKind::Len, {std::move(a)}); }
  static PTerm pow2(PTerm a) { return make(PtKind::Pow2, {std::move(a)}); }

  PtKind kind() const;
  const std::string& var_name() const;  // Var only
  const BigNat& value() const;          // Const only
  const std::vector<PTerm>& args() const;

  bool operator==(const PTerm& o) const;
  bool operator!=(const PTerm& o) const { return !(*this == o); }

  // Term of the base language: only Var/Const/Succ/Sum/Prod heads.
  bool is_lterm() const;
  // Additionally, no constant other than 0.
  bool is_pure() const;
  bool has_nonzero_const() const;

  void collect_vars(std::set<std::string>& out) const;
  std::set<std::string> vars() const;

  PTerm substitute(const std::string& x, const PTerm& t) const;
  PTerm substitute(const std::map<std::string, PTerm>& sub) const;

  // Evaluation under an environment; nullopt if some variable is unbound.
  // Throws BlowupError when 2^t trips the guard.
  std::optional<BigNat> eval(const std::map<std::string, BigNat>& env,
                             uint64_t bit_guard = BigNat::kDefaultBitGuard) const;

  std::string to_string() const;

private:
  struct Node;
  explicit PTerm(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
};

// Value of a closed term; throws std::invalid_argument on free variables.
BigNat eval_closed(const PTerm& t, uint64_t bit_guard = BigNat::kDefaultBitGuard);

// The unary numeral for n: 0 followed by n successor applications.
PTerm unary_numeral(uint64_t n);

}  // namespace clar
