#pragma once

// Seeded random AST generators shared by the unit and acceptance suites.

#include <random>
#include <string>
#include <vector>

#include "clar/formula.hpp"

namespace clar::testgen {

class Gen {
public:
  explicit Gen(uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  uint64_t below(uint64_t n) { return n == 0 ? 0 : rng_() % n; }
  bool flip() { return rng_() & 1; }

  std::string var() {
    static const char* pool[] = {"x", "y", "z", "u", "v", "s", "t1", "t2"};
    return pool[below(8)];
  }

  PTerm lterm(int depth) {
    if (depth <= 0) {
      switch (below(3)) {
        case 0: return PTerm::zero();
        case 1: return PTerm::var(var());
        default: return PTerm::constant(BigNat(below(64)));
      }
    }
    switch (below(5)) {
      case 0: return lterm(depth - 1).succ();
      case 1: return PTerm::sum(lterm(depth - 1), lterm(depth - 1));
      case 2: return PTerm::prod(lterm(depth - 1), lterm(depth - 1));
      default: return lterm(0);
    }
  }

  PTerm pterm(int depth) {
    if (depth <= 0) return lterm(0);
    switch (below(8)) {
      case 0: return pterm(depth - 1).succ();
      case 1: return PTerm::sum(pterm(depth - 1), pterm(depth - 1));
      case 2: return PTerm::prod(pterm(depth - 1), pterm(depth - 1));
      case 3: return PTerm::len(pterm(depth - 1));
      case 4: return PTerm::pow2(lterm(0));
      case 5: return PTerm::make(PtKind::Monus, {pterm(depth - 1), pterm(depth - 1)});
      case 6: return PTerm::make(PtKind::Half, {pterm(depth - 1)});
      default: return lterm(0);
    }
  }

  Formula atom(int depth) {
    switch (below(6)) {
      case 0: return Formula::eq(pterm(depth), pterm(depth));
      case 1: return Formula::cmp(Rel::Le, pterm(depth), pterm(depth));
      case 2: return Formula::cmp(Rel::Lt, pterm(depth), pterm(depth));
      case 3: return Formula::bit(pterm(depth - 1 > 0 ? depth - 1 : 0), pterm(depth));
      default: return Formula::eq(lterm(depth), lterm(depth));
    }
  }

  Formula elementary(int depth) {
    if (depth <= 0) return atom(1);
    switch (below(7)) {
      case 0: return Formula::conj(elementary(depth - 1), elementary(depth - 1));
      case 1: return Formula::disj(elementary(depth - 1), elementary(depth - 1));
      case 2: return Formula::imp(elementary(depth - 1), elementary(depth - 1));
      case 3: return Formula::forall(var(), elementary(depth - 1));
      case 4: return Formula::exists(var(), elementary(depth - 1));
      case 5: return Formula::negation(atom(depth - 1));
      default: return atom(depth);
    }
  }

  Formula formula(int depth) {
    if (depth <= 0) return atom(1);
    switch (below(11)) {
      case 0: return Formula::conj(formula(depth - 1), formula(depth - 1));
      case 1: return Formula::disj(formula(depth - 1), formula(depth - 1));
      case 2: return Formula::imp(formula(depth - 1), formula(depth - 1));
      case 3: return Formula::forall(var(), formula(depth - 1));
      case 4: return Formula::exists(var(), formula(depth - 1));
      case 5: return Formula::meet(formula(depth - 1), formula(depth - 1));
      case 6: return Formula::join(formula(depth - 1), formula(depth - 1));
      case 7: return Formula::meet_q(var(), formula(depth - 1));
      case 8: return Formula::join_q(var(), formula(depth - 1));
      case 9: return Formula::negation(elementary(depth - 1));
      default: return atom(depth);
    }
  }

  // Built along the inductive clauses: Join forms are critical; blind
  // quantifiers preserve criticality; Or needs both sides critical; And
  // needs one.
  Formula critical(int depth) {
    if (depth <= 0) return flip() ? Formula::join(atom(1), atom(1))
                                  : Formula::join_q(var(), atom(1));
    switch (below(6)) {
      case 0: return Formula::join(formula(depth - 1), formula(depth - 1));
      case 1: return Formula::join_q(var(), formula(depth - 1));
      case 2: return Formula::forall(var(), critical(depth - 1));
      case 3: return Formula::exists(var(), critical(depth - 1));
      case 4: return Formula::disj(critical(depth - 1), critical(depth - 1));
      default:
        return flip() ? Formula::conj(critical(depth - 1), formula(depth - 1))
                      : Formula::conj(formula(depth - 1), critical(depth - 1));
    }
  }

private:
  std::mt19937_64 rng_;
};

}  // namespace clar::testgen
