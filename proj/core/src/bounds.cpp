#include "clar/bounds.hpp"

#include <algorithm>
#include <map>

#include "clar/numeric.hpp"
#include "clar/parse.hpp"

namespace clar::bounds {

bool is_bound_expr(const PTerm& t) {
  switch (t.kind()) {
    case PtKind::Var: return true;
    case PtKind::Const: return t.value().is_zero();
    case PtKind::Succ:
    case PtKind::Sum:
    case PtKind::Prod:
    case PtKind::Len:
    case PtKind::Pow2:
      for (const auto& a : t.args()) {
        if (!is_bound_expr(a)) return false;
      }
      return true;
    default: return false;
  }
}

namespace {

bool variation_walk(const PTerm& inst, const PTerm& tmpl,
                    std::map<std::string, std::string>& mapping) {
  if (inst.kind() != tmpl.kind()) return false;
  switch (tmpl.kind()) {
    case PtKind::Var: {
      auto [it, fresh] = mapping.emplace(tmpl.var_name(), inst.var_name());
      return it->second == inst.var_name();
    }
    case PtKind::Const: return inst.value() == tmpl.value();
    default:
      for (size_t i = 0; i < tmpl.args().size(); ++i) {
        if (!variation_walk(inst.args()[i], tmpl.args()[i], mapping)) return false;
      }
      return true;
  }
}

}  // namespace

bool syntactic_variation(const PTerm& b, const PTerm& original) {
  std::map<std::string, std::string> mapping;
  return variation_walk(b, original, mapping);
}

std::string Boundclass::spec_string() const {
  std::string out = mode == ClosureMode::Linear       ? "linear{"
                    : mode == ClosureMode::Polynomial ? "poly{"
                                                      : "set{";
  for (size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ", ";
    out += generators[i].to_string();
  }
  out += "}";
  return out;
}

bool Derivation::replays() const {
  for (size_t i = 0; i < steps.size(); ++i) {
    const Step& s = steps[i];
    switch (s.op) {
      case Step::Op::Zero:
        if (!(s.term == PTerm::zero())) return false;
        break;
      case Step::Op::Succ:
        if (s.arg1 >= i || !(s.term == steps[s.arg1].term.succ())) return false;
        break;
      case Step::Op::Sum:
        if (s.arg1 >= i || s.arg2 >= i ||
            !(s.term == PTerm::sum(steps[s.arg1].term, steps[s.arg2].term)))
          return false;
        break;
      case Step::Op::Prod:
        if (s.arg1 >= i || s.arg2 >= i ||
            !(s.term == PTerm::prod(steps[s.arg1].term, steps[s.arg2].term)))
          return false;
        break;
      case Step::Op::Generator: break;  // checked against the class at creation
    }
  }
  return !steps.empty();
}

namespace {

// Memoized decomposition: a term is in the closure iff it is a variation of
// a generator, the constant 0, or built from closure members by the closure
// operations. Every intermediate term of a derivation is a subterm of the
// target, so plain recursion suffices and membership is exact.
struct ClosureSearch {
  const Boundclass& cls;
  size_t budget;
  size_t nodes = 0;
  std::map<std::string, std::optional<size_t>> memo;
  Derivation derivation;

  std::optional<size_t> derive(const PTerm& t) {
    std::string key = t.to_string();
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    if (++nodes > budget) return std::nullopt;
    std::optional<size_t> made;
    for (size_t g = 0; g < cls.generators.size() && !made; ++g) {
      if (syntactic_variation(t, cls.generators[g]))
        made = push({Derivation::Step::Op::Generator, g, 0, 0, t});
    }
    if (!made && t.kind() == PtKind::Const && t.value().is_zero())
      made = push({Derivation::Step::Op::Zero, 0, 0, 0, t});
    if (!made && t.kind() == PtKind::Succ) {
      if (auto a = derive(t.args()[0])) made = push({Derivation::Step::Op::Succ, 0, *a, 0, t});
    }
    if (!made && t.kind() == PtKind::Sum) {
      if (auto a = derive(t.args()[0])) {
        if (auto b = derive(t.args()[1])) made = push({Derivation::Step::Op::Sum, 0, *a, *b, t});
      }
    }
    if (!made && t.kind() == PtKind::Prod && cls.mode == ClosureMode::Polynomial) {
      if (auto a = derive(t.args()[0])) {
        if (auto b = derive(t.args()[1])) made = push({Derivation::Step::Op::Prod, 0, *a, *b, t});
      }
    }
    memo[key] = made;
    return made;
  }

  size_t push(Derivation::Step step) {
    derivation.steps.push_back(std::move(step));
    return derivation.steps.size() - 1;
  }
};

}  // namespace

ClosureResult closure_contains(const Boundclass& c, const PTerm& b, size_t budget) {
  ClosureResult res;
  if (!is_bound_expr(b)) return res;
  if (c.mode == ClosureMode::None) {
    for (size_t g = 0; g < c.generators.size(); ++g) {
      if (syntactic_variation(b, c.generators[g])) {
        res.found = true;
        res.derivation.steps.push_back({Derivation::Step::Op::Generator, g, 0, 0, b});
        res.nodes = 1;
        return res;
      }
    }
    res.nodes = 1;
    return res;
  }
  ClosureSearch search{c, budget};
  auto got = search.derive(b);
  res.nodes = search.nodes;
  if (got) {
    res.found = true;
    res.derivation = search.derivation;
  }
  return res;
}

namespace {

std::vector<std::string> sorted_vars(const PTerm& t) {
  auto s = t.vars();
  return {s.begin(), s.end()};
}

std::optional<BigNat> eval_at(const PTerm& t, const std::vector<std::string>& vars,
                              const std::vector<BigNat>& point) {
  std::map<std::string, BigNat> env;
  if (vars.size() == 1) {
    // Unary bounds lift to tuples through the max convention.
    BigNat m;
    for (const auto& p : point) {
      if (m < p) m = p;
    }
    env.emplace(vars[0], m);
  } else {
    for (size_t i = 0; i < vars.size() && i < point.size(); ++i) env.emplace(vars[i], point[i]);
  }
  try {
    return t.eval(env);
  } catch (const BlowupError&) {
    return std::nullopt;
  }
}

}  // namespace

DominatedResult dominated(const PTerm& b, const PTerm& c, const std::vector<uint64_t>& grid) {
  auto bv = sorted_vars(b);
  auto cv = sorted_vars(c);
  if (bv.size() > 1 && cv.size() > 1 && bv.size() != cv.size())
    throw std::invalid_argument("dominated: incompatible arities");
  size_t arity = std::max({bv.size(), cv.size(), size_t{1}});

  std::vector<size_t> idx(arity, 0);
  DominatedResult res;
  for (;;) {
    std::vector<BigNat> point;
    point.reserve(arity);
    for (size_t i = 0; i < arity; ++i) point.emplace_back(grid[idx[i]]);
    auto vb = eval_at(b, bv, point);
    auto vc = eval_at(c, cv, point);
    // Guard trips leave the point undecided.
    if (vb && vc && *vc < *vb) {
      res.falsified = true;
      res.point = point;
      return res;
    }
    size_t k = 0;
    while (k < arity && ++idx[k] == grid.size()) idx[k++] = 0;
    if (k == arity) break;
  }
  return res;
}

// ---------------------------------------------------------------- catalog

namespace {

PTerm x_var() { return PTerm::var("x"); }

PTerm pow_of(const PTerm& base, size_t k) {
  PTerm t = base;
  for (size_t i = 1; i < k; ++i) t = PTerm::prod(t, base);
  return t;
}

}  // namespace

std::vector<Boundclass> standard_classes(size_t truncate) {
  std::vector<Boundclass> out;
  for (size_t i = 1; i <= truncate; ++i) {
    Boundclass b;
    b.generators = {pow_of(PTerm::len(x_var()), i)};
    b.mode = ClosureMode::Linear;
    b.name = "B1^" + std::to_string(i);
    b.nickname = i == 1 ? "logarithmic" : "log^" + std::to_string(i);
    out.push_back(std::move(b));
  }
  out.push_back({{PTerm::len(x_var())}, ClosureMode::Polynomial, "B2", "polylogarithmic"});
  out.push_back({{x_var()}, ClosureMode::Linear, "B3", "linear"});
  {
    Boundclass b4;
    for (size_t i = 1; i <= truncate; ++i)
      b4.generators.push_back(PTerm::prod(x_var(), pow_of(PTerm::len(x_var()), i)));
    b4.mode = ClosureMode::Linear;
    b4.name = "B4";
    b4.nickname = "quasilinear";
    out.push_back(std::move(b4));
  }
  out.push_back({{x_var()}, ClosureMode::Polynomial, "B5", "polynomial"});
  {
    Boundclass b6;
    for (size_t i = 1; i <= truncate; ++i)
      b6.generators.push_back(PTerm::pow2(pow_of(PTerm::len(x_var()), i)));
    b6.mode = ClosureMode::Polynomial;
    b6.name = "B6";
    b6.nickname = "quasipolynomial";
    out.push_back(std::move(b6));
  }
  out.push_back({{PTerm::pow2(x_var())},
                 ClosureMode::Polynomial,
                 "B7",
                 "exponential-with-linear-exponent"});
  {
    Boundclass b8;
    for (size_t i = 1; i <= truncate; ++i) b8.generators.push_back(PTerm::pow2(pow_of(x_var(), i)));
    b8.mode = ClosureMode::Polynomial;
    b8.name = "B8";
    b8.nickname = "exponential-with-polynomial-exponent";
    out.push_back(std::move(b8));
  }
  return out;
}

std::optional<Boundclass> standard_class(const std::string& name, size_t truncate) {
  for (auto& c : standard_classes(truncate)) {
    if (c.name == name) return c;
  }
  return std::nullopt;
}

Boundclass parse_boundclass(const std::string& spec, size_t truncate) {
  std::string s = spec;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (auto std_class = standard_class(s, truncate)) return *std_class;
  auto open = s.find('{');
  if (open == std::string::npos || s.empty() || s.back() != '}')
    throw std::invalid_argument("bad boundclass spec '" + spec +
                                "': expected a standard name or mode{generators}");
  std::string mode = s.substr(0, open);
  Boundclass out;
  if (mode == "linear") out.mode = ClosureMode::Linear;
  else if (mode == "poly") out.mode = ClosureMode::Polynomial;
  else if (mode == "set") out.mode = ClosureMode::None;
  else throw std::invalid_argument("unknown closure mode '" + mode + "'");
  std::string body = s.substr(open + 1, s.size() - open - 2);
  size_t depth = 0, start = 0;
  std::vector<std::string> parts;
  for (size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || (body[i] == ',' && depth == 0)) {
      parts.push_back(body.substr(start, i - start));
      start = i + 1;
    } else if (body[i] == '(') {
      ++depth;
    } else if (body[i] == ')') {
      --depth;
    }
  }
  for (const auto& p : parts) {
    std::string g = p;
    while (!g.empty() && std::isspace(static_cast<unsigned char>(g.front()))) g.erase(g.begin());
    while (!g.empty() && std::isspace(static_cast<unsigned char>(g.back()))) g.pop_back();
    if (g.empty()) continue;
    PTerm t = parse_pterm(g);
    if (!is_bound_expr(t))
      throw std::invalid_argument("generator '" + g + "' is outside the bound grammar");
    out.generators.push_back(std::move(t));
  }
  if (out.generators.empty()) throw std::invalid_argument("boundclass has no generators");
  out.name = out.spec_string();
  return out;
}

std::string Triple::to_string() const {
  auto handle = [](const Boundclass& c) { return c.name.empty() ? c.spec_string() : c.name; };
  return "(" + handle(amplitude) + "," + handle(space) + "," + handle(time) + ")";
}

// ---------------------------------------------------------------- audit

namespace {

using Grid = std::vector<uint64_t>;

// Candidate closure elements for the domination searches: generators with
// successor paddings, sums, doublings, cross sums, and (polynomially closed
// classes) square chains. Built from closure operations only, so membership
// holds by construction.
std::vector<PTerm> candidate_elements(const Boundclass& c, size_t cap) {
  // Bases: generators, their cross sums/products, and (for polynomially
  // closed classes) square-chain powers g^2..g^32 and g^3.
  std::vector<PTerm> bases;
  std::set<std::string> seen;
  auto base = [&](const PTerm& t) {
    if (seen.insert(t.to_string()).second) bases.push_back(t);
  };
  PTerm one = PTerm::zero().succ();
  for (const auto& g : c.generators) {
    base(g);
    if (c.mode == ClosureMode::Polynomial) {
      base(PTerm::prod(PTerm::prod(g, g), g));
      PTerm p = g;
      for (size_t k = 2; k <= 32; k *= 2) {
        p = PTerm::prod(p, p);
        base(p);
      }
    }
  }
  for (size_t i = 0; i < c.generators.size(); ++i) {
    for (size_t j = i + 1; j < c.generators.size(); ++j) {
      base(PTerm::sum(c.generators[i], c.generators[j]));
      if (c.mode == ClosureMode::Polynomial)
        base(PTerm::prod(c.generators[i], c.generators[j]));
    }
  }
  // Scale each base by repeated doubling and pad with successors; both stay
  // inside the linear closure, so membership holds by construction.
  std::vector<PTerm> out;
  out.push_back(PTerm::zero());
  out.push_back(one);
  out.push_back(one.succ());
  for (size_t k = 1; k <= 64; k *= 2) {
    for (const auto& b : bases) {
      if (out.size() + 3 > cap) return out;
      PTerm scaled = b;
      for (size_t s = 1; s < k; s *= 2) scaled = PTerm::sum(scaled, scaled);
      out.push_back(scaled);
      out.push_back(PTerm::sum(scaled, one));
      out.push_back(PTerm::sum(scaled, one.succ()));
    }
  }
  return out;
}

std::vector<std::optional<BigNat>> value_vector(const PTerm& t, const Grid& grid) {
  auto vars = sorted_vars(t);
  std::vector<std::optional<BigNat>> out;
  out.reserve(grid.size());
  for (uint64_t a : grid) {
    std::map<std::string, BigNat> env;
    for (const auto& v : vars) env.emplace(v, BigNat(a));
    try {
      out.push_back(t.eval(env));
    } catch (const BlowupError&) {
      out.push_back(std::nullopt);
    }
  }
  return out;
}

bool vec_le(const std::vector<std::optional<BigNat>>& a,
            const std::vector<std::optional<BigNat>>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i] || !b[i]) return false;
    if (*b[i] < *a[i]) return false;
  }
  return true;
}

std::vector<std::optional<BigNat>> length_vector(const std::vector<std::optional<BigNat>>& v) {
  std::vector<std::optional<BigNat>> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (e) out.emplace_back(BigNat(e->bit_length()));
    else out.push_back(std::nullopt);
  }
  return out;
}

struct ClassValues {
  std::vector<PTerm> terms;
  std::vector<std::vector<std::optional<BigNat>>> values;
};

ClassValues evaluated_candidates(const Boundclass& c, const AuditConfig& cfg) {
  ClassValues cv;
  for (const auto& t : candidate_elements(c, cfg.candidates)) {
    cv.terms.push_back(t);
    cv.values.push_back(value_vector(t, cfg.grid));
  }
  return cv;
}

std::optional<PTerm> dominated_by_class(const std::vector<std::optional<BigNat>>& fv,
                                        const ClassValues& cv) {
  for (size_t i = 0; i < cv.terms.size(); ++i) {
    if (vec_le(fv, cv.values[i])) return cv.terms[i];
  }
  return std::nullopt;
}

CondReport cond_at_least(const Boundclass& cls, const ClassValues& cv,
                         const std::vector<PTerm>& lower_bounds, const AuditConfig& cfg) {
  for (const auto& lb : lower_bounds) {
    if (closure_contains(cls, lb, cfg.budget).found) continue;
    if (!dominated_by_class(value_vector(lb, cfg.grid), cv)) {
      return {CondStatus::Inconclusive,
              "no dominating class element found for " + lb.to_string()};
    }
  }
  return {CondStatus::VerifiedAtSamples, ""};
}

const char* status_name(CondStatus s) {
  switch (s) {
    case CondStatus::VerifiedAtSamples: return "verified-at-samples";
    case CondStatus::Witnessed: return "witnessed";
    case CondStatus::Falsified: return "falsified";
    default: return "inconclusive";
  }
}

}  // namespace

bool RegularityReport::any_falsified() const {
  for (const auto& c : triple) {
    if (c.status == CondStatus::Falsified) return true;
  }
  for (const auto& c : theory) {
    if (c.status == CondStatus::Falsified) return true;
  }
  return false;
}

std::string RegularityReport::to_string() const {
  std::string out;
  for (size_t i = 0; i < triple.size(); ++i) {
    out += "condition " + std::to_string(i + 1) + ": " + status_name(triple[i].status);
    if (!triple[i].detail.empty()) out += " (" + triple[i].detail + ")";
    out += "\n";
  }
  for (size_t i = 0; i < theory.size(); ++i) {
    out += "theory condition " + std::to_string(i + 1) + ": " + status_name(theory[i].status);
    if (!theory[i].detail.empty()) out += " (" + theory[i].detail + ")";
    out += "\n";
  }
  return out;
}

RegularityReport check_regularity(const Triple& t, const AuditConfig& cfg) {
  RegularityReport rep;
  ClassValues amp = evaluated_candidates(t.amplitude, cfg);
  ClassValues spc = evaluated_candidates(t.space, cfg);
  ClassValues tim = evaluated_candidates(t.time, cfg);

  // Condition 1: a strategy-level witness for each generator's
  // bound-evaluation game.
  {
    std::vector<PTerm> gens;
    std::set<std::string> seen;
    for (const auto* c : {&t.amplitude, &t.space, &t.time}) {
      for (const auto& g : c->generators) {
        if (seen.insert(g.to_string()).second) gens.push_back(g);
      }
    }
    if (!cfg.witness) {
      rep.triple[0] = {CondStatus::Inconclusive, "no strategy witness configured"};
    } else {
      CondReport agg{CondStatus::Witnessed, "bound evaluation strategies (contract-level)"};
      for (const auto& g : gens) {
        CondReport r = cfg.witness(g);
        if (r.status == CondStatus::Falsified) {
          agg = r;
          break;
        }
        if (r.status == CondStatus::Inconclusive && agg.status == CondStatus::Witnessed) agg = r;
      }
      rep.triple[0] = agg;
    }
  }

  // Condition 2: amplitude at least linear, space at least logarithmic,
  // time at least polynomial.
  {
    PTerm x = x_var();
    auto a = cond_at_least(t.amplitude, amp, {x}, cfg);
    auto s = cond_at_least(t.space, spc, {PTerm::len(x)}, cfg);
    auto ti = cond_at_least(t.time, tim, {x, pow_of(x, 2), pow_of(x, 3)}, cfg);
    CondReport worst{CondStatus::VerifiedAtSamples,
                     "linear/logarithmic/polynomial floors hold on the grid"};
    for (const auto& r : {a, s, ti}) {
      if (r.status == CondStatus::Inconclusive) worst = r;
    }
    rep.triple[1] = worst;
  }

  // Condition 3: closure-mode flags, definitive either way.
  {
    bool lin = t.amplitude.mode != ClosureMode::None && t.space.mode != ClosureMode::None &&
               t.time.mode != ClosureMode::None;
    bool time_poly = t.time.mode == ClosureMode::Polynomial;
    if (!lin) {
      rep.triple[2] = {CondStatus::Falsified, "a component is not linearly closed"};
    } else if (!time_poly) {
      rep.triple[2] = {CondStatus::Falsified,
                       "time component " + t.time.spec_string() + " is not polynomially closed"};
    } else {
      rep.triple[2] = {CondStatus::Witnessed, "closure-mode flags"};
    }
  }

  // Condition 4: generator compositions stay dominated within each component.
  {
    CondReport agg{CondStatus::VerifiedAtSamples, "generator compositions dominated on the grid"};
    std::vector<PTerm> inner;
    for (const auto* c : {&t.amplitude, &t.space}) {
      for (const auto& g : c->generators) inner.push_back(g);
    }
    const Boundclass* classes[3] = {&t.amplitude, &t.space, &t.time};
    const ClassValues* values[3] = {&amp, &spc, &tim};
    for (int k = 0; k < 3; ++k) {
      for (const auto& g : classes[k]->generators) {
        auto gv = sorted_vars(g);
        if (gv.size() != 1) continue;
        for (const auto& c : inner) {
          PTerm composed = g.substitute(gv[0], c);
          if (!dominated_by_class(value_vector(composed, cfg.grid), *values[k])) {
            agg = {CondStatus::Inconclusive,
                   "no dominator found for composition " + composed.to_string() + " in " +
                       classes[k]->spec_string() + " (families are truncated)"};
          }
        }
      }
    }
    rep.triple[3] = agg;
  }

  // Condition 5: every sampled triple is pointwise dominated by a chained
  // triple with |t'| <= s' <= a' <= t' on the grid. Samples are the
  // generators plus, for polynomially closed components, their squares.
  {
    auto samples = [](const Boundclass& c) {
      std::vector<PTerm> out = c.generators;
      if (c.mode == ClosureMode::Polynomial) {
        for (const auto& g : c.generators) out.push_back(PTerm::prod(g, g));
      }
      return out;
    };
    CondReport agg{CondStatus::VerifiedAtSamples, "dominating chained triples found on the grid"};
    for (const auto& ga : samples(t.amplitude)) {
      auto va = value_vector(ga, cfg.grid);
      for (const auto& gs : samples(t.space)) {
        auto vs = value_vector(gs, cfg.grid);
        for (const auto& gt : samples(t.time)) {
          auto vt = value_vector(gt, cfg.grid);
          bool found = false;
          for (size_t it = 0; it < tim.terms.size() && !found; ++it) {
            if (!vec_le(vt, tim.values[it])) continue;
            auto lt = length_vector(tim.values[it]);
            for (size_t is = 0; is < spc.terms.size() && !found; ++is) {
              if (!vec_le(vs, spc.values[is]) || !vec_le(lt, spc.values[is])) continue;
              for (size_t ia = 0; ia < amp.terms.size() && !found; ++ia) {
                if (vec_le(va, amp.values[ia]) && vec_le(spc.values[is], amp.values[ia]) &&
                    vec_le(amp.values[ia], tim.values[it]))
                  found = true;
              }
            }
          }
          if (!found) {
            agg = {CondStatus::Inconclusive,
                   "no chained dominating triple found for (" + ga.to_string() + ", " +
                       gs.to_string() + ", " + gt.to_string() + ")"};
          }
        }
      }
    }
    rep.triple[4] = agg;
  }

  if (cfg.supplementary_axioms == 0) {
    rep.theory[0] = {CondStatus::Witnessed, "no supplementary axioms"};
  } else if (cfg.supplementary_witnessed) {
    rep.theory[0] = {CondStatus::Witnessed, "per-axiom strategies configured"};
  } else {
    rep.theory[0] = {CondStatus::Inconclusive, "no strategy named for the supplementary axioms"};
  }
  rep.theory[1] = rep.triple[0].status == CondStatus::Witnessed
                      ? CondReport{CondStatus::Witnessed,
                                   "bound evaluation witnessed at contract level"}
                      : rep.triple[0];
  return rep;
}

std::vector<Triple> catalog_triples(size_t truncate) {
  auto get = [&](const std::string& n) { return *standard_class(n, truncate); };
  std::vector<Triple> out;
  auto add = [&](const std::string& a, const std::string& s, const std::string& t) {
    out.push_back({get(a), get(s), get(t)});
  };
  for (size_t i = 1; i <= truncate; ++i) add("B3", "B1^" + std::to_string(i), "B5");
  add("B3", "B2", "B5");
  add("B3", "B2", "B6");
  add("B3", "B2", "B7");
  add("B3", "B3", "B5");
  add("B3", "B3", "B6");
  add("B3", "B3", "B7");
  for (size_t i = 1; i <= truncate; ++i) add("B4", "B1^" + std::to_string(i), "B5");
  add("B4", "B2", "B5");
  add("B4", "B2", "B6");
  add("B4", "B4", "B5");
  add("B4", "B4", "B6");
  add("B4", "B4", "B7");
  for (size_t i = 1; i <= truncate; ++i) add("B5", "B1^" + std::to_string(i), "B5");
  add("B5", "B2", "B5");
  add("B5", "B2", "B6");
  add("B5", "B5", "B5");
  add("B5", "B5", "B6");
  add("B5", "B5", "B7");
  add("B5", "B5", "B8");
  return out;
}

std::vector<CatalogRow> audit_catalog(const AuditConfig& cfg) {
  std::vector<CatalogRow> rows;
  for (const auto& t : catalog_triples()) {
    rows.push_back({t, check_regularity(t, cfg)});
  }
  return rows;
}

std::string render_catalog(const std::vector<CatalogRow>& rows) {
  std::string out;
  for (const auto& row : rows) {
    out += row.triple.to_string() + ": " + row.triple.amplitude.nickname + " amplitude, " +
           row.triple.space.nickname + " space, " + row.triple.time.nickname + " time\n";
    const auto& r = row.report;
    out += "  conditions:";
    for (size_t i = 0; i < r.triple.size(); ++i) {
      out += " " + std::to_string(i + 1) + "=" + status_name(r.triple[i].status);
    }
    out += "\n  theory:";
    for (size_t i = 0; i < r.theory.size(); ++i) {
      out += " " + std::to_string(i + 1) + "=" + status_name(r.theory[i].status);
    }
    out += r.any_falsified() ? "\n  verdict: FALSIFIED\n" : "\n  verdict: no falsification\n";
  }
  return out;
}

}  // namespace clar::bounds
