#include "clar/cl12.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "clar/numeric.hpp"

namespace clar::cl12 {

std::set<std::string> Sequent::all_vars() const {
  std::set<std::string> out;
  for (const auto& a : antecedent) {
    auto v = a.all_vars();
    out.insert(v.begin(), v.end());
  }
  auto v = succedent.all_vars();
  out.insert(v.begin(), v.end());
  return out;
}

std::string Sequent::to_string() const {
  std::string out;
  for (size_t i = 0; i < antecedent.size(); ++i) {
    if (i) out += ", ";
    out += antecedent[i].to_string();
  }
  if (!antecedent.empty()) out += " ";
  out += "|o- ";
  out += succedent.to_string();
  return out;
}

Sequent Sequent::parse(const std::string& text, const ParseOptions& opts) {
  auto [ants, succ] = parse_sequent_parts(text, opts);
  return {std::move(ants), std::move(succ)};
}

// ---------------------------------------------------------------- stability

namespace {

// Congruence closure over the pseudo-term dag with ground-value propagation.
// Naive fixpoint formulation; sequents in proofs are small.
class Congruence {
public:
  int add(const PTerm& t) {
    std::vector<int> args;
    for (const auto& a : t.args()) args.push_back(add(a));
    std::string key = node_key(t.kind(), payload(t), args);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back({t.kind(), payload(t), std::move(args)});
    rep_.push_back(id);
    value_.emplace_back(t.kind() == PtKind::Const ? std::optional(t.value()) : std::nullopt);
    index_[key] = id;
    dirty_ = true;
    return id;
  }

  void assert_eq(int a, int b) { merge(a, b); }

  bool eq(int a, int b) {
    settle();
    if (find(a) == find(b)) return true;
    auto va = value_[find(a)];
    auto vb = value_[find(b)];
    return va && vb && *va == *vb;
  }

  bool diseq(int a, int b) {
    settle();
    auto va = value_[find(a)];
    auto vb = value_[find(b)];
    return va && vb && !(*va == *vb);
  }

  std::optional<BigNat> value_of(int a) {
    settle();
    return value_[find(a)];
  }

  bool contradiction() {
    settle();
    return contradiction_;
  }

private:
  struct Node {
    PtKind kind;
    std::string payload;
    std::vector<int> args;
  };

  static std::string payload(const PTerm& t) {
    if (t.kind() == PtKind::Var) return t.var_name();
    if (t.kind() == PtKind::Const) return t.value().to_binary();
    return "";
  }

  std::string node_key(PtKind k, const std::string& pay, const std::vector<int>& args) const {
    std::string key = std::to_string(static_cast<int>(k)) + ":" + pay;
    for (int a : args) key += "," + std::to_string(a);
    return key;
  }

  int find(int a) {
    while (rep_[a] != a) a = rep_[a] = rep_[rep_[a]];
    return a;
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (value_[a] && value_[b] && !(*value_[a] == *value_[b])) contradiction_ = true;
    rep_[a] = b;
    if (value_[a] && !value_[b]) value_[b] = value_[a];
    dirty_ = true;
  }

  std::optional<BigNat> compute(const Node& n) {
    std::vector<BigNat> v;
    for (int a : n.args) {
      auto val = value_[find(a)];
      if (!val) return std::nullopt;
      v.push_back(*val);
    }
    try {
      switch (n.kind) {
        case PtKind::Succ: return v[0].succ();
        case PtKind::Sum: return v[0].add(v[1]);
        case PtKind::Prod: return v[0].mul(v[1]);
        case PtKind::Len: return num::length(v[0]);
        case PtKind::Pow2:
          if (!v[0].fits_u64()) return std::nullopt;
          return BigNat::pow2(v[0].to_u64());
        case PtKind::Monus: return num::monus(v[0], v[1]);
        case PtKind::Half: return num::half(v[0]);
        case PtKind::Br0: return num::bit_replace(v[0], v[1], false);
        case PtKind::Br1: return num::bit_replace(v[0], v[1], true);
        case PtKind::Bitsum: return num::bitsum(v[0], v[1], v[2], v[3]);
        case PtKind::Carry: return num::mult_carry(v[0], v[1], v[2]);
        default: return std::nullopt;
      }
    } catch (const BlowupError&) {
      return std::nullopt;
    }
  }

  void settle() {
    while (dirty_) {
      dirty_ = false;
      std::map<std::string, int> sigs;
      for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
        std::vector<int> reps;
        for (int a : nodes_[i].args) reps.push_back(find(a));
        std::string sig = node_key(nodes_[i].kind, nodes_[i].payload, reps);
        auto [it, fresh] = sigs.emplace(sig, i);
        if (!fresh && find(it->second) != find(i)) merge(it->second, i);
      }
      for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
        int r = find(i);
        if (value_[r]) continue;
        if (auto v = compute(nodes_[i])) {
          value_[r] = v;
          dirty_ = true;
        }
      }
    }
  }

  std::vector<Node> nodes_;
  std::vector<int> rep_;
  std::vector<std::optional<BigNat>> value_;
  std::map<std::string, int> index_;
  bool dirty_ = false;
  bool contradiction_ = false;
};

struct AtomFact {
  FKind kind;
  Rel rel;
  std::vector<int> ids;
  bool positive;
};

class Entailer {
public:
  explicit Entailer(const StabilityBudget& budget) : budget_(budget) {}

  void add_hyp(const Formula& f) {
    switch (f.kind()) {
      case FKind::And:
        add_hyp(f.child(0));
        add_hyp(f.child(1));
        return;
      case FKind::Not:
        if (f.child(0).is_atom()) record(f.child(0), false);
        return;
      case FKind::Forall: universals_.push_back(f); return;
      case FKind::Cmp:
      case FKind::Bit:
      case FKind::Carry1:
      case FKind::Borrow1: record(f, true); return;
      default: return;  // opaque hypothesis shapes add no facts
    }
  }

  void instantiate_universals() {
    size_t left = budget_.instantiations;
    auto candidates = candidate_terms();
    for (const auto& u : universals_) {
      std::vector<std::string> binders;
      Formula body = u;
      while (body.kind() == FKind::Forall) {
        binders.push_back(body.var());
        body = body.child(0);
      }
      if (binders.size() > 2) continue;
      std::vector<std::map<std::string, PTerm>> subs(1);
      for (const auto& x : binders) {
        std::vector<std::map<std::string, PTerm>> next;
        for (const auto& s : subs) {
          for (const auto& c : candidates) {
            auto s2 = s;
            s2.emplace(x, c);
            next.push_back(std::move(s2));
          }
        }
        subs = std::move(next);
      }
      for (const auto& s : subs) {
        if (left == 0) return;
        Formula inst = body;
        bool bad = false;
        for (const auto& [x, t] : s) {
          try {
            inst = inst.substitute(x, t);
          } catch (const CaptureError&) {
            bad = true;
            break;
          }
        }
        if (!bad) {
          add_hyp(inst);
          --left;
        }
      }
    }
  }

  bool contradiction() { return cc_.contradiction(); }

  bool prove(const Formula& goal, size_t depth = 0) {
    if (depth > 8) return false;
    if (cc_.contradiction()) return true;
    switch (goal.kind()) {
      case FKind::And:
        return prove(goal.child(0), depth + 1) && prove(goal.child(1), depth + 1);
      case FKind::Or:
        return prove(goal.child(0), depth + 1) || prove(goal.child(1), depth + 1);
      case FKind::Imp: {
        Entailer sub = *this;
        sub.add_hyp(goal.child(0));
        return sub.prove(goal.child(1), depth + 1);
      }
      case FKind::Not:
        return goal.child(0).is_atom() && refute(goal.child(0));
      case FKind::Forall: {
        // A fresh free variable decides the universal goal.
        std::string w = fresh_var(seen_vars());
        try {
          return prove(goal.child(0).substitute(goal.var(), PTerm::var(w)), depth + 1);
        } catch (const CaptureError&) {
          return false;
        }
      }
      case FKind::Exists: {
        size_t tried = 0;
        for (const auto& c : candidate_terms()) {
          if (tried++ >= budget_.instantiations) break;
          try {
            if (prove(goal.child(0).substitute(goal.var(), c), depth + 1)) return true;
          } catch (const CaptureError&) {
          }
        }
        return false;
      }
      case FKind::Cmp:
      case FKind::Bit:
      case FKind::Carry1:
      case FKind::Borrow1: return holds(goal);
      default: return false;
    }
  }

  // Ground values the congruence propagation assigned to free variables,
  // used to steer countermodel probes.
  std::map<std::string, BigNat> guided_assignment(const std::set<std::string>& vars) {
    std::map<std::string, BigNat> out;
    for (const auto& v : vars) {
      auto it = var_ids_.find(v);
      if (it == var_ids_.end()) continue;
      if (auto val = cc_.value_of(it->second)) out.emplace(v, *val);
    }
    return out;
  }

  void note_terms(const Formula& f) {
    for (const auto& pt : f.pts()) note_term(pt);
    for (const auto& k : f.kids()) note_terms(k);
  }

private:
  void note_term(const PTerm& t) {
    int id = cc_.add(t);
    if (t.kind() == PtKind::Var) var_ids_.emplace(t.var_name(), id);
    if (dedup_.insert(t.to_string()).second) terms_.push_back(t);
    for (const auto& a : t.args()) note_term(a);
  }

  std::set<std::string> seen_vars() const {
    std::set<std::string> out;
    for (const auto& t : terms_) t.collect_vars(out);
    return out;
  }

  std::vector<PTerm> candidate_terms() const {
    std::vector<PTerm> out;
    std::set<std::string> dedup;
    auto push = [&](const PTerm& t) {
      if (dedup.insert(t.to_string()).second) out.push_back(t);
    };
    push(PTerm::zero());
    push(PTerm::zero().succ());
    for (const auto& t : terms_) push(t);
    return out;
  }

  void record(const Formula& atom, bool positive) {
    note_terms(atom);
    AtomFact fact;
    fact.kind = atom.kind();
    fact.rel = atom.kind() == FKind::Cmp ? atom.rel() : Rel::Eq;
    for (const auto& pt : atom.pts()) fact.ids.push_back(cc_.add(pt));
    fact.positive = positive;
    if (positive && fact.kind == FKind::Cmp && fact.rel == Rel::Eq)
      cc_.assert_eq(fact.ids[0], fact.ids[1]);
    facts_.push_back(std::move(fact));
  }

  std::optional<bool> evaluate(const Formula& atom) {
    std::vector<BigNat> vals;
    for (const auto& pt : atom.pts()) {
      auto v = cc_.value_of(cc_.add(pt));
      if (!v) return std::nullopt;
      vals.push_back(*v);
    }
    switch (atom.kind()) {
      case FKind::Cmp: {
        int c = vals[0].cmp(vals[1]);
        return atom.rel() == Rel::Eq ? c == 0 : atom.rel() == Rel::Le ? c <= 0 : c < 0;
      }
      case FKind::Bit: return num::bit_pred(vals[0], vals[1]);
      case FKind::Carry1: return num::carry1(vals[0], vals[1], vals[2]);
      case FKind::Borrow1: return num::borrow1(vals[0], vals[1], vals[2]);
      default: return std::nullopt;
    }
  }

  bool match_fact(const Formula& atom, bool positive) {
    std::vector<int> ids;
    for (const auto& pt : atom.pts()) ids.push_back(cc_.add(pt));
    for (const auto& f : facts_) {
      if (f.kind != atom.kind() || f.positive != positive) continue;
      if (atom.kind() == FKind::Cmp && f.rel != atom.rel()) continue;
      bool all = f.ids.size() == ids.size();
      for (size_t i = 0; all && i < ids.size(); ++i) {
        if (!cc_.eq(f.ids[i], ids[i])) all = false;
      }
      if (all) return true;
    }
    return false;
  }

  bool holds(const Formula& atom) {
    note_terms(atom);
    if (atom.kind() == FKind::Cmp && atom.rel() == Rel::Eq &&
        cc_.eq(cc_.add(atom.pts()[0]), cc_.add(atom.pts()[1])))
      return true;
    if (auto v = evaluate(atom)) return *v;
    return match_fact(atom, true);
  }

  bool refute(const Formula& atom) {
    note_terms(atom);
    if (atom.kind() == FKind::Cmp && atom.rel() == Rel::Eq &&
        cc_.diseq(cc_.add(atom.pts()[0]), cc_.add(atom.pts()[1])))
      return true;
    if (auto v = evaluate(atom)) return !*v;
    return match_fact(atom, false);
  }

  StabilityBudget budget_;
  Congruence cc_;
  std::vector<AtomFact> facts_;
  std::vector<Formula> universals_;
  std::vector<PTerm> terms_;
  std::set<std::string> dedup_;
  std::map<std::string, int> var_ids_;
};

// Propositional abstraction: atoms and quantified subformulas become
// letters; a full truth table over them certifies validity.
struct PropAbstraction {
  std::map<std::string, size_t> letters;

  void collect(const Formula& f) {
    switch (f.kind()) {
      case FKind::And:
      case FKind::Or:
      case FKind::Imp:
      case FKind::Not:
        for (const auto& k : f.kids()) collect(k);
        return;
      default: letters.emplace(f.to_string(), letters.size());
    }
  }

  bool eval(const Formula& f, uint64_t assignment) const {
    switch (f.kind()) {
      case FKind::And: return eval(f.child(0), assignment) && eval(f.child(1), assignment);
      case FKind::Or: return eval(f.child(0), assignment) || eval(f.child(1), assignment);
      case FKind::Imp: return !eval(f.child(0), assignment) || eval(f.child(1), assignment);
      case FKind::Not: return !eval(f.child(0), assignment);
      default: return (assignment >> letters.at(f.to_string())) & 1;
    }
  }
};

bool propositional_tautology(const Formula& phi, size_t max_letters) {
  PropAbstraction abs;
  abs.collect(phi);
  size_t n = abs.letters.size();
  if (n > max_letters) return false;
  for (uint64_t a = 0; a < (1ull << n); ++a) {
    if (!abs.eval(phi, a)) return false;
  }
  return true;
}

Formula sequent_implication(const Sequent& s) {
  Formula succ = elementarize(s.succedent);
  if (s.antecedent.empty()) return succ;
  Formula ants = elementarize(s.antecedent[0]);
  for (size_t i = 1; i < s.antecedent.size(); ++i)
    ants = Formula::conj(ants, elementarize(s.antecedent[i]));
  return Formula::imp(ants, succ);
}

}  // namespace

StabilityResult stability(const Sequent& s, const StabilityBudget& budget) {
  Formula phi = sequent_implication(s);
  EvalOptions eopts;
  eopts.blind_bound = budget.blind_bound;
  switch (eval_elementary(phi, eopts)) {
    case Truth::True: return {Stability::Valid, "decided by evaluation"};
    case Truth::False: return {Stability::Invalid, "evaluates to false"};
    default: break;
  }

  Entailer ent(budget);
  ent.note_terms(phi);
  for (const auto& a : s.antecedent) ent.add_hyp(elementarize(a));
  ent.instantiate_universals();
  if (ent.contradiction()) return {Stability::Valid, "inconsistent antecedents"};
  if (ent.prove(elementarize(s.succedent)))
    return {Stability::Valid, "derived by congruence reasoning"};

  if (propositional_tautology(phi, budget.letters))
    return {Stability::Valid, "propositional tautology"};

  auto frees = phi.free_vars();
  std::vector<std::map<std::string, BigNat>> probes;
  probes.push_back(ent.guided_assignment(frees));
  for (uint64_t fill = 0; fill < 4 && probes.size() < budget.samples; ++fill) {
    probes.emplace_back();
    for (const auto& v : frees) probes.back().emplace(v, BigNat(fill));
  }
  for (auto& probe : probes) {
    Formula ground = phi;
    bool complete = true;
    for (const auto& v : frees) {
      auto it = probe.find(v);
      if (it == probe.end()) {
        complete = false;
        break;
      }
      ground = ground.substitute(v, PTerm::constant(it->second));
    }
    if (!complete) continue;
    if (eval_elementary(ground, eopts) == Truth::False) {
      std::string witness;
      for (const auto& [v, c] : probe) witness += " " + v + "=" + c.to_binary();
      return {Stability::Invalid, "countermodel:" + witness};
    }
  }
  return {Stability::Unknown, "not settled within budget"};
}

// ---------------------------------------------------------------- rules

namespace {

std::string path_string(const std::vector<int>& path) {
  std::string s;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) s.push_back('.');
    s += std::to_string(path[i]);
  }
  return s;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

// Resolve the raw instance text against the addressed node kind.
std::optional<MoveTerminal> resolve_instance(const Formula& node, const std::string& text) {
  bool binary = node.kind() == FKind::Meet || node.kind() == FKind::Join;
  if (binary) {
    if (text == "0") return MoveTerminal::comp(0);
    if (text == "1") return MoveTerminal::comp(1);
    return std::nullopt;
  }
  std::string body = !text.empty() && text[0] == '#' ? text.substr(1) : text;
  bool digits = !body.empty();
  for (char c : body) {
    if (c != '0' && c != '1') digits = false;
  }
  if (digits) {
    if (body.size() > 1 && body[0] == '0') return std::nullopt;
    return MoveTerminal::value(BigNat::from_binary(body));
  }
  if (is_identifier(text)) return MoveTerminal::var(text);
  return std::nullopt;
}

Sequent with_succedent(const Sequent& s, Formula f) {
  Sequent out = s;
  out.succedent = std::move(f);
  return out;
}

Sequent with_antecedent(const Sequent& s, size_t i, Formula f) {
  Sequent out = s;
  out.antecedent[i] = std::move(f);
  return out;
}

}  // namespace

Report check_choose(const Sequent& conclusion, const Sequent& premise, bool meet,
                    size_t ant_index, const std::vector<int>& path,
                    const std::string& instance) {
  if (meet && ant_index >= conclusion.antecedent.size()) {
    return {false, "antecedent index " + std::to_string(ant_index) + " out of range", {}};
  }
  const Formula& side = meet ? conclusion.antecedent[ant_index] : conclusion.succedent;
  auto node = choice_node_at(side, path);
  bool is_choice = node && (node->first.kind() == FKind::Meet || node->first.kind() == FKind::Join ||
                            node->first.kind() == FKind::MeetQ || node->first.kind() == FKind::JoinQ);
  if (!is_choice) {
    return {false, "path '" + path_string(path) + "' does not address a choice occurrence", {}};
  }
  auto term = resolve_instance(node->first, instance);
  if (!term) return {false, "ill-formed instance '" + instance + "'", {}};
  // The machine owns Join-type occurrences of the succedent and, across the
  // turnstile, Meet-type occurrences of antecedent formulas.
  Player mover = meet ? Player::Bot : Player::Top;
  auto replaced = apply_path(side, mover, MovePath{path, *term});
  if (!replaced) {
    return {false,
            "occurrence at path '" + path_string(path) +
                "' is not resolvable by this rule (wrong kind or owner, or the "
                "instance is captured)",
            {}};
  }
  Sequent expected = meet ? with_antecedent(conclusion, ant_index, *replaced)
                          : with_succedent(conclusion, *replaced);
  if (!(premise == expected)) {
    return {false, "premise does not match the computed replacement: expected '" +
                       expected.to_string() + "'", {}};
  }
  return {};
}

Report check_replicate(const Sequent& conclusion, const Sequent& premise, size_t ant_index) {
  if (ant_index >= conclusion.antecedent.size()) {
    return {false, "antecedent index " + std::to_string(ant_index) + " out of range", {}};
  }
  Sequent expected = conclusion;
  expected.antecedent.insert(expected.antecedent.begin() + ant_index,
                             conclusion.antecedent[ant_index]);
  if (!(premise == expected)) {
    return {false, "premise is not the conclusion with antecedent " +
                       std::to_string(ant_index) + " replicated", {}};
  }
  return {};
}

namespace {

struct WaitSlot {
  bool in_succedent = false;
  size_t ant_index = 0;
  MovePath dev_path;
  std::string desc;
  bool quantifier = false;
};

std::vector<WaitSlot> wait_slots(const Sequent& s) {
  std::vector<WaitSlot> slots;
  DevelopPolicy policy;
  policy.avoid = s.all_vars();
  auto add = [&](const Formula& side, Player owner, bool in_succ, size_t idx) {
    for (const auto& d : developments(side, owner, policy)) {
      WaitSlot slot;
      slot.in_succedent = in_succ;
      slot.ant_index = idx;
      slot.dev_path = d.path;
      slot.quantifier = d.path.terminal.kind == MoveTerminal::Kind::Variable;
      slot.desc = (in_succ ? std::string("succedent") : "antecedent #" + std::to_string(idx)) +
                  " occurrence at '" + d.path.to_move_string() + "'";
      slots.push_back(std::move(slot));
    }
  };
  // Environment-owned occurrences: Meet-type in the succedent, Join-type in
  // antecedent formulas (ownership flips across the turnstile, and inside
  // the antecedent of an implication).
  add(s.succedent, Player::Bot, true, 0);
  for (size_t i = 0; i < s.antecedent.size(); ++i) add(s.antecedent[i], Player::Top, false, i);
  return slots;
}

std::optional<Sequent> slot_expected(const Sequent& conclusion, const WaitSlot& slot,
                                     const MoveTerminal& term) {
  const Formula& side =
      slot.in_succedent ? conclusion.succedent : conclusion.antecedent[slot.ant_index];
  Player owner = slot.in_succedent ? Player::Bot : Player::Top;
  auto replaced = apply_path(side, owner, MovePath{slot.dev_path.path, term});
  if (!replaced) return std::nullopt;
  return slot.in_succedent ? with_succedent(conclusion, *replaced)
                           : with_antecedent(conclusion, slot.ant_index, *replaced);
}

}  // namespace

Report check_wait(const Sequent& conclusion, const std::vector<Sequent>& premises,
                  const CheckOptions& opts) {
  Report rep;
  auto st = stability(conclusion, opts.budget);
  if (st.status == Stability::Invalid) {
    return {false, "conclusion is not stable: " + st.detail, {}};
  }
  if (st.status == Stability::Unknown) {
    if (opts.permissive) {
      rep.obligations.push_back("stability unproved: " + conclusion.to_string());
    } else {
      return {false, "stability not established (" + st.detail + ")", {}};
    }
  }

  auto slots = wait_slots(conclusion);
  auto concl_vars = conclusion.all_vars();
  std::vector<bool> premise_used(premises.size(), false);

  for (const auto& slot : slots) {
    bool matched = false;
    for (size_t p = 0; p < premises.size() && !matched; ++p) {
      if (!slot.quantifier) {
        auto expected = slot_expected(conclusion, slot, slot.dev_path.terminal);
        if (expected && premises[p] == *expected) {
          premise_used[p] = true;
          matched = true;
        }
      } else {
        // The instantiation variable must come from outside the conclusion;
        // a spare probe handles bodies that drop the bound variable.
        std::set<std::string> cands;
        for (const auto& v : premises[p].all_vars()) {
          if (!concl_vars.count(v)) cands.insert(v);
        }
        auto all = concl_vars;
        auto pv = premises[p].all_vars();
        all.insert(pv.begin(), pv.end());
        cands.insert(fresh_var(all));
        for (const auto& w : cands) {
          auto expected = slot_expected(conclusion, slot, MoveTerminal::var(w));
          if (expected && premises[p] == *expected) {
            premise_used[p] = true;
            matched = true;
            break;
          }
        }
      }
    }
    if (!matched) {
      if (slot.quantifier) {
        for (size_t p = 0; p < premises.size(); ++p) {
          for (const auto& w : concl_vars) {
            auto expected = slot_expected(conclusion, slot, MoveTerminal::var(w));
            if (expected && premises[p] == *expected) {
              return {false, "premise for " + slot.desc + " instantiates at '" + w +
                                 "', which is not fresh for the conclusion", {}};
            }
          }
        }
      }
      return {false, "missing premise for " + slot.desc, {}};
    }
  }
  for (size_t p = 0; p < premises.size(); ++p) {
    if (!premise_used[p]) {
      return {false, "premise '" + premises[p].to_string() +
                         "' does not match any required occurrence", {}};
    }
  }
  return rep;
}

// ---------------------------------------------------------------- proofs

std::string Justification::to_string() const {
  std::string out;
  switch (kind) {
    case RuleKind::Wait: out = "Wait("; break;
    case RuleKind::MeetChoose: out = "MeetChoose("; break;
    case RuleKind::JoinChoose: out = "JoinChoose("; break;
    case RuleKind::Replicate: out = "Replicate("; break;
  }
  for (size_t i = 0; i < premises.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(premises[i]);
  }
  if (has_ant_index) out += "; ant=" + std::to_string(ant_index);
  if (kind == RuleKind::MeetChoose || kind == RuleKind::JoinChoose) {
    out += "; path=" + path_string(path);
    out += "; inst=" + instance;
  }
  out += ")";
  return out;
}

std::string Proof::to_string() const {
  std::string out;
  for (const auto& l : lines) {
    out += "line " + std::to_string(l.number) + ": " + l.sequent.to_string() + " ;; " +
           l.just.to_string() + "\n";
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

Justification parse_justification(const std::string& text) {
  std::string t = trim(text);
  auto open = t.find('(');
  if (open == std::string::npos || t.empty() || t.back() != ')')
    throw ParseError("expected rule name followed by '(...)'", 0);
  std::string name = trim(t.substr(0, open));
  std::string args = t.substr(open + 1, t.size() - open - 2);
  Justification j;
  if (name == "Wait") j.kind = RuleKind::Wait;
  else if (name == "MeetChoose") j.kind = RuleKind::MeetChoose;
  else if (name == "JoinChoose") j.kind = RuleKind::JoinChoose;
  else if (name == "Replicate") j.kind = RuleKind::Replicate;
  else throw ParseError("unknown rule '" + name + "'", 0);

  auto parts = split(args, ';');
  std::string prem = trim(parts[0]);
  if (!prem.empty()) {
    for (const auto& n : split(prem, ',')) {
      std::string v = trim(n);
      if (v.empty()) throw ParseError("empty premise number", 0);
      j.premises.push_back(std::stoull(v));
    }
  }
  for (size_t i = 1; i < parts.size(); ++i) {
    std::string kv = trim(parts[i]);
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in rule arguments", 0);
    std::string key = trim(kv.substr(0, eq));
    std::string val = trim(kv.substr(eq + 1));
    if (key == "ant") {
      j.ant_index = std::stoull(val);
      j.has_ant_index = true;
    } else if (key == "path") {
      if (!val.empty()) {
        for (const auto& tok : split(val, '.')) {
          std::string v = trim(tok);
          if (v == "0") j.path.push_back(0);
          else if (v == "1") j.path.push_back(1);
          else throw ParseError("bad path component '" + v + "'", 0);
        }
      }
    } else if (key == "inst") {
      j.instance = val;
    } else {
      throw ParseError("unknown rule argument '" + key + "'", 0);
    }
  }
  return j;
}

}  // namespace

Proof Proof::parse_text(const std::string& text, const ParseOptions& opts) {
  Proof proof;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("line", 0) != 0) throw ParseError("expected 'line <n>: ...'", 0);
    size_t colon = t.find(':');
    if (colon == std::string::npos) throw ParseError("expected ':' after line number", 0);
    ProofLine pl;
    pl.number = std::stoull(trim(t.substr(4, colon - 4)));
    std::string rest = t.substr(colon + 1);
    auto sep = rest.find(";;");
    if (sep == std::string::npos) throw ParseError("expected ';;' before the rule", 0);
    pl.sequent = Sequent::parse(trim(rest.substr(0, sep)), opts);
    pl.just = parse_justification(rest.substr(sep + 2));
    proof.lines.push_back(std::move(pl));
  }
  if (proof.lines.empty()) throw ParseError("empty proof", 0);
  return proof;
}

Proof Proof::parse_file(const std::string& path, const ParseOptions& opts) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read proof file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), opts);
}

std::vector<std::string> ProofReport::obligations() const {
  std::vector<std::string> out;
  for (const auto& l : lines) {
    out.insert(out.end(), l.obligations.begin(), l.obligations.end());
  }
  return out;
}

std::string ProofReport::to_string() const {
  std::string out;
  for (const auto& l : lines) {
    out += "line " + std::to_string(l.line) + ": " + (l.ok ? "ok" : "rejected");
    if (!l.message.empty()) out += " - " + l.message;
    out += "\n";
    for (const auto& ob : l.obligations) out += "  obligation: " + ob + "\n";
  }
  switch (outcome) {
    case Outcome::Accepted: out += "accepted\n"; break;
    case Outcome::AcceptedWithObligations:
      out += "accepted with " + std::to_string(obligations().size()) + " obligation(s)\n";
      break;
    case Outcome::Rejected:
      out += "rejected at line " + std::to_string(rejected_line) + ": " + reason + "\n";
      break;
  }
  return out;
}

ProofReport check_proof(const Proof& p, const CheckOptions& opts) {
  ProofReport report;
  for (size_t i = 0; i < p.lines.size(); ++i) {
    const ProofLine& line = p.lines[i];
    LineStatus status;
    status.line = line.number;
    auto reject = [&](const std::string& why) {
      status.ok = false;
      status.message = why;
      report.lines.push_back(status);
      report.outcome = ProofReport::Outcome::Rejected;
      report.rejected_line = line.number;
      report.reason = why;
    };
    if (line.number != i + 1) {
      reject("lines must be numbered consecutively from 1");
      return report;
    }
    bool bad_premise = false;
    for (size_t pr : line.just.premises) {
      if (pr == 0 || pr > i) {
        reject("premise " + std::to_string(pr) + " does not precede this line");
        bad_premise = true;
        break;
      }
    }
    if (bad_premise) return report;
    Report r;
    switch (line.just.kind) {
      case RuleKind::Wait: {
        std::vector<Sequent> prems;
        prems.reserve(line.just.premises.size());
        for (size_t pr : line.just.premises) prems.push_back(p.lines[pr - 1].sequent);
        r = check_wait(line.sequent, prems, opts);
        break;
      }
      case RuleKind::MeetChoose:
      case RuleKind::JoinChoose: {
        if (line.just.premises.size() != 1) {
          reject("Choose takes exactly one premise");
          return report;
        }
        bool meet = line.just.kind == RuleKind::MeetChoose;
        if (meet && !line.just.has_ant_index) {
          reject("MeetChoose requires ant=<index>");
          return report;
        }
        r = check_choose(line.sequent, p.lines[line.just.premises[0] - 1].sequent, meet,
                         line.just.ant_index, line.just.path, line.just.instance);
        break;
      }
      case RuleKind::Replicate: {
        if (line.just.premises.size() != 1 || !line.just.has_ant_index) {
          reject("Replicate takes one premise and ant=<index>");
          return report;
        }
        r = check_replicate(line.sequent, p.lines[line.just.premises[0] - 1].sequent,
                            line.just.ant_index);
        break;
      }
    }
    if (!r.ok) {
      reject(r.error);
      return report;
    }
    status.ok = true;
    status.obligations = r.obligations;
    report.lines.push_back(status);
  }
  report.outcome = report.obligations().empty() ? ProofReport::Outcome::Accepted
                                                : ProofReport::Outcome::AcceptedWithObligations;
  return report;
}

}  // namespace clar::cl12
