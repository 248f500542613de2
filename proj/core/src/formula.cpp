#include "clar/formula.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace clar {

struct Formula::Node {
  FKind kind;
  Rel rel = Rel::Eq;
  std::vector<PTerm> pts;
  std::string var;
  std::vector<Formula> kids;
};

Formula Formula::cmp(Rel rel, PTerm a, PTerm b) {
  auto n = std::make_shared<Node>();
  n->kind = FKind::Cmp;
  n->rel = rel;
  n->pts = {std::move(a), std::move(b)};
  return Formula(std::move(n));
}

Formula Formula::bit(PTerm y, PTerm x) {
  auto n = std::make_shared<Node>();
  n->kind = FKind::Bit;
  n->pts = {std::move(y), std::move(x)};
  return Formula(std::move(n));
}

Formula Formula::carry1(PTerm y, PTerm u, PTerm v) {
  auto n = std::make_shared<Node>();
  n->kind = FKind::Carry1;
  n->pts = {std::move(y), std::move(u), std::move(v)};
  return Formula(std::move(n));
}

Formula Formula::borrow1(PTerm y, PTerm u, PTerm v) {
  auto n = std::make_shared<Node>();
  n->kind = FKind::Borrow1;
  n->pts = {std::move(y), std::move(u), std::move(v)};
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  if (!f.is_elementary())
    throw std::invalid_argument(
        "negation applies to elementary subformulas only; normalize first");
  auto n = std::make_shared<Node>();
  n->kind = FKind::Not;
  n->kids = {std::move(f)};
  return Formula(std::move(n));
}

Formula Formula::mk2(FKind k, Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->kids = {std::move(a), std::move(b)};
  return Formula(std::move(n));
}

Formula Formula::conj(Formula a, Formula b) { return mk2(FKind::And, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return mk2(FKind::Or, std::move(a), std::move(b)); }
Formula Formula::imp(Formula a, Formula b) { return mk2(FKind::Imp, std::move(a), std::move(b)); }
Formula Formula::meet(Formula a, Formula b) { return mk2(FKind::Meet, std::move(a), std::move(b)); }
Formula Formula::join(Formula a, Formula b) { return mk2(FKind::Join, std::move(a), std::move(b)); }

Formula Formula::mkq(FKind k, std::string x, Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->var = std::move(x);
  n->kids = {std::move(f)};
  return Formula(std::move(n));
}

Formula Formula::forall(std::string x, Formula f) { return mkq(FKind::Forall, std::move(x), std::move(f)); }
Formula Formula::exists(std::string x, Formula f) { return mkq(FKind::Exists, std::move(x), std::move(f)); }
Formula Formula::meet_q(std::string x, Formula f) { return mkq(FKind::MeetQ, std::move(x), std::move(f)); }
Formula Formula::join_q(std::string x, Formula f) { return mkq(FKind::JoinQ, std::move(x), std::move(f)); }

Formula Formula::truth() { return eq(PTerm::zero(), PTerm::zero()); }
Formula Formula::falsity() { return eq(PTerm::zero(), PTerm::zero().succ()); }

FKind Formula::kind() const { return p_->kind; }
Rel Formula::rel() const { return p_->rel; }
const std::vector<PTerm>& Formula::pts() const { return p_->pts; }
const std::string& Formula::var() const { return p_->var; }
const std::vector<Formula>& Formula::kids() const { return p_->kids; }

bool Formula::operator==(const Formula& o) const {
  if (p_ == o.p_) return true;
  if (p_->kind != o.p_->kind) return false;
  switch (p_->kind) {
    case FKind::Cmp:
      if (p_->rel != o.p_->rel) return false;
      [[fallthrough]];
    case FKind::Bit:
    case FKind::Carry1:
    case FKind::Borrow1:
      return p_->pts == o.p_->pts;
    default:
      if (p_->var != o.p_->var) return false;
      return p_->kids == o.p_->kids;
  }
}

bool Formula::is_atom() const {
  switch (p_->kind) {
    case FKind::Cmp:
    case FKind::Bit:
    case FKind::Carry1:
    case FKind::Borrow1: return true;
    default: return false;
  }
}

bool Formula::is_elementary() const {
  switch (p_->kind) {
    case FKind::Meet:
    case FKind::Join:
    case FKind::MeetQ:
    case FKind::JoinQ: return false;
    default:
      for (const auto& k : p_->kids) {
        if (!k.is_elementary()) return false;
      }
      return true;
  }
}

bool Formula::has_nonzero_const() const {
  for (const auto& t : p_->pts) {
    if (t.has_nonzero_const()) return true;
  }
  for (const auto& k : p_->kids) {
    if (k.has_nonzero_const()) return true;
  }
  return false;
}

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  for (const auto& t : f.pts()) {
    for (const auto& v : t.vars()) {
      if (!bound.count(v)) out.insert(v);
    }
  }
  switch (f.kind()) {
    case FKind::Forall:
    case FKind::Exists:
    case FKind::MeetQ:
    case FKind::JoinQ: {
      bool fresh = bound.insert(f.var()).second;
      collect_free(f.child(0), bound, out);
      if (fresh) bound.erase(f.var());
      return;
    }
    default:
      for (const auto& k : f.kids()) collect_free(k, bound, out);
  }
}

void collect_all(const Formula& f, std::set<std::string>& out) {
  for (const auto& t : f.pts()) t.collect_vars(out);
  switch (f.kind()) {
    case FKind::Forall:
    case FKind::Exists:
    case FKind::MeetQ:
    case FKind::JoinQ: out.insert(f.var()); break;
    default: break;
  }
  for (const auto& k : f.kids()) collect_all(k, out);
}

}  // namespace

std::set<std::string> Formula::free_vars() const {
  std::set<std::string> bound, out;
  collect_free(*this, bound, out);
  return out;
}

std::set<std::string> Formula::all_vars() const {
  std::set<std::string> out;
  collect_all(*this, out);
  return out;
}

Formula Formula::substitute(const std::string& x, const PTerm& t) const {
  switch (p_->kind) {
    case FKind::Cmp:
    case FKind::Bit:
    case FKind::Carry1:
    case FKind::Borrow1: {
      std::vector<PTerm> pts;
      pts.reserve(p_->pts.size());
      for (const auto& pt : p_->pts) pts.push_back(pt.substitute(x, t));
      if (pts == p_->pts) return *this;
      auto n = std::make_shared<Node>(*p_);
      n->pts = std::move(pts);
      return Formula(std::move(n));
    }
    case FKind::Forall:
    case FKind::Exists:
    case FKind::MeetQ:
    case FKind::JoinQ: {
      if (p_->var == x) return *this;  // x is bound here
      if (!child(0).free_vars().count(x)) return *this;
      if (t.vars().count(p_->var)) throw CaptureError(p_->var);
      auto n = std::make_shared<Node>(*p_);
      n->kids = {child(0).substitute(x, t)};
      return Formula(std::move(n));
    }
    default: {
      std::vector<Formula> kids;
      kids.reserve(p_->kids.size());
      bool changed = false;
      for (const auto& k : p_->kids) {
        kids.push_back(k.substitute(x, t));
        if (kids.back() != k) changed = true;
      }
      if (!changed) return *this;
      auto n = std::make_shared<Node>(*p_);
      n->kids = std::move(kids);
      return Formula(std::move(n));
    }
  }
}

Formula close(const Formula& f, FKind kind) {
  auto fv = f.free_vars();  // std::set iterates in lexicographic order
  Formula out = f;
  for (auto it = fv.rbegin(); it != fv.rend(); ++it) {
    switch (kind) {
      case FKind::Forall: out = Formula::forall(*it, out); break;
      case FKind::Exists: out = Formula::exists(*it, out); break;
      case FKind::MeetQ: out = Formula::meet_q(*it, out); break;
      case FKind::JoinQ: out = Formula::join_q(*it, out); break;
      default: throw std::invalid_argument("close: not a quantifier kind");
    }
  }
  return out;
}

Formula elementarize(const Formula& f) {
  switch (f.kind()) {
    case FKind::Meet:
    case FKind::MeetQ: return Formula::truth();
    case FKind::Join:
    case FKind::JoinQ: return Formula::falsity();
    case FKind::And: return Formula::conj(elementarize(f.child(0)), elementarize(f.child(1)));
    case FKind::Or: return Formula::disj(elementarize(f.child(0)), elementarize(f.child(1)));
    case FKind::Imp: return Formula::imp(elementarize(f.child(0)), elementarize(f.child(1)));
    case FKind::Forall: return Formula::forall(f.var(), elementarize(f.child(0)));
    case FKind::Exists: return Formula::exists(f.var(), elementarize(f.child(0)));
    default: return f;  // atoms and Not over elementary
  }
}

bool is_critical(const Formula& f) {
  switch (f.kind()) {
    case FKind::Join:
    case FKind::JoinQ: return true;
    case FKind::Forall:
    case FKind::Exists: return is_critical(f.child(0));
    case FKind::Or: return is_critical(f.child(0)) && is_critical(f.child(1));
    case FKind::And: return is_critical(f.child(0)) || is_critical(f.child(1));
    default: return false;
  }
}

namespace {

bool alpha_eq_rec(const Formula& a, const Formula& b,
                  std::map<std::string, std::string>& a2b,
                  std::map<std::string, std::string>& b2a) {
  if (a.kind() != b.kind()) return false;
  auto pt_eq = [&](const PTerm& s, const PTerm& t) {
    // Rename bound variables of `s` per the maps, then compare.
    std::map<std::string, PTerm> sub;
    for (const auto& [k, v] : a2b) sub.emplace(k, PTerm::var(v));
    return s.substitute(sub) == t;
  };
  switch (a.kind()) {
    case FKind::Cmp:
      if (a.rel() != b.rel()) return false;
      [[fallthrough]];
    case FKind::Bit:
    case FKind::Carry1:
    case FKind::Borrow1: {
      if (a.pts().size() != b.pts().size()) return false;
      for (size_t i = 0; i < a.pts().size(); ++i) {
        if (!pt_eq(a.pts()[i], b.pts()[i])) return false;
      }
      return true;
    }
    case FKind::Forall:
    case FKind::Exists:
    case FKind::MeetQ:
    case FKind::JoinQ: {
      auto save_a = a2b.find(a.var()) != a2b.end() ? std::optional(a2b[a.var()]) : std::nullopt;
      auto save_b = b2a.find(b.var()) != b2a.end() ? std::optional(b2a[b.var()]) : std::nullopt;
      a2b[a.var()] = b.var();
      b2a[b.var()] = a.var();
      bool ok = alpha_eq_rec(a.child(0), b.child(0), a2b, b2a) &&
                a2b[a.var()] == b.var() && b2a[b.var()] == a.var();
      if (save_a) a2b[a.var()] = *save_a; else a2b.erase(a.var());
      if (save_b) b2a[b.var()] = *save_b; else b2a.erase(b.var());
      return ok;
    }
    default: {
      if (a.kids().size() != b.kids().size()) return false;
      for (size_t i = 0; i < a.kids().size(); ++i) {
        if (!alpha_eq_rec(a.kids()[i], b.kids()[i], a2b, b2a)) return false;
      }
      return true;
    }
  }
}

}  // namespace

bool alpha_eq(const Formula& a, const Formula& b) {
  if (a == b) return true;
  std::map<std::string, std::string> a2b, b2a;
  // Free variables must agree literally: seed the maps with identity on them.
  for (const auto& v : a.free_vars()) {
    a2b[v] = v;
    b2a[v] = v;
  }
  if (a.free_vars() != b.free_vars()) return false;
  return alpha_eq_rec(a, b, a2b, b2a);
}

Formula negate_normalized(const Formula& f) {
  switch (f.kind()) {
    case FKind::Not: return f.child(0);
    case FKind::And: return Formula::disj(negate_normalized(f.child(0)), negate_normalized(f.child(1)));
    case FKind::Or: return Formula::conj(negate_normalized(f.child(0)), negate_normalized(f.child(1)));
    case FKind::Imp: return Formula::conj(f.child(0), negate_normalized(f.child(1)));
    case FKind::Forall: return Formula::exists(f.var(), negate_normalized(f.child(0)));
    case FKind::Exists: return Formula::forall(f.var(), negate_normalized(f.child(0)));
    case FKind::Meet: return Formula::join(negate_normalized(f.child(0)), negate_normalized(f.child(1)));
    case FKind::Join: return Formula::meet(negate_normalized(f.child(0)), negate_normalized(f.child(1)));
    case FKind::MeetQ: return Formula::join_q(f.var(), negate_normalized(f.child(0)));
    case FKind::JoinQ: return Formula::meet_q(f.var(), negate_normalized(f.child(0)));
    default: return Formula::negation(f);  // atom
  }
}

std::string fresh_var(const std::set<std::string>& avoid) {
  for (uint64_t i = 1;; ++i) {
    std::string cand = "w" + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

namespace {

int f_prec(FKind k) {
  switch (k) {
    case FKind::Imp: return 1;
    case FKind::Forall:
    case FKind::Exists:
    case FKind::MeetQ:
    case FKind::JoinQ: return 1;
    case FKind::Or:
    case FKind::Join: return 2;
    case FKind::And:
    case FKind::Meet: return 3;
    default: return 4;
  }
}

void render_f(const Formula& f, int parent_prec, std::string& out) {
  int prec = f_prec(f.kind());
  bool paren = prec < parent_prec;
  if (paren) out.push_back('(');
  switch (f.kind()) {
    case FKind::Cmp:
      out += f.pts()[0].to_string();
      out += f.rel() == Rel::Eq ? " = " : f.rel() == Rel::Le ? " <= " : " < ";
      out += f.pts()[1].to_string();
      break;
    case FKind::Bit:
    case FKind::Carry1:
    case FKind::Borrow1: {
      out += f.kind() == FKind::Bit ? "Bit" : f.kind() == FKind::Carry1 ? "Carry1" : "Borrow1";
      out.push_back('(');
      for (size_t i = 0; i < f.pts().size(); ++i) {
        if (i) out += ", ";
        out += f.pts()[i].to_string();
      }
      out.push_back(')');
      break;
    }
    case FKind::Not:
      out.push_back('~');
      render_f(f.child(0), 4, out);
      break;
    case FKind::And:
    case FKind::Meet: {
      const Formula& l = f.child(0);
      bool clarify = f_prec(l.kind()) == prec && l.kind() != f.kind();
      if (clarify) out.push_back('(');
      render_f(l, prec, out);
      if (clarify) out.push_back(')');
      out += f.kind() == FKind::And ? " & " : " cand ";
      render_f(f.child(1), prec + 1, out);
      break;
    }
    case FKind::Or:
    case FKind::Join: {
      const Formula& l = f.child(0);
      bool clarify = f_prec(l.kind()) == prec && l.kind() != f.kind();
      if (clarify) out.push_back('(');
      render_f(l, prec, out);
      if (clarify) out.push_back(')');
      out += f.kind() == FKind::Or ? " | " : " cor ";
      render_f(f.child(1), prec + 1, out);
      break;
    }
    case FKind::Imp:
      render_f(f.child(0), 2, out);
      out += " -> ";
      render_f(f.child(1), 1, out);
      break;
    case FKind::Forall:
    case FKind::Exists:
    case FKind::MeetQ:
    case FKind::JoinQ: {
      out += f.kind() == FKind::Forall   ? "all "
             : f.kind() == FKind::Exists ? "ex "
             : f.kind() == FKind::MeetQ  ? "call "
                                         : "cex ";
      out += f.var();
      out += " . ";
      render_f(f.child(0), 1, out);
      break;
    }
  }
  if (paren) out.push_back(')');
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  render_f(*this, 0, out);
  return out;
}

}  // namespace clar
