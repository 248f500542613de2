#include "clar/term.hpp"

#include <stdexcept>

#include "clar/numeric.hpp"

namespace clar {

struct PTerm::Node {
  PtKind kind;
  std::string name;        // Var
  BigNat value;            // Const
  std::vector<PTerm> args;
};

PTerm PTerm::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = PtKind::Var;
  n->name = std::move(name);
  return PTerm(std::move(n));
}

PTerm PTerm::constant(BigNat v) {
  auto n = std::make_shared<Node>();
  n->kind = PtKind::Const;
  n->value = std::move(v);
  return PTerm(std::move(n));
}

static size_t arity_of(PtKind k) {
  switch (k) {
    case PtKind::Var:
    case PtKind::Const: return 0;
    case PtKind::Succ:
    case PtKind::Len:
    case PtKind::Pow2:
    case PtKind::Half: return 1;
    case PtKind::Sum:
    case PtKind::Prod:
    case PtKind::Monus:
    case PtKind::Br0:
    case PtKind::Br1: return 2;
    case PtKind::Carry: return 3;
    case PtKind::Bitsum: return 4;
  }
  return 0;
}

PTerm PTerm::make(PtKind k, std::vector<PTerm> args) {
  if (args.size() != arity_of(k)) throw std::invalid_argument("pterm arity");
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->args = std::move(args);
  return PTerm(std::move(n));
}

PtKind PTerm::kind() const { return p_->kind; }
const std::string& PTerm::var_name() const { return p_->name; }
const BigNat& PTerm::value() const { return p_->value; }
const std::vector<PTerm>& PTerm::args() const { return p_->args; }

bool PTerm::operator==(const PTerm& o) const {
  if (p_ == o.p_) return true;
  if (p_->kind != o.p_->kind) return false;
  switch (p_->kind) {
    case PtKind::Var: return p_->name == o.p_->name;
    case PtKind::Const: return p_->value == o.p_->value;
    default:
      for (size_t i = 0; i < p_->args.size(); ++i) {
        if (p_->args[i] != o.p_->args[i]) return false;
      }
      return true;
  }
}

bool PTerm::is_lterm() const {
  switch (p_->kind) {
    case PtKind::Var:
    case PtKind::Const: return true;
    case PtKind::Succ:
    case PtKind::Sum:
    case PtKind::Prod:
      for (const auto& a : p_->args) {
        if (!a.is_lterm()) return false;
      }
      return true;
    default: return false;
  }
}

bool PTerm::has_nonzero_const() const {
  if (p_->kind == PtKind::Const) return !p_->value.is_zero();
  for (const auto& a : p_->args) {
    if (a.has_nonzero_const()) return true;
  }
  return false;
}

bool PTerm::is_pure() const { return is_lterm() && !has_nonzero_const(); }

void PTerm::collect_vars(std::set<std::string>& out) const {
  if (p_->kind == PtKind::Var) {
    out.insert(p_->name);
    return;
  }
  for (const auto& a : p_->args) a.collect_vars(out);
}

std::set<std::string> PTerm::vars() const {
  std::set<std::string> s;
  collect_vars(s);
  return s;
}

PTerm PTerm::substitute(const std::string& x, const PTerm& t) const {
  return substitute(std::map<std::string, PTerm>{{x, t}});
}

PTerm PTerm::substitute(const std::map<std::string, PTerm>& sub) const {
  switch (p_->kind) {
    case PtKind::Var: {
      auto it = sub.find(p_->name);
      return it == sub.end() ? *this : it->second;
    }
    case PtKind::Const: return *this;
    default: {
      std::vector<PTerm> args;
      args.reserve(p_->args.size());
      bool changed = false;
      for (const auto& a : p_->args) {
        args.push_back(a.substitute(sub));
        if (args.back() != a) changed = true;
      }
      return changed ? make(p_->kind, std::move(args)) : *this;
    }
  }
}

std::optional<BigNat> PTerm::eval(const std::map<std::string, BigNat>& env,
                                  uint64_t bit_guard) const {
  switch (p_->kind) {
    case PtKind::Var: {
      auto it = env.find(p_->name);
      if (it == env.end()) return std::nullopt;
      return it->second;
    }
    case PtKind::Const: return p_->value;
    default: break;
  }
  std::vector<BigNat> v;
  v.reserve(p_->args.size());
  for (const auto& a : p_->args) {
    auto r = a.eval(env, bit_guard);
    if (!r) return std::nullopt;
    v.push_back(std::move(*r));
  }
  switch (p_->kind) {
    case PtKind::Succ: return v[0].succ();
    case PtKind::Sum: return v[0].add(v[1]);
    case PtKind::Prod: return v[0].mul(v[1]);
    case PtKind::Len: return num::length(v[0]);
    case PtKind::Pow2: {
      if (!v[0].fits_u64()) throw BlowupError("2^t exponent too large");
      return BigNat::pow2(v[0].to_u64(), bit_guard);
    }
    case PtKind::Monus: return num::monus(v[0], v[1]);
    case PtKind::Half: return num::half(v[0]);
    case PtKind::Br0: return num::bit_replace(v[0], v[1], false);
    case PtKind::Br1: return num::bit_replace(v[0], v[1], true);
    case PtKind::Bitsum: return num::bitsum(v[0], v[1], v[2], v[3]);
    case PtKind::Carry: return num::mult_carry(v[0], v[1], v[2]);
    default: return std::nullopt;
  }
}

namespace {

int pt_prec(PtKind k) {
  switch (k) {
    case PtKind::Sum: return 1;
    case PtKind::Prod: return 2;
    case PtKind::Pow2: return 3;
    case PtKind::Succ: return 4;
    default: return 5;  // variables, constants, |t|, named calls
  }
}

void render(const PTerm& t, int parent_prec, std::string& out) {
  int prec = pt_prec(t.kind());
  bool paren = prec < parent_prec;
  if (paren) out.push_back('(');
  switch (t.kind()) {
    case PtKind::Var: out += t.var_name(); break;
    case PtKind::Const:
      if (t.value().is_zero()) {
        out.push_back('0');
      } else {
        out.push_back('#');
        out += t.value().to_binary();
      }
      break;
    case PtKind::Succ:
      render(t.args()[0], 4, out);
      out.push_back('\'');
      break;
    case PtKind::Sum:
      render(t.args()[0], 1, out);
      out += " + ";
      render(t.args()[1], 2, out);
      break;
    case PtKind::Prod:
      render(t.args()[0], 2, out);
      out += " * ";
      render(t.args()[1], 3, out);
      break;
    case PtKind::Len:
      out.push_back('|');
      render(t.args()[0], 0, out);
      out.push_back('|');
      break;
    case PtKind::Pow2:
      out += "2^";
      render(t.args()[0], 4, out);
      break;
    case PtKind::Monus:
    case PtKind::Half:
    case PtKind::Br0:
    case PtKind::Br1:
    case PtKind::Bitsum:
    case PtKind::Carry: {
      const char* name = t.kind() == PtKind::Monus    ? "monus"
                         : t.kind() == PtKind::Half   ? "half"
                         : t.kind() == PtKind::Br0    ? "br0"
                         : t.kind() == PtKind::Br1    ? "br1"
                         : t.kind() == PtKind::Bitsum ? "bitsum"
                                                      : "carry";
      out += name;
      out.push_back('(');
      for (size_t i = 0; i < t.args().size(); ++i) {
        if (i) out += ", ";
        render(t.args()[i], 0, out);
      }
      out.push_back(')');
      break;
    }
  }
  if (paren) out.push_back(')');
}

}  // namespace

std::string PTerm::to_string() const {
  std::string out;
  render(*this, 0, out);
  return out;
}

BigNat eval_closed(const PTerm& t, uint64_t bit_guard) {
  auto r = t.eval({}, bit_guard);
  if (!r) throw std::invalid_argument("term is not closed: " + t.to_string());
  return *r;
}

PTerm unary_numeral(uint64_t n) {
  PTerm t = PTerm::zero();
  for (uint64_t i = 0; i < n; ++i) t = t.succ();
  return t;
}

}  // namespace clar
