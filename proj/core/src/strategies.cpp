#include "clar/strategies.hpp"

#include <deque>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "clar/cla11.hpp"
#include "clar/numeric.hpp"

namespace clar::strat {

namespace {

std::string numeral_move(const BigNat& v) { return "#" + v.to_binary(); }

// ---- the school algorithms, charged against the meter ----

BigNat from_lebits(const std::vector<bool>& bits) {
  std::string s;
  for (size_t i = bits.size(); i-- > 0;) s.push_back(bits[i] ? '1' : '0');
  if (s.empty()) return BigNat();
  return BigNat::from_binary(s);
}

uint64_t index_register_bits(uint64_t n) { return BigNat(n).bit_length() + 2; }

// Right-to-left addition: one carry bit and the loop index are the live
// auxiliary state.
BigNat serial_add(const BigNat& u, const BigNat& v, Meter& m) {
  uint64_t n = u.bit_length() + v.bit_length();
  uint64_t cells = index_register_bits(n) + 1;
  m.register_space(cells);
  std::vector<bool> out;
  bool carry = false;
  for (uint64_t y = 0; y <= n; ++y) {
    m.tick();
    int t = int(u.bit(y)) + int(v.bit(y)) + int(carry);
    out.push_back(t & 1);
    carry = t > 1;
  }
  m.release_space(cells);
  return from_lebits(out);
}

// Staged comparison: scan the bits upward, remembering the relation of the
// low slices; the top differing bit decides.
int serial_compare(const BigNat& u, const BigNat& v, Meter& m) {
  uint64_t d = std::max(u.bit_length(), v.bit_length());
  uint64_t cells = index_register_bits(d) + 2;
  m.register_space(cells);
  int rel = 0;
  for (uint64_t x = 0; x < d; ++x) {
    m.tick();
    bool bu = u.bit(x), bv = v.bit(x);
    if (bu != bv) rel = bu ? 1 : -1;
  }
  m.release_space(cells);
  return rel;
}

// Right-to-left subtraction with borrows; limited at zero.
BigNat serial_monus(const BigNat& u, const BigNat& v, Meter& m) {
  if (serial_compare(u, v, m) <= 0) return BigNat();
  uint64_t n = u.bit_length();
  uint64_t cells = index_register_bits(n) + 1;
  m.register_space(cells);
  std::vector<bool> out;
  bool borrow = false;
  for (uint64_t y = 0; y <= n; ++y) {
    m.tick();
    int t = int(u.bit(y)) - int(v.bit(y)) - int(borrow);
    out.push_back(t & 1);
    borrow = t < 0;
  }
  m.release_space(cells);
  return from_lebits(out);
}

// Convolution sum of matching bits, the workhorse of multiplication.
BigNat serial_bitsum(const BigNat& x, const BigNat& y, const BigNat& u, const BigNat& v,
                     Meter& m) {
  uint64_t top = u.bit_length();
  if (x < BigNat(top)) top = x.to_u64();
  if (y < BigNat(top)) top = y.to_u64();
  uint64_t acc = 0;
  for (uint64_t i = 0; i <= top; ++i) {
    m.tick();
    if (u.bit(i)) {
      BigNat j = y.monus(BigNat(i));
      if (j.fits_u64() && v.bit(j.to_u64())) ++acc;
    }
  }
  return BigNat(acc);
}

// Right-to-left multiplication: the running carry never exceeds |u| in
// length, and each output bit is the parity of bitsum plus carry.
BigNat serial_mult(const BigNat& u, const BigNat& v, Meter& m) {
  uint64_t n = u.bit_length() + v.bit_length() + 1;
  uint64_t cells = index_register_bits(n) + u.bit_length() + 8;
  m.register_space(cells);
  std::vector<bool> out;
  BigNat carry;
  for (uint64_t y = 0; y <= n; ++y) {
    m.tick();
    BigNat t = serial_bitsum(BigNat(y), BigNat(y), u, v, m).add(carry);
    out.push_back(t.bit(0));
    carry = t.half();
  }
  m.release_space(cells);
  return from_lebits(out);
}

BigNat serial_half(const BigNat& u, Meter& m) {
  uint64_t n = u.bit_length();
  std::vector<bool> out;
  for (uint64_t y = 0; y + 1 < n; ++y) {
    m.tick();
    out.push_back(u.bit(y + 1));
  }
  return from_lebits(out);
}

BigNat serial_bit_replace(const BigNat& x, const BigNat& s, bool bit, Meter& m) {
  uint64_t n = std::max(s.bit_length(), x.fits_u64() ? x.to_u64() + 1 : s.bit_length());
  std::vector<bool> out;
  for (uint64_t y = 0; y < n; ++y) {
    m.tick();
    bool b = s.bit(y);
    if (BigNat(y) == x) b = bit;
    out.push_back(b);
  }
  return from_lebits(out);
}

// ---- a base for strategies that act on the brought-down game ----

class GameAgent : public Agent {
public:
  explicit GameAgent(std::string name, Formula game)
      : name_(std::move(name)), game_(std::move(game)) {}

  std::string name() const override { return name_; }
  std::optional<Formula> declared_game() const override { return game_; }

  std::optional<std::string> offer(Player role, const Position& pos, Meter& meter) override {
    Formula current = game_;
    try {
      current = prefixation(pos, game_);
    } catch (const PrefixError&) {
      // The arena adjudicates illegality; nothing for the agent to do.
      return std::nullopt;
    }
    return act(role, current, meter);
  }

protected:
  virtual std::optional<std::string> act(Player role, const Formula& current, Meter& meter) = 0;

private:
  std::string name_;
  Formula game_;
};

// cex z . z = <pt>, with pt closed once the environment has moved.
std::optional<std::pair<std::string, PTerm>> match_value_goal(const Formula& current) {
  if (current.kind() != FKind::JoinQ) return std::nullopt;
  const Formula& body = current.child(0);
  if (body.kind() != FKind::Cmp || body.rel() != Rel::Eq) return std::nullopt;
  if (body.pts()[0] != PTerm::var(current.var())) return std::nullopt;
  if (!body.pts()[1].vars().empty()) return std::nullopt;
  return std::make_pair(current.var(), body.pts()[1]);
}

class AxiomAgent : public GameAgent {
public:
  AxiomAgent(AxiomAgentKind kind)
      : GameAgent(kind == AxiomAgentKind::Successor ? "successor"
                  : kind == AxiomAgentKind::Log     ? "log"
                                                    : "bit",
                  kind == AxiomAgentKind::Successor
                      ? parse_formula("call x . cex y . y = x'")
                      : kind == AxiomAgentKind::Log
                            ? parse_formula("call x . cex y . y = |x|")
                            : parse_formula("call x . call y . (Bit(y, x) cor ~Bit(y, x))")),
        kind_(kind) {}

protected:
  std::optional<std::string> act(Player, const Formula& current, Meter& meter) override {
    if (kind_ == AxiomAgentKind::Bit) {
      // Ground Bit(y, x) cor ~Bit(y, x): pick the true side.
      if (current.kind() != FKind::Join) return std::nullopt;
      const Formula& lhs = current.child(0);
      if (lhs.kind() != FKind::Bit) return std::nullopt;
      auto y = lhs.pts()[0].eval({});
      auto x = lhs.pts()[1].eval({});
      if (!y || !x) return std::nullopt;
      meter.tick();
      return num::bit_pred(*y, *x) ? "0" : "1";
    }
    auto goal = match_value_goal(current);
    if (!goal) return std::nullopt;
    meter.tick();
    return numeral_move(eval_closed(goal->second));
  }

private:
  AxiomAgentKind kind_;
};

// Strategies that answer cex z . z = f(inputs) with a bit-serial computation.
class SerialAgent : public GameAgent {
public:
  using GameAgent::GameAgent;

protected:
  std::optional<std::string> act(Player, const Formula& current, Meter& meter) override {
    auto goal = match_value_goal(current);
    if (!goal) return std::nullopt;
    const PTerm& pt = goal->second;
    std::vector<BigNat> args;
    for (const auto& a : pt.args()) {
      auto v = a.eval({});
      if (!v) return std::nullopt;
      args.push_back(std::move(*v));
    }
    auto value = compute(pt.kind(), args, meter);
    if (!value) return std::nullopt;
    return numeral_move(*value);
  }

  virtual std::optional<BigNat> compute(PtKind head, const std::vector<BigNat>& args,
                                        Meter& meter) = 0;
};

class AddAgent : public SerialAgent {
public:
  AddAgent() : SerialAgent("add", parse_formula("call u . call v . cex z . z = u + v")) {}

protected:
  std::optional<BigNat> compute(PtKind head, const std::vector<BigNat>& args,
                                Meter& meter) override {
    if (head != PtKind::Sum) return std::nullopt;
    return serial_add(args[0], args[1], meter);
  }
};

class SubAgent : public SerialAgent {
public:
  SubAgent() : SerialAgent("sub", parse_formula("call u . call v . cex z . z = monus(u, v)")) {}

protected:
  std::optional<BigNat> compute(PtKind head, const std::vector<BigNat>& args,
                                Meter& meter) override {
    if (head != PtKind::Monus) return std::nullopt;
    return serial_monus(args[0], args[1], meter);
  }
};

class MultAgent : public SerialAgent {
public:
  MultAgent() : SerialAgent("mult", parse_formula("call u . call v . cex z . z = u * v")) {}

protected:
  std::optional<BigNat> compute(PtKind head, const std::vector<BigNat>& args,
                                Meter& meter) override {
    if (head != PtKind::Prod) return std::nullopt;
    return serial_mult(args[0], args[1], meter);
  }
};

class Div2Agent : public SerialAgent {
public:
  Div2Agent() : SerialAgent("div2", parse_formula("call u . cex z . z = half(u)")) {}

protected:
  std::optional<BigNat> compute(PtKind head, const std::vector<BigNat>& args,
                                Meter& meter) override {
    if (head != PtKind::Half) return std::nullopt;
    return serial_half(args[0], meter);
  }
};

class BitsumAgent : public SerialAgent {
public:
  BitsumAgent()
      : SerialAgent("bitsum",
                    parse_formula("call u . call v . call x . call y . "
                                  "cex z . z = bitsum(x, y, u, v)")) {}

protected:
  std::optional<BigNat> compute(PtKind head, const std::vector<BigNat>& args,
                                Meter& meter) override {
    if (head != PtKind::Bitsum) return std::nullopt;
    return serial_bitsum(args[0], args[1], args[2], args[3], meter);
  }
};

class TriAgent : public GameAgent {
public:
  TriAgent()
      : GameAgent("tri",
                  parse_formula("call u . call v . ((u < v cor u = v) cor u > v)")) {}

protected:
  std::optional<std::string> act(Player, const Formula& current, Meter& meter) override {
    // First the outer choice, then (for < and =) the inner one.
    if (current.kind() != FKind::Join) return std::nullopt;
    const Formula* probe = &current;
    while (probe->kind() == FKind::Join) probe = &probe->child(0);
    if (probe->kind() != FKind::Cmp) return std::nullopt;
    auto a = probe->pts()[0].eval({});
    auto b = probe->pts()[1].eval({});
    if (!a || !b) return std::nullopt;
    // The inner comparison's operand order identifies u and v even after
    // the outer choice resolved.
    if (current.child(0).kind() == FKind::Join) {
      int rel = serial_compare(*a, *b, meter);
      return rel > 0 ? "1" : "0";
    }
    int rel = serial_compare(*a, *b, meter);
    if (current.child(0).kind() == FKind::Cmp && current.child(0).rel() == Rel::Lt) {
      return rel < 0 ? "0" : "1";
    }
    return std::nullopt;
  }
};

class BrAgent : public GameAgent {
public:
  explicit BrAgent(int bit)
      : GameAgent(bit ? "br1" : "br0",
                  parse_formula(bit ? "call s . call x . (x < |s| -> cex z . z = br1(x, s))"
                                    : "call s . call x . (x < |s| -> cex z . z = br0(x, s))")),
        bit_(bit) {}

protected:
  std::optional<std::string> act(Player, const Formula& current, Meter& meter) override {
    if (current.kind() != FKind::Imp) return std::nullopt;
    const Formula& guard = current.child(0);
    if (guard.kind() != FKind::Cmp || !guard.pts()[0].vars().empty()) return std::nullopt;
    auto x = guard.pts()[0].eval({});
    auto limit = guard.pts()[1].eval({});
    if (!x || !limit) return std::nullopt;
    if (!(*x < *limit)) return std::nullopt;  // antecedent false: win by waiting
    auto goal = match_value_goal(current.child(1));
    if (!goal) return std::nullopt;
    const auto& args = goal->second.args();
    auto xv = args[0].eval({});
    auto sv = args[1].eval({});
    if (!xv || !sv) return std::nullopt;
    MovePath mp;
    mp.path = {1};
    mp.terminal = MoveTerminal::value(serial_bit_replace(*xv, *sv, bit_ == 1, meter));
    return mp.to_move_string();
  }

private:
  int bit_;
};

Formula bound_eval_game(const PTerm& bound) {
  std::map<std::string, PTerm> sub;
  for (const auto& v : bound.vars()) sub.emplace(v, PTerm::len(PTerm::var(v)));
  std::string z = fresh_var(bound.vars());
  Formula body = Formula::join_q(z, Formula::eq(PTerm::var(z), bound.substitute(sub)));
  return close(body, FKind::MeetQ);
}

class BoundEvalAgent : public GameAgent {
public:
  explicit BoundEvalAgent(const PTerm& bound)
      : GameAgent("bound:" + bound.to_string(), bound_eval_game(bound)) {}

protected:
  std::optional<std::string> act(Player, const Formula& current, Meter& meter) override {
    auto goal = match_value_goal(current);
    if (!goal) return std::nullopt;
    meter.tick();
    BigNat v;
    try {
      v = eval_closed(goal->second);
    } catch (const BlowupError& e) {
      throw AgentFault(std::string("bound evaluation tripped the guard: ") + e.what());
    }
    meter.register_space(v.bit_length());
    auto move = numeral_move(v);
    meter.release_space(v.bit_length());
    return move;
  }
};

}  // namespace

// ---- provider channels ----

ProviderChannel::ProviderChannel(std::shared_ptr<Agent> provider, Formula game)
    : provider_(std::move(provider)), game_(std::move(game)) {}

bool ProviderChannel::machine_move(const std::string& move) {
  auto next = apply_move(current(), Player::Bot, move);
  if (!next) return false;
  history_.push_back({Player::Bot, move});
  return true;
}

std::optional<std::string> ProviderChannel::pump(Meter& meter) {
  auto mv = provider_->offer(Player::Top, history_, meter);
  if (!mv) return std::nullopt;
  if (!apply_move(current(), Player::Top, *mv)) {
    throw AgentFault("provider '" + provider_->name() + "' made the illegal move '" + *mv + "'");
  }
  history_.push_back({Player::Top, *mv});
  return mv;
}

Formula ProviderChannel::current() const { return prefixation(history_, game_); }

size_t ProviderChannel::machine_moves() const {
  size_t n = 0;
  for (const auto& lm : history_) {
    if (lm.player == Player::Bot) ++n;
  }
  return n;
}

ProviderBundle ProviderBundle::auto_wire(const cl12::Sequent& sequent) {
  ProviderBundle bundle;
  cla11::TheoryParams empty;
  empty.amplitude = *bounds::standard_class("B3");
  empty.space = *bounds::standard_class("B1^1");
  empty.time = *bounds::standard_class("B5");
  for (const auto& ant : sequent.antecedent) {
    auto cls = cla11::recognize_axiom(ant, empty);
    std::shared_ptr<Agent> provider;
    switch (cls.kind) {
      case cla11::AxiomKind::Successor: provider = axiom_agent(AxiomAgentKind::Successor); break;
      case cla11::AxiomKind::Log: provider = axiom_agent(AxiomAgentKind::Log); break;
      case cla11::AxiomKind::Bit: provider = axiom_agent(AxiomAgentKind::Bit); break;
      default:
        throw std::invalid_argument("no provider available for antecedent '" + ant.to_string() +
                                    "'");
    }
    bundle.channels.emplace_back(std::move(provider), ant);
  }
  return bundle;
}

// ---- factories ----

std::unique_ptr<Agent> axiom_agent(AxiomAgentKind kind) {
  return std::make_unique<AxiomAgent>(kind);
}

namespace {

class NumeralAgent : public Agent {
public:
  NumeralAgent(uint64_t n, std::shared_ptr<Agent> provider)
      : n_(n),
        game_(Formula::join_q("z", Formula::eq(PTerm::var("z"), unary_numeral(n)))),
        pristine_(std::move(provider), parse_formula("call x . cex y . y = x'")) {}

  std::string name() const override { return "numeral:" + std::to_string(n_); }
  std::optional<Formula> declared_game() const override { return game_; }
  size_t provider_calls() const {
    size_t n = 0;
    for (const auto& c : calls_) n += c.machine_moves();
    return n;
  }

  std::optional<std::string> offer(Player, const Position&, Meter& meter) override {
    if (answered_) return std::nullopt;
    // The successor resource is replicable: each application runs on a fresh
    // copy of the pristine channel.
    while (known_ < n_) {
      if (!asked_) {
        calls_.push_back(pristine_.clone());
        if (!calls_.back().machine_move(numeral_move(value_))) {
          throw AgentFault("successor channel rejected the input move");
        }
        asked_ = true;
      }
      // Provider interaction is internal to the turn; a transiently silent
      // provider is pumped again rather than stalling the whole match.
      std::optional<std::string> reply;
      for (int attempts = 0; !reply && attempts < 256; ++attempts) {
        reply = calls_.back().pump(meter);
      }
      if (!reply) return std::nullopt;  // provider stalled for good
      BigNat got = numer_of_move(*reply);
      if (got != value_.succ()) {
        throw AgentFault("provider misbehaved: expected the successor of " + value_.to_binary() +
                         ", got " + got.to_binary());
      }
      value_ = got;
      ++known_;
      asked_ = false;
    }
    answered_ = true;
    meter.tick();
    return numeral_move(value_);
  }

private:
  uint64_t n_;
  Formula game_;
  ProviderChannel pristine_;
  std::vector<ProviderChannel> calls_;
  BigNat value_;
  uint64_t known_ = 0;
  bool asked_ = false;
  bool answered_ = false;
};

}  // namespace

std::unique_ptr<Agent> numeral_agent(uint64_t n) {
  return std::make_unique<NumeralAgent>(n, axiom_agent(AxiomAgentKind::Successor));
}

std::unique_ptr<Agent> numeral_agent(uint64_t n, std::shared_ptr<Agent> provider) {
  return std::make_unique<NumeralAgent>(n, std::move(provider));
}

std::optional<size_t> numeral_provider_calls(const Agent& agent) {
  if (auto* num = dynamic_cast<const NumeralAgent*>(&agent)) return num->provider_calls();
  return std::nullopt;
}

std::unique_ptr<Agent> add_agent() { return std::make_unique<AddAgent>(); }
std::unique_ptr<Agent> sub_agent() { return std::make_unique<SubAgent>(); }
std::unique_ptr<Agent> mult_agent() { return std::make_unique<MultAgent>(); }
std::unique_ptr<Agent> tri_agent() { return std::make_unique<TriAgent>(); }
std::unique_ptr<Agent> div2_agent() { return std::make_unique<Div2Agent>(); }
std::unique_ptr<Agent> bitsum_agent() { return std::make_unique<BitsumAgent>(); }
std::unique_ptr<Agent> br_agent(int bit) { return std::make_unique<BrAgent>(bit); }
std::unique_ptr<Agent> bound_eval_agent(const PTerm& bound) {
  return std::make_unique<BoundEvalAgent>(bound);
}

// ---- the extractor ----

namespace {

cl12::Sequent with_succedent(const cl12::Sequent& s, Formula f) {
  cl12::Sequent out = s;
  out.succedent = std::move(f);
  return out;
}

cl12::Sequent with_antecedent(const cl12::Sequent& s, size_t i, Formula f) {
  cl12::Sequent out = s;
  out.antecedent[i] = std::move(f);
  return out;
}

class ExtractedAgent : public Agent {
public:
  ExtractedAgent(cl12::Proof proof, ProviderBundle providers)
      : proof_(std::move(proof)), channels_(std::move(providers.channels)) {
    cursor_ = proof_.lines.size() - 1;
  }

  std::string name() const override { return "extract"; }
  std::optional<Formula> declared_game() const override {
    return proof_.final_sequent().succedent;
  }

  std::optional<std::string> offer(Player, const Position& pos, Meter& meter) override {
    // Ingest environment moves on the succedent made since the last turn.
    for (; seen_ < pos.size(); ++seen_) {
      if (pos[seen_].player == Player::Bot) env_queue_.push_back(pos[seen_].move);
    }
    if (adversary_illegal_ || done_) return std::nullopt;

    for (int guard = 0; guard < 10000; ++guard) {
      const cl12::ProofLine& line = proof_.lines[cursor_];
      switch (line.just.kind) {
        case cl12::RuleKind::JoinChoose: {
          auto move = choose_move(line.sequent.succedent, line.just);
          cursor_ = line.just.premises[0] - 1;
          meter.tick();
          return move;
        }
        case cl12::RuleKind::MeetChoose: {
          auto move = choose_move(line.sequent.antecedent[line.just.ant_index], line.just);
          if (!channels_[line.just.ant_index].machine_move(move)) {
            throw AgentFault("channel rejected the move '" + move + "'");
          }
          cursor_ = line.just.premises[0] - 1;
          meter.tick();
          break;
        }
        case cl12::RuleKind::Replicate: {
          size_t i = line.just.ant_index;
          channels_.insert(channels_.begin() + i + 1, channels_[i].clone());
          cursor_ = line.just.premises[0] - 1;
          break;
        }
        case cl12::RuleKind::Wait: {
          if (line.just.premises.empty()) {
            done_ = !env_queue_.empty() ? false : true;
            if (!env_queue_.empty()) {
              adversary_illegal_ = true;  // no premise can absorb the move
            }
            return std::nullopt;
          }
          if (!env_queue_.empty()) {
            std::string mv = env_queue_.front();
            env_queue_.pop_front();
            if (!advance_on(line, mv, true, 0)) {
              adversary_illegal_ = true;
              return std::nullopt;
            }
            break;
          }
          bool progressed = false;
          for (size_t k = 0; k < channels_.size() && !progressed; ++k) {
            auto reply = channels_[k].pump(meter);
            if (!reply) continue;
            if (!advance_on(line, *reply, false, k)) {
              adversary_illegal_ = true;
              return std::nullopt;
            }
            progressed = true;
          }
          if (!progressed) return std::nullopt;  // wait for the adversary
          break;
        }
      }
    }
    throw AgentFault("proof walk did not settle");
  }

private:
  // Render the move a Choose line makes, resolving variable instances
  // against the environment bindings gathered so far.
  std::string choose_move(const Formula& side, const cl12::Justification& just) {
    auto node = choice_node_at(side, just.path);
    if (!node) throw AgentFault("choose path walks off the formula");
    MovePath mp;
    mp.path = just.path;
    bool binary = node->first.kind() == FKind::Meet || node->first.kind() == FKind::Join;
    if (binary) {
      mp.terminal = MoveTerminal::comp(just.instance == "1" ? 1 : 0);
    } else {
      const std::string& inst = just.instance;
      bool digits = !inst.empty();
      for (char c : inst) {
        if (c != '0' && c != '1') digits = false;
      }
      if (!inst.empty() && inst[0] == '#') {
        mp.terminal = MoveTerminal::value(BigNat::from_binary(inst.substr(1)));
      } else if (digits) {
        mp.terminal = MoveTerminal::value(BigNat::from_binary(inst));
      } else {
        auto it = bindings_.find(inst);
        if (it == bindings_.end())
          throw AgentFault("instance variable '" + inst + "' is unbound at this point");
        mp.terminal = MoveTerminal::value(it->second);
      }
    }
    return mp.to_move_string();
  }

  // Match an adversary move against the Wait premises; bind fresh variables
  // to the move's numer and advance the cursor.
  bool advance_on(const cl12::ProofLine& line, const std::string& move, bool in_succedent,
                  size_t ant_index) {
    auto mp = MovePath::parse(move);
    if (!mp) return false;
    const cl12::Sequent& concl = line.sequent;
    const Formula& side = in_succedent ? concl.succedent : concl.antecedent[ant_index];
    Player owner = in_succedent ? Player::Bot : Player::Top;
    auto concl_vars = concl.all_vars();
    for (size_t pr : line.just.premises) {
      const cl12::Sequent& prem = proof_.lines[pr - 1].sequent;
      if (mp->terminal.kind == MoveTerminal::Kind::Component) {
        auto replaced = apply_path(side, owner, *mp);
        if (!replaced) continue;
        cl12::Sequent expected = in_succedent ? with_succedent(concl, *replaced)
                                              : with_antecedent(concl, ant_index, *replaced);
        if (prem == expected) {
          cursor_ = pr - 1;
          return true;
        }
      } else if (mp->terminal.kind == MoveTerminal::Kind::Constant) {
        std::set<std::string> cands;
        for (const auto& v : prem.all_vars()) {
          if (!concl_vars.count(v)) cands.insert(v);
        }
        auto all = concl_vars;
        auto pv = prem.all_vars();
        all.insert(pv.begin(), pv.end());
        cands.insert(fresh_var(all));
        for (const auto& w : cands) {
          auto replaced = apply_path(side, owner, MovePath{mp->path, MoveTerminal::var(w)});
          if (!replaced) continue;
          cl12::Sequent expected = in_succedent ? with_succedent(concl, *replaced)
                                                : with_antecedent(concl, ant_index, *replaced);
          if (prem == expected) {
            bindings_[w] = mp->terminal.constant;
            cursor_ = pr - 1;
            return true;
          }
        }
      }
    }
    return false;
  }

  cl12::Proof proof_;
  std::vector<ProviderChannel> channels_;
  size_t cursor_ = 0;
  size_t seen_ = 0;
  std::deque<std::string> env_queue_;
  std::map<std::string, BigNat> bindings_;
  bool adversary_illegal_ = false;
  bool done_ = false;
};

}  // namespace

std::unique_ptr<Agent> extract_agent(const cl12::Proof& proof, ProviderBundle providers,
                                     const cl12::CheckOptions& opts) {
  auto report = cl12::check_proof(proof, opts);
  if (!report.accepted()) {
    throw std::invalid_argument("cannot extract from a rejected proof (line " +
                                std::to_string(report.rejected_line) + ": " + report.reason + ")");
  }
  if (providers.channels.size() != proof.final_sequent().antecedent.size()) {
    throw std::invalid_argument("provider bundle does not match the antecedents");
  }
  return std::make_unique<ExtractedAgent>(proof, std::move(providers));
}

// ---- environments ----

namespace {

class SilentEnv : public Agent {
public:
  std::string name() const override { return "silent"; }
  std::optional<std::string> offer(Player, const Position&, Meter&) override {
    return std::nullopt;
  }
};

class RandomEnv : public Agent {
public:
  RandomEnv(uint64_t seed, Formula game) : rng_(seed), game_(std::move(game)) {}
  std::string name() const override { return "random"; }

  std::optional<std::string> offer(Player role, const Position& pos, Meter&) override {
    Formula current;
    try {
      current = prefixation(pos, game_);
    } catch (const PrefixError&) {
      return std::nullopt;
    }
    DevelopPolicy policy;
    policy.constant = BigNat(rng_() % 16);
    auto devs = developments(current, role, policy);
    if (devs.empty() || rng_() % 4 == 0) return std::nullopt;
    return devs[rng_() % devs.size()].path.to_move_string();
  }

private:
  std::mt19937_64 rng_;
  Formula game_;
};

class ScriptEnv : public Agent {
public:
  explicit ScriptEnv(std::vector<std::string> moves) : moves_(std::move(moves)) {}
  std::string name() const override { return "script"; }
  std::optional<std::string> offer(Player, const Position&, Meter&) override {
    while (at_ < moves_.size()) {
      const std::string& mv = moves_[at_++];
      if (mv == "pass") return std::nullopt;
      return mv;
    }
    return std::nullopt;
  }

private:
  std::vector<std::string> moves_;
  size_t at_ = 0;
};

class ExhaustiveEnv : public Agent {
public:
  ExhaustiveEnv(uint64_t index, Formula game) : index_(index), game_(std::move(game)) {}
  std::string name() const override { return "exhaustive"; }

  std::optional<std::string> offer(Player role, const Position& pos, Meter&) override {
    Formula current;
    try {
      current = prefixation(pos, game_);
    } catch (const PrefixError&) {
      return std::nullopt;
    }
    std::vector<std::string> options;
    for (uint64_t c : {0, 1, 2, 3}) {
      DevelopPolicy policy;
      policy.constant = BigNat(c);
      for (const auto& d : developments(current, role, policy)) {
        std::string mv = d.path.to_move_string();
        bool dup = false;
        for (const auto& o : options) {
          if (o == mv) dup = true;
        }
        if (!dup) options.push_back(mv);
      }
    }
    uint64_t n = options.size() + 1;  // plus pass
    uint64_t pick = index_ % n;
    index_ /= n;
    if (pick == 0) return std::nullopt;
    return options[pick - 1];
  }

private:
  uint64_t index_;
  Formula game_;
};

class ReplEnv : public Agent {
public:
  ReplEnv(std::istream& in, std::ostream& out, Formula game)
      : in_(in), out_(out), game_(std::move(game)) {}
  std::string name() const override { return "repl"; }

  std::optional<std::string> offer(Player role, const Position& pos, Meter&) override {
    Formula current;
    try {
      current = prefixation(pos, game_);
    } catch (const PrefixError&) {
      return std::nullopt;
    }
    out_ << "game: " << current.to_string() << "\n";
    for (;;) {
      out_ << "move (or pass)> " << std::flush;
      std::string line;
      if (!std::getline(in_, line)) return std::nullopt;
      size_t a = 0, b = line.size();
      while (a < b && std::isspace(static_cast<unsigned char>(line[a]))) ++a;
      while (b > a && std::isspace(static_cast<unsigned char>(line[b - 1]))) --b;
      line = line.substr(a, b - a);
      if (line.empty() || line == "pass") return std::nullopt;
      if (!MovePath::parse(line)) {
        out_ << "bad move string '" << line << "'\n";
        continue;
      }
      if (!apply_move(current, role, line)) {
        out_ << "illegal move '" << line << "' for " << player_letter(role) << "\n";
        continue;
      }
      return line;
    }
  }

private:
  std::istream& in_;
  std::ostream& out_;
  Formula game_;
};

std::pair<std::string, std::string> split_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec, ""};
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

}  // namespace

std::unique_ptr<Agent> env_silent() { return std::make_unique<SilentEnv>(); }
std::unique_ptr<Agent> env_random(uint64_t seed, Formula game) {
  return std::make_unique<RandomEnv>(seed, std::move(game));
}
std::unique_ptr<Agent> env_script(std::vector<std::string> moves) {
  return std::make_unique<ScriptEnv>(std::move(moves));
}
std::unique_ptr<Agent> env_exhaustive(uint64_t index, Formula game) {
  return std::make_unique<ExhaustiveEnv>(index, std::move(game));
}
std::unique_ptr<Agent> env_repl(std::istream& in, std::ostream& out, Formula game) {
  return std::make_unique<ReplEnv>(in, out, std::move(game));
}

std::vector<std::string> agent_names() {
  return {"add", "sub", "mult", "tri", "div2", "bitsum", "br0", "br1",
          "successor", "log", "bit", "numeral:<n>", "bound:<expr>", "extract:<proof>"};
}

std::unique_ptr<Agent> make_agent(const std::string& spec, bool permissive) {
  auto [name, arg] = split_spec(spec);
  if (name == "add") return add_agent();
  if (name == "sub") return sub_agent();
  if (name == "mult") return mult_agent();
  if (name == "tri") return tri_agent();
  if (name == "div2") return div2_agent();
  if (name == "bitsum") return bitsum_agent();
  if (name == "br0") return br_agent(0);
  if (name == "br1") return br_agent(1);
  if (name == "successor") return axiom_agent(AxiomAgentKind::Successor);
  if (name == "log") return axiom_agent(AxiomAgentKind::Log);
  if (name == "bit") return axiom_agent(AxiomAgentKind::Bit);
  if (name == "numeral") return numeral_agent(std::stoull(arg));
  if (name == "bound") return bound_eval_agent(parse_pterm(arg));
  if (name == "extract") {
    auto proof = cl12::Proof::parse_file(arg);
    cl12::CheckOptions opts;
    opts.permissive = permissive;
    return extract_agent(proof, ProviderBundle::auto_wire(proof.final_sequent()), opts);
  }
  throw std::invalid_argument("unknown agent '" + spec + "'");
}

std::unique_ptr<Agent> make_env(const std::string& spec, const Formula& game) {
  auto [name, arg] = split_spec(spec);
  if (name == "silent") return env_silent();
  if (name == "random") return env_random(arg.empty() ? 0 : std::stoull(arg), game);
  if (name == "exhaustive") return env_exhaustive(arg.empty() ? 0 : std::stoull(arg), game);
  if (name == "repl") return env_repl(std::cin, std::cout, game);
  if (name == "script") {
    std::ifstream in(arg);
    if (!in) throw std::runtime_error("cannot read script file: " + arg);
    std::vector<std::string> moves;
    std::string line;
    while (std::getline(in, line)) {
      size_t a = 0, b = line.size();
      while (a < b && std::isspace(static_cast<unsigned char>(line[a]))) ++a;
      while (b > a && std::isspace(static_cast<unsigned char>(line[b - 1]))) --b;
      std::string t = line.substr(a, b - a);
      if (!t.empty() && t[0] != '#') moves.push_back(t);
    }
    return env_script(std::move(moves));
  }
  throw std::invalid_argument("unknown environment '" + spec + "'");
}

bounds::BoundWitness make_bound_witness(std::vector<uint64_t> inputs, MatchConfig cfg) {
  return [inputs, cfg](const PTerm& bound) -> bounds::CondReport {
    auto vars = bound.vars();
    for (uint64_t input : inputs) {
      auto agent = bound_eval_agent(bound);
      std::vector<std::string> moves;
      for (size_t i = 0; i < vars.size(); ++i) moves.push_back(numeral_move(BigNat(input)));
      auto env = env_script(moves);
      Formula game = *agent->declared_game();
      auto result = run_match(*agent, *env, game, cfg);
      if (result.aborted()) {
        return {bounds::CondStatus::Inconclusive,
                "bound evaluation aborted on input " + BigNat(input).to_binary() + ": " +
                    result.fault};
      }
      if (result.verdict != Verdict::top_won()) {
        return {bounds::CondStatus::Falsified,
                "bound evaluation lost on input " + BigNat(input).to_binary() + " (" +
                    result.verdict.to_string() + ")"};
      }
    }
    return {bounds::CondStatus::Witnessed,
            "bound evaluation strategy wins on " + std::to_string(inputs.size()) +
                " sample inputs (contract-level)"};
  };
}

}  // namespace clar::strat
