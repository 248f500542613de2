#include "clar/arena.hpp"

#include <map>

#include "clar/numeric.hpp"

namespace clar {

namespace {

Truth t_not(Truth a) {
  if (a == Truth::True) return Truth::False;
  if (a == Truth::False) return Truth::True;
  return Truth::Unknown;
}

Truth t_and(Truth a, Truth b) {
  if (a == Truth::False || b == Truth::False) return Truth::False;
  if (a == Truth::True && b == Truth::True) return Truth::True;
  return Truth::Unknown;
}

Truth t_or(Truth a, Truth b) {
  if (a == Truth::True || b == Truth::True) return Truth::True;
  if (a == Truth::False && b == Truth::False) return Truth::False;
  return Truth::Unknown;
}

// Strip nested successors: t = succ^k(core).
std::pair<uint64_t, PTerm> peel_succ(PTerm t) {
  uint64_t k = 0;
  while (t.kind() == PtKind::Succ) {
    ++k;
    t = t.args()[0];
  }
  return {k, t};
}

struct Evaluator {
  const EvalOptions& opts;
  std::map<std::string, BigNat> env;

  Truth atom(const Formula& f) {
    std::vector<std::optional<BigNat>> vals;
    bool all = true;
    try {
      for (const auto& pt : f.pts()) {
        vals.push_back(pt.eval(env, opts.bit_guard));
        if (!vals.back()) all = false;
      }
    } catch (const BlowupError&) {
      return Truth::Unknown;
    }
    if (all) {
      switch (f.kind()) {
        case FKind::Cmp: {
          int c = vals[0]->cmp(*vals[1]);
          bool r = f.rel() == Rel::Eq ? c == 0 : f.rel() == Rel::Le ? c <= 0 : c < 0;
          return r ? Truth::True : Truth::False;
        }
        case FKind::Bit:
          return num::bit_pred(*vals[0], *vals[1]) ? Truth::True : Truth::False;
        case FKind::Carry1:
          return num::carry1(*vals[0], *vals[1], *vals[2]) ? Truth::True : Truth::False;
        case FKind::Borrow1:
          return num::borrow1(*vals[0], *vals[1], *vals[2]) ? Truth::True : Truth::False;
        default: return Truth::Unknown;
      }
    }
    if (!opts.decision_rules || f.kind() != FKind::Cmp) return Truth::Unknown;
    // Syntactic rules on partially unknown comparisons, sound over naturals.
    const PTerm& a = f.pts()[0];
    const PTerm& b = f.pts()[1];
    if (a == b) return f.rel() == Rel::Lt ? Truth::False : Truth::True;
    if (f.rel() == Rel::Eq) {
      auto [ka, ca] = peel_succ(a);
      auto [kb, cb] = peel_succ(b);
      uint64_t d = ka > kb ? ka - kb : kb - ka;
      const PTerm& low = ka > kb ? cb : ca;   // fewer successor layers
      const PTerm& high = ka > kb ? ca : cb;  // its own core
      if (d > 0) {
        if (high == low) return Truth::False;  // s + d = s
        if (low.kind() == PtKind::Const && low.value() < BigNat(d))
          return Truth::False;  // succ^d(_) >= d > value
      } else if (ca == cb) {
        return Truth::True;
      }
    }
    return Truth::Unknown;
  }

  Truth eval(const Formula& f) {
    switch (f.kind()) {
      case FKind::Cmp:
      case FKind::Bit:
      case FKind::Carry1:
      case FKind::Borrow1: return atom(f);
      case FKind::Not: return t_not(eval(f.child(0)));
      case FKind::And: return t_and(eval(f.child(0)), eval(f.child(1)));
      case FKind::Or: return t_or(eval(f.child(0)), eval(f.child(1)));
      case FKind::Imp: return t_or(t_not(eval(f.child(0))), eval(f.child(1)));
      case FKind::Forall:
      case FKind::Exists: return quantifier(f);
      default:
        // Choice operators have no classical truth value.
        return Truth::Unknown;
    }
  }

  Truth quantifier(const Formula& f) {
    const std::string& x = f.var();
    auto saved = env.find(x) != env.end() ? std::optional(env.at(x)) : std::nullopt;
    env.erase(x);
    // A verdict independent of the bound variable settles the quantifier.
    Truth open = eval(f.child(0));
    if (open != Truth::Unknown) {
      if (saved) env[x] = *saved;
      return open;
    }
    bool exists = f.kind() == FKind::Exists;
    Truth result = Truth::Unknown;
    for (uint64_t c = 0; c <= opts.blind_bound; ++c) {
      env[x] = BigNat(c);
      Truth t = eval(f.child(0));
      if (exists && t == Truth::True) { result = Truth::True; break; }
      if (!exists && t == Truth::False) { result = Truth::False; break; }
    }
    env.erase(x);
    if (saved) env[x] = *saved;
    return result;
  }
};

}  // namespace

Truth eval_elementary(const Formula& p, const EvalOptions& opts) {
  Evaluator ev{opts, {}};
  return ev.eval(p);
}

std::string Verdict::to_string() const {
  switch (kind) {
    case Kind::TopWon: return "T-won";
    case Kind::BotWon: return "B-won";
    case Kind::Undetermined: return "undetermined";
    case Kind::Illegal:
      return std::string("illegal(") + player_letter(offender) + ", " +
             std::to_string(index) + ")";
  }
  return "?";
}

Verdict adjudicate(const Position& pos, const Formula& game, const EvalOptions& opts) {
  if (auto ill = first_illegal(pos, game)) return Verdict::illegal(ill->second, ill->first);
  Formula h = prefixation(pos, game);
  Truth t = eval_elementary(elementarize(h), opts);
  switch (t) {
    case Truth::True: return Verdict::top_won();
    case Truth::False: return Verdict::bot_won();
    default: return Verdict::undetermined();
  }
}

MatchResult run_match(Agent& machine, Agent& environment, const Formula& game,
                      const MatchConfig& cfg) {
  MatchResult res;
  EvalOptions eopts;
  eopts.blind_bound = cfg.blind_bound;
  eopts.decision_rules = cfg.decision_rules;

  Formula current = game;
  Meter env_meter;
  int consecutive_passes = 0;
  Player turn = Player::Bot;  // environment is offered first
  while (res.transcript.size() < cfg.max_moves && consecutive_passes < 2) {
    Agent& who = turn == Player::Top ? machine : environment;
    Meter& meter = turn == Player::Top ? res.meter : env_meter;
    std::optional<std::string> mv;
    try {
      meter.tick();
      mv = who.offer(turn, res.transcript, meter);
    } catch (const std::exception& e) {
      res.fault = who.name() + ": " + e.what();
      res.verdict = Verdict::undetermined();
      return res;
    }
    if (mv) {
      consecutive_passes = 0;
      res.transcript.push_back({turn, *mv});
      res.meter.note_move(turn, *mv);
      auto next = apply_move(current, turn, *mv);
      if (!next) {
        res.verdict = Verdict::illegal(turn, res.transcript.size() - 1);
        return res;
      }
      current = *next;
    } else {
      ++consecutive_passes;
    }
    turn = opponent(turn);
  }
  res.verdict = adjudicate(res.transcript, game, eopts);
  return res;
}

std::string render_match_report(const MatchResult& r) {
  std::string out = to_string(r.transcript);
  if (r.aborted()) {
    out += "aborted: " + r.fault + "\n";
    return out;
  }
  out += "verdict: " + r.verdict.to_string() + "\n";
  out += "time: " + std::to_string(r.meter.time()) + "\n";
  out += "space: " + std::to_string(r.meter.space_peak()) + "\n";
  out += "amplitude: " + std::to_string(r.meter.amplitude()) + "\n";
  out += "background: " + std::to_string(r.meter.background()) + "\n";
  return out;
}

}  // namespace clar
