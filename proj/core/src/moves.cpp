#include "clar/moves.hpp"

#include <deque>

namespace clar {

MoveTerminal MoveTerminal::comp(int i) {
  MoveTerminal t;
  t.kind = Kind::Component;
  t.component = i;
  return t;
}

MoveTerminal MoveTerminal::value(BigNat c) {
  MoveTerminal t;
  t.kind = Kind::Constant;
  t.constant = std::move(c);
  return t;
}

MoveTerminal MoveTerminal::var(std::string v) {
  MoveTerminal t;
  t.kind = Kind::Variable;
  t.variable = std::move(v);
  return t;
}

std::string MovePath::to_move_string() const {
  std::string s;
  for (int i : path) {
    s += std::to_string(i);
    s.push_back('.');
  }
  switch (terminal.kind) {
    case MoveTerminal::Kind::Component: s += std::to_string(terminal.component); break;
    case MoveTerminal::Kind::Constant: s += "#" + terminal.constant.to_binary(); break;
    case MoveTerminal::Kind::Variable: s += "#" + terminal.variable; break;
  }
  return s;
}

std::optional<MovePath> MovePath::parse(const std::string& move) {
  if (move.empty()) return std::nullopt;
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : move) {
    if (c == '.') {
      if (cur.empty()) return std::nullopt;
      tokens.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (cur.empty()) return std::nullopt;
  tokens.push_back(cur);

  MovePath mp;
  for (size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (tokens[i] == "0") mp.path.push_back(0);
    else if (tokens[i] == "1") mp.path.push_back(1);
    else return std::nullopt;
  }
  const std::string& last = tokens.back();
  if (last == "0" || last == "1") {
    mp.terminal = MoveTerminal::comp(last == "1" ? 1 : 0);
  } else if (last.size() > 1 && last[0] == '#') {
    std::string body = last.substr(1);
    bool numeric = true;
    for (char c : body) {
      if (c != '0' && c != '1') numeric = false;
    }
    if (numeric) {
      if (body.size() > 1 && body[0] == '0') return std::nullopt;  // leading zero
      mp.terminal = MoveTerminal::value(BigNat::from_binary(body));
    } else {
      mp.terminal = MoveTerminal::var(body);
    }
  } else {
    return std::nullopt;
  }
  return mp;
}

std::string header_of_move(const std::string& move) {
  auto pos = move.find('#');
  if (pos == std::string::npos) return move;
  return move.substr(0, pos + 1);
}

BigNat numer_of_move(const std::string& move) {
  auto pos = move.find('#');
  if (pos == std::string::npos) return BigNat();
  std::string body = move.substr(pos + 1);
  for (char c : body) {
    if (c != '0' && c != '1') return BigNat();
  }
  if (body.empty()) return BigNat();
  return BigNat::from_binary(body);
}

uint64_t magnitude(const std::string& move) { return numer_of_move(move).bit_length(); }

namespace {

// Owner of a choice occurrence given the polarity of its position.
Player choice_owner(FKind k, bool positive) {
  bool env_owned = (k == FKind::Meet || k == FKind::MeetQ);
  if (!positive) env_owned = !env_owned;
  return env_owned ? Player::Bot : Player::Top;
}

void collect_devs(const Formula& f, Player player, bool positive,
                  std::vector<int>& prefix, const DevelopPolicy& policy,
                  const std::set<std::string>& avoid, std::vector<Development>& out) {
  switch (f.kind()) {
    case FKind::Meet:
    case FKind::Join: {
      if (choice_owner(f.kind(), positive) == player) {
        for (int i = 0; i < 2; ++i) {
          out.push_back({MovePath{prefix, MoveTerminal::comp(i)}, f.child(i)});
        }
      }
      return;  // children are not surface
    }
    case FKind::MeetQ:
    case FKind::JoinQ: {
      if (choice_owner(f.kind(), positive) == player) {
        if (policy.constant) {
          out.push_back({MovePath{prefix, MoveTerminal::value(*policy.constant)},
                         f.child(0).substitute(f.var(), PTerm::constant(*policy.constant))});
        } else {
          std::string w = fresh_var(avoid);
          out.push_back({MovePath{prefix, MoveTerminal::var(w)},
                         f.child(0).substitute(f.var(), PTerm::var(w))});
        }
      }
      return;
    }
    case FKind::And:
    case FKind::Or:
    case FKind::Imp: {
      for (int i = 0; i < 2; ++i) {
        prefix.push_back(i);
        bool pos = positive ^ (f.kind() == FKind::Imp && i == 0);
        size_t before = out.size();
        collect_devs(f.child(i), player, pos, prefix, policy, avoid, out);
        prefix.pop_back();
        // Rebuild the replaced formula around each new development.
        for (size_t j = before; j < out.size(); ++j) {
          Formula l = i == 0 ? out[j].result : f.child(0);
          Formula r = i == 1 ? out[j].result : f.child(1);
          switch (f.kind()) {
            case FKind::And: out[j].result = Formula::conj(l, r); break;
            case FKind::Or: out[j].result = Formula::disj(l, r); break;
            default: out[j].result = Formula::imp(l, r); break;
          }
        }
      }
      return;
    }
    case FKind::Forall:
    case FKind::Exists: {
      size_t before = out.size();
      collect_devs(f.child(0), player, positive, prefix, policy, avoid, out);
      for (size_t j = before; j < out.size(); ++j) {
        out[j].result = f.kind() == FKind::Forall ? Formula::forall(f.var(), out[j].result)
                                                  : Formula::exists(f.var(), out[j].result);
      }
      return;
    }
    default:
      return;  // atoms, Not
  }
}

}  // namespace

std::vector<Development> developments(const Formula& f, Player player,
                                      const DevelopPolicy& policy) {
  std::vector<Development> out;
  std::vector<int> prefix;
  std::set<std::string> avoid = policy.avoid;
  if (!policy.constant) {
    auto vs = f.all_vars();
    avoid.insert(vs.begin(), vs.end());
  }
  collect_devs(f, player, true, prefix, policy, avoid, out);
  return out;
}

namespace {

std::optional<Formula> apply_at(const Formula& f, const std::vector<int>& path, size_t at,
                                const MoveTerminal& t, Player mover, bool positive) {
  switch (f.kind()) {
    case FKind::Forall:
    case FKind::Exists: {
      auto sub = apply_at(f.child(0), path, at, t, mover, positive);
      if (!sub) return std::nullopt;
      return f.kind() == FKind::Forall ? Formula::forall(f.var(), *sub)
                                       : Formula::exists(f.var(), *sub);
    }
    default: break;
  }
  if (at < path.size()) {
    int i = path[at];
    switch (f.kind()) {
      case FKind::And:
      case FKind::Or:
      case FKind::Imp: {
        bool pos = positive ^ (f.kind() == FKind::Imp && i == 0);
        auto sub = apply_at(f.child(i), path, at + 1, t, mover, pos);
        if (!sub) return std::nullopt;
        Formula l = i == 0 ? *sub : f.child(0);
        Formula r = i == 1 ? *sub : f.child(1);
        if (f.kind() == FKind::And) return Formula::conj(l, r);
        if (f.kind() == FKind::Or) return Formula::disj(l, r);
        return Formula::imp(l, r);
      }
      default: return std::nullopt;
    }
  }
  switch (f.kind()) {
    case FKind::Meet:
    case FKind::Join:
      if (t.kind != MoveTerminal::Kind::Component) return std::nullopt;
      if (choice_owner(f.kind(), positive) != mover) return std::nullopt;
      return f.child(t.component);
    case FKind::MeetQ:
    case FKind::JoinQ: {
      if (choice_owner(f.kind(), positive) != mover) return std::nullopt;
      PTerm inst;
      if (t.kind == MoveTerminal::Kind::Constant) inst = PTerm::constant(t.constant);
      else if (t.kind == MoveTerminal::Kind::Variable) inst = PTerm::var(t.variable);
      else return std::nullopt;
      try {
        return f.child(0).substitute(f.var(), inst);
      } catch (const CaptureError&) {
        return std::nullopt;
      }
    }
    default: return std::nullopt;
  }
}

}  // namespace

std::optional<Formula> apply_move(const Formula& f, Player p, const std::string& move) {
  auto mp = MovePath::parse(move);
  if (!mp) return std::nullopt;
  if (mp->terminal.kind == MoveTerminal::Kind::Variable) return std::nullopt;
  return apply_at(f, mp->path, 0, mp->terminal, p, true);
}

std::optional<Formula> apply_path(const Formula& f, Player p, const MovePath& mp) {
  return apply_at(f, mp.path, 0, mp.terminal, p, true);
}

namespace {

std::optional<std::pair<Formula, bool>> node_at(const Formula& f, const std::vector<int>& path,
                                                size_t at, bool positive) {
  switch (f.kind()) {
    case FKind::Forall:
    case FKind::Exists: return node_at(f.child(0), path, at, positive);
    default: break;
  }
  if (at == path.size()) return std::make_pair(f, positive);
  switch (f.kind()) {
    case FKind::And:
    case FKind::Or:
    case FKind::Imp: {
      int i = path[at];
      bool pos = positive ^ (f.kind() == FKind::Imp && i == 0);
      return node_at(f.child(i), path, at + 1, pos);
    }
    default: return std::nullopt;
  }
}

}  // namespace

std::optional<std::pair<Formula, bool>> choice_node_at(const Formula& f,
                                                       const std::vector<int>& path) {
  return node_at(f, path, 0, true);
}

Formula prefixation(const Position& pos, const Formula& f) {
  Formula cur = f;
  for (size_t i = 0; i < pos.size(); ++i) {
    auto next = apply_move(cur, pos[i].player, pos[i].move);
    if (!next) throw PrefixError(i, pos[i].player);
    cur = *next;
  }
  return cur;
}

std::optional<std::pair<size_t, Player>> first_illegal(const Position& pos, const Formula& f) {
  Formula cur = f;
  for (size_t i = 0; i < pos.size(); ++i) {
    auto next = apply_move(cur, pos[i].player, pos[i].move);
    if (!next) return std::make_pair(i, pos[i].player);
    cur = *next;
  }
  return std::nullopt;
}

std::set<std::string> headers_of(const Formula& sentence) {
  std::set<std::string> headers;
  headers.insert("");
  std::set<std::string> seen;
  std::deque<Formula> queue;
  queue.push_back(sentence);
  seen.insert(sentence.to_string());
  DevelopPolicy policy;
  policy.constant = BigNat();  // instantiate quantifier choices at 0
  while (!queue.empty()) {
    Formula f = queue.front();
    queue.pop_front();
    for (Player p : {Player::Top, Player::Bot}) {
      for (const auto& d : developments(f, p, policy)) {
        std::string h = header_of_move(d.path.to_move_string());
        for (size_t i = 0; i <= h.size(); ++i) headers.insert(h.substr(0, i));
        std::string key = d.result.to_string();
        if (seen.insert(key).second) queue.push_back(d.result);
      }
    }
  }
  return headers;
}

std::string to_string(const Labmove& lm) {
  return std::string(1, player_letter(lm.player)) + ": " + lm.move;
}

std::string to_string(const Position& pos) {
  std::string out;
  for (const auto& lm : pos) {
    out += to_string(lm);
    out.push_back('\n');
  }
  return out;
}

}  // namespace clar
