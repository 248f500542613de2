#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clar/formula.hpp"

namespace clar {

enum class Player { Top, Bot };  // machine / environment

inline Player opponent(Player p) { return p == Player::Top ? Player::Bot : Player::Top; }
inline char player_letter(Player p) { return p == Player::Top ? 'T' : 'B'; }

struct Labmove {
  Player player;
  std::string move;
  bool operator==(const Labmove&) const = default;
};

using Position = std::vector<Labmove>;

// Terminal action of a move: a component pick on a binary choice, or a
// value pick on a choice quantifier. Variable picks only appear in
// development listings and rule premises, never in transcripts.
struct MoveTerminal {
  enum class Kind { Component, Constant, Variable };
  Kind kind = Kind::Component;
  int component = 0;
  BigNat constant;
  std::string variable;

  static MoveTerminal comp(int i);
  static MoveTerminal value(BigNat c);
  static MoveTerminal var(std::string v);
  bool operator==(const MoveTerminal&) const = default;
};

// Dot-separated component indices through &, | and -> (antecedent = 0,
// consequent = 1), ending in a terminal action at a choice occurrence.
struct MovePath {
  std::vector<int> path;
  MoveTerminal terminal;

  std::string to_move_string() const;
  static std::optional<MovePath> parse(const std::string& move);
  bool operator==(const MovePath&) const = default;
};

// Header / numer split of a move string: everything through '#' is the
// header; the numer defaults to 0 when no '#' occurs.
std::string header_of_move(const std::string& move);
BigNat numer_of_move(const std::string& move);
// Bit length of the numer.
uint64_t magnitude(const std::string& move);

struct Development {
  MovePath path;
  Formula result;
};

struct DevelopPolicy {
  // When set, quantifier choices instantiate at this constant; otherwise at a
  // fresh variable absent from `avoid` and from the formula.
  std::optional<BigNat> constant;
  std::set<std::string> avoid;
};

// Every single-move successor of f available to the given player: their
// surface choice occurrences, with ownership flipped inside antecedents
// of ->. The environment owns Meet/MeetQ in positive positions, the machine
// owns Join/JoinQ.
std::vector<Development> developments(const Formula& f, Player player,
                                      const DevelopPolicy& policy = {});

// Apply one labmove; nullopt when the move is illegal for that player.
std::optional<Formula> apply_move(const Formula& f, Player p, const std::string& move);

// Like apply_move but takes a structured path and also accepts variable
// terminals (used by rule checkers, not by transcripts).
std::optional<Formula> apply_path(const Formula& f, Player p, const MovePath& mp);

// The choice node a path addresses (after skipping blind quantifiers),
// together with the polarity of its position; nullopt when the path walks
// off the formula.
std::optional<std::pair<Formula, bool>> choice_node_at(const Formula& f,
                                                       const std::vector<int>& path);

struct PrefixError : std::runtime_error {
  size_t index;
  Player player;
  PrefixError(size_t i, Player p)
      : std::runtime_error("illegal labmove at index " + std::to_string(i) +
                           " by " + (p == Player::Top ? "T" : "B")),
        index(i), player(p) {}
};

// The parasentence the position brings f down to; throws PrefixError at the
// first offending labmove.
Formula prefixation(const Position& pos, const Formula& f);

// First illegal labmove of the position, if any.
std::optional<std::pair<size_t, Player>> first_illegal(const Position& pos, const Formula& f);

// All headers of paralegal moves of the sentence (finitely many; includes
// the empty string).
std::set<std::string> headers_of(const Formula& sentence);

std::string to_string(const Labmove& lm);
std::string to_string(const Position& pos);

}  // namespace clar
