#pragma once

#include <optional>
#include <string>

#include "clar/moves.hpp"
#include "clar/parse.hpp"

namespace clar {

enum class Truth { True, False, Unknown };

struct EvalOptions {
  // Search ceiling for blind quantifiers: witnesses are sought in [0, bound].
  uint64_t blind_bound = 4096;
  // Syntactic decision rules for atoms with unbound variables (identity,
  // successor-chain against a smaller constant).
  bool decision_rules = true;
  uint64_t bit_guard = BigNat::kDefaultBitGuard;
};

// Standard-model truth of an elementary paraformula, three-valued: Unknown
// when the blind-quantifier search is inconclusive or a value blows past the
// bit guard. Free variables are treated as unknowns.
Truth eval_elementary(const Formula& p, const EvalOptions& opts = {});

struct Verdict {
  enum class Kind { TopWon, BotWon, Undetermined, Illegal };
  Kind kind = Kind::Undetermined;
  Player offender = Player::Top;  // Illegal only
  size_t index = 0;               // Illegal only

  static Verdict top_won() { return {Kind::TopWon}; }
  static Verdict bot_won() { return {Kind::BotWon}; }
  static Verdict undetermined() { return {Kind::Undetermined}; }
  static Verdict illegal(Player p, size_t i) { return {Kind::Illegal, p, i}; }
  bool operator==(const Verdict&) const = default;
  std::string to_string() const;
};

// Run adjudication: illegality is blamed on the first offender; otherwise the
// position is brought down by prefixation, elementarized and evaluated.
Verdict adjudicate(const Position& pos, const Formula& game, const EvalOptions& opts = {});

// Amplitude / space / time accounting for one machine across one match.
// Time and space are charged cooperatively by the agent; amplitude and
// background are observed by the arena from the transcript.
class Meter {
public:
  void tick(uint64_t n = 1) { time_ += n; }
  void register_space(uint64_t cells) {
    space_now_ += cells;
    if (space_now_ > space_peak_) space_peak_ = space_now_;
  }
  void release_space(uint64_t cells) { space_now_ -= cells > space_now_ ? space_now_ : cells; }
  void note_move(Player mover, const std::string& move) {
    uint64_t m = magnitude(move);
    if (mover == Player::Top) {
      if (m > amplitude_) amplitude_ = m;
    } else if (m > background_) {
      background_ = m;
    }
  }

  uint64_t time() const { return time_; }
  uint64_t space_peak() const { return space_peak_; }
  uint64_t amplitude() const { return amplitude_; }
  uint64_t background() const { return background_; }

private:
  uint64_t time_ = 0;
  uint64_t space_now_ = 0;
  uint64_t space_peak_ = 0;
  uint64_t amplitude_ = 0;
  uint64_t background_ = 0;
};

struct AgentFault : std::runtime_error {
  explicit AgentFault(const std::string& what) : std::runtime_error(what) {}
};

// An interactive strategy. One instance plays one match.
class Agent {
public:
  virtual ~Agent() = default;
  virtual std::string name() const = 0;
  // The sentence the agent is built to win as T, when fixed in advance.
  virtual std::optional<Formula> declared_game() const { return std::nullopt; }
  // One scheduler offer: a move string, or nullopt to pass.
  virtual std::optional<std::string> offer(Player role, const Position& pos, Meter& meter) = 0;
};

struct MatchConfig {
  uint64_t blind_bound = 4096;
  size_t max_moves = 64;
  uint64_t seed = 0;
  bool decision_rules = true;
};

struct MatchResult {
  Position transcript;
  Verdict verdict;
  Meter meter;        // the machine's accounting
  std::string fault;  // nonempty when a participant raised an internal fault
  bool aborted() const { return !fault.empty(); }
};

// Alternating offers, environment first; a pass is allowed; the match stops
// when both players pass back to back, a move-count cap is hit, or a player
// moves illegally.
MatchResult run_match(Agent& machine, Agent& environment, const Formula& game,
                      const MatchConfig& cfg = {});

// Transcript plus trailing verdict/meter block, byte-stable.
std::string render_match_report(const MatchResult& r);

}  // namespace clar
