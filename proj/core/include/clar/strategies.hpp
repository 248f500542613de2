#pragma once

#include <memory>

#include "clar/arena.hpp"
#include "clar/bounds.hpp"
#include "clar/cl12.hpp"

namespace clar::strat {

// A replicable resource: one antecedent game played by a provider agent in
// the machine's service. The machine makes the environment-side choices; the
// provider answers with its own. Cloning duplicates the position history.
class ProviderChannel {
public:
  ProviderChannel(std::shared_ptr<Agent> provider, Formula game);

  // The machine's move on this channel; false when illegal.
  bool machine_move(const std::string& move);
  // One provider offer; any move is appended to the history and returned.
  std::optional<std::string> pump(Meter& meter);

  const Position& history() const { return history_; }
  const Formula& game() const { return game_; }
  Formula current() const;
  size_t machine_moves() const;

  ProviderChannel clone() const { return *this; }

private:
  std::shared_ptr<Agent> provider_;  // providers are stateless in the position
  Formula game_;
  Position history_;
};

struct ProviderBundle {
  std::vector<ProviderChannel> channels;
  // Wire canonical axiom agents for each recognizable antecedent; throws
  // when an antecedent has no registered provider.
  static ProviderBundle auto_wire(const cl12::Sequent& sequent);
};

// ---- built-in machine strategies ----

enum class AxiomAgentKind { Successor, Log, Bit };

std::unique_ptr<Agent> axiom_agent(AxiomAgentKind kind);
std::unique_ptr<Agent> numeral_agent(uint64_t n);
// Same, against a custom (possibly silent or misbehaving) successor provider.
std::unique_ptr<Agent> numeral_agent(uint64_t n, std::shared_ptr<Agent> provider);
std::unique_ptr<Agent> add_agent();
std::unique_ptr<Agent> sub_agent();
std::unique_ptr<Agent> mult_agent();
std::unique_ptr<Agent> tri_agent();
std::unique_ptr<Agent> div2_agent();
std::unique_ptr<Agent> bitsum_agent();
std::unique_ptr<Agent> br_agent(int bit);
std::unique_ptr<Agent> bound_eval_agent(const PTerm& bound);

// Compile a checked sequent proof into a strategy for its succedent: the
// agent walks the proof from the final line upward, forwarding antecedent
// choices to the providers and emitting succedent choices as moves.
std::unique_ptr<Agent> extract_agent(const cl12::Proof& proof, ProviderBundle providers,
                                     const cl12::CheckOptions& opts = {});

// Provider calls made so far across the numeral agent's channel copies.
std::optional<size_t> numeral_provider_calls(const Agent& agent);

// ---- environments ----

std::unique_ptr<Agent> env_silent();
std::unique_ptr<Agent> env_random(uint64_t seed, Formula game);
std::unique_ptr<Agent> env_script(std::vector<std::string> moves);
std::unique_ptr<Agent> env_exhaustive(uint64_t index, Formula game);
std::unique_ptr<Agent> env_repl(std::istream& in, std::ostream& out, Formula game);

// ---- registries ----

// "add", "tri", "br0", "numeral:5", "bound:|x|", "extract:proof.cl12", ...
std::unique_ptr<Agent> make_agent(const std::string& spec, bool permissive = false);
// "silent", "random:7", "script:moves.env", "exhaustive:3", "repl"
std::unique_ptr<Agent> make_env(const std::string& spec, const Formula& game);

std::vector<std::string> agent_names();

// Strategy-level witness for regularity audits: plays the bound-evaluation
// game on sample inputs and reports wins and meter conformance.
bounds::BoundWitness make_bound_witness(std::vector<uint64_t> inputs = {0, 1, 5, 13, 64},
                                        MatchConfig cfg = {});

}  // namespace clar::strat
