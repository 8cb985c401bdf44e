#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gossipgame/game.hpp"
#include "gossipgame/model.hpp"
#include "gossipgame/rng.hpp"

namespace gossipgame {

/// A fraction of the population sharing one personality.
struct PersonaGroup {
  double fraction = 1.0;
  Personality personality;
  std::string name;
};

/// A fraction of the population initialized at one knowledge level.
struct KnowledgeGroup {
  double fraction = 1.0;
  double k = 0.5;
};

/// Complete graph: every ordered pair of distinct actors is eligible.
struct CompleteTopology {};

/// Undirected edge list loaded from a file; transmissions pick a uniform
/// directed orientation.
struct EdgeListTopology {
  std::string path;
};

using Topology = std::variant<CompleteTopology, EdgeListTopology>;

struct SimulationConfig {
  int actor_count = 1000;
  GlobalParams params;
  std::vector<PersonaGroup> personas;
  std::vector<KnowledgeGroup> initial_k_groups;
  double steps_per_actor = 10000.0;
  double sample_interval = 1.0;
  std::vector<double> snapshot_times;
  std::uint64_t seed = 0;
  Topology topology = CompleteTopology{};
};

/// All violations at once; empty means valid.
std::vector<std::string> validate_config(const SimulationConfig& config);

/// Reads an undirected edge list: one "i j" pair of zero-based actor ids per
/// line; blank lines and lines starting with '#' are ignored. Self-loops and
/// out-of-range ids are rejected (std::invalid_argument). Returns both
/// directed orientations of every listed edge.
std::vector<std::pair<int, int>> load_edge_list(const std::string& path,
                                                int actor_count);

struct Actor {
  ActorState state;
  Personality personality;
  int persona = 0;
  double initial_k = 0.0;
};

/// One executed interaction, reported through RunObservers::on_event.
/// sender_empty marks draws where the sender held no assertions; no game is
/// played then (profile reports Hold/NoFeedback with an empty set).
struct TransmissionRecord {
  long long step = 0;
  double sim_time = 0.0;
  int sender_id = 0;
  int receiver_id = 0;
  EquilibriumProfile profile;
  bool sender_empty = false;
  std::optional<PayoffMatrix> matrix;
};

class World {
 public:
  /// Builds the initial population. Throws std::invalid_argument when the
  /// config does not validate or the edge list cannot be loaded.
  explicit World(const SimulationConfig& config);

  /// Executes one transmission event: picks an ordered pair, solves the
  /// game, applies the equilibrium outcome, clamps both participants.
  TransmissionRecord step();

  const SimulationConfig& config() const { return config_; }
  const std::vector<Actor>& actors() const { return actors_; }
  long long steps_taken() const { return steps_taken_; }

  /// Elapsed steps divided by actor count: average communications per actor.
  double sim_time() const;

  std::uint64_t clamp_events() const { return clamp_events_; }
  unsigned clamp_mask() const { return clamp_mask_; }
  std::uint64_t init_fallbacks() const { return init_fallbacks_; }

 private:
  void init_population(SplitRng& rng);
  std::pair<int, int> pick_pair(SplitRng& rng) const;

  SimulationConfig config_;
  std::vector<Actor> actors_;
  std::vector<std::pair<int, int>> edges_;  // directed orientations; empty = complete
  SplitRng pair_rng_;
  long long steps_taken_ = 0;
  std::uint64_t clamp_events_ = 0;
  unsigned clamp_mask_ = 0;
  std::uint64_t init_fallbacks_ = 0;
};

/// Callbacks fired during run(); any may be empty.
struct RunObservers {
  /// (world, step) at every sampling step, including step 0 and the final step.
  std::function<void(const World&, long long)> on_sample;
  /// (world, requested_time, step) when a snapshot time is reached.
  std::function<void(const World&, double, long long)> on_snapshot;
  /// Every executed event.
  std::function<void(const TransmissionRecord&)> on_event;
};

struct SimulationSummary {
  long long steps = 0;
  std::uint64_t clamp_events = 0;
  std::vector<std::string> clamped_fields;
  std::uint64_t init_fallbacks = 0;
};

struct RunResult {
  World world;
  SimulationSummary summary;
};

/// Runs a full simulation: round(steps_per_actor * actor_count) events.
/// Samples fire at step 0, at every round(j * sample_interval * actor_count),
/// and at the final step (deduplicated). Snapshot times map to
/// round(t * actor_count) and are skipped when beyond the horizon.
/// Bit-deterministic for a fixed (config, seed).
RunResult run(const SimulationConfig& config,
              const RunObservers& observers = {});

}  // namespace gossipgame
