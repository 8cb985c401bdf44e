#include "gossipgame/presets.hpp"

#include <stdexcept>

namespace gossipgame {

SimulationConfig preset_config(const std::string& name) {
  SimulationConfig config;
  config.actor_count = 1000;
  config.params = GlobalParams{0.8, 0.1, 0.5, 2000.0};
  config.initial_k_groups = {{1.0 / 3.0, 0.1}, {1.0 / 3.0, 0.5},
                             {1.0 / 3.0, 0.9}};
  config.steps_per_actor = 10000.0;
  config.sample_interval = 1.0;
  config.seed = 0;

  const Personality troll{0.1, 0.1, 0.8};
  const Personality expert{0.2, 0.7, 0.1};
  if (name == "troll") {
    config.personas = {{1.0, troll, "troll"}};
  } else if (name == "expert") {
    config.personas = {{1.0, expert, "expert"}};
    config.snapshot_times = {800.0};
  } else if (name == "mixed") {
    config.personas = {{0.5, expert, "expert"}, {0.5, troll, "troll"}};
  } else {
    throw std::invalid_argument("unknown preset '" + name +
                                "' (available: troll, expert, mixed)");
  }
  return config;
}

std::vector<std::string> preset_names() { return {"troll", "expert", "mixed"}; }

}  // namespace gossipgame
