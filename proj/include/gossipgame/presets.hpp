#pragma once

#include <string>
#include <vector>

#include "gossipgame/engine.hpp"

namespace gossipgame {

/// Named experiment setups:
///   "troll"  : one persona valuing popularity (kappa,sigma,pi)=(0.1,0.1,0.8)
///   "expert" : one persona valuing reputation (0.2,0.7,0.1), snapshot at 800
///   "mixed"  : half experts, half trolls
/// All use phi=0.8, delta=0.1, lambda=0.5, N=2000, 1000 actors, knowledge
/// thirds at 0.1/0.5/0.9, 10000 steps per actor, sample interval 1, seed 0.
/// Throws std::invalid_argument for unknown names.
SimulationConfig preset_config(const std::string& name);

std::vector<std::string> preset_names();

}  // namespace gossipgame
