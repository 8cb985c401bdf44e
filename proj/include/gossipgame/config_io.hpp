#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gossipgame/engine.hpp"

namespace gossipgame {

/// Raised for malformed or invalid configuration input.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A simulation config plus output options that ride along in the same JSON.
struct RunSettings {
  SimulationConfig sim;
  int histogram_bins = 50;
};

/// Values given on the command line; they override file and preset values.
struct CliOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> actors;
  std::optional<double> assertions;
  std::optional<double> phi;
  std::optional<double> delta;
  std::optional<double> rumor_discount;
  std::optional<double> steps_per_actor;
  std::optional<double> sample_interval;
  std::optional<std::vector<double>> snapshot_times;
  std::optional<int> histogram_bins;
};

/// Parses a JSON config text. Fields present overlay `base`; fields absent
/// keep the base value. Unknown keys are rejected. Throws ConfigError with
/// every violation listed.
RunSettings parse_settings(const std::string& json_text, const RunSettings& base);

/// Reads and parses a config file. Throws ConfigError (unreadable file,
/// malformed JSON, unknown keys, invalid values).
RunSettings load_settings(const std::string& path, const RunSettings& base);

/// Serializes the fully resolved settings, including the seed, as the JSON
/// schema accepted by parse_settings. Keys are emitted in sorted order so
/// equal settings produce identical bytes.
std::string settings_to_json(const RunSettings& settings);

/// Applies precedence: start from `base` (a preset or the default), overlay
/// the optional config file, then the command-line values. The result is
/// validated; throws ConfigError listing all violations.
RunSettings resolve_settings(const RunSettings& base,
                             const std::optional<std::string>& config_path,
                             const CliOverrides& overrides);

}  // namespace gossipgame
