#include "gossipgame/config_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include <json.hpp>

namespace gossipgame {
namespace {

using nlohmann::json;

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& part : parts) {
    if (!out.empty()) out += sep;
    out += part;
  }
  return out;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& scope, std::vector<std::string>& errors) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed)
      if (item.key() == key) {
        known = true;
        break;
      }
    if (!known)
      errors.push_back(scope + ": unknown key '" + item.key() + "'");
  }
}

void take_double(const json& obj, const char* key, double& target,
                 const std::string& scope, std::vector<std::string>& errors) {
  if (!obj.contains(key)) return;
  const json& value = obj.at(key);
  if (!value.is_number()) {
    errors.push_back(scope + "." + key + ": expected a number");
    return;
  }
  target = value.get<double>();
}

void take_int(const json& obj, const char* key, int& target,
              const std::string& scope, std::vector<std::string>& errors) {
  if (!obj.contains(key)) return;
  const json& value = obj.at(key);
  if (!value.is_number_integer()) {
    errors.push_back(scope + "." + key + ": expected an integer");
    return;
  }
  target = value.get<int>();
}

void take_u64(const json& obj, const char* key, std::uint64_t& target,
              const std::string& scope, std::vector<std::string>& errors) {
  if (!obj.contains(key)) return;
  const json& value = obj.at(key);
  const bool ok = value.is_number_unsigned() ||
                  (value.is_number_integer() && value.get<long long>() >= 0);
  if (!ok) {
    errors.push_back(scope + "." + key + ": expected a non-negative integer");
    return;
  }
  target = value.get<std::uint64_t>();
}

}  // namespace

RunSettings parse_settings(const std::string& json_text,
                           const RunSettings& base) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!root.is_object())
    throw ConfigError("config: root must be a JSON object");

  std::vector<std::string> errors;
  RunSettings settings = base;
  check_keys(root,
             {"actor_count", "params", "personas", "initial_k_groups",
              "steps_per_actor", "sample_interval", "snapshot_times", "seed",
              "topology", "histogram_bins"},
             "config", errors);

  take_int(root, "actor_count", settings.sim.actor_count, "config", errors);
  take_double(root, "steps_per_actor", settings.sim.steps_per_actor, "config",
              errors);
  take_double(root, "sample_interval", settings.sim.sample_interval, "config",
              errors);
  take_u64(root, "seed", settings.sim.seed, "config", errors);
  take_int(root, "histogram_bins", settings.histogram_bins, "config", errors);

  if (root.contains("params")) {
    const json& params = root.at("params");
    if (!params.is_object()) {
      errors.push_back("config.params: expected an object");
    } else {
      check_keys(params, {"phi", "delta", "lambda", "big_n"}, "config.params",
                 errors);
      take_double(params, "phi", settings.sim.params.phi, "config.params",
                  errors);
      take_double(params, "delta", settings.sim.params.delta, "config.params",
                  errors);
      take_double(params, "lambda", settings.sim.params.rumor_discount,
                  "config.params", errors);
      take_double(params, "big_n", settings.sim.params.big_n, "config.params",
                  errors);
    }
  }

  if (root.contains("personas")) {
    const json& personas = root.at("personas");
    if (!personas.is_array()) {
      errors.push_back("config.personas: expected an array");
    } else {
      std::vector<PersonaGroup> groups;
      for (std::size_t i = 0; i < personas.size(); ++i) {
        const std::string scope = "config.personas[" + std::to_string(i) + "]";
        const json& entry = personas[i];
        if (!entry.is_object()) {
          errors.push_back(scope + ": expected an object");
          continue;
        }
        check_keys(entry, {"fraction", "kappa", "sigma", "pi", "name"}, scope,
                   errors);
        PersonaGroup group;
        group.name = "persona" + std::to_string(i);
        take_double(entry, "fraction", group.fraction, scope, errors);
        take_double(entry, "kappa", group.personality.kappa, scope, errors);
        take_double(entry, "sigma", group.personality.sigma, scope, errors);
        take_double(entry, "pi", group.personality.pi, scope, errors);
        if (entry.contains("name")) {
          if (!entry.at("name").is_string())
            errors.push_back(scope + ".name: expected a string");
          else
            group.name = entry.at("name").get<std::string>();
        }
        groups.push_back(std::move(group));
      }
      settings.sim.personas = std::move(groups);
    }
  }

  if (root.contains("initial_k_groups")) {
    const json& k_groups = root.at("initial_k_groups");
    if (!k_groups.is_array()) {
      errors.push_back("config.initial_k_groups: expected an array");
    } else {
      std::vector<KnowledgeGroup> groups;
      for (std::size_t i = 0; i < k_groups.size(); ++i) {
        const std::string scope =
            "config.initial_k_groups[" + std::to_string(i) + "]";
        const json& entry = k_groups[i];
        if (!entry.is_object()) {
          errors.push_back(scope + ": expected an object");
          continue;
        }
        check_keys(entry, {"fraction", "k"}, scope, errors);
        KnowledgeGroup group;
        take_double(entry, "fraction", group.fraction, scope, errors);
        take_double(entry, "k", group.k, scope, errors);
        groups.push_back(group);
      }
      settings.sim.initial_k_groups = std::move(groups);
    }
  }

  if (root.contains("snapshot_times")) {
    const json& times = root.at("snapshot_times");
    if (!times.is_array()) {
      errors.push_back("config.snapshot_times: expected an array of numbers");
    } else {
      std::vector<double> parsed;
      for (std::size_t i = 0; i < times.size(); ++i) {
        if (!times[i].is_number()) {
          errors.push_back("config.snapshot_times[" + std::to_string(i) +
                           "]: expected a number");
          continue;
        }
        parsed.push_back(times[i].get<double>());
      }
      settings.sim.snapshot_times = std::move(parsed);
    }
  }

  if (root.contains("topology")) {
    const json& topology = root.at("topology");
    if (topology.is_string()) {
      if (topology.get<std::string>() == "complete")
        settings.sim.topology = CompleteTopology{};
      else
        errors.push_back("config.topology: unknown name '" +
                         topology.get<std::string>() +
                         "' (use \"complete\" or {\"edge_list\": path})");
    } else if (topology.is_object()) {
      check_keys(topology, {"edge_list"}, "config.topology", errors);
      if (!topology.contains("edge_list") ||
          !topology.at("edge_list").is_string())
        errors.push_back("config.topology.edge_list: expected a path string");
      else
        settings.sim.topology =
            EdgeListTopology{topology.at("edge_list").get<std::string>()};
    } else {
      errors.push_back(
          "config.topology: expected \"complete\" or {\"edge_list\": path}");
    }
  }

  if (!errors.empty()) throw ConfigError(join(errors, "; "));
  return settings;
}

RunSettings load_settings(const std::string& path, const RunSettings& base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config file '" + path + "' is unreadable");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_settings(text.str(), base);
}

std::string settings_to_json(const RunSettings& settings) {
  json root;
  root["actor_count"] = settings.sim.actor_count;
  root["params"] = {{"phi", settings.sim.params.phi},
                    {"delta", settings.sim.params.delta},
                    {"lambda", settings.sim.params.rumor_discount},
                    {"big_n", settings.sim.params.big_n}};
  json personas = json::array();
  for (const PersonaGroup& group : settings.sim.personas)
    personas.push_back({{"fraction", group.fraction},
                        {"kappa", group.personality.kappa},
                        {"sigma", group.personality.sigma},
                        {"pi", group.personality.pi},
                        {"name", group.name}});
  root["personas"] = std::move(personas);
  json k_groups = json::array();
  for (const KnowledgeGroup& group : settings.sim.initial_k_groups)
    k_groups.push_back({{"fraction", group.fraction}, {"k", group.k}});
  root["initial_k_groups"] = std::move(k_groups);
  root["steps_per_actor"] = settings.sim.steps_per_actor;
  root["sample_interval"] = settings.sim.sample_interval;
  root["snapshot_times"] = settings.sim.snapshot_times;
  root["seed"] = settings.sim.seed;
  if (const auto* edge_list =
          std::get_if<EdgeListTopology>(&settings.sim.topology))
    root["topology"] = {{"edge_list", edge_list->path}};
  else
    root["topology"] = "complete";
  root["histogram_bins"] = settings.histogram_bins;
  return root.dump(2) + "\n";
}

RunSettings resolve_settings(const RunSettings& base,
                             const std::optional<std::string>& config_path,
                             const CliOverrides& overrides) {
  RunSettings settings = base;
  if (config_path) settings = load_settings(*config_path, settings);

  if (overrides.seed) settings.sim.seed = *overrides.seed;
  if (overrides.actors) settings.sim.actor_count = *overrides.actors;
  if (overrides.assertions) settings.sim.params.big_n = *overrides.assertions;
  if (overrides.phi) settings.sim.params.phi = *overrides.phi;
  if (overrides.delta) settings.sim.params.delta = *overrides.delta;
  if (overrides.rumor_discount)
    settings.sim.params.rumor_discount = *overrides.rumor_discount;
  if (overrides.steps_per_actor)
    settings.sim.steps_per_actor = *overrides.steps_per_actor;
  if (overrides.sample_interval)
    settings.sim.sample_interval = *overrides.sample_interval;
  if (overrides.snapshot_times)
    settings.sim.snapshot_times = *overrides.snapshot_times;
  if (overrides.histogram_bins)
    settings.histogram_bins = *overrides.histogram_bins;

  std::vector<std::string> errors = validate_config(settings.sim);
  if (settings.histogram_bins < 1)
    errors.push_back("histogram_bins=" +
                     std::to_string(settings.histogram_bins) + " below 1");
  if (!errors.empty()) throw ConfigError(join(errors, "; "));
  return settings;
}

}  // namespace gossipgame
