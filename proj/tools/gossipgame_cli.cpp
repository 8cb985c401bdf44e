#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gossipgame/config_io.hpp"
#include "gossipgame/engine.hpp"
#include "gossipgame/metrics.hpp"
#include "gossipgame/presets.hpp"

namespace gg = gossipgame;

namespace {

const char* sender_action_name(gg::SenderAction action) {
  return action == gg::SenderAction::Forward ? "forward" : "hold";
}

const char* receiver_action_name(gg::ReceiverAction action) {
  return action == gg::ReceiverAction::Feedback ? "feedback" : "no_feedback";
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

int do_run(const std::string& preset,
           const std::optional<std::string>& config_path,
           const gg::CliOverrides& overrides, const std::string& out_dir,
           bool log_events) {
  gg::RunSettings base;
  base.sim = gg::preset_config(preset);
  const gg::RunSettings settings =
      gg::resolve_settings(base, config_path, overrides);

  const std::filesystem::path out(out_dir);
  std::filesystem::create_directories(out);
  open_output(out / "params.json") << gg::settings_to_json(settings);

  std::vector<std::string> persona_names;
  for (const gg::PersonaGroup& group : settings.sim.personas)
    persona_names.push_back(group.name);

  std::vector<gg::QualityRecord> series;
  std::vector<gg::HistogramRecord> histograms;
  std::ofstream events;
  if (log_events) {
    events = open_output(out / "events.csv");
    events << "step,sim_time,sender_id,receiver_id,sender_action,"
              "receiver_action,equilibrium_count,selected_by_tiebreak,"
              "sender_empty\n";
  }

  gg::RunObservers observers;
  observers.on_sample = [&](const gg::World& world, long long) {
    series.push_back(gg::quality_summary(world));
    const auto bins = gg::knowledge_histogram(world, settings.histogram_bins);
    histograms.insert(histograms.end(), bins.begin(), bins.end());
  };
  observers.on_snapshot = [&](const gg::World& world, double time,
                              long long) {
    const auto records =
        gg::snapshot_records(world.actors(), settings.sim.params,
                             persona_names, time);
    auto file = open_output(out / ("snapshot_" + gg::format_g9(time) + ".csv"));
    gg::write_snapshot(file, records);
  };
  if (log_events)
    observers.on_event = [&](const gg::TransmissionRecord& record) {
      events << record.step << ',' << gg::format_g9(record.sim_time) << ','
             << record.sender_id << ',' << record.receiver_id << ','
             << sender_action_name(record.profile.sender_action) << ','
             << receiver_action_name(record.profile.receiver_action) << ','
             << record.profile.equilibrium_set.size << ','
             << (record.profile.selected_by_tiebreak ? 1 : 0) << ','
             << (record.sender_empty ? 1 : 0) << '\n';
    };

  gg::RunResult result = gg::run(settings.sim, observers);

  {
    auto file = open_output(out / "timeseries.csv");
    gg::write_timeseries(file, series);
  }
  {
    auto file = open_output(out / "hist.csv");
    gg::write_histograms(file, histograms);
  }
  if (log_events && !events)
    throw std::runtime_error("cannot write '" + (out / "events.csv").string() +
                             "'");

  const gg::QualityRecord final_quality =
      series.empty() ? gg::quality_summary(result.world) : series.back();
  std::cout << "mean_k=" << gg::format_g9(final_quality.mean_k)
            << " mean_f_plus=" << gg::format_g9(final_quality.mean_f_plus)
            << " mean_f_minus=" << gg::format_g9(final_quality.mean_f_minus)
            << " clamp_events=" << result.summary.clamp_events << "\n";
  return 0;
}

int do_presets() {
  for (const std::string& name : gg::preset_names()) {
    const gg::SimulationConfig config = gg::preset_config(name);
    std::cout << name << ": actors=" << config.actor_count
              << " big_n=" << gg::format_g9(config.params.big_n)
              << " phi=" << gg::format_g9(config.params.phi)
              << " delta=" << gg::format_g9(config.params.delta)
              << " lambda=" << gg::format_g9(config.params.rumor_discount)
              << " steps_per_actor=" << gg::format_g9(config.steps_per_actor)
              << "\n";
    for (const gg::PersonaGroup& group : config.personas)
      std::cout << "  persona " << group.name
                << ": fraction=" << gg::format_g9(group.fraction)
                << " kappa=" << gg::format_g9(group.personality.kappa)
                << " sigma=" << gg::format_g9(group.personality.sigma)
                << " pi=" << gg::format_g9(group.personality.pi) << "\n";
    for (const gg::KnowledgeGroup& group : config.initial_k_groups)
      std::cout << "  initial_k " << gg::format_g9(group.k)
                << ": fraction=" << gg::format_g9(group.fraction) << "\n";
    for (double time : config.snapshot_times)
      std::cout << "  snapshot at t=" << gg::format_g9(time) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information spreading simulator: assertions travel between "
               "actors whose forwarding and feedback choices are game "
               "equilibria."};
  app.require_subcommand(1);

  std::string preset = "troll";
  std::optional<std::string> config_path;
  std::string out_dir = "out";
  bool log_events = false;
  gg::CliOverrides overrides;
  std::optional<std::vector<double>> snapshot_times;

  CLI::App* run_cmd =
      app.add_subcommand("run", "Run a simulation and write CSV outputs");
  run_cmd->add_option("--preset", preset, "Preset name (troll, expert, mixed)")
      ->capture_default_str();
  run_cmd->add_option("--config", config_path, "JSON config file");
  run_cmd->add_option("--seed", overrides.seed, "RNG seed");
  run_cmd->add_option("--actors", overrides.actors, "Number of actors");
  run_cmd->add_option("--assertions", overrides.assertions,
                      "Assertion pool size N");
  run_cmd->add_option("--phi", overrides.phi, "Share of true assertions");
  run_cmd->add_option("--delta", overrides.delta, "Popularity cost of holding");
  run_cmd->add_option("--lambda", overrides.rumor_discount,
                      "Knowledge weight of unlabeled assertions");
  run_cmd->add_option("--steps-per-actor", overrides.steps_per_actor,
                      "Simulation horizon in communications per actor");
  run_cmd->add_option("--sample-every", overrides.sample_interval,
                      "Sampling interval in communications per actor");
  run_cmd
      ->add_option("--snapshot-at", snapshot_times,
                   "Comma-separated snapshot times")
      ->delimiter(',');
  run_cmd->add_option("--bins", overrides.histogram_bins,
                      "Knowledge histogram bin count");
  run_cmd->add_option("--out", out_dir, "Output directory")
      ->capture_default_str();
  run_cmd->add_flag("--log-events", log_events,
                    "Also write per-transmission events.csv");

  CLI::App* presets_cmd =
      app.add_subcommand("presets", "List presets and their parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (snapshot_times) overrides.snapshot_times = snapshot_times;
    if (*run_cmd)
      return do_run(preset, config_path, overrides, out_dir, log_events);
    if (*presets_cmd) return do_presets();
  } catch (const gg::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
