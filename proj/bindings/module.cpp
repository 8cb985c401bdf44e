#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "gossipgame/config_io.hpp"
#include "gossipgame/dynamics.hpp"
#include "gossipgame/engine.hpp"
#include "gossipgame/evaluation.hpp"
#include "gossipgame/game.hpp"
#include "gossipgame/metrics.hpp"
#include "gossipgame/model.hpp"
#include "gossipgame/presets.hpp"

namespace py = pybind11;
using namespace gossipgame;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Simulator of information spreading where forwarding and feedback are "
      "equilibrium choices of a two-player game between sender and receiver.";

  py::class_<GlobalParams>(m, "GlobalParams")
      .def(py::init([](double phi, double delta, double rumor_discount,
                       double big_n) {
             return GlobalParams{phi, delta, rumor_discount, big_n};
           }),
           py::arg("phi") = 0.8, py::arg("delta") = 0.1,
           py::arg("rumor_discount") = 0.5, py::arg("big_n") = 2000.0)
      .def_readwrite("phi", &GlobalParams::phi)
      .def_readwrite("delta", &GlobalParams::delta)
      .def_readwrite("rumor_discount", &GlobalParams::rumor_discount)
      .def_readwrite("big_n", &GlobalParams::big_n);

  py::class_<Personality>(m, "Personality")
      .def(py::init([](double kappa, double sigma, double pi) {
             return Personality{kappa, sigma, pi};
           }),
           py::arg("kappa") = 0.0, py::arg("sigma") = 0.0,
           py::arg("pi") = 0.0)
      .def_readwrite("kappa", &Personality::kappa)
      .def_readwrite("sigma", &Personality::sigma)
      .def_readwrite("pi", &Personality::pi);

  py::class_<LabelFractions>(m, "LabelFractions")
      .def(py::init([](double f_plus, double f_minus, double f_rumor) {
             return LabelFractions{f_plus, f_minus, f_rumor};
           }),
           py::arg("f_plus") = 0.0, py::arg("f_minus") = 0.0,
           py::arg("f_rumor") = 0.0)
      .def_readwrite("f_plus", &LabelFractions::f_plus)
      .def_readwrite("f_minus", &LabelFractions::f_minus)
      .def_readwrite("f_rumor", &LabelFractions::f_rumor);

  py::class_<ActorState>(m, "ActorState")
      .def(py::init([](double f_count, double f_plus_count,
                       double f_minus_count, double f_rumor_count,
                       double reputation, double popularity) {
             return ActorState{f_count,       f_plus_count, f_minus_count,
                               f_rumor_count, reputation,   popularity};
           }),
           py::arg("f_count") = 0.0, py::arg("f_plus_count") = 0.0,
           py::arg("f_minus_count") = 0.0, py::arg("f_rumor_count") = 0.0,
           py::arg("reputation") = 0.0, py::arg("popularity") = 0.0)
      .def_readwrite("f_count", &ActorState::f_count)
      .def_readwrite("f_plus_count", &ActorState::f_plus_count)
      .def_readwrite("f_minus_count", &ActorState::f_minus_count)
      .def_readwrite("f_rumor_count", &ActorState::f_rumor_count)
      .def_readwrite("reputation", &ActorState::reputation)
      .def_readwrite("popularity", &ActorState::popularity);

  py::class_<NormalizedView>(m, "NormalizedView")
      .def(py::init<>())
      .def_readwrite("k", &NormalizedView::k)
      .def_readwrite("c", &NormalizedView::c)
      .def_readwrite("p", &NormalizedView::p)
      .def_readwrite("f", &NormalizedView::f)
      .def_readwrite("f_plus", &NormalizedView::f_plus)
      .def_readwrite("f_minus", &NormalizedView::f_minus)
      .def_readwrite("f_rumor", &NormalizedView::f_rumor)
      .def("labels", &NormalizedView::labels);

  py::class_<ClampReport>(m, "ClampReport")
      .def(py::init<>())
      .def_readonly("clamped_fields", &ClampReport::clamped_fields)
      .def_readonly("count", &ClampReport::count);

  py::class_<OpinionAssessment>(m, "OpinionAssessment")
      .def(py::init([](double g_plus, double g_minus, double g_rumor) {
             return OpinionAssessment{g_plus, g_minus, g_rumor};
           }),
           py::arg("g_plus") = 0.0, py::arg("g_minus") = 0.0,
           py::arg("g_rumor") = 0.0)
      .def_readwrite("g_plus", &OpinionAssessment::g_plus)
      .def_readwrite("g_minus", &OpinionAssessment::g_minus)
      .def_readwrite("g_rumor", &OpinionAssessment::g_rumor);

  py::class_<ScenarioProbabilities>(m, "ScenarioProbabilities")
      .def(py::init<>())
      .def_readwrite("p_discard", &ScenarioProbabilities::p_discard)
      .def_readwrite("p_relabel", &ScenarioProbabilities::p_relabel)
      .def_readwrite("p_new", &ScenarioProbabilities::p_new);

  py::class_<CountDeltas>(m, "CountDeltas")
      .def(py::init<>())
      .def_readwrite("d_f", &CountDeltas::d_f)
      .def_readwrite("d_plus", &CountDeltas::d_plus)
      .def_readwrite("d_minus", &CountDeltas::d_minus)
      .def_readwrite("d_rumor", &CountDeltas::d_rumor);

  py::class_<StateDelta>(m, "StateDelta")
      .def(py::init<>())
      .def_readwrite("dk", &StateDelta::dk)
      .def_readwrite("dc", &StateDelta::dc)
      .def_readwrite("dp", &StateDelta::dp)
      .def_readwrite("counts", &StateDelta::counts);

  py::class_<TransmissionEffects>(m, "TransmissionEffects")
      .def(py::init<>())
      .def_readwrite("g", &TransmissionEffects::g)
      .def_readwrite("sender", &TransmissionEffects::sender)
      .def_readwrite("receiver", &TransmissionEffects::receiver);

  py::enum_<SenderAction>(m, "SenderAction")
      .value("Forward", SenderAction::Forward)
      .value("Hold", SenderAction::Hold);

  py::enum_<ReceiverAction>(m, "ReceiverAction")
      .value("Feedback", ReceiverAction::Feedback)
      .value("NoFeedback", ReceiverAction::NoFeedback);

  py::class_<PayoffMatrix>(m, "PayoffMatrix")
      .def(py::init<>())
      .def_readwrite("u_s_forward_feedback", &PayoffMatrix::u_s_forward_feedback)
      .def_readwrite("u_r_forward_feedback", &PayoffMatrix::u_r_forward_feedback)
      .def_readwrite("u_s_forward_nofeedback",
                     &PayoffMatrix::u_s_forward_nofeedback)
      .def_readwrite("u_r_forward_nofeedback",
                     &PayoffMatrix::u_r_forward_nofeedback)
      .def_readwrite("u_s_hold", &PayoffMatrix::u_s_hold)
      .def_readwrite("u_r_hold", &PayoffMatrix::u_r_hold)
      .def_readwrite("dk_s", &PayoffMatrix::dk_s)
      .def_readwrite("dc_s", &PayoffMatrix::dc_s)
      .def_readwrite("dp_s", &PayoffMatrix::dp_s)
      .def_readwrite("dk_r", &PayoffMatrix::dk_r)
      .def_readwrite("dc_r", &PayoffMatrix::dc_r)
      .def_readwrite("g", &PayoffMatrix::g);

  py::class_<EquilibriumProfile>(m, "EquilibriumProfile")
      .def_readonly("sender_action", &EquilibriumProfile::sender_action)
      .def_readonly("receiver_action", &EquilibriumProfile::receiver_action)
      .def_readonly("selected_by_tiebreak",
                    &EquilibriumProfile::selected_by_tiebreak)
      .def_property_readonly(
          "equilibrium_set", [](const EquilibriumProfile& profile) {
            std::vector<std::pair<int, int>> cells;
            for (const GameCell& cell : profile.equilibrium_set)
              cells.emplace_back(cell.sender, cell.receiver);
            return cells;
          });

  py::class_<PersonaGroup>(m, "PersonaGroup")
      .def(py::init([](double fraction, double kappa, double sigma, double pi,
                       std::string name) {
             return PersonaGroup{fraction, Personality{kappa, sigma, pi},
                                 std::move(name)};
           }),
           py::arg("fraction") = 1.0, py::arg("kappa") = 0.0,
           py::arg("sigma") = 0.0, py::arg("pi") = 0.0,
           py::arg("name") = std::string())
      .def_readwrite("fraction", &PersonaGroup::fraction)
      .def_readwrite("personality", &PersonaGroup::personality)
      .def_readwrite("name", &PersonaGroup::name);

  py::class_<KnowledgeGroup>(m, "KnowledgeGroup")
      .def(py::init([](double fraction, double k) {
             return KnowledgeGroup{fraction, k};
           }),
           py::arg("fraction") = 1.0, py::arg("k") = 0.5)
      .def_readwrite("fraction", &KnowledgeGroup::fraction)
      .def_readwrite("k", &KnowledgeGroup::k);

  py::class_<SimulationConfig>(m, "SimulationConfig")
      .def(py::init<>())
      .def_readwrite("actor_count", &SimulationConfig::actor_count)
      .def_readwrite("params", &SimulationConfig::params)
      .def_readwrite("personas", &SimulationConfig::personas)
      .def_readwrite("initial_k_groups", &SimulationConfig::initial_k_groups)
      .def_readwrite("steps_per_actor", &SimulationConfig::steps_per_actor)
      .def_readwrite("sample_interval", &SimulationConfig::sample_interval)
      .def_readwrite("snapshot_times", &SimulationConfig::snapshot_times)
      .def_readwrite("seed", &SimulationConfig::seed)
      .def_property(
          "edge_list_path",
          [](const SimulationConfig& config) -> std::optional<std::string> {
            if (const auto* edges =
                    std::get_if<EdgeListTopology>(&config.topology))
              return edges->path;
            return std::nullopt;
          },
          [](SimulationConfig& config, std::optional<std::string> path) {
            if (path)
              config.topology = EdgeListTopology{std::move(*path)};
            else
              config.topology = CompleteTopology{};
          });

  py::class_<Actor>(m, "Actor")
      .def_readonly("state", &Actor::state)
      .def_readonly("personality", &Actor::personality)
      .def_readonly("persona", &Actor::persona)
      .def_readonly("initial_k", &Actor::initial_k);

  py::class_<TransmissionRecord>(m, "TransmissionRecord")
      .def_readonly("step", &TransmissionRecord::step)
      .def_readonly("sim_time", &TransmissionRecord::sim_time)
      .def_readonly("sender_id", &TransmissionRecord::sender_id)
      .def_readonly("receiver_id", &TransmissionRecord::receiver_id)
      .def_readonly("profile", &TransmissionRecord::profile)
      .def_readonly("sender_empty", &TransmissionRecord::sender_empty)
      .def_readonly("matrix", &TransmissionRecord::matrix);

  py::class_<World>(m, "World")
      .def(py::init<const SimulationConfig&>(), py::arg("config"))
      .def("step", &World::step)
      .def("actors", &World::actors)
      .def("steps_taken", &World::steps_taken)
      .def("sim_time", &World::sim_time)
      .def("clamp_events", &World::clamp_events)
      .def("init_fallbacks", &World::init_fallbacks);

  py::class_<SimulationSummary>(m, "SimulationSummary")
      .def_readonly("steps", &SimulationSummary::steps)
      .def_readonly("clamp_events", &SimulationSummary::clamp_events)
      .def_readonly("clamped_fields", &SimulationSummary::clamped_fields)
      .def_readonly("init_fallbacks", &SimulationSummary::init_fallbacks);

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("world", &RunResult::world)
      .def_readonly("summary", &RunResult::summary);

  py::class_<QualityRecord>(m, "QualityRecord")
      .def_readonly("sim_time", &QualityRecord::sim_time)
      .def_readonly("mean_k", &QualityRecord::mean_k)
      .def_readonly("mean_f_plus", &QualityRecord::mean_f_plus)
      .def_readonly("mean_f_minus", &QualityRecord::mean_f_minus)
      .def_readonly("mean_c", &QualityRecord::mean_c)
      .def_readonly("mean_p", &QualityRecord::mean_p);

  py::class_<HistogramRecord>(m, "HistogramRecord")
      .def_readonly("sim_time", &HistogramRecord::sim_time)
      .def_readonly("bin_lo", &HistogramRecord::bin_lo)
      .def_readonly("bin_hi", &HistogramRecord::bin_hi)
      .def_readonly("count", &HistogramRecord::count);

  py::class_<SnapshotRecord>(m, "SnapshotRecord")
      .def_readonly("sim_time", &SnapshotRecord::sim_time)
      .def_readonly("actor_id", &SnapshotRecord::actor_id)
      .def_readonly("persona", &SnapshotRecord::persona)
      .def_readonly("k", &SnapshotRecord::k)
      .def_readonly("c", &SnapshotRecord::c)
      .def_readonly("p", &SnapshotRecord::p)
      .def_readonly("f", &SnapshotRecord::f)
      .def_readonly("f_plus", &SnapshotRecord::f_plus)
      .def_readonly("f_minus", &SnapshotRecord::f_minus)
      .def_readonly("f_rumor", &SnapshotRecord::f_rumor)
      .def_readonly("initial_k", &SnapshotRecord::initial_k);

  m.def(
      "validate",
      [](const GlobalParams& params,
         const std::vector<Personality>& personas) {
        return validate(params, personas);
      },
      py::arg("params"), py::arg("personas") = std::vector<Personality>{});
  m.def("normalize", &normalize, py::arg("state"), py::arg("params"));
  m.def(
      "clamp",
      [](const ActorState& state, const GlobalParams& params) {
        return clamp(state, params);
      },
      py::arg("state"), py::arg("params"),
      "Returns (clamped_state, ClampReport).");

  m.def("assess_opinion", &assess_opinion, py::arg("receiver_knowledge"),
        py::arg("sender_reputation"), py::arg("sender_labels"),
        py::arg("phi"));
  m.def("opinion_agreement", &opinion_agreement, py::arg("receiver"),
        py::arg("g"));
  m.def("scenario_probabilities", &scenario_probabilities, py::arg("receiver"),
        py::arg("g"));

  m.def("receiver_knowledge_delta", &receiver_knowledge_delta,
        py::arg("receiver"), py::arg("g"), py::arg("rumor_discount"));
  m.def("receiver_knowledge_delta_known", &receiver_knowledge_delta_known,
        py::arg("receiver"), py::arg("g"), py::arg("rumor_discount"));
  m.def("sender_knowledge_delta", &sender_knowledge_delta,
        py::arg("receiver_reputation"), py::arg("sender_labels"), py::arg("g"),
        py::arg("rumor_discount"));
  m.def("sender_popularity_premium", &sender_popularity_premium,
        py::arg("receiver"), py::arg("g"));
  m.def("receiver_reputation_delta", &receiver_reputation_delta,
        py::arg("receiver_knowledge"), py::arg("sender_reputation"),
        py::arg("sender_labels"), py::arg("phi"));
  m.def("sender_reputation_delta", &sender_reputation_delta,
        py::arg("receiver_reputation"), py::arg("sender_labels"),
        py::arg("g"));
  m.def("receiver_count_deltas", &receiver_count_deltas, py::arg("receiver"),
        py::arg("g"));
  m.def("sender_count_deltas", &sender_count_deltas,
        py::arg("receiver_reputation"), py::arg("sender_labels"),
        py::arg("g"));
  m.def("evaluate_transmission", &evaluate_transmission, py::arg("sender"),
        py::arg("receiver"), py::arg("params"));

  m.def("assemble_payoff_matrix", &assemble_payoff_matrix, py::arg("effects"),
        py::arg("sender"), py::arg("receiver"), py::arg("delta"));
  m.def("build_payoff_matrix", &build_payoff_matrix, py::arg("sender_state"),
        py::arg("sender_personality"), py::arg("receiver_state"),
        py::arg("receiver_personality"), py::arg("params"));
  m.def(
      "enumerate_pure_equilibria",
      [](const PayoffMatrix& matrix) {
        std::vector<std::pair<int, int>> cells;
        for (const GameCell& cell : enumerate_pure_equilibria(matrix))
          cells.emplace_back(cell.sender, cell.receiver);
        return cells;
      },
      py::arg("matrix"),
      "Cells as (sender, receiver) pairs, 0 = act, 1 = abstain.");
  m.def("solve_equilibrium", &solve_equilibrium, py::arg("matrix"));

  m.def("preset_config", &preset_config, py::arg("name"));
  m.def("preset_names", &preset_names);
  m.def("validate_config", &validate_config, py::arg("config"));

  m.def(
      "run", [](const SimulationConfig& config) { return run(config); },
      py::arg("config"));
  m.def(
      "run_timeseries",
      [](const SimulationConfig& config) {
        std::vector<QualityRecord> series;
        RunObservers observers;
        observers.on_sample = [&series](const World& world, long long) {
          series.push_back(quality_summary(world));
        };
        run(config, observers);
        return series;
      },
      py::arg("config"),
      "Runs the simulation and returns the sampled population means.");

  m.def(
      "quality_summary",
      [](const World& world) { return quality_summary(world); },
      py::arg("world"));
  m.def(
      "knowledge_histogram",
      [](const World& world, int bins) {
        return knowledge_histogram(world, bins);
      },
      py::arg("world"), py::arg("bins") = 50);
  m.def(
      "snapshot_records",
      [](const World& world) { return snapshot_records(world); },
      py::arg("world"));
  m.def(
      "pearson",
      [](const std::vector<double>& x, const std::vector<double>& y) {
        return pearson(x, y);
      },
      py::arg("x"), py::arg("y"),
      "Sample correlation; None when either side has zero variance.");
  m.def("format_g9", &format_g9, py::arg("value"));
}
