#include "gossipgame/engine.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gossipgame/dynamics.hpp"

namespace gossipgame {
namespace {

std::string fmt(double value) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& part : parts) {
    if (!out.empty()) out += sep;
    out += part;
  }
  return out;
}

// Exact-proportion head counts: floor everyone, then hand out the remaining
// slots by largest fractional part (ties to the lower index).
std::vector<int> proportional_counts(const std::vector<double>& fractions,
                                     int total) {
  const std::size_t n = fractions.size();
  std::vector<int> counts(n);
  std::vector<std::pair<double, std::size_t>> remainders(n);
  long long assigned = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double exact = fractions[i] * total;
    counts[i] = static_cast<int>(std::floor(exact));
    remainders[i] = {exact - std::floor(exact), i};
    assigned += counts[i];
  }
  std::sort(remainders.begin(), remainders.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first > b.first;
              return a.second < b.second;
            });
  for (long long r = 0; assigned < total; ++r, ++assigned)
    ++counts[remainders[static_cast<std::size_t>(r) % n].second];
  return counts;
}

}  // namespace

std::vector<std::string> validate_config(const SimulationConfig& config) {
  std::vector<Personality> personalities;
  personalities.reserve(config.personas.size());
  for (const PersonaGroup& group : config.personas)
    personalities.push_back(group.personality);
  std::vector<std::string> errors = validate(config.params, personalities);

  if (config.actor_count < 2)
    errors.push_back("actor_count=" + std::to_string(config.actor_count) +
                     " below 2");
  if (config.personas.empty()) errors.push_back("personas: empty");
  if (config.initial_k_groups.empty())
    errors.push_back("initial_k_groups: empty");

  double persona_sum = 0.0;
  for (std::size_t i = 0; i < config.personas.size(); ++i) {
    const double f = config.personas[i].fraction;
    if (f < 0.0)
      errors.push_back("persona[" + std::to_string(i) + "] fraction=" +
                       fmt(f) + " below 0");
    persona_sum += f;
  }
  if (!config.personas.empty() && std::abs(persona_sum - 1.0) > 1e-9)
    errors.push_back("persona fractions sum to " + fmt(persona_sum) +
                     " != 1");

  double k_sum = 0.0;
  for (std::size_t i = 0; i < config.initial_k_groups.size(); ++i) {
    const KnowledgeGroup& group = config.initial_k_groups[i];
    if (group.fraction < 0.0)
      errors.push_back("initial_k_groups[" + std::to_string(i) +
                       "] fraction=" + fmt(group.fraction) + " below 0");
    if (group.k < 0.0 || group.k > 1.0)
      errors.push_back("initial_k_groups[" + std::to_string(i) + "] k=" +
                       fmt(group.k) + " outside [0,1]");
    k_sum += group.fraction;
  }
  if (!config.initial_k_groups.empty() && std::abs(k_sum - 1.0) > 1e-9)
    errors.push_back("initial_k_group fractions sum to " + fmt(k_sum) +
                     " != 1");

  if (config.steps_per_actor < 0.0)
    errors.push_back("steps_per_actor=" + fmt(config.steps_per_actor) +
                     " below 0");
  if (!(config.sample_interval > 0.0))
    errors.push_back("sample_interval=" + fmt(config.sample_interval) +
                     " not positive");
  for (std::size_t i = 0; i < config.snapshot_times.size(); ++i)
    if (config.snapshot_times[i] < 0.0)
      errors.push_back("snapshot_times[" + std::to_string(i) + "]=" +
                       fmt(config.snapshot_times[i]) + " below 0");
  if (const auto* edge_list = std::get_if<EdgeListTopology>(&config.topology))
    if (edge_list->path.empty())
      errors.push_back("topology: edge_list path is empty");
  return errors;
}

std::vector<std::pair<int, int>> load_edge_list(const std::string& path,
                                                int actor_count) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("edge list: cannot open '" + path + "'");
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = "edge list " + path + ":" +
                              std::to_string(line_no);
    const std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    long long a = 0;
    long long b = 0;
    if (!(fields >> a >> b))
      throw std::invalid_argument(where + ": expected 'i j'");
    std::string extra;
    if (fields >> extra)
      throw std::invalid_argument(where + ": trailing content '" + extra +
                                  "'");
    if (a == b)
      throw std::invalid_argument(where + ": self-loop on actor " +
                                  std::to_string(a));
    if (a < 0 || b < 0 || a >= actor_count || b >= actor_count)
      throw std::invalid_argument(where + ": actor id out of range [0," +
                                  std::to_string(actor_count - 1) + "]");
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    edges.emplace_back(static_cast<int>(b), static_cast<int>(a));
  }
  if (edges.empty())
    throw std::invalid_argument("edge list: '" + path + "' declares no edges");
  return edges;
}

World::World(const SimulationConfig& config)
    : config_(config), pair_rng_(config.seed, SplitRng::kPairStream) {
  const std::vector<std::string> errors = validate_config(config_);
  if (!errors.empty())
    throw std::invalid_argument("invalid config: " + join(errors, "; "));
  if (const auto* edge_list = std::get_if<EdgeListTopology>(&config_.topology))
    edges_ = load_edge_list(edge_list->path, config_.actor_count);
  SplitRng init_rng(config_.seed, SplitRng::kInitStream);
  init_population(init_rng);
}

void World::init_population(SplitRng& rng) {
  const int n = config_.actor_count;
  const double big_n = config_.params.big_n;
  const double lambda = config_.params.rumor_discount;

  std::vector<double> persona_fractions;
  for (const PersonaGroup& group : config_.personas)
    persona_fractions.push_back(group.fraction);
  std::vector<double> k_fractions;
  for (const KnowledgeGroup& group : config_.initial_k_groups)
    k_fractions.push_back(group.fraction);

  std::vector<int> persona_of(n);
  {
    const std::vector<int> counts = proportional_counts(persona_fractions, n);
    int at = 0;
    for (std::size_t g = 0; g < counts.size(); ++g)
      for (int i = 0; i < counts[g]; ++i) persona_of[at++] = static_cast<int>(g);
  }
  rng.shuffle(persona_of);

  std::vector<double> k_of(n);
  {
    const std::vector<int> counts = proportional_counts(k_fractions, n);
    int at = 0;
    for (std::size_t g = 0; g < counts.size(); ++g)
      for (int i = 0; i < counts[g]; ++i)
        k_of[at++] = config_.initial_k_groups[g].k;
  }
  rng.shuffle(k_of);

  actors_.reserve(n);
  for (int i = 0; i < n; ++i) {
    Actor actor;
    actor.persona = persona_of[i];
    actor.personality = config_.personas[actor.persona].personality;
    const double k_target = k_of[i];

    double f_plus = 0.0;
    double f_minus = 0.0;
    bool feasible = false;
    for (int attempt = 0; attempt < 1000 && !feasible; ++attempt) {
      f_plus = rng.uniform01();
      f_minus = rng.uniform01() * 0.5;
      feasible = f_plus + f_minus <= 1.0 &&
                 k_target <= f_plus + f_minus +
                                 lambda * (1.0 - f_plus - f_minus);
    }
    const double r = rng.uniform01();
    const double p = rng.uniform01();

    ActorState state;
    if (feasible) {
      const double denom = f_plus + f_minus + lambda * (1.0 - f_plus - f_minus);
      const double f_total = (k_target <= 0.0 || denom <= 0.0)
                                 ? 0.0
                                 : std::min(k_target * big_n / denom, big_n);
      state.f_count = f_total;
      state.f_plus_count = f_plus * f_total;
      state.f_minus_count = f_minus * f_total;
      state.f_rumor_count =
          std::max(0.0, f_total - state.f_plus_count - state.f_minus_count);
    } else {
      // feasibility exhausted: fill the store and keep the drawn label
      // proportions, squeezing them onto the simplex if they overflow it
      const double scale = std::max(1.0, f_plus + f_minus);
      state.f_count = big_n;
      state.f_plus_count = f_plus / scale * big_n;
      state.f_minus_count = f_minus / scale * big_n;
      state.f_rumor_count =
          std::max(0.0, big_n - state.f_plus_count - state.f_minus_count);
      ++init_fallbacks_;
    }
    state.reputation = r * big_n;
    state.popularity = p * big_n;
    actor.state = state;
    actor.initial_k = normalize(state, config_.params).k;
    actors_.push_back(actor);
  }
}

std::pair<int, int> World::pick_pair(SplitRng& rng) const {
  if (edges_.empty()) {
    const int n = config_.actor_count;
    const int sender = static_cast<int>(rng.below(n));
    int receiver = static_cast<int>(rng.below(n - 1));
    if (receiver >= sender) ++receiver;
    return {sender, receiver};
  }
  return edges_[rng.below(edges_.size())];
}

TransmissionRecord World::step() {
  const auto [sender_id, receiver_id] = pick_pair(pair_rng_);
  Actor& sender = actors_[sender_id];
  Actor& receiver = actors_[receiver_id];
  const GlobalParams& params = config_.params;

  ++steps_taken_;
  TransmissionRecord record;
  record.step = steps_taken_;
  record.sim_time = static_cast<double>(steps_taken_) / config_.actor_count;
  record.sender_id = sender_id;
  record.receiver_id = receiver_id;

  if (sender.state.f_count <= 0.0) {
    // nothing to share: no game, both visibilities decay
    record.sender_empty = true;
    record.profile.sender_action = SenderAction::Hold;
    record.profile.receiver_action = ReceiverAction::NoFeedback;
    record.profile.equilibrium_set.size = 0;
    sender.state.popularity -= params.delta;
    receiver.state.popularity -= params.delta;
  } else {
    const NormalizedView sender_view = normalize(sender.state, params);
    const NormalizedView receiver_view = normalize(receiver.state, params);
    const TransmissionEffects fx =
        evaluate_transmission(sender_view, receiver_view, params);
    const PayoffMatrix matrix = assemble_payoff_matrix(
        fx, sender.personality, receiver.personality, params.delta);
    record.profile = solve_equilibrium(matrix);
    record.matrix = matrix;

    if (record.profile.sender_action == SenderAction::Forward) {
      // the receiver integrates the assertion whether or not it responds
      receiver.state.f_count += fx.receiver.counts.d_f;
      receiver.state.f_plus_count += fx.receiver.counts.d_plus;
      receiver.state.f_minus_count += fx.receiver.counts.d_minus;
      receiver.state.f_rumor_count += fx.receiver.counts.d_rumor;
      if (record.profile.receiver_action == ReceiverAction::Feedback) {
        sender.state.f_count += fx.sender.counts.d_f;  // identically zero
        sender.state.f_plus_count += fx.sender.counts.d_plus;
        sender.state.f_minus_count += fx.sender.counts.d_minus;
        sender.state.f_rumor_count += fx.sender.counts.d_rumor;
        sender.state.reputation += fx.sender.dc;
        sender.state.popularity += fx.sender.dp;
        receiver.state.reputation += fx.receiver.dc;
        receiver.state.popularity += fx.receiver.dp;
      } else {
        sender.state.popularity += fx.sender.dp;
        receiver.state.popularity -= params.delta;
      }
    } else {
      sender.state.popularity -= params.delta;
      receiver.state.popularity -= params.delta;
    }
  }

  const auto absorb = [this](const ClampTouch& touch) {
    clamp_events_ += touch.count;
    clamp_mask_ |= touch.mask;
  };
  absorb(clamp_in_place(sender.state, params));
  absorb(clamp_in_place(receiver.state, params));
  return record;
}

double World::sim_time() const {
  return static_cast<double>(steps_taken_) / config_.actor_count;
}

RunResult run(const SimulationConfig& config, const RunObservers& observers) {
  World world(config);
  const long long total_steps =
      std::llround(config.steps_per_actor * config.actor_count);
  const double steps_per_sample = config.sample_interval * config.actor_count;

  std::vector<long long> sample_steps{0};
  for (long long j = 1;;) {
    const long long step = std::llround(j * steps_per_sample);
    if (step > total_steps) break;
    if (step != sample_steps.back()) sample_steps.push_back(step);
    ++j;
    if (steps_per_sample < 1.0)  // skip j values that collapse onto this step
      j = std::max(j, static_cast<long long>(
                          std::ceil((step + 0.5) / steps_per_sample)));
  }
  if (sample_steps.back() != total_steps) sample_steps.push_back(total_steps);

  std::vector<std::pair<long long, double>> snapshots;
  for (const double t : config.snapshot_times) {
    const long long step = std::llround(t * config.actor_count);
    if (step >= 0 && step <= total_steps) snapshots.emplace_back(step, t);
  }
  std::stable_sort(snapshots.begin(), snapshots.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::size_t next_sample = 0;
  std::size_t next_snapshot = 0;
  const auto fire_observers = [&](long long step) {
    try {
      if (next_sample < sample_steps.size() &&
          sample_steps[next_sample] == step) {
        if (observers.on_sample) observers.on_sample(world, step);
        ++next_sample;
      }
      while (next_snapshot < snapshots.size() &&
             snapshots[next_snapshot].first == step) {
        if (observers.on_snapshot)
          observers.on_snapshot(world, snapshots[next_snapshot].second, step);
        ++next_snapshot;
      }
    } catch (const std::exception& e) {
      throw std::runtime_error("run: observer failed at step " +
                               std::to_string(step) + ": " + e.what());
    }
  };

  fire_observers(0);
  for (long long step = 1; step <= total_steps; ++step) {
    const TransmissionRecord record = world.step();
    if (observers.on_event) observers.on_event(record);
    fire_observers(step);
  }

  RunResult result{std::move(world), {}};
  result.summary.steps = total_steps;
  result.summary.clamp_events = result.world.clamp_events();
  result.summary.clamped_fields = clamp_field_names(result.world.clamp_mask());
  result.summary.init_fallbacks = result.world.init_fallbacks();
  return result;
}

}  // namespace gossipgame
