#include "gossipgame/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace gossipgame {
namespace {

// Persona names with CSV metacharacters are quoted per RFC 4180.
std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (const char ch : raw) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

std::size_t emit(std::ostream& out, const std::string& text,
                 const char* what) {
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out)
    throw std::runtime_error(std::string(what) + ": write failed");
  return text.size();
}

}  // namespace

QualityRecord quality_summary(std::span<const Actor> actors,
                              const GlobalParams& params, double sim_time) {
  QualityRecord record;
  record.sim_time = sim_time;
  if (actors.empty()) return record;
  for (const Actor& actor : actors) {
    const NormalizedView view = normalize(actor.state, params);
    record.mean_k += view.k;
    record.mean_f_plus += view.f_plus;
    record.mean_f_minus += view.f_minus;
    record.mean_c += view.c;
    record.mean_p += view.p;
  }
  const double n = static_cast<double>(actors.size());
  record.mean_k /= n;
  record.mean_f_plus /= n;
  record.mean_f_minus /= n;
  record.mean_c /= n;
  record.mean_p /= n;
  return record;
}

QualityRecord quality_summary(const World& world) {
  return quality_summary(world.actors(), world.config().params,
                         world.sim_time());
}

std::vector<HistogramRecord> knowledge_histogram(std::span<const Actor> actors,
                                                 const GlobalParams& params,
                                                 double sim_time, int bins) {
  if (bins < 1) throw std::invalid_argument("knowledge_histogram: bins < 1");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(bins), 0);
  for (const Actor& actor : actors) {
    const double k = normalize(actor.state, params).k;
    long long bin = static_cast<long long>(k * bins);  // floor for k >= 0
    bin = std::clamp(bin, 0ll, static_cast<long long>(bins) - 1);
    ++counts[static_cast<std::size_t>(bin)];
  }
  std::vector<HistogramRecord> records;
  records.reserve(counts.size());
  for (int b = 0; b < bins; ++b) {
    HistogramRecord record;
    record.sim_time = sim_time;
    record.bin_lo = static_cast<double>(b) / bins;
    record.bin_hi = static_cast<double>(b + 1) / bins;
    record.count = counts[static_cast<std::size_t>(b)];
    records.push_back(record);
  }
  return records;
}

std::vector<HistogramRecord> knowledge_histogram(const World& world,
                                                 int bins) {
  return knowledge_histogram(world.actors(), world.config().params,
                             world.sim_time(), bins);
}

std::vector<SnapshotRecord> snapshot_records(
    std::span<const Actor> actors, const GlobalParams& params,
    std::span<const std::string> persona_names, double sim_time) {
  std::vector<SnapshotRecord> records;
  records.reserve(actors.size());
  for (std::size_t i = 0; i < actors.size(); ++i) {
    const Actor& actor = actors[i];
    const NormalizedView view = normalize(actor.state, params);
    SnapshotRecord record;
    record.sim_time = sim_time;
    record.actor_id = static_cast<int>(i);
    if (actor.persona >= 0 &&
        static_cast<std::size_t>(actor.persona) < persona_names.size())
      record.persona = persona_names[static_cast<std::size_t>(actor.persona)];
    record.k = view.k;
    record.c = view.c;
    record.p = view.p;
    record.f = view.f;
    record.f_plus = view.f_plus;
    record.f_minus = view.f_minus;
    record.f_rumor = view.f_rumor;
    record.initial_k = actor.initial_k;
    records.push_back(record);
  }
  return records;
}

std::vector<SnapshotRecord> snapshot_records(const World& world) {
  std::vector<std::string> names;
  names.reserve(world.config().personas.size());
  for (const PersonaGroup& group : world.config().personas)
    names.push_back(group.name);
  return snapshot_records(world.actors(), world.config().params, names,
                          world.sim_time());
}

std::optional<double> pearson(std::span<const double> x,
                              std::span<const double> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("pearson: sequence lengths differ");
  if (x.size() < 2)
    throw std::invalid_argument("pearson: need at least two points");
  const double n = static_cast<double>(x.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / (std::sqrt(sxx) * std::sqrt(syy)), -1.0, 1.0);
}

std::string format_g9(double value) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

std::size_t write_timeseries(std::ostream& out,
                             std::span<const QualityRecord> records) {
  std::string text = "sim_time,mean_k,mean_f_plus,mean_f_minus,mean_c,mean_p\n";
  for (const QualityRecord& r : records) {
    text += format_g9(r.sim_time);
    text += ',';
    text += format_g9(r.mean_k);
    text += ',';
    text += format_g9(r.mean_f_plus);
    text += ',';
    text += format_g9(r.mean_f_minus);
    text += ',';
    text += format_g9(r.mean_c);
    text += ',';
    text += format_g9(r.mean_p);
    text += '\n';
  }
  return emit(out, text, "write_timeseries");
}

std::size_t write_histograms(std::ostream& out,
                             std::span<const HistogramRecord> records) {
  std::string text = "sim_time,bin_lo,bin_hi,count\n";
  for (const HistogramRecord& r : records) {
    text += format_g9(r.sim_time);
    text += ',';
    text += format_g9(r.bin_lo);
    text += ',';
    text += format_g9(r.bin_hi);
    text += ',';
    text += std::to_string(r.count);
    text += '\n';
  }
  return emit(out, text, "write_histograms");
}

std::size_t write_snapshot(std::ostream& out,
                           std::span<const SnapshotRecord> records) {
  std::string text =
      "sim_time,actor_id,persona,k,c,p,f,f_plus,f_minus,f_rumor,initial_k\n";
  for (const SnapshotRecord& r : records) {
    text += format_g9(r.sim_time);
    text += ',';
    text += std::to_string(r.actor_id);
    text += ',';
    text += csv_field(r.persona);
    text += ',';
    text += format_g9(r.k);
    text += ',';
    text += format_g9(r.c);
    text += ',';
    text += format_g9(r.p);
    text += ',';
    text += format_g9(r.f);
    text += ',';
    text += format_g9(r.f_plus);
    text += ',';
    text += format_g9(r.f_minus);
    text += ',';
    text += format_g9(r.f_rumor);
    text += ',';
    text += format_g9(r.initial_k);
    text += '\n';
  }
  return emit(out, text, "write_snapshot");
}

}  // namespace gossipgame
