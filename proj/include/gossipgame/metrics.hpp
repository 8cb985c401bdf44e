#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "gossipgame/engine.hpp"

namespace gossipgame {

/// Population means at one sampled time.
struct QualityRecord {
  double sim_time = 0.0;
  double mean_k = 0.0;
  double mean_f_plus = 0.0;
  double mean_f_minus = 0.0;
  double mean_c = 0.0;
  double mean_p = 0.0;
};

/// One bin of a knowledge histogram at one sampled time.
struct HistogramRecord {
  double sim_time = 0.0;
  double bin_lo = 0.0;
  double bin_hi = 0.0;
  std::uint64_t count = 0;
};

/// Full per-actor dump at one snapshot time.
struct SnapshotRecord {
  double sim_time = 0.0;
  int actor_id = 0;
  std::string persona;
  double k = 0.0;
  double c = 0.0;
  double p = 0.0;
  double f = 0.0;
  double f_plus = 0.0;
  double f_minus = 0.0;
  double f_rumor = 0.0;
  double initial_k = 0.0;
};

QualityRecord quality_summary(std::span<const Actor> actors,
                              const GlobalParams& params, double sim_time);
QualityRecord quality_summary(const World& world);

/// Equal-width bins over [0, 1]; the last bin is closed on the right.
/// bins must be positive. An empty population yields all-zero counts.
std::vector<HistogramRecord> knowledge_histogram(std::span<const Actor> actors,
                                                 const GlobalParams& params,
                                                 double sim_time, int bins);
std::vector<HistogramRecord> knowledge_histogram(const World& world, int bins);

std::vector<SnapshotRecord> snapshot_records(std::span<const Actor> actors,
                                             const GlobalParams& params,
                                             std::span<const std::string> persona_names,
                                             double sim_time);
std::vector<SnapshotRecord> snapshot_records(const World& world);

/// Sample Pearson correlation. nullopt when either side has zero variance.
/// Throws std::invalid_argument on mismatched lengths or fewer than two
/// points.
std::optional<double> pearson(std::span<const double> x,
                              std::span<const double> y);

/// Shortest round-trip decimal form of a double ("general", up to 17
/// significant digits, capped at 9 here for CSV friendliness).
/// Locale-independent.
std::string format_g9(double value);

/// CSV writers: header always, LF line endings, format_g9 numbers.
/// Each returns the number of bytes written.
std::size_t write_timeseries(std::ostream& out,
                             std::span<const QualityRecord> records);
std::size_t write_histograms(std::ostream& out,
                             std::span<const HistogramRecord> records);
std::size_t write_snapshot(std::ostream& out,
                           std::span<const SnapshotRecord> records);

}  // namespace gossipgame
