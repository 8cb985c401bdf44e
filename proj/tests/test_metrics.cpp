#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include "gossipgame/metrics.hpp"

using namespace gossipgame;

namespace {

Actor make_actor(double f, double plus, double minus, double rumor,
                 double rep, double pop, int persona = 0,
                 double initial_k = 0.0) {
  Actor actor;
  actor.state = {f, plus, minus, rumor, rep, pop};
  actor.persona = persona;
  actor.initial_k = initial_k;
  return actor;
}

SimulationConfig tiny_config() {
  SimulationConfig config;
  config.actor_count = 10;
  config.personas = {{1.0, Personality{0.25, 0.25, 0.5}, "base"}};
  config.initial_k_groups = {{1.0, 0.3}};
  config.steps_per_actor = 1.0;
  config.seed = 3;
  return config;
}

}  // namespace

TEST_CASE("format_g9 prints round-trippable compact numbers") {
  CHECK(format_g9(800.0) == "800");
  CHECK(format_g9(0.5) == "0.5");
  CHECK(format_g9(0.0) == "0");
  CHECK(format_g9(0.1) == "0.1");
  CHECK(format_g9(-0.035) == "-0.035");
  CHECK(format_g9(1.0 / 3.0) == "0.333333333");
  CHECK(format_g9(1e20) == "1e+20");
  CHECK(format_g9(2000.0) == "2000");
}

TEST_CASE("pearson matches a hand-computed correlation") {
  const std::vector<double> x{1.0, 2.0, 3.0};
  const std::vector<double> y{1.0, 2.0, 4.0};
  const auto r = pearson(x, y);
  REQUIRE(r.has_value());
  CHECK(*r == doctest::Approx(0.981980506061966).epsilon(1e-12));
}

TEST_CASE("perfectly linear data clamps to exactly plus or minus one") {
  // Zero means and square variances keep every intermediate step exact.
  const std::vector<double> x{-1.0, -1.0, 1.0, 1.0};
  const std::vector<double> up{-2.0, -2.0, 2.0, 2.0};
  const std::vector<double> down{3.0, 3.0, -3.0, -3.0};
  CHECK(*pearson(x, up) == 1.0);
  CHECK(*pearson(x, down) == -1.0);
}

TEST_CASE("zero variance yields no correlation value") {
  const std::vector<double> flat{2.0, 2.0, 2.0};
  const std::vector<double> y{1.0, 2.0, 3.0};
  CHECK_FALSE(pearson(flat, y).has_value());
  CHECK_FALSE(pearson(y, flat).has_value());
}

TEST_CASE("pearson rejects mismatched or degenerate inputs") {
  const std::vector<double> x{1.0, 2.0};
  const std::vector<double> y{1.0, 2.0, 3.0};
  const std::vector<double> single{1.0};
  CHECK_THROWS_AS(pearson(x, y), std::invalid_argument);
  CHECK_THROWS_AS(pearson(single, single), std::invalid_argument);
}

TEST_CASE("pearson is symmetric and stable under exact rescaling") {
  const std::vector<double> x{0.31, 1.7, 2.9, 0.02, 1.1};
  const std::vector<double> y{1.4, 0.6, 2.2, 0.9, 2.0};
  CHECK(*pearson(x, y) == *pearson(y, x));

  std::vector<double> doubled = y;
  for (double& v : doubled) v *= 2.0;
  CHECK(*pearson(x, doubled) == *pearson(x, y));

  std::vector<double> shifted = x;
  for (double& v : shifted) v += 0.37;
  CHECK(*pearson(shifted, y) ==
        doctest::Approx(*pearson(x, y)).epsilon(1e-12));
}

TEST_CASE("quality_summary averages the normalized views") {
  const GlobalParams params;
  const std::vector<Actor> actors{
      make_actor(1000.0, 600.0, 200.0, 200.0, 1000.0, 500.0),
      make_actor(0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
  };
  const QualityRecord record = quality_summary(actors, params, 3.5);
  CHECK(record.sim_time == 3.5);
  CHECK(record.mean_k == 0.225);
  CHECK(record.mean_f_plus == 0.3);
  CHECK(record.mean_f_minus == 0.1);
  CHECK(record.mean_c == 0.25);
  CHECK(record.mean_p == 0.125);
}

TEST_CASE("an empty population summarizes to zeros") {
  const QualityRecord record = quality_summary({}, GlobalParams{}, 1.0);
  CHECK(record.sim_time == 1.0);
  CHECK(record.mean_k == 0.0);
  CHECK(record.mean_p == 0.0);
}

TEST_CASE("the world overloads mirror the span overloads") {
  const World world{tiny_config()};
  const QualityRecord direct = quality_summary(
      world.actors(), world.config().params, world.sim_time());
  const QualityRecord via_world = quality_summary(world);
  CHECK(via_world.mean_k == direct.mean_k);
  CHECK(via_world.mean_c == direct.mean_c);
  CHECK(via_world.sim_time == direct.sim_time);

  const auto hist_direct = knowledge_histogram(
      world.actors(), world.config().params, world.sim_time(), 10);
  const auto hist_world = knowledge_histogram(world, 10);
  REQUIRE(hist_world.size() == hist_direct.size());
  for (std::size_t i = 0; i < hist_world.size(); ++i)
    CHECK(hist_world[i].count == hist_direct[i].count);

  const auto snap = snapshot_records(world);
  REQUIRE(snap.size() == world.actors().size());
  CHECK(snap[0].persona == "base");
}

TEST_CASE("knowledge histogram bins exact levels where they belong") {
  const GlobalParams params;
  const std::vector<Actor> actors{
      make_actor(250.0, 100.0, 50.0, 100.0, 0.0, 0.0),    // k = 0.1
      make_actor(2000.0, 2000.0, 0.0, 0.0, 0.0, 0.0),     // k = 1
      make_actor(0.0, 0.0, 0.0, 0.0, 0.0, 0.0),           // k = 0
  };
  const auto hist = knowledge_histogram(actors, params, 2.0, 10);
  REQUIRE(hist.size() == 10);
  CHECK(hist[0].count == 1);
  CHECK(hist[1].count == 1);
  CHECK(hist[9].count == 1);  // the last bin is closed on the right
  std::uint64_t total = 0;
  for (const HistogramRecord& bin : hist) {
    total += bin.count;
    CHECK(bin.sim_time == 2.0);
  }
  CHECK(total == actors.size());
  CHECK(hist[0].bin_lo == 0.0);
  CHECK(hist[3].bin_lo == 0.3);
  CHECK(hist[9].bin_hi == 1.0);
}

TEST_CASE("histogram validation and empty populations") {
  CHECK_THROWS_AS(knowledge_histogram({}, GlobalParams{}, 0.0, 0),
                  std::invalid_argument);
  const auto hist = knowledge_histogram({}, GlobalParams{}, 0.0, 4);
  REQUIRE(hist.size() == 4);
  for (const HistogramRecord& bin : hist) CHECK(bin.count == 0);
}

TEST_CASE("snapshot records name personas and keep starting knowledge") {
  const GlobalParams params;
  const std::vector<Actor> actors{
      make_actor(1000.0, 600.0, 200.0, 200.0, 1000.0, 500.0, 0, 0.45),
      make_actor(0.0, 0.0, 0.0, 0.0, 500.0, 0.0, 1, 0.0),
      make_actor(0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 5, 0.0),
  };
  const std::vector<std::string> names{"experts", "trolls"};
  const auto records = snapshot_records(actors, params, names, 800.0);
  REQUIRE(records.size() == 3);
  CHECK(records[0].actor_id == 0);
  CHECK(records[0].persona == "experts");
  CHECK(records[0].k == 0.45);
  CHECK(records[0].c == 0.5);
  CHECK(records[0].p == 0.25);
  CHECK(records[0].f == 0.5);
  CHECK(records[0].f_plus == 0.6);
  CHECK(records[0].initial_k == 0.45);
  CHECK(records[1].persona == "trolls");
  CHECK(records[1].c == 0.25);
  CHECK(records[2].persona.empty());  // unnamed persona index
  CHECK(records[2].sim_time == 800.0);
}

TEST_CASE("timeseries CSV matches the golden bytes") {
  QualityRecord record;
  record.sim_time = 800.0;
  record.mean_k = 0.5;
  record.mean_f_plus = 0.25;
  record.mean_f_minus = 0.125;
  record.mean_c = 1.0;
  record.mean_p = 0.0;
  std::ostringstream out;
  const std::size_t bytes =
      write_timeseries(out, std::vector<QualityRecord>{record});
  const std::string expected =
      "sim_time,mean_k,mean_f_plus,mean_f_minus,mean_c,mean_p\n"
      "800,0.5,0.25,0.125,1,0\n";
  CHECK(out.str() == expected);
  CHECK(bytes == expected.size());
}

TEST_CASE("histogram CSV matches the golden bytes") {
  HistogramRecord bin;
  bin.sim_time = 0.5;
  bin.bin_lo = 0.1;
  bin.bin_hi = 0.2;
  bin.count = 42;
  std::ostringstream out;
  const std::size_t bytes =
      write_histograms(out, std::vector<HistogramRecord>{bin});
  const std::string expected =
      "sim_time,bin_lo,bin_hi,count\n"
      "0.5,0.1,0.2,42\n";
  CHECK(out.str() == expected);
  CHECK(bytes == expected.size());
}

TEST_CASE("snapshot CSV quotes persona names that carry metacharacters") {
  SnapshotRecord plain;
  plain.sim_time = 800.0;
  plain.actor_id = 7;
  plain.persona = "base";
  plain.k = 0.5;
  plain.c = 0.25;
  plain.p = 0.0;
  plain.f = 0.75;
  plain.f_plus = 0.5;
  plain.f_minus = 0.25;
  plain.f_rumor = 0.25;
  plain.initial_k = 0.5;
  SnapshotRecord tricky = plain;
  tricky.actor_id = 8;
  tricky.persona = "say \"hi\", loudly";
  std::ostringstream out;
  const std::size_t bytes =
      write_snapshot(out, std::vector<SnapshotRecord>{plain, tricky});
  const std::string expected =
      "sim_time,actor_id,persona,k,c,p,f,f_plus,f_minus,f_rumor,initial_k\n"
      "800,7,base,0.5,0.25,0,0.75,0.5,0.25,0.25,0.5\n"
      "800,8,\"say \"\"hi\"\", loudly\",0.5,0.25,0,0.75,0.5,0.25,0.25,0.5\n";
  CHECK(out.str() == expected);
  CHECK(bytes == expected.size());
}

TEST_CASE("an empty record list still writes the header") {
  std::ostringstream out;
  write_timeseries(out, {});
  CHECK(out.str() == "sim_time,mean_k,mean_f_plus,mean_f_minus,mean_c,mean_p\n");
}
