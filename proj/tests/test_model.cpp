#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "gossipgame/model.hpp"

using namespace gossipgame;

namespace {

bool mentions(const std::vector<std::string>& messages, const char* needle) {
  return std::any_of(messages.begin(), messages.end(),
                     [&](const std::string& m) {
                       return m.find(needle) != std::string::npos;
                     });
}

ActorState random_state(std::mt19937_64& gen, double big_n,
                        bool allow_invalid) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ActorState state;
  if (allow_invalid) {
    std::uniform_real_distribution<double> wide(-0.5 * big_n, 1.5 * big_n);
    state.f_count = wide(gen);
    state.f_plus_count = wide(gen);
    state.f_minus_count = wide(gen);
    state.f_rumor_count = wide(gen);
    state.reputation = wide(gen);
    state.popularity = wide(gen);
    return state;
  }
  state.f_count = unit(gen) * big_n;
  const double a = unit(gen), b = unit(gen), c = unit(gen);
  const double sum = a + b + c;
  if (sum > 0.0) {
    state.f_plus_count = state.f_count * (a / sum);
    state.f_minus_count = state.f_count * (b / sum);
    state.f_rumor_count =
        state.f_count - state.f_plus_count - state.f_minus_count;
  }
  state.reputation = unit(gen) * big_n;
  state.popularity = unit(gen) * big_n;
  return state;
}

}  // namespace

TEST_CASE("validate accepts the defaults with a popularity-driven persona") {
  GlobalParams params;
  std::vector<Personality> personas{{0.1, 0.1, 0.8}};
  CHECK(validate(params, personas).empty());
}

TEST_CASE("validate reports a personality weight-sum violation") {
  GlobalParams params;
  std::vector<Personality> personas{{0.5, 0.5, 0.5}};
  const auto errors = validate(params, personas);
  REQUIRE(errors.size() == 1);
  CHECK(mentions(errors, "weights sum to 1.5"));
}

TEST_CASE("validate reports a lambda bound violation") {
  GlobalParams params;
  params.rumor_discount = -0.1;
  const auto errors = validate(params, {});
  REQUIRE(errors.size() == 1);
  CHECK(mentions(errors, "lambda"));
  CHECK(mentions(errors, "below"));
}

TEST_CASE("validate lists every violation at once") {
  GlobalParams params;
  params.phi = 1.5;
  params.delta = -1.0;
  params.big_n = 1.0;
  std::vector<Personality> personas{{0.2, 0.2, 0.2}};
  const auto errors = validate(params, personas);
  CHECK(errors.size() == 4);
  CHECK(mentions(errors, "phi"));
  CHECK(mentions(errors, "delta"));
  CHECK(mentions(errors, "big_n"));
  CHECK(mentions(errors, "weights sum to 0.6"));
}

TEST_CASE("normalize divides counts by the pool size") {
  GlobalParams params;
  ActorState state{1000.0, 600.0, 200.0, 200.0, 1000.0, 500.0};
  const NormalizedView view = normalize(state, params);
  CHECK(view.k == 0.45);
  CHECK(view.c == 0.5);
  CHECK(view.p == 0.25);
  CHECK(view.f == 0.5);
  CHECK(view.f_plus == 0.6);
  CHECK(view.f_minus == 0.2);
  CHECK(view.f_rumor == 0.2);
}

TEST_CASE("normalize maps an empty actor to all-zero fractions") {
  GlobalParams params;
  ActorState state;
  state.reputation = 700.0;
  const NormalizedView view = normalize(state, params);
  CHECK(view.k == 0.0);
  CHECK(view.f == 0.0);
  CHECK(view.f_plus == 0.0);
  CHECK(view.f_minus == 0.0);
  CHECK(view.f_rumor == 0.0);
  CHECK(view.c == 0.35);
}

TEST_CASE("normalize counts rumors fully when the discount is 1") {
  GlobalParams params;
  params.rumor_discount = 1.0;
  ActorState state;
  state.f_count = 800.0;
  state.f_rumor_count = 800.0;
  const NormalizedView view = normalize(state, params);
  CHECK(view.k == 0.4);
  CHECK(view.f == 0.4);
  CHECK(view.k == view.f);
}

TEST_CASE("self-perceived knowledge stays between discounted and full count") {
  std::mt19937_64 gen(11);
  GlobalParams params;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 20000; ++i) {
    params.rumor_discount = unit(gen);
    const ActorState state = random_state(gen, params.big_n, false);
    const NormalizedView view = normalize(state, params);
    const double scaled_f = state.f_count / params.big_n;
    CHECK(view.k >= params.rumor_discount * scaled_f - 1e-12);
    CHECK(view.k <= scaled_f + 1e-12);
    CHECK(view.f_plus + view.f_minus + view.f_rumor ==
          doctest::Approx(state.f_count > 0.0 ? 1.0 : 0.0).epsilon(1e-9));
  }
}

TEST_CASE("clamp clips popularity at the pool size") {
  GlobalParams params;
  ActorState state{100.0, 50.0, 25.0, 25.0, 10.0, params.big_n + 0.4};
  const auto [clamped, report] = clamp(state, params);
  CHECK(clamped.popularity == params.big_n);
  REQUIRE(report.clamped_fields.size() == 1);
  CHECK(report.clamped_fields[0] == "popularity");
  CHECK(report.count == 1);
}

TEST_CASE("clamp clips negative reputation at zero") {
  GlobalParams params;
  ActorState state{100.0, 50.0, 25.0, 25.0, -0.2, 10.0};
  const auto [clamped, report] = clamp(state, params);
  CHECK(clamped.reputation == 0.0);
  REQUIRE(report.clamped_fields.size() == 1);
  CHECK(report.clamped_fields[0] == "reputation");
}

TEST_CASE("clamp leaves an in-bounds state untouched") {
  GlobalParams params;
  const ActorState state{100.0, 50.0, 25.0, 25.0, 10.0, 10.0};
  const auto [clamped, report] = clamp(state, params);
  CHECK(clamped.f_count == state.f_count);
  CHECK(clamped.f_plus_count == state.f_plus_count);
  CHECK(clamped.f_minus_count == state.f_minus_count);
  CHECK(clamped.f_rumor_count == state.f_rumor_count);
  CHECK(clamped.reputation == state.reputation);
  CHECK(clamped.popularity == state.popularity);
  CHECK(report.clamped_fields.empty());
  CHECK(report.count == 0);
}

TEST_CASE("clamp rescales labels proportionally after clipping the total") {
  GlobalParams params;
  ActorState state{2500.0, 1500.0, 500.0, 500.0, 10.0, 10.0};
  const auto [clamped, report] = clamp(state, params);
  CHECK(clamped.f_count == 2000.0);
  CHECK(clamped.f_plus_count == 1200.0);
  CHECK(clamped.f_minus_count == 400.0);
  CHECK(clamped.f_rumor_count == 400.0);
  CHECK(mentions(report.clamped_fields, "f_count"));
  CHECK(mentions(report.clamped_fields, "f_plus_count"));
}

TEST_CASE("clamp restores the label-sum identity even without a clip") {
  GlobalParams params;
  ActorState state{500.0, 100.0, 100.0, 100.0, 10.0, 10.0};
  const auto [clamped, report] = clamp(state, params);
  CHECK(clamped.f_count == 500.0);
  const double sum = clamped.f_plus_count + clamped.f_minus_count +
                     clamped.f_rumor_count;
  CHECK(sum == doctest::Approx(500.0).epsilon(1e-12));
  CHECK(clamped.f_plus_count == doctest::Approx(500.0 / 3.0));
  CHECK(report.count == 3);
}

TEST_CASE("clamp rebuilds an all-zero label split as rumors") {
  GlobalParams params;
  ActorState state{5.0, -1.0, 0.0, 0.0, 10.0, 10.0};
  const auto [clamped, report] = clamp(state, params);
  CHECK(clamped.f_plus_count == 0.0);
  CHECK(clamped.f_minus_count == 0.0);
  CHECK(clamped.f_rumor_count == 5.0);
  CHECK(clamped.f_count == 5.0);
  CHECK(mentions(report.clamped_fields, "f_rumor_count"));
}

TEST_CASE("clamp_in_place mask matches the reported field names") {
  GlobalParams params;
  ActorState state{2500.0, 1500.0, 500.0, 500.0, -3.0, params.big_n + 9.0};
  ActorState copy = state;
  const ClampTouch touch = clamp_in_place(copy, params);
  const auto [clamped, report] = clamp(state, params);
  CHECK(clamp_field_names(touch.mask) == report.clamped_fields);
  CHECK(touch.count == report.count);
  CHECK(touch.count == static_cast<std::uint64_t>(
                           __builtin_popcount(touch.mask)));
  CHECK(copy.reputation == 0.0);
  CHECK(copy.popularity == params.big_n);
}

TEST_CASE("clamping twice changes nothing the second time") {
  std::mt19937_64 gen(17);
  GlobalParams params;
  for (int i = 0; i < 20000; ++i) {
    ActorState state = random_state(gen, params.big_n, true);
    clamp_in_place(state, params);
    const double sum =
        state.f_plus_count + state.f_minus_count + state.f_rumor_count;
    CHECK(std::abs(sum - state.f_count) <= 1e-9 * std::max(1.0, state.f_count));
    CHECK(state.f_count >= 0.0);
    CHECK(state.f_count <= params.big_n);
    CHECK(state.reputation >= 0.0);
    CHECK(state.reputation <= params.big_n);
    CHECK(state.popularity >= 0.0);
    CHECK(state.popularity <= params.big_n);
    ActorState again = state;
    const ClampTouch touch = clamp_in_place(again, params);
    CHECK(touch.count == 0);
    CHECK(again.f_plus_count == state.f_plus_count);
    CHECK(again.f_rumor_count == state.f_rumor_count);
  }
}
