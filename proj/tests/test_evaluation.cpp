#include <random>
#include <stdexcept>

#include <doctest.h>

#include "gossipgame/evaluation.hpp"
#include "gossipgame/model.hpp"

using namespace gossipgame;

namespace {

LabelFractions random_simplex(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double a = unit(gen), b = unit(gen), c = unit(gen);
  const double sum = a + b + c;
  if (sum == 0.0) return {1.0, 0.0, 0.0};
  return {a / sum, b / sum, c / sum};
}

NormalizedView random_receiver(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  NormalizedView view;
  view.f = unit(gen);
  if (view.f > 0.0) {
    const LabelFractions labels = random_simplex(gen);
    view.f_plus = labels.f_plus;
    view.f_minus = labels.f_minus;
    view.f_rumor = labels.f_rumor;
  }
  view.c = unit(gen);
  view.p = unit(gen);
  view.k = view.f * (view.f_plus + view.f_minus + 0.5 * view.f_rumor);
  return view;
}

}  // namespace

TEST_CASE("a fully knowledgeable receiver classifies at the true rates") {
  const OpinionAssessment g =
      assess_opinion(1.0, 0.3, {0.6, 0.2, 0.2}, 0.8);
  CHECK(g.g_plus == 0.8);
  CHECK(g.g_minus == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(g.g_rumor == 0.0);
}

TEST_CASE("an ignorant receiver trusts the sender in proportion to reputation") {
  const OpinionAssessment g =
      assess_opinion(0.0, 0.5, {0.6, 0.2, 0.2}, 0.8);
  CHECK(g.g_plus == doctest::Approx(0.30).epsilon(1e-15));
  CHECK(g.g_minus == doctest::Approx(0.10).epsilon(1e-15));
  CHECK(g.g_rumor == doctest::Approx(0.60).epsilon(1e-15));
}

TEST_CASE("a half-knowledgeable receiver blends both assessments") {
  const OpinionAssessment g =
      assess_opinion(0.5, 0.5, {0.6, 0.2, 0.2}, 0.8);
  CHECK(g.g_plus == doctest::Approx(0.55).epsilon(1e-12));
  CHECK(g.g_minus == doctest::Approx(0.15).epsilon(1e-12));
  CHECK(g.g_rumor == doctest::Approx(0.30).epsilon(1e-12));
  CHECK(g.g_plus + g.g_minus + g.g_rumor == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("a sender without assertions is rejected") {
  CHECK_THROWS_AS(assess_opinion(0.5, 0.5, {0.0, 0.0, 0.0}, 0.8),
                  std::invalid_argument);
}

TEST_CASE("scenario probabilities split discard, relabel, and new") {
  NormalizedView receiver;
  receiver.f = 0.5;
  receiver.f_plus = 0.4;
  receiver.f_minus = 0.2;
  receiver.f_rumor = 0.4;
  const ScenarioProbabilities p =
      scenario_probabilities(receiver, {0.55, 0.15, 0.30});
  CHECK(p.p_discard == doctest::Approx(0.185).epsilon(1e-12));
  CHECK(p.p_relabel == doctest::Approx(0.315).epsilon(1e-12));
  CHECK(p.p_new == 0.5);
  CHECK(p.p_relabel == 0.5 - p.p_discard);
}

TEST_CASE("every assertion is new to an empty receiver") {
  NormalizedView receiver;
  const ScenarioProbabilities p =
      scenario_probabilities(receiver, {0.55, 0.15, 0.30});
  CHECK(p.p_discard == 0.0);
  CHECK(p.p_relabel == 0.0);
  CHECK(p.p_new == 1.0);
}

TEST_CASE("guaranteed agreement on a saturated receiver discards always") {
  NormalizedView receiver;
  receiver.f = 1.0;
  receiver.f_plus = 1.0;
  const ScenarioProbabilities p = scenario_probabilities(receiver, {1.0, 0.0, 0.0});
  CHECK(p.p_discard == 1.0);
  CHECK(p.p_relabel == 0.0);
  CHECK(p.p_new == 0.0);
}

TEST_CASE("assessments are probability distributions for random inputs") {
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100000; ++i) {
    const double k_r = unit(gen);
    const double c_s = unit(gen);
    const double phi = unit(gen);
    const LabelFractions labels = random_simplex(gen);
    const OpinionAssessment g = assess_opinion(k_r, c_s, labels, phi);
    CHECK(g.g_plus + g.g_minus + g.g_rumor == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g.g_plus >= 0.0);
    CHECK(g.g_plus <= 1.0);
    CHECK(g.g_minus >= 0.0);
    CHECK(g.g_minus <= 1.0);
    CHECK(g.g_rumor >= 0.0);
    CHECK(g.g_rumor <= 1.0);
  }
}

TEST_CASE("the knowledge limits fall out of the single formula exactly") {
  std::mt19937_64 gen(29);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100000; ++i) {
    const double c_s = unit(gen);
    const double phi = unit(gen);
    const LabelFractions labels = random_simplex(gen);
    const OpinionAssessment ideal = assess_opinion(1.0, c_s, labels, phi);
    CHECK(ideal.g_plus == phi);
    CHECK(ideal.g_minus == 1.0 - phi);
    CHECK(ideal.g_rumor == 0.0);
    const OpinionAssessment blind = assess_opinion(0.0, c_s, labels, phi);
    CHECK(blind.g_plus == c_s * labels.f_plus);
    CHECK(blind.g_minus == c_s * labels.f_minus);
    CHECK(blind.g_rumor == c_s * labels.f_rumor + (1.0 - c_s));
  }
}

TEST_CASE("scenario probabilities stay consistent for random inputs") {
  std::mt19937_64 gen(31);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100000; ++i) {
    const NormalizedView receiver = random_receiver(gen);
    const LabelFractions sender = random_simplex(gen);
    const OpinionAssessment g =
        assess_opinion(unit(gen), unit(gen), sender, unit(gen));
    const ScenarioProbabilities p = scenario_probabilities(receiver, g);
    CHECK(p.p_discard + p.p_relabel + p.p_new ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.p_discard >= 0.0);
    CHECK(p.p_relabel >= 0.0);
    CHECK(p.p_new == 1.0 - receiver.f);
    CHECK(p.p_relabel == receiver.f - p.p_discard);
  }
}
