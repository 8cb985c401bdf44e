#include "gossipgame/model.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>

namespace gossipgame {
namespace {

std::string fmt(double value) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

void check_range(std::vector<std::string>& errors, const std::string& field,
                 double value, double lo, double hi) {
  if (value < lo)
    errors.push_back(field + "=" + fmt(value) + " below " + fmt(lo));
  else if (value > hi)
    errors.push_back(field + "=" + fmt(value) + " above " + fmt(hi));
}

}  // namespace

std::vector<std::string> validate(const GlobalParams& params,
                                  std::span<const Personality> personas) {
  std::vector<std::string> errors;
  check_range(errors, "phi", params.phi, 0.0, 1.0);
  check_range(errors, "lambda", params.rumor_discount, 0.0, 1.0);
  if (params.delta < 0.0)
    errors.push_back("delta=" + fmt(params.delta) + " below 0");
  if (params.big_n < 2.0)
    errors.push_back("big_n=" + fmt(params.big_n) + " below 2");
  for (std::size_t i = 0; i < personas.size(); ++i) {
    const Personality& p = personas[i];
    const std::string tag = "persona[" + std::to_string(i) + "] ";
    check_range(errors, tag + "kappa", p.kappa, 0.0, 1.0);
    check_range(errors, tag + "sigma", p.sigma, 0.0, 1.0);
    check_range(errors, tag + "pi", p.pi, 0.0, 1.0);
    const double sum = p.kappa + p.sigma + p.pi;
    if (std::abs(sum - 1.0) > 1e-9)
      errors.push_back(tag + "weights sum to " + fmt(sum) + " != 1");
  }
  return errors;
}

NormalizedView normalize(const ActorState& state, const GlobalParams& params) {
  NormalizedView view;
  const double n = params.big_n;
  const double knowledge = state.f_plus_count + state.f_minus_count +
                           params.rumor_discount * state.f_rumor_count;
  view.k = knowledge / n;
  view.c = state.reputation / n;
  view.p = state.popularity / n;
  view.f = state.f_count / n;
  if (state.f_count > 0.0) {
    view.f_plus = state.f_plus_count / state.f_count;
    view.f_minus = state.f_minus_count / state.f_count;
    view.f_rumor = state.f_rumor_count / state.f_count;
  }
  return view;
}

ClampTouch clamp_in_place(ActorState& state, const GlobalParams& params) {
  const double n = params.big_n;
  ClampTouch touch;
  const auto clip = [&](double& value, ClampField field) {
    const double clipped = std::min(std::max(value, 0.0), n);
    if (clipped != value) {
      value = clipped;
      touch.mask |= field;
    }
  };
  clip(state.f_count, kClampFCount);
  clip(state.f_plus_count, kClampFPlus);
  clip(state.f_minus_count, kClampFMinus);
  clip(state.f_rumor_count, kClampFRumor);
  const double sum =
      state.f_plus_count + state.f_minus_count + state.f_rumor_count;
  // rebalance labels onto f_count only when the sum identity is broken
  // beyond its stated tolerance, so FP drift never counts as a clamp
  if (std::abs(sum - state.f_count) > 1e-9 * std::max(1.0, state.f_count)) {
    if (sum > 0.0) {
      const double scale = state.f_count / sum;
      const auto rescale = [&](double& value, ClampField field) {
        const double next = std::min(value * scale, n);
        if (next != value) {
          value = next;
          touch.mask |= field;
        }
      };
      rescale(state.f_plus_count, kClampFPlus);
      rescale(state.f_minus_count, kClampFMinus);
      rescale(state.f_rumor_count, kClampFRumor);
    } else {
      // no label mass left to scale: park the total in the rumor pool
      state.f_rumor_count = state.f_count;
      touch.mask |= kClampFRumor;
    }
  }
  clip(state.reputation, kClampReputation);
  clip(state.popularity, kClampPopularity);
  touch.count = std::popcount(touch.mask);
  return touch;
}

std::pair<ActorState, ClampReport> clamp(const ActorState& state,
                                         const GlobalParams& params) {
  ActorState clamped = state;
  const ClampTouch touch = clamp_in_place(clamped, params);
  return {clamped, ClampReport{clamp_field_names(touch.mask), touch.count}};
}

std::vector<std::string> clamp_field_names(unsigned mask) {
  static constexpr std::pair<ClampField, const char*> kNames[] = {
      {kClampFCount, "f_count"},        {kClampFPlus, "f_plus_count"},
      {kClampFMinus, "f_minus_count"},  {kClampFRumor, "f_rumor_count"},
      {kClampReputation, "reputation"}, {kClampPopularity, "popularity"},
  };
  std::vector<std::string> names;
  for (const auto& [field, name] : kNames)
    if (mask & field) names.emplace_back(name);
  return names;
}

}  // namespace gossipgame
