#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gossipgame {

/// System-wide constants of the dissemination model.
struct GlobalParams {
  double phi = 0.8;             ///< probability that an assertion is intrinsically true, in [0,1]
  double delta = 0.1;           ///< popularity decay per unit time, >= 0
  double rumor_discount = 0.5;  ///< weight of rumors in self-perceived knowledge (lambda), in [0,1]
  double big_n = 2000.0;        ///< maximum number of assertions in the network, integer >= 2
};

/// Convex-combination weights of knowledge, reputation, and popularity in an
/// actor's utility. kappa + sigma + pi must equal 1.
struct Personality {
  double kappa = 0.0;
  double sigma = 0.0;
  double pi = 0.0;
};

/// An actor's label distribution over its known assertions.
struct LabelFractions {
  double f_plus = 0.0;
  double f_minus = 0.0;
  double f_rumor = 0.0;
};

/// Raw per-actor state. Counts are real-valued: the engine applies expected
/// (mean-field) per-event changes rather than per-assertion bookkeeping.
/// Invariants: label counts sum to f_count (tolerance 1e-9); f_count,
/// reputation, and popularity all lie in [0, big_n].
struct ActorState {
  double f_count = 0.0;        ///< known assertions F
  double f_plus_count = 0.0;   ///< assertions believed true
  double f_minus_count = 0.0;  ///< assertions believed false
  double f_rumor_count = 0.0;  ///< assertions held as rumors
  double reputation = 0.0;     ///< C
  double popularity = 0.0;     ///< P
};

/// Derived, normalized view of an ActorState. Self-perceived knowledge is
/// K = F+ + F- + lambda*F0, so lambda*F <= K <= F always holds. When the
/// actor knows nothing (F = 0) every label fraction is 0 by convention.
struct NormalizedView {
  double k = 0.0;  ///< K / N
  double c = 0.0;  ///< reputation / N
  double p = 0.0;  ///< popularity / N
  double f = 0.0;  ///< F / N
  double f_plus = 0.0;
  double f_minus = 0.0;
  double f_rumor = 0.0;

  LabelFractions labels() const { return {f_plus, f_minus, f_rumor}; }
};

/// Which fields a clamp touched, as a bitmask. Used in the simulation loop
/// where allocating a report per event would be wasteful.
enum ClampField : unsigned {
  kClampFCount = 1u << 0,
  kClampFPlus = 1u << 1,
  kClampFMinus = 1u << 2,
  kClampFRumor = 1u << 3,
  kClampReputation = 1u << 4,
  kClampPopularity = 1u << 5,
};

struct ClampTouch {
  unsigned mask = 0;
  std::uint64_t count = 0;  ///< number of fields whose value changed
};

/// Allocation-friendly clamp report: names of touched fields plus the number
/// of occurrences.
struct ClampReport {
  std::vector<std::string> clamped_fields;
  std::uint64_t count = 0;
};

/// Checks every invariant of the parameters and personalities; returns one
/// message per violation (empty means valid). Messages name the field, the
/// offending value, and the bound.
std::vector<std::string> validate(const GlobalParams& params,
                                  std::span<const Personality> personas);

/// Derives the normalized view. Pure; never fails (F = 0 yields zero label
/// fractions).
NormalizedView normalize(const ActorState& state, const GlobalParams& params);

/// Clips every count into [0, big_n], rescales label counts proportionally so
/// they again sum to f_count, and clips reputation and popularity. In-place
/// variant used by the engine.
ClampTouch clamp_in_place(ActorState& state, const GlobalParams& params);

/// Value-returning clamp with a named-field report.
std::pair<ActorState, ClampReport> clamp(const ActorState& state,
                                         const GlobalParams& params);

/// Field names for a ClampTouch mask, in declaration order.
std::vector<std::string> clamp_field_names(unsigned mask);

}  // namespace gossipgame
