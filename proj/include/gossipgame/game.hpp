#pragma once

#include <array>
#include <vector>

#include "gossipgame/dynamics.hpp"
#include "gossipgame/model.hpp"

namespace gossipgame {

enum class SenderAction { Forward, Hold };
enum class ReceiverAction { Feedback, NoFeedback };

/// One cell of the 2x2 game. sender/receiver are 0 when the player acts
/// (forward / give feedback) and 1 when it abstains (hold / stay silent).
struct GameCell {
  int sender = 0;
  int receiver = 0;
  friend bool operator==(const GameCell&, const GameCell&) = default;
};

/// Utility changes of the 2x2 transmission game. The hold row is identical in
/// both columns per player (feedback to an unsent message is infeasible; the
/// cells carry the decay payoffs as printed), which is exactly the shape that
/// guarantees a pure-strategy weak equilibrium exists. The raw per-event
/// deltas are kept alongside for logging.
struct PayoffMatrix {
  double u_s_forward_feedback = 0.0;
  double u_r_forward_feedback = 0.0;
  double u_s_forward_nofeedback = 0.0;
  double u_r_forward_nofeedback = 0.0;
  double u_s_hold = 0.0;
  double u_r_hold = 0.0;

  double dk_s = 0.0;
  double dc_s = 0.0;
  double dp_s = 0.0;
  double dk_r = 0.0;
  double dc_r = 0.0;
  OpinionAssessment g;
};

/// Up to four equilibrium cells, in preference order
/// (S0,R0), (S0,R1), (S1,R0), (S1,R1).
struct EquilibriumSet {
  std::array<GameCell, 4> cells{};
  int size = 0;

  const GameCell* begin() const { return cells.data(); }
  const GameCell* end() const { return cells.data() + size; }
  bool contains(GameCell c) const;
};

/// Solved outcome of one game. A hold-row equilibrium is reported as
/// (Hold, NoFeedback): behaviorally there is no transmission and no feedback.
struct EquilibriumProfile {
  SenderAction sender_action = SenderAction::Forward;
  ReceiverAction receiver_action = ReceiverAction::Feedback;
  EquilibriumSet equilibrium_set;
  bool selected_by_tiebreak = false;
};

/// Combines precomputed transmission effects with the two personalities into
/// the payoff matrix:
///   dU_S(forward, feedback)   = kappa_S*dK_S + sigma_S*dC_S + pi_S*dP_S
///   dU_S(forward, silent)     = pi_S*dP_S
///   dU_R(forward, feedback)   = kappa_R*dK_R + sigma_R*dC_R + pi_R*1
///   dU_R(forward, silent)     = kappa_R*dK_R - pi_R*delta
///   hold row                  = (-pi_S*delta, -pi_R*delta)
PayoffMatrix assemble_payoff_matrix(const TransmissionEffects& effects,
                                    const Personality& sender,
                                    const Personality& receiver,
                                    double delta);

/// Builds the matrix from raw actor states. Throws std::invalid_argument if
/// the sender has no assertions to share.
PayoffMatrix build_payoff_matrix(const ActorState& sender_state,
                                 const Personality& sender_personality,
                                 const ActorState& receiver_state,
                                 const Personality& receiver_personality,
                                 const GlobalParams& params);

/// All cells where neither player gains strictly by a unilateral deviation.
/// Ties count, so the set is never empty for matrices of this shape.
EquilibriumSet enumerate_pure_equilibria(const PayoffMatrix& m);

/// Selects the equilibrium by the fixed preference order (S0,R0) over (S0,R1)
/// over (S1,R0) over (S1,R1): both players act on ties. Deterministic.
EquilibriumProfile solve_equilibrium(const PayoffMatrix& m);

}  // namespace gossipgame
