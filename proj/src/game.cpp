#include "gossipgame/game.hpp"

#include <stdexcept>

namespace gossipgame {

bool EquilibriumSet::contains(GameCell cell) const {
  for (int i = 0; i < size; ++i)
    if (cells[i] == cell) return true;
  return false;
}

PayoffMatrix assemble_payoff_matrix(const TransmissionEffects& effects,
                                    const Personality& sender,
                                    const Personality& receiver,
                                    double delta) {
  PayoffMatrix m;
  m.u_s_forward_feedback = sender.kappa * effects.sender.dk +
                           sender.sigma * effects.sender.dc +
                           sender.pi * effects.sender.dp;
  m.u_r_forward_feedback = receiver.kappa * effects.receiver.dk +
                           receiver.sigma * effects.receiver.dc +
                           receiver.pi * effects.receiver.dp;
  m.u_s_forward_nofeedback = sender.pi * effects.sender.dp;
  m.u_r_forward_nofeedback = receiver.kappa * effects.receiver.dk -
                             receiver.pi * delta;
  m.u_s_hold = -sender.pi * delta;
  m.u_r_hold = -receiver.pi * delta;
  m.dk_s = effects.sender.dk;
  m.dc_s = effects.sender.dc;
  m.dp_s = effects.sender.dp;
  m.dk_r = effects.receiver.dk;
  m.dc_r = effects.receiver.dc;
  m.g = effects.g;
  return m;
}

PayoffMatrix build_payoff_matrix(const ActorState& sender_state,
                                 const Personality& sender_personality,
                                 const ActorState& receiver_state,
                                 const Personality& receiver_personality,
                                 const GlobalParams& params) {
  if (sender_state.f_count <= 0.0)
    throw std::invalid_argument(
        "build_payoff_matrix: sender holds no assertions");
  const NormalizedView sender = normalize(sender_state, params);
  const NormalizedView receiver = normalize(receiver_state, params);
  return assemble_payoff_matrix(evaluate_transmission(sender, receiver, params),
                                sender_personality, receiver_personality,
                                params.delta);
}

EquilibriumSet enumerate_pure_equilibria(const PayoffMatrix& m) {
  EquilibriumSet set;
  const auto add = [&set](int s, int r) {
    set.cells[set.size++] = GameCell{s, r};
  };
  if (m.u_s_forward_feedback >= m.u_s_hold &&
      m.u_r_forward_feedback >= m.u_r_forward_nofeedback)
    add(0, 0);
  if (m.u_s_forward_nofeedback >= m.u_s_hold &&
      m.u_r_forward_nofeedback >= m.u_r_forward_feedback)
    add(0, 1);
  // Hold row: both cells pay each player the same, so the receiver is always
  // indifferent there and only the sender's deviation binds.
  if (m.u_s_hold >= m.u_s_forward_feedback) add(1, 0);
  if (m.u_s_hold >= m.u_s_forward_nofeedback) add(1, 1);
  return set;
}

EquilibriumProfile solve_equilibrium(const PayoffMatrix& m) {
  EquilibriumProfile profile;
  profile.equilibrium_set = enumerate_pure_equilibria(m);
  if (profile.equilibrium_set.size == 0)
    throw std::logic_error(
        "solve_equilibrium: empty equilibrium set (violates the existence "
        "guarantee for hold-row-constant matrices)");
  // enumerate emits cells in preference order, so the first one is the pick
  const GameCell pick = profile.equilibrium_set.cells[0];
  profile.selected_by_tiebreak = profile.equilibrium_set.size > 1;
  if (pick.sender == 1) {
    profile.sender_action = SenderAction::Hold;
    profile.receiver_action = ReceiverAction::NoFeedback;
  } else {
    profile.sender_action = SenderAction::Forward;
    profile.receiver_action = pick.receiver == 0 ? ReceiverAction::Feedback
                                                 : ReceiverAction::NoFeedback;
  }
  return profile;
}

}  // namespace gossipgame
