#pragma once

#include "gossipgame/evaluation.hpp"
#include "gossipgame/model.hpp"

namespace gossipgame {

/// Expected per-event changes to the assertion counts of one actor.
/// d_plus + d_minus + d_rumor = d_f within 1e-12.
struct CountDeltas {
  double d_f = 0.0;
  double d_plus = 0.0;
  double d_minus = 0.0;
  double d_rumor = 0.0;
};

/// Per-event expected change of one actor's knowledge, reputation, and
/// popularity, with the count-level deltas that produce the knowledge change:
/// dk = d_plus + d_minus + lambda*d_rumor.
struct StateDelta {
  double dk = 0.0;
  double dc = 0.0;
  double dp = 0.0;
  CountDeltas counts;
};

/// Everything one transmission would change, computed from the two actors'
/// pre-event views. The receiver's dp is the feedback participation premium
/// (+1); whether it, dc, or the sender-side changes actually apply depends on
/// the equilibrium outcome.
struct TransmissionEffects {
  OpinionAssessment g;
  StateDelta sender;
  StateDelta receiver;
};

/// Knowledge change at the receiver:
/// dK_R = lambda*(1 - f_R) + (1-lambda)*(g- + g+ - f_R*(fR+ + fR-)).
double receiver_knowledge_delta(const NormalizedView& receiver,
                                const OpinionAssessment& g,
                                double rumor_discount);

/// Variant for an assertion the receiver is known to already hold (the new-
/// assertion scenario is impossible): dK_R' = (1-lambda)*(g- + g+ -
/// f_R*(fR+ + fR-)). Exposed for completeness; the engine never uses it.
double receiver_knowledge_delta_known(const NormalizedView& receiver,
                                      const OpinionAssessment& g,
                                      double rumor_discount);

/// Knowledge change at the sender after feedback, weighted by how much the
/// sender trusts the receiver:
/// dK_S = c_R*(1-lambda)*(g- + g+ - (fS+ + fS-)).
double sender_knowledge_delta(double receiver_reputation,
                              const LabelFractions& sender_labels,
                              const OpinionAssessment& g,
                              double rumor_discount);

/// Popularity premium earned by transmitting: dP_S = 1 - p_discard.
double sender_popularity_premium(const NormalizedView& receiver,
                                 const OpinionAssessment& g);

/// Expected reputation change of the receiver, scored by the external oracle:
/// dC_R = k_R + (1-k_R)*c_S*(2*phi-1)*(fS+ - fS-).
double receiver_reputation_delta(double receiver_knowledge,
                                 double sender_reputation,
                                 const LabelFractions& sender_labels,
                                 double phi);

/// Reputation change the receiver's feedback inflicts on the sender:
/// dC_S = c_R*((1-2g+-2g-)*(1-2fS+-2fS-) - 2*(fS+*g+ + fS-*g-)).
double sender_reputation_delta(double receiver_reputation,
                               const LabelFractions& sender_labels,
                               const OpinionAssessment& g);

/// Expected count changes at the receiver: the post-event label distribution
/// is g, and the prior contributes in proportion f_R. Reproduces
/// receiver_knowledge_delta under the lambda-weighted sum.
CountDeltas receiver_count_deltas(const NormalizedView& receiver,
                                  const OpinionAssessment& g);

/// Expected count changes at the sender (relabeling only, d_f = 0):
/// each label moves toward the receiver's classification in proportion c_R.
CountDeltas sender_count_deltas(double receiver_reputation,
                                const LabelFractions& sender_labels,
                                const OpinionAssessment& g);

/// Bundles the full effect of one transmission between two actors.
TransmissionEffects evaluate_transmission(const NormalizedView& sender,
                                          const NormalizedView& receiver,
                                          const GlobalParams& params);

}  // namespace gossipgame
