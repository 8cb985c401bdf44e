#pragma once

#include "gossipgame/model.hpp"

namespace gossipgame {

/// Probabilities with which a receiver classifies an incoming assertion as
/// true, false, or rumor. Always sums to 1.
struct OpinionAssessment {
  double g_plus = 0.0;
  double g_minus = 0.0;
  double g_rumor = 0.0;
};

/// Probabilities of the three reception scenarios: the receiver discards a
/// known assertion whose classification matches its prior label, relabels a
/// known assertion, or stores a new one. p_new = 1 - f_R exactly.
struct ScenarioProbabilities {
  double p_discard = 0.0;
  double p_relabel = 0.0;
  double p_new = 0.0;
};

/// Computes the receiver's classification probabilities from its knowledge
/// fraction, the sender's reputation fraction and label distribution, and the
/// global truth probability:
///
///   g+ = k_R*phi + (1-k_R)*c_S*fS+
///   g- = k_R*(1-phi) + (1-k_R)*c_S*fS-
///   g0 = (1-k_R)*(c_S*fS0 + (1-c_S))
///
/// The single formula covers both limits: a fully knowledgeable receiver
/// classifies at the statistical optimum (phi, 1-phi, 0); a fully ignorant
/// one trusts the sender's opinion discounted by the sender's reputation.
/// Throws std::invalid_argument for a sender with all-zero labels (an actor
/// with no assertions cannot transmit).
OpinionAssessment assess_opinion(double receiver_knowledge,
                                 double sender_reputation,
                                 const LabelFractions& sender_labels,
                                 double phi);

/// g+ * fR+ + g- * fR- + g0 * fR0: the probability that the receiver's new
/// classification agrees with its existing label for a known assertion.
/// Shared kernel of scenario_probabilities and sender_popularity_premium.
double opinion_agreement(const NormalizedView& receiver,
                         const OpinionAssessment& g);

/// Probabilities of the discard / relabel / new-assertion scenarios for one
/// transmission. p_discard + p_relabel = f_R exactly.
ScenarioProbabilities scenario_probabilities(const NormalizedView& receiver,
                                             const OpinionAssessment& g);

}  // namespace gossipgame
