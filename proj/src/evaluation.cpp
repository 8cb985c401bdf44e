#include "gossipgame/evaluation.hpp"

#include <stdexcept>

namespace gossipgame {

OpinionAssessment assess_opinion(double receiver_knowledge,
                                 double sender_reputation,
                                 const LabelFractions& sender_labels,
                                 double phi) {
  if (sender_labels.f_plus + sender_labels.f_minus + sender_labels.f_rumor <=
      0.0)
    throw std::invalid_argument(
        "assess_opinion: sender label fractions are all zero (an actor with "
        "no assertions cannot transmit)");
  const double k = receiver_knowledge;
  const double c = sender_reputation;
  OpinionAssessment g;
  g.g_plus = k * phi + (1.0 - k) * c * sender_labels.f_plus;
  g.g_minus = k * (1.0 - phi) + (1.0 - k) * c * sender_labels.f_minus;
  g.g_rumor = (1.0 - k) * (c * sender_labels.f_rumor + (1.0 - c));
  return g;
}

double opinion_agreement(const NormalizedView& receiver,
                         const OpinionAssessment& g) {
  return g.g_plus * receiver.f_plus + g.g_minus * receiver.f_minus +
         g.g_rumor * receiver.f_rumor;
}

ScenarioProbabilities scenario_probabilities(const NormalizedView& receiver,
                                             const OpinionAssessment& g) {
  ScenarioProbabilities s;
  s.p_discard = receiver.f * opinion_agreement(receiver, g);
  s.p_relabel = receiver.f - s.p_discard;  // keeps p_discard + p_relabel = f_R exact
  s.p_new = 1.0 - receiver.f;
  return s;
}

}  // namespace gossipgame
