#include "gossipgame/dynamics.hpp"

namespace gossipgame {

double receiver_knowledge_delta(const NormalizedView& receiver,
                                const OpinionAssessment& g,
                                double rumor_discount) {
  return rumor_discount * (1.0 - receiver.f) +
         (1.0 - rumor_discount) *
             (g.g_minus + g.g_plus -
              receiver.f * (receiver.f_plus + receiver.f_minus));
}

double receiver_knowledge_delta_known(const NormalizedView& receiver,
                                      const OpinionAssessment& g,
                                      double rumor_discount) {
  return (1.0 - rumor_discount) *
         (g.g_minus + g.g_plus -
          receiver.f * (receiver.f_plus + receiver.f_minus));
}

double sender_knowledge_delta(double receiver_reputation,
                              const LabelFractions& sender_labels,
                              const OpinionAssessment& g,
                              double rumor_discount) {
  return receiver_reputation * (1.0 - rumor_discount) *
         (g.g_minus + g.g_plus -
          (sender_labels.f_plus + sender_labels.f_minus));
}

double sender_popularity_premium(const NormalizedView& receiver,
                                 const OpinionAssessment& g) {
  // shares the product with scenario_probabilities so that
  // premium = 1 - p_discard holds bit for bit
  return 1.0 - scenario_probabilities(receiver, g).p_discard;
}

double receiver_reputation_delta(double receiver_knowledge,
                                 double sender_reputation,
                                 const LabelFractions& sender_labels,
                                 double phi) {
  return receiver_knowledge +
         (1.0 - receiver_knowledge) * sender_reputation * (2.0 * phi - 1.0) *
             (sender_labels.f_plus - sender_labels.f_minus);
}

double sender_reputation_delta(double receiver_reputation,
                               const LabelFractions& sender_labels,
                               const OpinionAssessment& g) {
  const double opposition =
      (1.0 - 2.0 * g.g_plus - 2.0 * g.g_minus) *
      (1.0 - 2.0 * sender_labels.f_plus - 2.0 * sender_labels.f_minus);
  const double agreement_penalty =
      2.0 * (sender_labels.f_plus * g.g_plus + sender_labels.f_minus * g.g_minus);
  return receiver_reputation * (opposition - agreement_penalty);
}

CountDeltas receiver_count_deltas(const NormalizedView& receiver,
                                  const OpinionAssessment& g) {
  CountDeltas d;
  d.d_f = 1.0 - receiver.f;
  d.d_plus = g.g_plus - receiver.f * receiver.f_plus;
  d.d_minus = g.g_minus - receiver.f * receiver.f_minus;
  d.d_rumor = g.g_rumor - receiver.f * receiver.f_rumor;
  return d;
}

CountDeltas sender_count_deltas(double receiver_reputation,
                                const LabelFractions& sender_labels,
                                const OpinionAssessment& g) {
  CountDeltas d;
  d.d_f = 0.0;
  d.d_plus = receiver_reputation * (g.g_plus - sender_labels.f_plus);
  d.d_minus = receiver_reputation * (g.g_minus - sender_labels.f_minus);
  d.d_rumor = receiver_reputation * (g.g_rumor - sender_labels.f_rumor);
  return d;
}

TransmissionEffects evaluate_transmission(const NormalizedView& sender,
                                          const NormalizedView& receiver,
                                          const GlobalParams& params) {
  TransmissionEffects fx;
  const LabelFractions sender_labels = sender.labels();
  fx.g = assess_opinion(receiver.k, sender.c, sender_labels, params.phi);
  fx.sender.dk = sender_knowledge_delta(receiver.c, sender_labels, fx.g,
                                        params.rumor_discount);
  fx.sender.dc = sender_reputation_delta(receiver.c, sender_labels, fx.g);
  fx.sender.dp = sender_popularity_premium(receiver, fx.g);
  fx.sender.counts = sender_count_deltas(receiver.c, sender_labels, fx.g);
  fx.receiver.dk =
      receiver_knowledge_delta(receiver, fx.g, params.rumor_discount);
  fx.receiver.dc = receiver_reputation_delta(receiver.k, sender.c,
                                             sender_labels, params.phi);
  fx.receiver.dp = 1.0;  // visibility reward for giving feedback
  fx.receiver.counts = receiver_count_deltas(receiver, fx.g);
  return fx;
}

}  // namespace gossipgame
