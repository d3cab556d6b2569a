#include "ontalign/evaluator.hpp"

namespace ontalign {

EvalMetrics evaluate(const PairSet& produced, const ReferenceAlignment& reference) {
  EvalMetrics m;
  for (const auto& p : produced) {
    if (reference.pairs.contains(p)) ++m.true_positives;
    else ++m.false_positives;
  }
  m.false_negatives = reference.pairs.size() - m.true_positives;

  const auto ratio = [](std::size_t num, std::size_t den) {
    return den == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  m.precision = ratio(m.true_positives, m.true_positives + m.false_positives);
  m.recall = ratio(m.true_positives, m.true_positives + m.false_negatives);
  const double sum = m.precision + m.recall;
  m.f_measure = sum > 0.0 ? 2.0 * m.precision * m.recall / sum : 0.0;
  return m;
}

EvalMetrics evaluate(const Alignment& produced, const ReferenceAlignment& reference) {
  return evaluate(produced.pair_set(), reference);
}

ReferenceAlignment identity_reference(const Ontology& ontology) {
  ReferenceAlignment ref;
  for (const auto& c : ontology.concepts()) ref.pairs.insert({c, c});
  return ref;
}

}  // namespace ontalign
