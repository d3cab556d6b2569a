#pragma once

#include <cstddef>

#include "ontalign/matcher.hpp"

namespace ontalign {

struct ReferenceAlignment {
  PairSet pairs;
};

/// precision = TP/(TP+FP), recall = TP/(TP+FN), f_measure = 2PR/(P+R) or 0.
/// A ratio with a zero denominator is 1: nothing claimed is nothing wrong,
/// nothing expected is nothing missed. Two empty sets score 1/1/1.
struct EvalMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
};

EvalMetrics evaluate(const PairSet& produced, const ReferenceAlignment& reference);
EvalMetrics evaluate(const Alignment& produced, const ReferenceAlignment& reference);

/// Every concept of the ontology paired with itself.
ReferenceAlignment identity_reference(const Ontology& ontology);

}  // namespace ontalign
