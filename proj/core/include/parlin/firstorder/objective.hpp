#pragma once

#include "parlin/engine/dataset.hpp"
#include "parlin/local/vector.hpp"

namespace parlin::firstorder {

struct LabeledPoint {
  local::Vector features;
  double label = 0.0;
};

enum class Loss { kSquared, kLogistic };
enum class Reg { kNone, kL1, kL2 };

/// F(w) = sum_i F_i(w) + reg(w) over distributed (features, label) rows.
/// Squared loss is 0.5 (a_i.w - y_i)^2; logistic loss is log(1 + exp(-y a.w))
/// with labels in {-1, +1}. L2 adds (lambda/2) ||w||^2 to the smooth part;
/// L1 adds lambda ||w||_1 and is handled by prox (acc family) or subgradient
/// (gra) rather than by the smooth gradient.
struct SeparableObjective {
  engine::PartitionedDataset<LabeledPoint> data;
  Loss loss = Loss::kSquared;
  Reg reg = Reg::kNone;
  double lambda = 0.0;
  int dim = 0;
  long count = 0;
};

struct GradientResult {
  double value = 0.0;              // full objective including regularizers
  local::DenseVector gradient;     // gradient of the smooth part (loss + L2)
};

/// One cluster pass: w is broadcast, per-partition (value, gradient) partial
/// sums are folded and combined on the driver, then regularizer terms are
/// added there.
GradientResult distributed_gradient(const SeparableObjective& objective,
                                    const local::DenseVector& w);

}  // namespace parlin::firstorder
