#include "parlin/firstorder/objective.hpp"

#include <cmath>
#include <stdexcept>

#include "parlin/errors.hpp"

namespace parlin::firstorder {

using local::DenseVector;
using local::Vector;

namespace {

struct Partial {
  double value = 0.0;
  DenseVector gradient;
};

// log(1 + exp(t)) without overflow.
double log1pexp(double t) { return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t)); }

}  // namespace

GradientResult distributed_gradient(const SeparableObjective& objective, const DenseVector& w) {
  if (w.size() != objective.dim) {
    throw std::invalid_argument("w has size " + std::to_string(w.size()) + ", expected " +
                                std::to_string(objective.dim));
  }
  auto bw = engine::broadcast(w);
  const Loss loss = objective.loss;

  Partial zero;
  zero.gradient = DenseVector(objective.dim);
  Partial total = engine::aggregate(
      objective.data, zero,
      [bw, loss](Partial& acc, const LabeledPoint& point) {
        const double margin = point.features.dot(bw.value());
        if (loss == Loss::kSquared) {
          const double r = margin - point.label;
          acc.value += 0.5 * r * r;
          if (r != 0.0) point.features.add_scaled_to(r, acc.gradient);
        } else {
          const double ym = point.label * margin;
          acc.value += log1pexp(-ym);
          // d/dw log(1+exp(-y a.w)) = -y sigmoid(-y a.w) a
          const double coeff = -point.label / (1.0 + std::exp(ym));
          point.features.add_scaled_to(coeff, acc.gradient);
        }
        if (!std::isfinite(acc.value)) {
          throw NumericalError("non-finite partial objective");
        }
      },
      [](Partial& lhs, const Partial& rhs) {
        lhs.value += rhs.value;
        local::axpy(1.0, rhs.gradient, lhs.gradient);
      });

  GradientResult out;
  out.value = total.value;
  out.gradient = std::move(total.gradient);

  if (objective.reg == Reg::kL2) {
    out.value += 0.5 * objective.lambda * local::dot(w, w);
    local::axpy(objective.lambda, w, out.gradient);
  } else if (objective.reg == Reg::kL1) {
    double l1 = 0.0;
    for (int i = 0; i < w.size(); ++i) l1 += std::fabs(w[i]);
    out.value += objective.lambda * l1;
  }
  return out;
}

}  // namespace parlin::firstorder
