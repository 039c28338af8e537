#include "parlin/firstorder/problems.hpp"

#include <cmath>
#include <stdexcept>

#include "parlin/util/rng.hpp"

namespace parlin::firstorder {

using local::DenseVector;
using local::Vector;

namespace {

struct Shape {
  long rows;
  int cols;
  int informative;
};

Shape linear_shape(ProblemScale scale) {
  return scale == ProblemScale::kPaper ? Shape{10000, 1024, 512} : Shape{1000, 128, 64};
}

Shape logistic_shape(ProblemScale scale) {
  return scale == ProblemScale::kPaper ? Shape{10000, 250, 0} : Shape{1000, 64, 0};
}

double reg_lambda(const std::vector<LabeledPoint>& points, int dim) {
  // lambda = 0.1 ||A^T y||_inf / n
  DenseVector aty(dim);
  for (const LabeledPoint& p : points) p.features.add_scaled_to(p.label, aty);
  return 0.1 * local::max_abs(aty) / static_cast<double>(points.size());
}

}  // namespace

SeparableObjective generate_benchmark(ProblemKind kind, ProblemScale scale, std::uint64_t seed,
                                      int num_partitions) {
  Rng rng(seed);
  const bool logistic = kind == ProblemKind::kLogistic || kind == ProblemKind::kLogisticL2;
  const Shape shape = logistic ? logistic_shape(scale) : linear_shape(scale);

  std::vector<LabeledPoint> points;
  points.reserve(static_cast<std::size_t>(shape.rows));

  if (!logistic) {
    // Planted sparse weights on the first `informative` features.
    DenseVector truth(shape.cols);
    for (int j = 0; j < shape.informative; ++j) truth[j] = rng.gaussian();
    for (long i = 0; i < shape.rows; ++i) {
      DenseVector row(shape.cols);
      for (int j = 0; j < shape.cols; ++j) row[j] = rng.gaussian();
      const double y = local::dot(row, truth) + 0.1 * rng.gaussian();
      points.push_back(LabeledPoint{Vector(std::move(row)), y});
    }
  } else {
    DenseVector mean_pos(shape.cols);
    DenseVector mean_neg(shape.cols);
    for (int j = 0; j < shape.cols; ++j) {
      mean_pos[j] = rng.gaussian();
      mean_neg[j] = rng.gaussian();
    }
    for (long i = 0; i < shape.rows; ++i) {
      const double label = (i % 2 == 0) ? 1.0 : -1.0;
      const DenseVector& mean = label > 0 ? mean_pos : mean_neg;
      DenseVector row(shape.cols);
      for (int j = 0; j < shape.cols; ++j) row[j] = mean[j] + rng.gaussian();
      points.push_back(LabeledPoint{Vector(std::move(row)), label});
    }
  }

  SeparableObjective objective;
  objective.loss = logistic ? Loss::kLogistic : Loss::kSquared;
  objective.dim = shape.cols;
  objective.count = shape.rows;
  objective.reg = Reg::kNone;
  if (kind == ProblemKind::kLinearL1) {
    objective.reg = Reg::kL1;
    objective.lambda = reg_lambda(points, shape.cols);
  } else if (kind == ProblemKind::kLogisticL2) {
    objective.reg = Reg::kL2;
    objective.lambda = reg_lambda(points, shape.cols);
  }
  objective.data = engine::from_records(std::move(points), num_partitions);
  return objective;
}

ProblemKind problem_kind_from_string(const std::string& name) {
  if (name == "linear") return ProblemKind::kLinear;
  if (name == "linear_l1") return ProblemKind::kLinearL1;
  if (name == "logistic") return ProblemKind::kLogistic;
  if (name == "logistic_l2") return ProblemKind::kLogisticL2;
  throw std::invalid_argument("unknown problem '" + name +
                              "'; expected linear, linear_l1, logistic, or logistic_l2");
}

ProblemScale problem_scale_from_string(const std::string& name) {
  if (name == "paper") return ProblemScale::kPaper;
  if (name == "desk") return ProblemScale::kDesk;
  throw std::invalid_argument("unknown scale '" + name + "'; expected paper or desk");
}

std::string to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kLinear: return "linear";
    case ProblemKind::kLinearL1: return "linear_l1";
    case ProblemKind::kLogistic: return "logistic";
    case ProblemKind::kLogisticL2: return "logistic_l2";
  }
  return "unknown";
}

}  // namespace parlin::firstorder
