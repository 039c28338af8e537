#pragma once

#include <cstdint>
#include <string>

#include "parlin/firstorder/objective.hpp"

namespace parlin::firstorder {

enum class ProblemKind { kLinear, kLinearL1, kLogistic, kLogisticL2 };
enum class ProblemScale { kPaper, kDesk };

/// Synthetic regression / classification problems:
///   linear    gaussian design with a planted sparse weight vector and
///             gaussian noise (sigma = 0.1); 10000x1024 with 512 informative
///             features at paper scale, 1000x128 with 64 at desk scale.
///   logistic  per-class gaussian feature means plus unit gaussian noise,
///             labels +-1; 10000x250 at paper scale, 1000x64 at desk scale.
/// The l1 / l2 variants add lambda = 0.1 ||A^T y||_inf / n. Everything is a
/// pure function of the seed.
SeparableObjective generate_benchmark(ProblemKind kind, ProblemScale scale, std::uint64_t seed,
                                      int num_partitions = 4);

ProblemKind problem_kind_from_string(const std::string& name);
ProblemScale problem_scale_from_string(const std::string& name);
std::string to_string(ProblemKind kind);

}  // namespace parlin::firstorder
