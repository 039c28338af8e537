#pragma once

#include "parlin/local/dense.hpp"

namespace parlin::svd {

struct EigenDecomposition {
  local::DenseVector values;   // descending
  local::DenseMatrix vectors;  // columns aligned with values
};

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations,
/// iterated until the off-diagonal Frobenius norm drops below 1e-12 relative
/// to the input norm. Simple, accurate, and library-free; also small enough
/// to double as a reference at modest n.
EigenDecomposition jacobi_eigen(const local::DenseMatrix& symmetric);

}  // namespace parlin::svd
