#pragma once

#include <variant>

#include "parlin/local/dense.hpp"
#include "parlin/local/sparse.hpp"

namespace parlin::local {

/// A matrix row: dense or sparse storage behind one interface. Row matrices
/// hold these, so per-row storage can be chosen independently.
class Vector {
 public:
  Vector(DenseVector v) : v_(std::move(v)) {}
  Vector(SparseVector v) : v_(std::move(v)) {}

  int size() const {
    return std::visit([](const auto& v) { return v.size(); }, v_);
  }

  bool is_sparse() const { return std::holds_alternative<SparseVector>(v_); }

  const DenseVector& dense() const { return std::get<DenseVector>(v_); }
  const SparseVector& sparse() const { return std::get<SparseVector>(v_); }

  /// Applies f(index, value) to every stored entry in index order.
  template <typename F>
  void for_each_stored(F f) const {
    if (is_sparse()) {
      const auto& s = sparse();
      for (int k = 0; k < s.nnz(); ++k) f(s.indices()[k], s.values()[k]);
    } else {
      const auto& d = dense();
      for (int i = 0; i < d.size(); ++i) f(i, d[i]);
    }
  }

  double dot(const DenseVector& x) const {
    double s = 0.0;
    for_each_stored([&](int i, double v) { s += v * x[i]; });
    return s;
  }

  /// out += alpha * this
  void add_scaled_to(double alpha, DenseVector& out) const {
    for_each_stored([&](int i, double v) { out[i] += alpha * v; });
  }

  DenseVector to_dense_vector() const {
    return is_sparse() ? to_dense(sparse()) : dense();
  }

  bool finite() const {
    bool ok = true;
    for_each_stored([&](int, double v) { ok = ok && std::isfinite(v); });
    return ok;
  }

 private:
  std::variant<DenseVector, SparseVector> v_;
};

}  // namespace parlin::local
