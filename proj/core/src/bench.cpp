#include "parlin/firstorder/bench.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parlin/util/rng.hpp"

namespace parlin::firstorder {

using local::DenseVector;
using local::Vector;

const std::vector<std::string>& all_methods() {
  static const std::vector<std::string> methods{"gra", "acc", "acc_r", "acc_b", "acc_rb", "lbfgs"};
  return methods;
}

bool method_supports(const std::string& method, const SeparableObjective& objective) {
  return method != "lbfgs" || objective.reg != Reg::kL1;
}

double estimate_l0(const SeparableObjective& objective, std::uint64_t seed) {
  Rng rng(seed);
  DenseVector v(objective.dim);
  for (int i = 0; i < v.size(); ++i) v[i] = rng.gaussian();
  local::scale(1.0 / local::norm2(v), v);

  double lambda_max = 0.0;
  for (int it = 0; it < 20; ++it) {
    auto bv = engine::broadcast(v);
    DenseVector gv = engine::aggregate(
        objective.data, DenseVector(objective.dim),
        [bv](DenseVector& acc, const LabeledPoint& p) {
          const double t = p.features.dot(bv.value());
          if (t != 0.0) p.features.add_scaled_to(t, acc);
        },
        [](DenseVector& lhs, const DenseVector& rhs) { local::axpy(1.0, rhs, lhs); });
    lambda_max = local::norm2(gv);
    if (lambda_max == 0.0) break;
    local::scale(1.0 / lambda_max, gv);
    v = std::move(gv);
  }

  double l = lambda_max;
  if (objective.loss == Loss::kLogistic) l *= 0.25;
  if (objective.reg == Reg::kL2) l += objective.lambda;
  return 1.2 * std::max(l, 1e-12);
}

std::vector<MethodTrace> run_benchmark(const SeparableObjective& objective,
                                       const std::vector<std::string>& methods, int iters,
                                       double l0) {
  std::vector<MethodTrace> out;
  out.reserve(methods.size());
  for (const std::string& method : methods) {
    if (!method_supports(method, objective)) {
      throw std::invalid_argument("method '" + method + "' cannot run on this objective");
    }
    DenseVector w0(objective.dim);
    FoResult r;
    if (method == "gra") {
      r = gra(objective, std::move(w0), 1.0 / l0, iters);
    } else if (method == "lbfgs") {
      LbfgsOptions o;
      o.max_iter = iters;
      r = lbfgs(objective, std::move(w0), o);
    } else {
      AccOptions o;
      o.l0 = l0;
      o.max_iter = iters;
      o.tol = 0.0;
      if (method == "acc") {
        r = acc(objective, std::move(w0), o);
      } else if (method == "acc_r") {
        r = acc_r(objective, std::move(w0), o);
      } else if (method == "acc_b") {
        r = acc_b(objective, std::move(w0), o);
      } else if (method == "acc_rb") {
        r = acc_rb(objective, std::move(w0), o);
      } else {
        throw std::invalid_argument("unknown method '" + method + "'");
      }
    }
    // Identical x-grid across methods: pad stationary early exits.
    while (static_cast<int>(r.trace.size()) <= iters) {
      tfocs::TraceEntry e = r.trace.back();
      e.iter = static_cast<int>(r.trace.size());
      r.trace.push_back(e);
    }
    out.push_back(MethodTrace{method, std::move(r.trace), std::move(r.w)});
  }
  return out;
}

double best_objective(const std::vector<MethodTrace>& runs) {
  double best = std::numeric_limits<double>::infinity();
  for (const MethodTrace& run : runs) {
    for (const auto& e : run.trace) best = std::min(best, e.objective);
  }
  return best;
}

double gap_at(const MethodTrace& run, int iter, double best) {
  const int last = static_cast<int>(run.trace.size()) - 1;
  const int at = std::min(iter, last);
  return run.trace[at].objective - best;
}

}  // namespace parlin::firstorder
