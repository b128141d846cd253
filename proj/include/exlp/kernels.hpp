#pragma once

#include <cstddef>
#include <functional>

#include "exlp/model.hpp"

namespace exlp::kernels {

enum class Lane { kSerial, kParallel };

bool parallel_available();
/// kParallel when OpenMP is compiled in and the workload is worth splitting.
Lane pick_lane(std::size_t work_items);

/// Runs fn(i) for i in [0, count). The parallel lane requires fn to touch
/// disjoint state per index.
void parallel_for(std::size_t count, Lane lane, const std::function<void(std::size_t)>& fn);

RatVector matvec(const RatMatrix& a, const RatVector& x, Lane lane);
RatVector matvec_transpose(const RatMatrix& a, const RatVector& y, Lane lane);

/// Residual data of an iterate: b_hat = b - A x, l_hat = lower - x,
/// c_hat = cost - A^T y, and delta = max of the primal residual magnitudes,
/// positive bound violations, positive dual violations, and the absolute
/// aggregate complementarity sum((x - lower) .* c_hat).
struct Residuals {
  RatVector b_hat;
  RatVector l_hat;
  RatVector c_hat;
  Rational delta;
};

Residuals residuals(const StandardLP& lp, const RatVector& x, const RatVector& y, Lane lane);

}  // namespace exlp::kernels
