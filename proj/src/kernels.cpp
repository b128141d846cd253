#include "exlp/kernels.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace exlp::kernels {

bool parallel_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

Lane pick_lane(std::size_t work_items) {
#ifdef _OPENMP
  // rational arithmetic is expensive per element, so a modest cutoff pays off
  return work_items >= 512 ? Lane::kParallel : Lane::kSerial;
#else
  (void)work_items;
  return Lane::kSerial;
#endif
}

void parallel_for(std::size_t count, Lane lane, const std::function<void(std::size_t)>& fn) {
#ifdef _OPENMP
  if (lane == Lane::kParallel) {
    #pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
#else
  (void)lane;
#endif
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

RatVector matvec(const RatMatrix& a, const RatVector& x, Lane lane) {
  if (static_cast<int>(x.size()) != a.cols()) {
    throw std::invalid_argument("kernels::matvec: dimension mismatch");
  }
  if (lane == Lane::kSerial) return a.multiply(x);

  RatVector y(static_cast<std::size_t>(a.rows()), Rational(0));
  const auto starts = a.row_starts();
  const auto& entries = a.entries();
  const std::size_t rows = static_cast<std::size_t>(a.rows());
  // contiguous row blocks per thread; scratch rationals are reused across the
  // whole block to keep allocation churn out of the inner loop
#ifdef _OPENMP
  #pragma omp parallel
#endif
  {
    Rational acc(0), term(0);
#ifdef _OPENMP
    #pragma omp for schedule(static)
#endif
    for (std::size_t i = 0; i < rows; ++i) {
      mpq_set_si(acc.get_mpq_t(), 0, 1);
      for (std::size_t k = starts[i]; k < starts[i + 1]; ++k) {
        mpq_mul(term.get_mpq_t(), entries[k].value.get_mpq_t(),
                x[static_cast<std::size_t>(entries[k].col)].get_mpq_t());
        mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), term.get_mpq_t());
      }
      y[i] = acc;
    }
  }
  return y;
}

RatVector matvec_transpose(const RatMatrix& a, const RatVector& y, Lane lane) {
  if (static_cast<int>(y.size()) != a.rows()) {
    throw std::invalid_argument("kernels::matvec_transpose: dimension mismatch");
  }
  if (lane == Lane::kSerial) return a.multiply_transpose(y);

#ifdef _OPENMP
  RatVector z(static_cast<std::size_t>(a.cols()), Rational(0));
  const auto& entries = a.entries();
  #pragma omp parallel
  {
    RatVector local(static_cast<std::size_t>(a.cols()), Rational(0));
    Rational term(0);
    #pragma omp for schedule(static) nowait
    for (std::size_t k = 0; k < entries.size(); ++k) {
      mpq_mul(term.get_mpq_t(), entries[k].value.get_mpq_t(),
              y[static_cast<std::size_t>(entries[k].row)].get_mpq_t());
      Rational& cell = local[static_cast<std::size_t>(entries[k].col)];
      mpq_add(cell.get_mpq_t(), cell.get_mpq_t(), term.get_mpq_t());
    }
    #pragma omp critical
    {
      for (std::size_t j = 0; j < local.size(); ++j) {
        if (sgn(local[j]) != 0) {
          mpq_add(z[j].get_mpq_t(), z[j].get_mpq_t(), local[j].get_mpq_t());
        }
      }
    }
  }
  return z;
#else
  return a.multiply_transpose(y);
#endif
}

Residuals residuals(const StandardLP& lp, const RatVector& x, const RatVector& y, Lane lane) {
  const std::size_t m = static_cast<std::size_t>(lp.num_rows());
  const std::size_t n = static_cast<std::size_t>(lp.num_cols());
  if (x.size() != n || y.size() != m) {
    throw std::invalid_argument("kernels::residuals: dimension mismatch");
  }

  Residuals r;
  RatVector ax = matvec(lp.a, x, lane);
  RatVector aty = matvec_transpose(lp.a, y, lane);

  r.b_hat.assign(m, Rational(0));
  r.l_hat.assign(n, Rational(0));
  r.c_hat.assign(n, Rational(0));
  parallel_for(m, lane, [&](std::size_t i) {
    mpq_sub(r.b_hat[i].get_mpq_t(), lp.b[i].get_mpq_t(), ax[i].get_mpq_t());
  });
  parallel_for(n, lane, [&](std::size_t j) {
    mpq_sub(r.l_hat[j].get_mpq_t(), lp.lower[j].get_mpq_t(), x[j].get_mpq_t());
    mpq_sub(r.c_hat[j].get_mpq_t(), lp.cost[j].get_mpq_t(), aty[j].get_mpq_t());
  });

  Rational delta(0);
  for (std::size_t i = 0; i < m; ++i) {
    Rational v = abs(r.b_hat[i]);
    if (v > delta) delta = std::move(v);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (r.l_hat[j] > delta) delta = r.l_hat[j];
    Rational neg = -r.c_hat[j];
    if (neg > delta) delta = std::move(neg);
  }
  Rational slack_sum(0);
  for (std::size_t j = 0; j < n; ++j) slack_sum += -r.l_hat[j] * r.c_hat[j];
  Rational gap = abs(slack_sum);
  if (gap > delta) delta = std::move(gap);
  r.delta = std::move(delta);
  return r;
}

}  // namespace exlp::kernels
