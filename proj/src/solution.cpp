#include "exlp/solution.hpp"

namespace exlp {

bool exactly_primal_feasible(const StandardLP& lp, const RatVector& x) {
  RatVector ax = lp.a.multiply(x);
  for (std::size_t i = 0; i < ax.size(); ++i) {
    if (ax[i] != lp.b[i]) return false;
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < lp.lower[j]) return false;
  }
  return true;
}

bool exactly_dual_feasible(const StandardLP& lp, const RatVector& y) {
  RatVector aty = lp.a.multiply_transpose(y);
  for (std::size_t j = 0; j < aty.size(); ++j) {
    if (aty[j] > lp.cost[j]) return false;
  }
  return true;
}

Rational duality_gap(const StandardLP& lp, const RatVector& x, const RatVector& y) {
  RatVector aty = lp.a.multiply_transpose(y);
  Rational gap(0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    gap += (x[j] - lp.lower[j]) * (lp.cost[j] - aty[j]);
  }
  return gap;
}

bool exactly_optimal(const StandardLP& lp, const RatVector& x, const RatVector& y) {
  return exactly_primal_feasible(lp, x) && exactly_dual_feasible(lp, y) &&
         sgn(duality_gap(lp, x, y)) == 0;
}

bool is_basic_point(const StandardLP& lp, const RatVector& x) {
  std::vector<int> support;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] != lp.lower[j]) support.push_back(static_cast<int>(j));
  }
  const int m = lp.num_rows();
  if (static_cast<int>(support.size()) > m) return false;
  if (support.empty()) return true;

  // exact column rank of A restricted to the support
  auto cols = lp.a.select_columns(support).to_dense();
  int rank = 0;
  const int k = static_cast<int>(support.size());
  for (int c = 0; c < k && rank < m; ++c) {
    int pivot = -1;
    for (int r = rank; r < m; ++r) {
      if (sgn(cols[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return false;  // dependent column
    std::swap(cols[static_cast<std::size_t>(pivot)], cols[static_cast<std::size_t>(rank)]);
    for (int r = rank + 1; r < m; ++r) {
      Rational factor = cols[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] /
                        cols[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
      if (sgn(factor) == 0) continue;
      for (int cc = c; cc < k; ++cc) {
        cols[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -=
            factor * cols[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)];
      }
    }
    ++rank;
  }
  return rank == k;
}

}  // namespace exlp
