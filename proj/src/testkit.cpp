#include "exlp/testkit.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace exlp::testkit {

namespace {

long long binomial_guarded(int n, int m, long long guard) {
  long long result = 1;
  for (int i = 1; i <= m; ++i) {
    result = result * (n - m + i) / i;
    if (result > guard) return guard + 1;
  }
  return result;
}

// index -> m-subset of {0..n-1} in lexicographic order
std::vector<int> unrank_combination(long long rank, int n, int m) {
  std::vector<int> subset;
  subset.reserve(static_cast<std::size_t>(m));
  int start = 0;
  for (int slot = 0; slot < m; ++slot) {
    for (int v = start; v <= n - (m - slot); ++v) {
      long long tail = binomial_guarded(n - v - 1, m - slot - 1, 1LL << 62);
      if (rank < tail) {
        subset.push_back(v);
        start = v + 1;
        break;
      }
      rank -= tail;
    }
  }
  return subset;
}

BasisRecord classify_basis(const StandardLP& lp, std::vector<int> basis) {
  BasisRecord record;
  record.basis = std::move(basis);
  auto fac = rational_lu_factorize(lp.a, record.basis);
  if (!fac) {
    record.cls = BasisClass::kSingular;
    return record;
  }
  BasicSolution sol = basic_solution(lp, *fac);
  FeasibilityReport report = check_exact_feasibility(lp, sol);
  switch (report.kind) {
    case FeasibilityReport::Kind::kOptimal: record.cls = BasisClass::kOptimal; break;
    case FeasibilityReport::Kind::kPrimalInfeasible:
      record.cls = BasisClass::kPrimalInfeasible;
      break;
    case FeasibilityReport::Kind::kDualInfeasible:
      record.cls = BasisClass::kDualInfeasible;
      break;
  }
  record.solution = std::move(sol);
  return record;
}

}  // namespace

BruteForceResult brute_force_optimum(const StandardLP& lp, bool parallel) {
  const int m = lp.num_rows();
  const int n = lp.num_cols();
  if (m < 1 || n < m) throw std::invalid_argument("brute_force_optimum: bad dimensions");
  constexpr long long kGuard = 1000000;
  long long count = binomial_guarded(n, m, kGuard);
  if (count > kGuard) {
    throw std::invalid_argument("brute_force_optimum: too many bases to enumerate");
  }

  BruteForceResult result;
  result.bases.resize(static_cast<std::size_t>(count));

#ifdef _OPENMP
  if (parallel) {
    #pragma omp parallel for schedule(dynamic, 8)
    for (long long r = 0; r < count; ++r) {
      result.bases[static_cast<std::size_t>(r)] =
          classify_basis(lp, unrank_combination(r, n, m));
    }
  } else {
    for (long long r = 0; r < count; ++r) {
      result.bases[static_cast<std::size_t>(r)] =
          classify_basis(lp, unrank_combination(r, n, m));
    }
  }
#else
  (void)parallel;
  for (long long r = 0; r < count; ++r) {
    result.bases[static_cast<std::size_t>(r)] = classify_basis(lp, unrank_combination(r, n, m));
  }
#endif

  for (const BasisRecord& record : result.bases) {
    if (record.cls != BasisClass::kOptimal) continue;
    Rational objective(0);
    for (std::size_t j = 0; j < record.solution->x.size(); ++j) {
      objective += lp.cost[j] * record.solution->x[j];
    }
    if (!result.found || objective < result.objective) {
      result.objective = objective;
    }
    result.found = true;
  }
  if (result.found) {
    for (const BasisRecord& record : result.bases) {
      if (record.cls != BasisClass::kOptimal) continue;
      Rational objective(0);
      for (std::size_t j = 0; j < record.solution->x.size(); ++j) {
        objective += lp.cost[j] * record.solution->x[j];
      }
      if (objective == result.objective) {
        bool dup = false;
        for (const BasicSolution& seen : result.optimal_vertices) {
          if (seen.x == record.solution->x) {
            dup = true;
            break;
          }
        }
        if (!dup) result.optimal_vertices.push_back(*record.solution);
      }
    }
  }
  return result;
}

std::pair<Rational, Rational> min_violation_thresholds(const StandardLP& lp) {
  const long n = lp.num_cols();
  long size_a = encoding_length(lp.a);
  long size_b = encoding_length(lp.b);
  long size_l = encoding_length(lp.lower);
  long size_c = encoding_length(lp.cost);
  long primal_exp = 4 * (size_a + size_b) + 5 * size_l + 2 * n * n + 4 * n;
  long dual_exp = 4 * (size_a + size_c) + 2 * n * n + 4 * n;
  return {pow2(-primal_exp), pow2(-dual_exp)};
}

long iteration_bound(const Rational& tau, const Rational& eps, const Rational& sigma) {
  if (sgn(tau) <= 0) throw std::invalid_argument("iteration_bound: tau must be positive");
  if (sgn(sigma) <= 0) throw std::invalid_argument("iteration_bound: sigma must be positive");
  if (sgn(eps) <= 0 || eps >= 1) {
    throw std::invalid_argument("iteration_bound: eps must lie in (0, 1)");
  }
  // ceil(log base / log rate) for 0 < rate < 1 is the smallest integer k with
  // rate^k <= base; negative for base > 1
  auto ceil_log = [](const Rational& base, const Rational& rate) {
    long k = 0;
    Rational power(1);
    if (power <= base) {
      // walk down while rate^(k-1) still satisfies the bound
      while (true) {
        Rational prev = power / rate;
        if (prev > base) break;
        power = prev;
        --k;
        if (k < -100000) throw std::runtime_error("iteration_bound: runaway exponent");
      }
      return k;
    }
    while (power > base) {
      power *= rate;
      ++k;
      if (k > 100000) throw std::runtime_error("iteration_bound: runaway exponent");
    }
    return k;
  };
  long k1 = ceil_log(tau, eps);
  long k2 = ceil_log(tau * eps / sigma, eps * eps);
  return std::max(k1, k2);
}

StandardLP random_feasible_lp(std::uint64_t seed, int m, int n, int coeff_range) {
  if (m < 1 || n < m) throw std::invalid_argument("random_feasible_lp: need 1 <= m <= n");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num_dist(-coeff_range, coeff_range);
  std::uniform_int_distribution<int> den_dist(1, 4);
  std::uniform_int_distribution<int> small_den(1, 2);
  std::uniform_int_distribution<int> pos_num(1, 4);
  std::uniform_int_distribution<int> bound_num(-3, 3);
  std::uniform_int_distribution<int> cost_num(1, 6);
  std::uniform_int_distribution<int> cost_den(1, 3);
  std::uniform_int_distribution<int> coin(0, 2);

  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<MatrixEntry> triplets;
    for (int i = 0; i < m; ++i) {
      bool any = false;
      for (int j = 0; j < n; ++j) {
        if (coin(rng) == 0 && j != i % n) continue;  // keep rows reasonably dense
        int num = num_dist(rng);
        if (num == 0) num = 1;
        triplets.push_back({i, j, make_rational(num, den_dist(rng))});
        any = true;
      }
      if (!any) {
        triplets.push_back({i, i % n, Rational(1)});
      }
    }
    StandardLP lp;
    lp.a = RatMatrix::from_triplets(m, n, std::move(triplets));

    // exact row rank check via elimination on a dense copy
    {
      auto dense = lp.a.to_dense();
      int rank = 0;
      for (int col = 0; col < n && rank < m; ++col) {
        int pivot = -1;
        for (int row = rank; row < m; ++row) {
          if (sgn(dense[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]) != 0) {
            pivot = row;
            break;
          }
        }
        if (pivot < 0) continue;
        std::swap(dense[static_cast<std::size_t>(pivot)], dense[static_cast<std::size_t>(rank)]);
        for (int row = rank + 1; row < m; ++row) {
          Rational f = dense[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] /
                       dense[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
          if (sgn(f) == 0) continue;
          for (int cc = col; cc < n; ++cc) {
            dense[static_cast<std::size_t>(row)][static_cast<std::size_t>(cc)] -=
                f * dense[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)];
          }
        }
        ++rank;
      }
      if (rank < m) continue;  // resample
    }

    lp.lower.resize(static_cast<std::size_t>(n));
    RatVector interior(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      lp.lower[static_cast<std::size_t>(j)] = make_rational(bound_num(rng), small_den(rng));
      interior[static_cast<std::size_t>(j)] =
          lp.lower[static_cast<std::size_t>(j)] + make_rational(pos_num(rng), small_den(rng));
    }
    lp.b = lp.a.multiply(interior);

    RatVector y0(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) y0[static_cast<std::size_t>(i)] = make_rational(bound_num(rng), small_den(rng));
    RatVector aty = lp.a.multiply_transpose(y0);
    lp.cost.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      Rational slack =
          coin(rng) == 0 ? Rational(0) : make_rational(cost_num(rng), cost_den(rng));
      lp.cost[static_cast<std::size_t>(j)] = aty[static_cast<std::size_t>(j)] + slack;
    }

    lp.columns.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      lp.columns[static_cast<std::size_t>(j)] = {ColumnKind::kStructural, j,
                                                 "x" + std::to_string(j + 1)};
    }
    lp.row_names.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) lp.row_names[static_cast<std::size_t>(i)] = "r" + std::to_string(i + 1);

    BruteForceResult check = brute_force_optimum(lp);
    if (check.found) return lp;
  }
  throw std::runtime_error("random_feasible_lp: resample budget exhausted");
}

}  // namespace exlp::testkit
