#include "exlp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace exlp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

RatVector BasisFactorization::solve(const RatVector& rhs) const {
  const int m = dim;
  if (static_cast<int>(rhs.size()) != m) {
    throw std::invalid_argument("BasisFactorization::solve: dimension mismatch");
  }
  RatVector w(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    w[static_cast<std::size_t>(i)] = rhs[static_cast<std::size_t>(row_perm[static_cast<std::size_t>(i)])];
  }
  // L u = w (unit diagonal), then U v = u
  for (int i = 1; i < m; ++i) {
    for (int j = 0; j < i; ++j) {
      w[static_cast<std::size_t>(i)] -=
          factors[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(j)];
    }
  }
  for (int i = m - 1; i >= 0; --i) {
    for (int j = i + 1; j < m; ++j) {
      w[static_cast<std::size_t>(i)] -=
          factors[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(j)];
    }
    w[static_cast<std::size_t>(i)] /= factors[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  }
  RatVector z(static_cast<std::size_t>(m));
  for (int q = 0; q < m; ++q) {
    z[static_cast<std::size_t>(col_perm[static_cast<std::size_t>(q)])] = w[static_cast<std::size_t>(q)];
  }
  return z;
}

RatVector BasisFactorization::solve_transpose(const RatVector& rhs) const {
  const int m = dim;
  if (static_cast<int>(rhs.size()) != m) {
    throw std::invalid_argument("BasisFactorization::solve_transpose: dimension mismatch");
  }
  RatVector w(static_cast<std::size_t>(m));
  for (int q = 0; q < m; ++q) {
    w[static_cast<std::size_t>(q)] = rhs[static_cast<std::size_t>(col_perm[static_cast<std::size_t>(q)])];
  }
  // U^T s = w (forward, diagonal from U), then L^T v = s (backward, unit)
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < i; ++j) {
      w[static_cast<std::size_t>(i)] -=
          factors[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)];
    }
    w[static_cast<std::size_t>(i)] /= factors[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  }
  for (int i = m - 1; i >= 0; --i) {
    for (int j = i + 1; j < m; ++j) {
      w[static_cast<std::size_t>(i)] -=
          factors[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)];
    }
  }
  RatVector z(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    z[static_cast<std::size_t>(row_perm[static_cast<std::size_t>(i)])] = w[static_cast<std::size_t>(i)];
  }
  return z;
}

std::optional<BasisFactorization> rational_lu_factorize(const RatMatrix& a,
                                                        const std::vector<int>& basis) {
  const int m = a.rows();
  if (static_cast<int>(basis.size()) != m) {
    throw std::invalid_argument("rational_lu_factorize: basis must have m columns");
  }
  BasisFactorization fac;
  fac.basis = basis;
  fac.dim = m;
  fac.factors.assign(static_cast<std::size_t>(m),
                     std::vector<Rational>(static_cast<std::size_t>(m), Rational(0)));
  for (int q = 0; q < m; ++q) {
    RatVector col = a.column(basis[static_cast<std::size_t>(q)]);
    for (int i = 0; i < m; ++i) {
      fac.factors[static_cast<std::size_t>(i)][static_cast<std::size_t>(q)] = col[static_cast<std::size_t>(i)];
    }
  }
  fac.row_perm.resize(static_cast<std::size_t>(m));
  fac.col_perm.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    fac.row_perm[static_cast<std::size_t>(i)] = i;
    fac.col_perm[static_cast<std::size_t>(i)] = i;
  }
  auto& w = fac.factors;

  for (int k = 0; k < m; ++k) {
    // nonzero counts of the active submatrix
    std::vector<int> row_count(static_cast<std::size_t>(m), 0);
    std::vector<int> col_count(static_cast<std::size_t>(m), 0);
    for (int i = k; i < m; ++i) {
      for (int j = k; j < m; ++j) {
        if (sgn(w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) != 0) {
          ++row_count[static_cast<std::size_t>(i)];
          ++col_count[static_cast<std::size_t>(j)];
        }
      }
    }
    int best_i = -1, best_j = -1;
    long best_score = 0;
    for (int i = k; i < m; ++i) {
      for (int j = k; j < m; ++j) {
        if (sgn(w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) == 0) continue;
        long score = static_cast<long>(row_count[static_cast<std::size_t>(i)] - 1) *
                     (col_count[static_cast<std::size_t>(j)] - 1);
        bool take = best_i < 0 || score < best_score;
        if (!take && score == best_score) {
          int oi = fac.row_perm[static_cast<std::size_t>(i)];
          int oj = fac.col_perm[static_cast<std::size_t>(j)];
          int bi = fac.row_perm[static_cast<std::size_t>(best_i)];
          int bj = fac.col_perm[static_cast<std::size_t>(best_j)];
          take = oi < bi || (oi == bi && oj < bj);
        }
        if (take) {
          best_i = i;
          best_j = j;
          best_score = score;
        }
      }
    }
    if (best_i < 0) return std::nullopt;  // singular

    if (best_i != k) {
      std::swap(w[static_cast<std::size_t>(best_i)], w[static_cast<std::size_t>(k)]);
      std::swap(fac.row_perm[static_cast<std::size_t>(best_i)], fac.row_perm[static_cast<std::size_t>(k)]);
    }
    if (best_j != k) {
      for (int i = 0; i < m; ++i) {
        std::swap(w[static_cast<std::size_t>(i)][static_cast<std::size_t>(best_j)],
                  w[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
      }
      std::swap(fac.col_perm[static_cast<std::size_t>(best_j)], fac.col_perm[static_cast<std::size_t>(k)]);
    }
    const Rational& pivot = w[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    for (int i = k + 1; i < m; ++i) {
      Rational factor = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] / pivot;
      w[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = factor;
      if (sgn(factor) == 0) continue;
      for (int j = k + 1; j < m; ++j) {
        bool was_zero = sgn(w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) == 0;
        w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            factor * w[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        if (was_zero && sgn(w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) != 0) {
          ++fac.fill_in;
        }
      }
    }
  }
  return fac;
}

BasicSolution basic_solution(const StandardLP& lp, const BasisFactorization& fac) {
  const int m = lp.num_rows();
  const int n = lp.num_cols();
  BasicSolution sol;
  sol.basis = fac.basis;

  std::vector<bool> in_basis(static_cast<std::size_t>(n), false);
  for (int j : fac.basis) in_basis[static_cast<std::size_t>(j)] = true;
  for (int j = 0; j < n; ++j) {
    if (!in_basis[static_cast<std::size_t>(j)]) sol.nonbasic.push_back(j);
  }

  sol.x = lp.lower;
  RatVector rhs = lp.b;
  for (const MatrixEntry& e : lp.a.entries()) {
    if (!in_basis[static_cast<std::size_t>(e.col)]) {
      rhs[static_cast<std::size_t>(e.row)] -= e.value * lp.lower[static_cast<std::size_t>(e.col)];
    }
  }
  RatVector xb = fac.solve(rhs);
  for (int q = 0; q < m; ++q) {
    sol.x[static_cast<std::size_t>(fac.basis[static_cast<std::size_t>(q)])] = xb[static_cast<std::size_t>(q)];
  }

  RatVector cb(static_cast<std::size_t>(m));
  for (int q = 0; q < m; ++q) {
    cb[static_cast<std::size_t>(q)] = lp.cost[static_cast<std::size_t>(fac.basis[static_cast<std::size_t>(q)])];
  }
  sol.y = fac.solve_transpose(cb);

  RatVector aty = lp.a.multiply_transpose(sol.y);
  sol.dual_slack.reserve(sol.nonbasic.size());
  for (int j : sol.nonbasic) {
    sol.dual_slack.push_back(lp.cost[static_cast<std::size_t>(j)] - aty[static_cast<std::size_t>(j)]);
  }
  return sol;
}

FeasibilityReport check_exact_feasibility(const StandardLP& lp, const BasicSolution& sol) {
  FeasibilityReport report;
  for (int j : sol.basis) {
    Rational gap = lp.lower[static_cast<std::size_t>(j)] - sol.x[static_cast<std::size_t>(j)];
    if (sgn(gap) > 0 && gap > report.violation) {
      report.kind = FeasibilityReport::Kind::kPrimalInfeasible;
      report.index = j;
      report.violation = gap;
    }
  }
  if (report.kind == FeasibilityReport::Kind::kPrimalInfeasible) return report;

  for (std::size_t q = 0; q < sol.nonbasic.size(); ++q) {
    Rational neg = -sol.dual_slack[q];
    if (sgn(neg) > 0 && neg > report.violation) {
      report.kind = FeasibilityReport::Kind::kDualInfeasible;
      report.index = sol.nonbasic[q];
      report.violation = neg;
    }
  }
  return report;
}

ExactSolution solve_with_basis_verification(const StandardLP& lp, LpOracle& oracle,
                                            const VerifyConfig& cfg) {
  if (cfg.stall < 1) throw std::invalid_argument("solve_with_basis_verification: stall >= 1");
  ExactSolution result;
  SolveStats& stats = result.stats;

  std::set<std::vector<int>> rejected;
  std::vector<int> last_basis;
  int stall_count = 0;
  BasicSolution best;

  RefineConfig refine_cfg = cfg.refine;
  refine_cfg.tau = Rational(0);

  auto observer = [&](const RoundInfo& info) {
    if (info.basis == last_basis) {
      ++stall_count;
    } else {
      last_basis = info.basis;
      stall_count = 1;
    }
    if (stall_count < cfg.stall || rejected.count(last_basis) != 0) {
      return ObserverAction::kContinue;
    }
    auto start = Clock::now();
    std::vector<int> candidate = last_basis;
    std::sort(candidate.begin(), candidate.end());
    auto fac = rational_lu_factorize(lp.a, candidate);
    ++stats.factorizations;
    if (!fac) {
      stats.factorization_seconds += seconds_since(start);
      rejected.insert(last_basis);
      return ObserverAction::kContinue;
    }
    BasicSolution sol = basic_solution(lp, *fac);
    FeasibilityReport report = check_exact_feasibility(lp, sol);
    stats.factorization_seconds += seconds_since(start);
    if (report.kind != FeasibilityReport::Kind::kOptimal) {
      rejected.insert(last_basis);
      return ObserverAction::kContinue;
    }
    best = std::move(sol);
    return ObserverAction::kStop;
  };

  RefinementOutcome outcome = iterative_refine(lp, oracle, refine_cfg, observer);
  stats.rounds = outcome.rounds;
  stats.oracle_calls = outcome.oracle_calls;
  stats.final_delta = outcome.final_delta;
  stats.final_scale = outcome.final_scale;

  switch (outcome.status) {
    case RefineStatus::kObserverStop:
      result.status = SolveStatus::kOptimal;
      result.x = std::move(best.x);
      result.y = std::move(best.y);
      result.basis = std::move(best.basis);
      break;
    case RefineStatus::kToleranceReached:
      // delta = 0: the iterate itself is exactly optimal
      result.status = SolveStatus::kOptimal;
      result.x = std::move(outcome.x);
      result.y = std::move(outcome.y);
      break;
    case RefineStatus::kOracleFailure:
      result.status = SolveStatus::kOracleFailure;
      result.x = std::move(outcome.x);
      result.y = std::move(outcome.y);
      result.message = outcome.message.empty() ? "oracle failure" : outcome.message;
      return result;
    case RefineStatus::kRoundLimit:
      result.status = SolveStatus::kRoundLimit;
      result.x = std::move(outcome.x);
      result.y = std::move(outcome.y);
      result.message = "round limit reached before an optimal basis was verified";
      return result;
  }

  Rational objective(0);
  for (std::size_t j = 0; j < result.x.size(); ++j) objective += lp.cost[j] * result.x[j];
  result.objective = std::move(objective);
  return result;
}

}  // namespace exlp
