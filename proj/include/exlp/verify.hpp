#pragma once

#include <optional>
#include <vector>

#include "exlp/model.hpp"
#include "exlp/refine.hpp"
#include "exlp/solution.hpp"

namespace exlp {

/// Exact LU factors of a basis matrix with full pivoting: P B Q = L U with L
/// unit lower triangular and U upper triangular with nonzero diagonal.
struct BasisFactorization {
  std::vector<int> basis;  // the m column indices that were factorized
  int dim = 0;
  // combined factors: strictly-lower part is L, upper part (with diagonal) is U
  std::vector<std::vector<Rational>> factors;
  std::vector<int> row_perm;  // P: position -> original row
  std::vector<int> col_perm;  // Q: position -> original basis position
  long fill_in = 0;           // entries that became nonzero during elimination

  /// Solves B z = rhs exactly.
  RatVector solve(const RatVector& rhs) const;
  /// Solves B^T z = rhs exactly.
  RatVector solve_transpose(const RatVector& rhs) const;
};

/// Markowitz-style pivoting: among nonzero pivot candidates, picks the one of
/// least fill-in estimate (r-1)(c-1), ties by lowest (row, col). Returns
/// nullopt when some elimination stage has no nonzero pivot (singular basis).
std::optional<BasisFactorization> rational_lu_factorize(const RatMatrix& a,
                                                        const std::vector<int>& basis);

/// Exact basic primal-dual solution for a factorized basis: x fixed at the
/// lower bounds off the basis, B x_B = b - N lower_N, B^T y = cost_B, and
/// dual slack z = cost_N - N^T y. Complementary slack by construction.
struct BasicSolution {
  RatVector x;           // length n
  RatVector y;           // length m
  RatVector dual_slack;  // aligned with nonbasic
  std::vector<int> basis;
  std::vector<int> nonbasic;
};

BasicSolution basic_solution(const StandardLP& lp, const BasisFactorization& fac);

struct FeasibilityReport {
  enum class Kind { kOptimal, kPrimalInfeasible, kDualInfeasible };
  Kind kind = Kind::kOptimal;
  int index = -1;        // violated column (primal) or nonbasic column (dual)
  Rational violation{0};
};

FeasibilityReport check_exact_feasibility(const StandardLP& lp, const BasicSolution& sol);

struct VerifyConfig {
  RefineConfig refine;
  int stall = 2;  // consecutive oracle calls returning the same basis before verifying
};

/// Iterative refinement interleaved with exact basis verification: once the
/// oracle basis has been stable for `stall` rounds and is not already known
/// bad, it is factorized over the rationals and its basic solution checked for
/// exact feasibility. Exactly optimal iterates (delta = 0) also terminate.
ExactSolution solve_with_basis_verification(const StandardLP& lp, LpOracle& oracle,
                                            const VerifyConfig& cfg);

}  // namespace exlp
