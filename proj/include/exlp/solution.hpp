#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exlp/model.hpp"

namespace exlp {

enum class SolveStatus { kOptimal, kOracleFailure, kRoundLimit };

struct SolveStats {
  long rounds = 0;
  long oracle_calls = 0;
  long factorizations = 0;
  double factorization_seconds = 0.0;
  long reconstruction_attempts = 0;
  double reconstruction_seconds = 0.0;
  Rational final_delta{0};
  Rational final_scale{1};
  std::vector<long> reconstruction_rounds;  // rounds at which reconstruction ran
};

/// Exact primal-dual solution (when status == kOptimal it satisfies
/// feasibility, dual feasibility, and zero duality gap exactly).
struct ExactSolution {
  SolveStatus status = SolveStatus::kOptimal;
  RatVector x;
  RatVector y;
  Rational objective{0};
  std::optional<std::vector<int>> basis;
  SolveStats stats;
  std::string message;
};

bool exactly_primal_feasible(const StandardLP& lp, const RatVector& x);
bool exactly_dual_feasible(const StandardLP& lp, const RatVector& y);
/// (x - lower)^T (cost - A^T y); equals the objective gap when A x = b.
Rational duality_gap(const StandardLP& lp, const RatVector& x, const RatVector& y);
bool exactly_optimal(const StandardLP& lp, const RatVector& x, const RatVector& y);

/// True when the support {i : x_i != lower_i} extends to a basis, i.e. has at
/// most m columns and those columns are linearly independent.
bool is_basic_point(const StandardLP& lp, const RatVector& x);

}  // namespace exlp
