#pragma once

#include <string>
#include <vector>

#include "exlp/model.hpp"

namespace exlp {

struct OracleConfig {
  int precision = kDoublePrecision;  // p
  Rational eta{1, 1000000};          // residual tolerance, 0 < eta < 1
  Rational sigma{1, 10000};          // complementarity tolerance, > 0
  long iteration_limit = 50000;
  long bland_threshold = 1000;  // degenerate pivots before switching to Bland's rule
  int refactor_interval = 100;  // pivots between basis refactorizations
};

enum class OracleStatus { kSolution, kFailure };

enum class OracleFailureReason {
  kNone,
  kIterationLimit,
  kNumericalBreakdown,
  kPrimalInfeasible,
  kUnbounded,
  kResidualCheck,
  kInputOutOfRange,
};

/// Approximate basic primal-dual pair. When status == kSolution the residual
/// bounds and basis conditions hold in exact rational arithmetic against the
/// unrounded data of the LP that was solved (the solver re-verifies before
/// returning).
struct OracleSolution {
  OracleStatus status = OracleStatus::kFailure;
  RatVector x;
  RatVector y;
  std::vector<int> basis;  // m column indices, ascending
  OracleFailureReason failure = OracleFailureReason::kNone;
  std::string detail;
  long iterations = 0;
  bool basis_padded = false;  // fallback for rank-deficient rows engaged
};

enum class ResidualCheck {
  kPass,
  kPrimalResidual,   // ||A x - b||_inf > eta
  kPrimalBound,      // x < lower - eta
  kDualFeasibility,  // cost - A^T y < -eta
  kComplementarity,  // |(x - lower)^T (cost - A^T y)| > sigma
  kBasisPrimal,      // nonbasic entry farther than eta from its bound
  kBasisDual,        // basic reduced cost larger than eta
  kBasisShape,       // basis does not have exactly m members
};

const char* to_string(ResidualCheck check);

/// Evaluates every solution condition in exact rational arithmetic against
/// `exact` and returns the first violated one.
ResidualCheck check_oracle_residuals(const OracleSolution& sol, const StandardLP& exact,
                                     const OracleConfig& cfg);

class LpOracle {
 public:
  virtual ~LpOracle() = default;
  /// `exact` carries the unrounded data of the LP being solved this call;
  /// `data` must be its rounding into the oracle's working precision.
  /// `warm_basis`, when given, seeds the solve with a starting basis; scaled
  /// corrector problems depend on this to stay inside the well-conditioned
  /// region around the previous iterate.
  virtual OracleSolution solve(const FloatData& data, const StandardLP& exact,
                               const std::vector<int>* warm_basis) = 0;
  OracleSolution solve(const FloatData& data, const StandardLP& exact) {
    return solve(data, exact, nullptr);
  }
  virtual const OracleConfig& config() const = 0;
};

/// Double-precision bounded revised simplex on the rounded data: dense LU of
/// the basis with product-form updates and periodic refactorization, Dantzig
/// pricing with a Bland fallback, and a two-phase start. Solutions that fail
/// the exact residual verification trigger one retry with a tightened ratio
/// test before failure is reported.
class SimplexOracle final : public LpOracle {
 public:
  explicit SimplexOracle(OracleConfig cfg = {}) : cfg_(std::move(cfg)) {}
  using LpOracle::solve;
  OracleSolution solve(const FloatData& data, const StandardLP& exact,
                       const std::vector<int>* warm_basis) override;
  const OracleConfig& config() const override { return cfg_; }

 private:
  OracleConfig cfg_;
};

OracleSolution oracle_solve(const FloatData& data, const StandardLP& exact,
                            const OracleConfig& cfg);

}  // namespace exlp
