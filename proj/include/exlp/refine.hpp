#pragma once

#include <functional>
#include <string>
#include <utility>

#include "exlp/kernels.hpp"
#include "exlp/model.hpp"
#include "exlp/oracle.hpp"

namespace exlp {

using kernels::Residuals;

struct RefineConfig {
  Int alpha = Int(1) << 30;  // incremental scaling limit, >= 2
  Rational tau{0};           // termination tolerance, >= 0
  long max_rounds = 1000;
};

/// max(eta, 1/alpha): the per-round residual contraction rate.
Rational contraction_rate(const Rational& eta, const Int& alpha);

/// b - A x, lower - x, cost - A^T y and their max violation delta.
Residuals compute_residuals(const StandardLP& lp, const RatVector& x, const RatVector& y);

/// delta <- max(delta, 1/(alpha * scale)); returns 2^ceil(log2(1/delta)).
Rational update_scaling(const Rational& delta, const Rational& scale, const Int& alpha);

/// (x, y) + (1/next_scale) (xc, yc).
std::pair<RatVector, RatVector> apply_correction(const RatVector& x, const RatVector& y,
                                                 const RatVector& xc, const RatVector& yc,
                                                 const Rational& next_scale);

/// Everything a driver can see at the per-round hook: the round counter, the
/// current iterate, its exact residuals, the scaling factor used to produce it,
/// the one the next corrector solve will use, and the oracle basis.
struct RoundInfo {
  long round = 0;  // k, starting at 1
  const RatVector& x;
  const RatVector& y;
  const Residuals& residuals;
  const Rational& scale;       // current scaling factor
  const Rational& next_scale;  // scaling factor of the upcoming corrector solve
  const std::vector<int>& basis;
  bool basis_padded = false;
};

enum class ObserverAction { kContinue, kStop };
/// Called once per round after the residuals are known and the termination
/// check has passed, before the problem is scaled for the next corrector.
using RefineObserver = std::function<ObserverAction(const RoundInfo&)>;

enum class RefineStatus { kToleranceReached, kObserverStop, kOracleFailure, kRoundLimit };

struct RefinementOutcome {
  RefineStatus status = RefineStatus::kRoundLimit;
  RatVector x;
  RatVector y;
  std::vector<int> basis;
  Rational final_delta{0};
  Rational final_scale{1};
  long rounds = 0;
  long oracle_calls = 0;
  OracleFailureReason oracle_failure = OracleFailureReason::kNone;
  std::string message;
};

/// Iterative refinement: repeatedly measure the exact residuals of the current
/// iterate, stop once delta <= tau, otherwise scale the residual problem by a
/// power of two, solve it with the oracle, and add the corrector divided by
/// the scaling factor. On oracle failure the last iterate is returned with
/// status kOracleFailure.
RefinementOutcome iterative_refine(const StandardLP& lp, LpOracle& oracle,
                                   const RefineConfig& cfg,
                                   const RefineObserver& observer = {});

}  // namespace exlp
