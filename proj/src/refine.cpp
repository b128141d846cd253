#include "exlp/refine.hpp"

#include <stdexcept>

namespace exlp {

Rational contraction_rate(const Rational& eta, const Int& alpha) {
  Rational inv_alpha(1, alpha);
  inv_alpha.canonicalize();
  return eta > inv_alpha ? eta : inv_alpha;
}

Residuals compute_residuals(const StandardLP& lp, const RatVector& x, const RatVector& y) {
  std::size_t work = lp.a.nonzero_count() + x.size();
  return kernels::residuals(lp, x, y, kernels::pick_lane(work));
}

Rational update_scaling(const Rational& delta, const Rational& scale, const Int& alpha) {
  if (alpha < 2) throw std::invalid_argument("update_scaling: alpha must be >= 2");
  if (sgn(scale) <= 0) throw std::invalid_argument("update_scaling: scale must be positive");
  Rational floor_delta = Rational(1) / (Rational(alpha, 1) * scale);
  floor_delta.canonicalize();
  Rational effective = delta > floor_delta ? delta : floor_delta;
  return pow2(ceil_log2(Rational(1) / effective));
}

std::pair<RatVector, RatVector> apply_correction(const RatVector& x, const RatVector& y,
                                                 const RatVector& xc, const RatVector& yc,
                                                 const Rational& next_scale) {
  if (x.size() != xc.size() || y.size() != yc.size()) {
    throw std::invalid_argument("apply_correction: dimension mismatch");
  }
  Rational inv = Rational(1) / next_scale;
  RatVector nx(x.size());
  RatVector ny(y.size());
  for (std::size_t j = 0; j < x.size(); ++j) nx[j] = x[j] + inv * xc[j];
  for (std::size_t i = 0; i < y.size(); ++i) ny[i] = y[i] + inv * yc[i];
  return {std::move(nx), std::move(ny)};
}

RefinementOutcome iterative_refine(const StandardLP& lp, LpOracle& oracle,
                                   const RefineConfig& cfg, const RefineObserver& observer) {
  RefinementOutcome out;
  if (cfg.alpha < 2) throw std::invalid_argument("iterative_refine: alpha must be >= 2");
  if (sgn(cfg.tau) < 0) throw std::invalid_argument("iterative_refine: tau must be >= 0");

  const int precision = oracle.config().precision;

  FloatData data;
  try {
    data = round_to_oracle_precision(lp, precision);
  } catch (const OracleInputError& e) {
    out.status = RefineStatus::kOracleFailure;
    out.oracle_failure = OracleFailureReason::kInputOutOfRange;
    out.message = e.what();
    return out;
  }

  OracleSolution first = oracle.solve(data, lp);
  ++out.oracle_calls;
  if (first.status != OracleStatus::kSolution) {
    out.status = RefineStatus::kOracleFailure;
    out.oracle_failure = first.failure;
    out.message = first.detail;
    return out;
  }

  RatVector x = std::move(first.x);
  RatVector y = std::move(first.y);
  std::vector<int> basis = std::move(first.basis);
  bool basis_padded = first.basis_padded;
  Rational scale(1);  // Delta_k

  for (long k = 1; k <= cfg.max_rounds; ++k) {
    out.rounds = k;
    Residuals res = compute_residuals(lp, x, y);
    out.final_delta = res.delta;
    out.final_scale = scale;

    if (res.delta <= cfg.tau) {
      out.status = RefineStatus::kToleranceReached;
      out.x = std::move(x);
      out.y = std::move(y);
      out.basis = std::move(basis);
      return out;
    }

    Rational next_scale = update_scaling(res.delta, scale, cfg.alpha);
    if (observer) {
      RoundInfo info{k, x, y, res, scale, next_scale, basis, basis_padded};
      if (observer(info) == ObserverAction::kStop) {
        out.status = RefineStatus::kObserverStop;
        out.x = std::move(x);
        out.y = std::move(y);
        out.basis = std::move(basis);
        return out;
      }
    }

    // scaled residual problem of this round, exact and rounded
    StandardLP round_lp;
    round_lp.a = lp.a;
    round_lp.b.resize(res.b_hat.size());
    round_lp.lower.resize(res.l_hat.size());
    round_lp.cost.resize(res.c_hat.size());
    for (std::size_t i = 0; i < res.b_hat.size(); ++i) round_lp.b[i] = next_scale * res.b_hat[i];
    for (std::size_t j = 0; j < res.l_hat.size(); ++j) {
      round_lp.lower[j] = next_scale * res.l_hat[j];
      round_lp.cost[j] = next_scale * res.c_hat[j];
    }
    round_lp.columns = lp.columns;
    round_lp.row_names = lp.row_names;

    FloatData round_data;
    try {
      round_data.a = data.a;
      round_data.precision = precision;
      round_data.b = round_vector(round_lp.b, precision);
      round_data.lower = round_vector(round_lp.lower, precision);
      round_data.cost = round_vector(round_lp.cost, precision);
    } catch (const OracleInputError& e) {
      out.status = RefineStatus::kOracleFailure;
      out.oracle_failure = OracleFailureReason::kInputOutOfRange;
      out.message = e.what();
      break;
    }

    OracleSolution corrector = oracle.solve(round_data, round_lp, &basis);
    ++out.oracle_calls;
    if (corrector.status != OracleStatus::kSolution) {
      out.status = RefineStatus::kOracleFailure;
      out.oracle_failure = corrector.failure;
      out.message = corrector.detail;
      break;
    }

    auto [nx, ny] = apply_correction(x, y, corrector.x, corrector.y, next_scale);
    x = std::move(nx);
    y = std::move(ny);
    basis = std::move(corrector.basis);
    basis_padded = corrector.basis_padded;
    scale = next_scale;
  }

  if (out.status != RefineStatus::kOracleFailure) {
    out.status = RefineStatus::kRoundLimit;
    out.message = "round limit reached";
  }
  out.x = std::move(x);
  out.y = std::move(y);
  out.basis = std::move(basis);
  return out;
}

}  // namespace exlp
