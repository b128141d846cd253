#include "exlp/reconstruct.hpp"

#include <chrono>
#include <stdexcept>

#include "exlp/kernels.hpp"

namespace exlp {

namespace {

using Clock = std::chrono::steady_clock;

bool admissible(const Rational& candidate, const Rational& alpha, const Int& bound) {
  const Int& q = candidate.get_den();
  if (q < 1 || q > bound) return false;
  // |p/q - alpha| < 1/(2 M q)
  return abs(Rational(candidate - alpha)) * Rational(2 * bound * q, 1) < 1;
}

}  // namespace

std::optional<Rational> reconstruct_scalar(const Rational& alpha, const Int& max_denominator) {
  if (max_denominator < 1) {
    throw std::invalid_argument("reconstruct_scalar: denominator bound must be >= 1");
  }
  // continued fraction convergents h_i/k_i of alpha while k_i <= M; any
  // admissible value must be one of them, and at most one convergent passes
  std::vector<Rational> candidates;
  Rational x = alpha;
  Int h2 = 0, k2 = 1;  // h_{i-2}, k_{i-2}
  Int h1 = 1, k1 = 0;  // h_{i-1}, k_{i-1}
  while (true) {
    Int a = floor_to_int(x);
    Int hi = a * h1 + h2;
    Int ki = a * k1 + k2;
    if (ki > max_denominator) break;
    candidates.emplace_back(Rational(hi, ki));
    candidates.back().canonicalize();
    Rational frac = x - Rational(a, 1);
    if (sgn(frac) == 0) break;  // exact expansion finished
    x = Rational(1) / frac;
    h2 = std::move(h1);
    k2 = std::move(k1);
    h1 = std::move(hi);
    k1 = std::move(ki);
  }
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    if (admissible(*it, alpha, max_denominator)) return *it;
  }
  return std::nullopt;
}

namespace {

// Sequential reconstruction of v[begin, end) into out; the dlcm fast path
// carries a running lcm of the denominators recovered so far.
bool reconstruct_range(const RatVector& v, const Int& max_denominator,
                       const std::vector<bool>& skipped, bool dlcm, std::size_t begin,
                       std::size_t end, RatVector& out) {
  Int running_lcm = 1;
  for (std::size_t i = begin; i < end; ++i) {
    if (skipped[i]) {
      out[i] = v[i];
      continue;
    }
    std::optional<Rational> found;
    if (dlcm && running_lcm <= max_denominator) {
      Rational quick = make_rational(round_half_even(Rational(running_lcm, 1) * v[i]),
                                     running_lcm);
      if (admissible(quick, v[i], max_denominator)) found = std::move(quick);
    }
    if (!found) found = reconstruct_scalar(v[i], max_denominator);
    if (!found) return false;
    if (dlcm) running_lcm = lcm(running_lcm, found->get_den());
    out[i] = std::move(*found);
  }
  return true;
}

}  // namespace

std::optional<RatVector> reconstruct_vector(const RatVector& v, const Int& max_denominator,
                                            const std::vector<int>& skip, bool dlcm,
                                            kernels::Lane lane) {
  if (max_denominator < 1) {
    throw std::invalid_argument("reconstruct_vector: denominator bound must be >= 1");
  }
  std::vector<bool> skipped(v.size(), false);
  for (int idx : skip) {
    if (idx < 0 || idx >= static_cast<int>(v.size())) {
      throw std::out_of_range("reconstruct_vector: skip index out of range");
    }
    skipped[static_cast<std::size_t>(idx)] = true;
  }
  RatVector out(v.size());

  if (lane == kernels::Lane::kParallel && v.size() > 1) {
    // each chunk keeps its own running lcm; every accepted value satisfies the
    // same uniqueness inequality, so the result matches the serial lane
    const std::size_t chunks = std::min<std::size_t>(v.size(), 16);
    const std::size_t chunk_size = (v.size() + chunks - 1) / chunks;
    std::vector<char> ok(chunks, 1);
    kernels::parallel_for(chunks, lane, [&](std::size_t c) {
      std::size_t begin = c * chunk_size;
      std::size_t end = std::min(v.size(), begin + chunk_size);
      if (begin < end) {
        ok[c] = reconstruct_range(v, max_denominator, skipped, dlcm, begin, end, out) ? 1 : 0;
      }
    });
    for (char c : ok) {
      if (!c) return std::nullopt;
    }
    return out;
  }

  if (!reconstruct_range(v, max_denominator, skipped, dlcm, 0, v.size(), out)) {
    return std::nullopt;
  }
  return out;
}

std::optional<RatVector> reconstruct_vector(const RatVector& v, const Int& max_denominator,
                                            const std::vector<int>& skip, bool dlcm) {
  return reconstruct_vector(v, max_denominator, skip, dlcm,
                            kernels::pick_lane(v.size() * 8));
}

Int compute_Mk(const Rational& next_scale, const Rational& beta, long round) {
  if (beta <= 1) throw std::invalid_argument("compute_Mk: beta must exceed 1");
  if (round < 1) throw std::invalid_argument("compute_Mk: round must be >= 1");
  Rational beta_pow(1);
  for (long i = 0; i < round; ++i) beta_pow *= beta;
  Rational inside = next_scale / (Rational(2) * beta_pow);
  if (sgn(inside) <= 0) return 1;
  Int m = floor_sqrt(inside);
  return m < 1 ? Int(1) : m;
}

ExactSolution solve_with_reconstruction(const StandardLP& lp, LpOracle& oracle,
                                        const ReconConfig& rcfg, const RefineConfig& cfg) {
  if (rcfg.freq < 1) throw std::invalid_argument("solve_with_reconstruction: freq must be >= 1");
  Rational eps = contraction_rate(oracle.config().eta, cfg.alpha);
  if (rcfg.beta * eps >= 1) {
    throw std::invalid_argument(
        "solve_with_reconstruction: beta must be below 1/epsilon for convergence");
  }

  ExactSolution result;
  SolveStats& stats = result.stats;
  RatVector found_x, found_y;
  std::optional<std::vector<int>> found_basis;

  long next_attempt = 0;  // k*

  RefineConfig refine_cfg = cfg;
  refine_cfg.tau = Rational(0);

  auto observer = [&](const RoundInfo& info) {
    if (info.round < next_attempt) return ObserverAction::kContinue;
    auto start = Clock::now();
    ++stats.reconstruction_attempts;
    stats.reconstruction_rounds.push_back(info.round);

    Int bound = compute_Mk(info.next_scale, rcfg.beta, info.round);

    // nonbasic entries sit at their bounds in the limit; substitute the exact
    // bound and reconstruct only the basic entries
    RatVector primal_guess = info.x;
    std::vector<int> skip;
    if (info.basis.size() == info.y.size() && !info.basis_padded) {
      std::vector<bool> in_basis(primal_guess.size(), false);
      for (int j : info.basis) in_basis[static_cast<std::size_t>(j)] = true;
      for (std::size_t j = 0; j < primal_guess.size(); ++j) {
        if (!in_basis[j]) {
          primal_guess[j] = lp.lower[j];
          skip.push_back(static_cast<int>(j));
        }
      }
    }

    bool ok = false;
    if (auto x_star = reconstruct_vector(primal_guess, bound, skip, rcfg.dlcm)) {
      if (exactly_primal_feasible(lp, *x_star)) {
        if (auto y_star = reconstruct_vector(info.y, bound, {}, rcfg.dlcm)) {
          if (exactly_dual_feasible(lp, *y_star) &&
              sgn(duality_gap(lp, *x_star, *y_star)) == 0 &&
              (!rcfg.require_basic || is_basic_point(lp, *x_star))) {
            found_x = std::move(*x_star);
            found_y = std::move(*y_star);
            if (!info.basis_padded) found_basis = info.basis;
            ok = true;
          }
        }
      }
    }
    stats.reconstruction_seconds +=
        std::chrono::duration<double>(Clock::now() - start).count();
    if (ok) return ObserverAction::kStop;
    next_attempt = static_cast<long>(
        ceil_to_int(rcfg.freq * Rational(static_cast<long>(info.round), 1)).get_si());
    return ObserverAction::kContinue;
  };

  RefinementOutcome outcome = iterative_refine(lp, oracle, refine_cfg, observer);
  stats.rounds = outcome.rounds;
  stats.oracle_calls = outcome.oracle_calls;
  stats.final_delta = outcome.final_delta;
  stats.final_scale = outcome.final_scale;

  switch (outcome.status) {
    case RefineStatus::kObserverStop:
      result.status = SolveStatus::kOptimal;
      result.x = std::move(found_x);
      result.y = std::move(found_y);
      result.basis = std::move(found_basis);
      break;
    case RefineStatus::kToleranceReached:
      // delta = 0: the iterate is exactly optimal already
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
      result.message = "round limit reached before reconstruction succeeded";
      return result;
  }

  Rational objective(0);
  for (std::size_t j = 0; j < result.x.size(); ++j) objective += lp.cost[j] * result.x[j];
  result.objective = std::move(objective);
  return result;
}

}  // namespace exlp
