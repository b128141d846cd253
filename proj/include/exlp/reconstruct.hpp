#pragma once

#include <optional>
#include <vector>

#include "exlp/kernels.hpp"
#include "exlp/model.hpp"
#include "exlp/refine.hpp"
#include "exlp/solution.hpp"

namespace exlp {

struct ReconConfig {
  Rational beta{11, 10};  // error correction factor, > 1; must stay below 1/epsilon
  Rational freq{6, 5};    // geometric retry frequency, >= 1
  bool dlcm = true;       // reuse the lcm of recovered denominators as a fast path
  bool require_basic = false;  // reject optimal points that are not vertices
};

/// The unique p/q with 1 <= q <= max_denominator and
/// |p/q - alpha| < 1/(2 * max_denominator * q), when it exists (continued
/// fraction convergents); nullopt otherwise.
std::optional<Rational> reconstruct_scalar(const Rational& alpha, const Int& max_denominator);

/// Componentwise reconstruction. Indices in `skip` are copied verbatim. With
/// dlcm on, each recovered denominator extends a running lcm d that is first
/// tried as round(d * alpha)/d before the full convergent search; the
/// acceptance inequality is identical, so results do not depend on the path.
/// nullopt as soon as any non-skipped component fails.
std::optional<RatVector> reconstruct_vector(const RatVector& v, const Int& max_denominator,
                                            const std::vector<int>& skip, bool dlcm);
/// Lane-explicit variant; the parallel lane partitions indices into chunks
/// with per-chunk running lcms and returns identical values.
std::optional<RatVector> reconstruct_vector(const RatVector& v, const Int& max_denominator,
                                            const std::vector<int>& skip, bool dlcm,
                                            kernels::Lane lane);

/// floor(sqrt(next_scale / (2 beta^round))), clamped to at least 1.
Int compute_Mk(const Rational& next_scale, const Rational& beta, long round);

/// Iterative refinement with rational reconstruction: at scheduled rounds the
/// iterate is rounded to a denominator bound M_k; the primal candidate is
/// checked for exact feasibility before the dual is attempted, and candidates
/// are only accepted when exactly optimal. After a failed attempt the next one
/// waits until round ceil(freq * k).
ExactSolution solve_with_reconstruction(const StandardLP& lp, LpOracle& oracle,
                                        const ReconConfig& rcfg, const RefineConfig& cfg);

}  // namespace exlp
