#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "exlp/model.hpp"
#include "exlp/verify.hpp"

namespace exlp::testkit {

enum class BasisClass { kOptimal, kPrimalInfeasible, kDualInfeasible, kSingular };

struct BasisRecord {
  std::vector<int> basis;
  BasisClass cls = BasisClass::kSingular;
  std::optional<BasicSolution> solution;  // absent for singular bases
};

struct BruteForceResult {
  bool found = false;       // some basis is both primal and dual feasible
  Rational objective{0};    // exact optimum over feasible bases (min)
  std::vector<BasicSolution> optimal_vertices;
  std::vector<BasisRecord> bases;  // every m-subset, classified
};

/// Enumerates all m-subsets of columns, solves each basis system exactly and
/// classifies it. Guard: C(n, m) must stay within 10^6. Independent of the
/// refinement path by construction.
BruteForceResult brute_force_optimum(const StandardLP& lp, bool parallel = false);

/// Smallest possible nonzero primal / dual violations of any basic solution:
/// 2^-(4<A,b> + 5<lower> + 2n^2 + 4n) and 2^-(4<A,cost> + 2n^2 + 4n).
std::pair<Rational, Rational> min_violation_thresholds(const StandardLP& lp);

/// Smallest k that forces max(eps^k, sigma * eps^(2(k-1))) <= tau, i.e.
/// ceil(max(log tau / log eps, log(tau eps / sigma) / log eps^2)). Requires
/// 0 < eps < 1, tau > 0, sigma > 0.
long iteration_bound(const Rational& tau, const Rational& eps, const Rational& sigma);

/// Deterministic random instance: full-row-rank A with entries num/den,
/// |num| <= coeff_range, den <= 4, b = A x0 for an interior x0 (primal
/// feasible), cost = A^T y0 + s with s >= 0 (dual feasible). Certified
/// solvable by brute force before it is returned.
StandardLP random_feasible_lp(std::uint64_t seed, int m, int n, int coeff_range = 9);

}  // namespace exlp::testkit
