#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exlp/oracle.hpp"
#include "exlp/testkit.hpp"
#include "test_util.hpp"

using namespace exlp;
using exlp::test::Q;

namespace {

OracleSolution solve_exactly_rounded(const StandardLP& lp, const OracleConfig& cfg = {}) {
  FloatData data = round_to_oracle_precision(lp, cfg.precision);
  return oracle_solve(data, lp, cfg);
}

}  // namespace

TEST_CASE("tiny equality problem") {
  StandardLP lp = test::tiny_standard();
  OracleSolution sol = solve_exactly_rounded(lp);
  REQUIRE(sol.status == OracleStatus::kSolution);
  CHECK(sol.x[0] == 1);
  CHECK(sol.y[0] == 1);
  CHECK(sol.basis == std::vector<int>{0});
}

TEST_CASE("two-variable vertex is exact in double precision") {
  StandardLP lp;
  lp.a = RatMatrix::from_dense({{Rational(1), Rational(1)}});
  lp.b = {Rational(1)};
  lp.lower = {Rational(0), Rational(0)};
  lp.cost = {Rational(-1), Rational(-1)};
  OracleSolution sol = solve_exactly_rounded(lp);
  REQUIRE(sol.status == OracleStatus::kSolution);
  Rational objective = lp.cost[0] * sol.x[0] + lp.cost[1] * sol.x[1];
  CHECK(objective == -1);
  bool vertex = (sol.x[0] == 1 && sol.x[1] == 0) || (sol.x[0] == 0 && sol.x[1] == 1);
  CHECK(vertex);
  Residuals none = kernels::residuals(lp, sol.x, sol.y, kernels::Lane::kSerial);
  CHECK(none.delta == 0);
}

TEST_CASE("example1 objective lands near the exact optimum") {
  StandardLP lp = test::example1_standard();
  auto brute = testkit::brute_force_optimum(lp);
  REQUIRE(brute.found);
  OracleSolution sol = solve_exactly_rounded(lp);
  REQUIRE(sol.status == OracleStatus::kSolution);
  Rational objective(0);
  for (std::size_t j = 0; j < sol.x.size(); ++j) objective += lp.cost[j] * sol.x[j];
  CHECK(abs(Rational(objective - brute.objective)) < Q("1/1000"));
}

TEST_CASE("residual check: exact vertex passes, constructed violations are typed") {
  StandardLP lp = test::tiny_standard();
  OracleConfig cfg;
  OracleSolution sol;
  sol.status = OracleStatus::kSolution;
  sol.x = {Rational(1)};
  sol.y = {Rational(1)};
  sol.basis = {0};
  CHECK(check_oracle_residuals(sol, lp, cfg) == ResidualCheck::kPass);

  OracleSolution primal_off = sol;
  primal_off.x[0] = Rational(1) + cfg.eta * 2;  // breaks A x = b by 2 eta
  CHECK(check_oracle_residuals(primal_off, lp, cfg) == ResidualCheck::kPrimalResidual);

  OracleSolution basic_reduced_cost = sol;
  basic_reduced_cost.y[0] = Rational(1) - cfg.eta * 2;  // basic column slack +2 eta
  CHECK(check_oracle_residuals(basic_reduced_cost, lp, cfg) == ResidualCheck::kBasisDual);

  OracleSolution negative_reduced_cost = sol;
  negative_reduced_cost.y[0] = Rational(1) + cfg.eta * 2;  // basic column slack -2 eta
  CHECK(check_oracle_residuals(negative_reduced_cost, lp, cfg) == ResidualCheck::kBasisDual);

  OracleSolution below_bound = sol;
  below_bound.x[0] = Rational(0) - cfg.eta * 2;
  CHECK(check_oracle_residuals(below_bound, lp, cfg) != ResidualCheck::kPass);

  OracleSolution bad_basis = sol;
  bad_basis.basis = {};
  CHECK(check_oracle_residuals(bad_basis, lp, cfg) == ResidualCheck::kBasisShape);
}

TEST_CASE("residual check: nonbasic entry off its bound") {
  StandardLP lp;
  lp.a = RatMatrix::from_dense({{Rational(1), Rational(1)}});
  lp.b = {Rational(1)};
  lp.lower = {Rational(0), Rational(0)};
  lp.cost = {Rational(1), Rational(2)};
  OracleConfig cfg;
  OracleSolution sol;
  sol.status = OracleStatus::kSolution;
  sol.x = {Rational(1) - cfg.eta * 2, cfg.eta * 2};  // A x = b, nonbasic x2 off zero
  sol.y = {Rational(1)};
  sol.basis = {0};
  CHECK(check_oracle_residuals(sol, lp, cfg) == ResidualCheck::kBasisPrimal);
}

TEST_CASE("returned solutions always re-verify1") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    int m = 1 + static_cast<int>(seed % 3);
    int n = m + 1 + static_cast<int>((seed / 3) % 3);
    StandardLP lp = testkit::random_feasible_lp(seed, m, n);
    OracleConfig cfg;
    OracleSolution sol = solve_exactly_rounded(lp, cfg);
    REQUIRE(sol.status == OracleStatus::kSolution);
    CHECK(check_oracle_residuals(sol, lp, cfg) == ResidualCheck::kPass);
    CHECK(sol.basis.size() == static_cast<std::size_t>(m));
  }
}

TEST_CASE("outputs live in the oracle number set") {
  StandardLP lp = test::example1_standard();
  OracleSolution sol = solve_exactly_rounded(lp);
  REQUIRE(sol.status == OracleStatus::kSolution);
  Rational magnitude_cap = pow2(kDoublePrecision);
  for (const Rational& v : sol.x) {
    CHECK(has_pow2_denominator(v));
    CHECK(abs(v) <= magnitude_cap);
  }
  for (const Rational& v : sol.y) {
    CHECK(has_pow2_denominator(v));
    CHECK(abs(v) <= magnitude_cap);
  }
}

TEST_CASE("iteration limits surface as failure") {
  StandardLP lp = test::example1_standard();
  OracleConfig cfg;
  cfg.iteration_limit = 1;
  OracleSolution sol = solve_exactly_rounded(lp, cfg);
  CHECK(sol.status == OracleStatus::kFailure);
  CHECK(sol.failure == OracleFailureReason::kIterationLimit);
}

TEST_CASE("infeasible rounded data reports failure rather than lying") {
  StandardLP lp;
  lp.a = RatMatrix::from_dense({{Rational(1)}, {Rational(1)}});
  lp.b = {Rational(0), Rational(1)};  // x = 0 and x = 1
  lp.lower = {Rational(0)};
  lp.cost = {Rational(1)};
  OracleSolution sol = solve_exactly_rounded(lp);
  CHECK(sol.status == OracleStatus::kFailure);
}
