#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exlp/reconstruct.hpp"
#include "exlp/testkit.hpp"
#include "exlp/verify.hpp"
#include "test_util.hpp"

using namespace exlp;
using exlp::test::Q;

TEST_CASE("brute force on the tiny problem") {
  StandardLP lp = test::tiny_standard();
  auto result = testkit::brute_force_optimum(lp);
  REQUIRE(result.found);
  CHECK(result.objective == 1);
  CHECK(result.optimal_vertices.size() == 1);
  CHECK(result.optimal_vertices[0].x[0] == 1);
}

TEST_CASE("brute force on example1: value, vertex size, feasible-basis bound") {
  StandardLP lp = test::example1_standard();
  auto result = testkit::brute_force_optimum(lp);
  REQUIRE(result.found);
  CHECK(result.objective == -8);
  for (const auto& vertex : result.optimal_vertices) {
    for (const Rational& v : vertex.x) CHECK(v.get_den() <= 8);
    RatVector original = map_to_original(lp, vertex.x, 6);
    CHECK(encoding_length(original) <= 27);
  }
  // no feasible basis beats the optimum
  for (const auto& record : result.bases) {
    if (!record.solution) continue;
    if (record.cls == testkit::BasisClass::kOptimal ||
        record.cls == testkit::BasisClass::kDualInfeasible) {
      Rational objective(0);
      for (std::size_t j = 0; j < record.solution->x.size(); ++j) {
        objective += lp.cost[j] * record.solution->x[j];
      }
      CHECK(objective >= result.objective);
    }
  }
}

TEST_CASE("symmetric instances list every optimal vertex") {
  StandardLP lp;
  lp.a = RatMatrix::from_dense({{Q("1"), Q("1")}});
  lp.b = {Q("1")};
  lp.lower = {Q("0"), Q("0")};
  lp.cost = {Q("-1"), Q("-1")};
  auto result = testkit::brute_force_optimum(lp);
  REQUIRE(result.found);
  CHECK(result.objective == -1);
  CHECK(result.optimal_vertices.size() == 2);
}

TEST_CASE("brute force guard rejects explosive enumerations") {
  StandardLP lp;
  lp.a = RatMatrix::identity(25);
  // C(50, 25) is far beyond the guard
  lp.a = RatMatrix::from_triplets(25, 50, [] {
    std::vector<MatrixEntry> t;
    for (int i = 0; i < 25; ++i) {
      t.push_back({i, i, Rational(1)});
      t.push_back({i, i + 25, Rational(1)});
    }
    return t;
  }());
  lp.b.assign(25, Rational(1));
  lp.lower.assign(50, Rational(0));
  lp.cost.assign(50, Rational(1));
  CHECK_THROWS_AS(testkit::brute_force_optimum(lp), std::invalid_argument);
}

TEST_CASE("violation thresholds evaluate the stated formulas") {
  StandardLP lp = test::tiny_standard();
  auto [primal, dual] = testkit::min_violation_thresholds(lp);
  // <A> = <b> = <cost> = 4 (ones as 1/1), <lower> = 3 (zero as 0/1), n = 1:
  // primal exponent 4*8 + 5*3 + 2 + 4 = 53, dual exponent 4*8 + 2 + 4 = 38
  CHECK(primal == pow2(-53));
  CHECK(dual == pow2(-38));
}

TEST_CASE("violation thresholds shrink when coefficients grow") {
  StandardLP small = test::tiny_standard();
  StandardLP big = small;
  big.a.set(0, 0, Q("987654321"));
  big.cost[0] = Q("12345/321");
  auto [ps, ds] = testkit::min_violation_thresholds(small);
  auto [pb, db] = testkit::min_violation_thresholds(big);
  CHECK(pb < ps);
  CHECK(db < ds);
}

TEST_CASE("iteration bound on explicit values") {
  // tau = eps: one round; the complementarity term is already within bounds
  CHECK(testkit::iteration_bound(Q("1/10"), Q("1/10"), Q("1/100")) == 1);
  // tau = eps^5 exactly
  Rational eps = Q("1/10");
  Rational tau5 = eps * eps * eps * eps * eps;
  CHECK(testkit::iteration_bound(tau5, eps, Q("1/100")) >= 5);
  // the acceptance configuration: eps = 1e-6, sigma = 1e-4
  CHECK(testkit::iteration_bound(Q("1e-50"), Q("1e-6"), Q("1e-4")) == 9);
  CHECK(testkit::iteration_bound(Q("1e-10"), Q("1e-6"), Q("1e-4")) == 2);
  CHECK_THROWS_AS(testkit::iteration_bound(Rational(0), Q("1/2"), Q("1/2")),
                  std::invalid_argument);
  CHECK_THROWS_AS(testkit::iteration_bound(Q("1/2"), Rational(1), Q("1/2")),
                  std::invalid_argument);
}

TEST_CASE("generated instances are deterministic and certified") {
  StandardLP a = testkit::random_feasible_lp(99, 3, 6);
  StandardLP b = testkit::random_feasible_lp(99, 3, 6);
  CHECK(a.a == b.a);
  CHECK(a.b == b.b);
  CHECK(a.lower == b.lower);
  CHECK(a.cost == b.cost);
  StandardLP c = testkit::random_feasible_lp(100, 3, 6);
  CHECK(a.a.entries() != c.a.entries());
}

TEST_CASE("both drivers match brute force on a seed sweep") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    int m = 1 + static_cast<int>(seed % 3);
    int n = m + 1 + static_cast<int>((seed * 7) % 3);
    StandardLP lp = testkit::random_feasible_lp(seed, m, n);
    auto brute = testkit::brute_force_optimum(lp);
    REQUIRE(brute.found);

    SimplexOracle fac_oracle;
    VerifyConfig vcfg;
    ExactSolution fac = solve_with_basis_verification(lp, fac_oracle, vcfg);
    REQUIRE(fac.status == SolveStatus::kOptimal);
    CHECK(fac.objective == brute.objective);

    SimplexOracle rec_oracle;
    ExactSolution rec = solve_with_reconstruction(lp, rec_oracle, {}, {});
    REQUIRE(rec.status == SolveStatus::kOptimal);
    CHECK(rec.objective == brute.objective);

    CHECK(fac.objective == rec.objective);
    CHECK(sgn(duality_gap(lp, fac.x, fac.y)) == 0);
    CHECK(sgn(duality_gap(lp, rec.x, rec.y)) == 0);
  }
}

TEST_CASE("non-dyadic bounds and costs run through both exact finishers") {
  StandardLP lp;
  lp.a = RatMatrix::from_dense(
      {{make_rational(3, 1), make_rational(1, 3)}, {make_rational(1, 1), make_rational(2, 1)}});
  lp.b = {make_rational(7, 3), make_rational(5, 3)};
  lp.lower = {make_rational(1, 3), make_rational(-2, 3)};
  lp.cost = {make_rational(1, 1), make_rational(1, 7)};
  lp.columns = {{ColumnKind::kStructural, 0, "x1"}, {ColumnKind::kStructural, 1, "x2"}};
  lp.row_names = {"r1", "r2"};

  auto brute = testkit::brute_force_optimum(lp);
  REQUIRE(brute.found);
  CHECK(brute.objective == Q("283/357"));

  SimplexOracle fac_oracle;
  VerifyConfig vcfg;
  ExactSolution fac = solve_with_basis_verification(lp, fac_oracle, vcfg);
  REQUIRE(fac.status == SolveStatus::kOptimal);
  CHECK(fac.objective == brute.objective);
  CHECK(fac.stats.factorizations == 1);  // optimum is not double-representable

  SimplexOracle rec_oracle;
  ExactSolution rec = solve_with_reconstruction(lp, rec_oracle, {}, {});
  REQUIRE(rec.status == SolveStatus::kOptimal);
  CHECK(rec.objective == brute.objective);
  CHECK(rec.stats.reconstruction_attempts >= 1);
}

TEST_CASE("free and upper-bounded variables solve end to end") {
  // min -a - 2b with a free, 0 <= b <= 5/2, a + b <= 4, a >= -1 via a row
  GeneralLP general = parse_exact_lp(
      "min - a - 2 b ;\nst\nr1: a + b <= 4 ;\nr2: a >= -1 ;\n"
      "bounds\na free ;\nb <= 5/2 ;\nend\n");
  StandardLP lp = to_standard_form(general);
  auto brute = testkit::brute_force_optimum(lp);
  REQUIRE(brute.found);

  SimplexOracle fac_oracle;
  VerifyConfig vcfg;
  ExactSolution fac = solve_with_basis_verification(lp, fac_oracle, vcfg);
  REQUIRE(fac.status == SolveStatus::kOptimal);
  CHECK(fac.objective == brute.objective);

  SimplexOracle rec_oracle;
  ExactSolution rec = solve_with_reconstruction(lp, rec_oracle, {}, {});
  REQUIRE(rec.status == SolveStatus::kOptimal);
  CHECK(rec.objective == brute.objective);

  // optimum pushes a to the row limit and b to its upper bound:
  // a = 3/2, b = 5/2, objective -(3/2) - 5 = -13/2
  RatVector original = map_to_original(lp, fac.x, 2);
  CHECK(original[0] == Q("3/2"));
  CHECK(original[1] == Q("5/2"));
  CHECK(fac.objective == Q("-13/2"));
}

TEST_CASE("parallel enumeration agrees with the serial reference") {
  StandardLP lp = test::example1_standard();
  auto serial = testkit::brute_force_optimum(lp, false);
  auto parallel = testkit::brute_force_optimum(lp, true);
  REQUIRE(serial.found == parallel.found);
  CHECK(serial.objective == parallel.objective);
  REQUIRE(serial.bases.size() == parallel.bases.size());
  for (std::size_t i = 0; i < serial.bases.size(); ++i) {
    CHECK(serial.bases[i].basis == parallel.bases[i].basis);
    CHECK(serial.bases[i].cls == parallel.bases[i].cls);
  }
}
