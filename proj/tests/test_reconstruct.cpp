#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "exlp/reconstruct.hpp"
#include "exlp/testkit.hpp"
#include "test_util.hpp"

using namespace exlp;
using exlp::test::Q;

namespace {

// Every admissible value for the inequality |p/q - alpha| < 1/(2 M q) with
// q <= M, found by trying the one candidate numerator per denominator.
std::set<Rational> admissible_by_brute_force(const Rational& alpha, long bound) {
  std::set<Rational> values;
  for (long q = 1; q <= bound; ++q) {
    Int p = round_half_even(alpha * Rational(q, 1));
    for (Int cand : {Int(p - 1), p, Int(p + 1)}) {
      Rational value = make_rational(cand, q);
      if (abs(Rational(value - alpha)) * Rational(2 * bound, 1) * Rational(value.get_den(), 1) <
          1) {
        values.insert(value);
      }
    }
  }
  return values;
}

}  // namespace

TEST_CASE("scalar reconstruction on the stated cases") {
  CHECK(reconstruct_scalar(Q("2/5"), 1) == Rational(0));  // nearest-integer rounding
  CHECK(reconstruct_scalar(Q("1/2"), 3) == Q("1/2"));
  // 349525/1048576 is within 1/(2*10*3) of 1/3
  CHECK(reconstruct_scalar(Q("349525/1048576"), 10) == Q("1/3"));
  CHECK(admissible_by_brute_force(Q("349525/1048576"), 10) == std::set<Rational>{Q("1/3")});
}

TEST_CASE("scalar reconstruction edge cases") {
  CHECK(reconstruct_scalar(Q("7"), 1) == Rational(7));
  CHECK(reconstruct_scalar(Q("-2/5"), 1) == Rational(0));
  CHECK(reconstruct_scalar(Q("-349525/1048576"), 10) == Q("-1/3"));
  CHECK_FALSE(reconstruct_scalar(Q("1/2"), 1).has_value());  // exactly half, strict inequality
  CHECK_THROWS_AS(reconstruct_scalar(Q("1/2"), 0), std::invalid_argument);
}

TEST_CASE("reconstruction agrees with brute force and is unique, exhaustively") {
  for (long b = 1; b <= 24; ++b) {
    for (long a = 0; a <= b; ++a) {
      if (gcd(Int(a), Int(b)) != 1) continue;
      Rational alpha = make_rational(a, b);
      for (long bound : {1L, 2L, 3L, 5L, 8L, 13L, 21L, 40L}) {
        auto values = admissible_by_brute_force(alpha, bound);
        CHECK(values.size() <= 1);
        auto found = reconstruct_scalar(alpha, bound);
        if (values.empty()) {
          CHECK_FALSE(found.has_value());
        } else {
          REQUIRE(found.has_value());
          CHECK(*found == *values.begin());
        }
      }
    }
  }
}

TEST_CASE("random near-rationals reconstruct to their source") {
  std::mt19937_64 rng(57);
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 1000);
  std::uniform_int_distribution<long> noise(-499, 499);
  for (int trial = 0; trial < 300; ++trial) {
    Rational exact = make_rational(num(rng), den(rng));
    Int bound = 1000;
    // |e| < 1/(2 M^2) guarantees recovery
    Rational error = make_rational(noise(rng), 1000000001);
    CHECK(reconstruct_scalar(exact + error, bound) == exact);
  }
}

TEST_CASE("vector reconstruction with skips and dlcm") {
  RatVector v{Q("1/2"), Q("1/2")};
  auto out = reconstruct_vector(v, 2, {}, true);
  REQUIRE(out.has_value());
  CHECK(*out == v);

  // approximations of (1/3, 2/3) within 1/(2*81)
  RatVector approx{Q("1/3") + Q("1/200"), Q("2/3") - Q("1/200")};
  auto thirds = reconstruct_vector(approx, 9, {}, true);
  REQUIRE(thirds.has_value());
  CHECK((*thirds)[0] == Q("1/3"));
  CHECK((*thirds)[1] == Q("2/3"));

  // skipped indices are copied verbatim even when not reconstructible
  RatVector with_noise{Q("355/113"), Q("1/2")};
  auto skipped = reconstruct_vector(with_noise, 2, {0}, true);
  REQUIRE(skipped.has_value());
  CHECK((*skipped)[0] == Q("355/113"));
  CHECK((*skipped)[1] == Q("1/2"));

  CHECK_THROWS_AS(reconstruct_vector(v, 0, {}, true), std::invalid_argument);

  // dlcm is a shortcut, not a semantic switch
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long> num(-5000, 5000);
  std::uniform_int_distribution<long> small(1, 60);
  for (int trial = 0; trial < 50; ++trial) {
    RatVector w(8);
    long common = small(rng);
    for (auto& value : w) {
      value = make_rational(num(rng), common) + make_rational(num(rng) % 7, 100000000);
    }
    auto with_dlcm = reconstruct_vector(w, 100, {}, true);
    auto without = reconstruct_vector(w, 100, {}, false);
    CHECK(with_dlcm == without);
    auto serial = reconstruct_vector(w, 100, {}, true, kernels::Lane::kSerial);
    auto parallel = reconstruct_vector(w, 100, {}, true, kernels::Lane::kParallel);
    CHECK(serial == parallel);
  }
}

TEST_CASE("denominator bound schedule") {
  CHECK(compute_Mk(Rational(8), Q("11/10"), 1) == 1);
  // floor(sqrt(2^40 / 2.2)), evaluated here independently over the integers
  Rational inside = pow2(40) / Q("11/5");
  Int expect = floor_sqrt(inside);
  CHECK(expect == Int("706949"));
  CHECK(compute_Mk(pow2(40), Q("11/10"), 1) == expect);
  CHECK(compute_Mk(Rational(2), Rational(2), 10) == 1);  // clamped to 1
  CHECK_THROWS_AS(compute_Mk(Rational(8), Rational(1), 1), std::invalid_argument);
}

TEST_CASE("driver: tiny problem is exact at round one without attempts") {
  StandardLP lp = test::tiny_standard();
  SimplexOracle oracle;
  ExactSolution sol = solve_with_reconstruction(lp, oracle, {}, {});
  REQUIRE(sol.status == SolveStatus::kOptimal);
  CHECK(sol.x[0] == 1);
  CHECK(sol.y[0] == 1);
  CHECK(sol.stats.reconstruction_attempts == 0);  // delta hit zero first
}

TEST_CASE("driver: example1 reconstructs the exact optimum") {
  StandardLP lp = test::example1_standard();
  SimplexOracle oracle;
  ExactSolution sol = solve_with_reconstruction(lp, oracle, {}, {});
  REQUIRE(sol.status == SolveStatus::kOptimal);
  CHECK(sol.objective == -8);
  CHECK(exactly_optimal(lp, sol.x, sol.y));
  for (const Rational& v : sol.x) CHECK(v.get_den() <= 8);
}

TEST_CASE("driver: thirds require actual reconstruction work") {
  StandardLP lp;
  lp.a = RatMatrix::from_dense({{Q("3")}});
  lp.b = {Q("1")};
  lp.lower = {Q("0")};
  lp.cost = {Q("1")};
  lp.columns = {{ColumnKind::kStructural, 0, "x"}};
  lp.row_names = {"r"};
  SimplexOracle oracle;
  ExactSolution sol = solve_with_reconstruction(lp, oracle, {}, {});
  REQUIRE(sol.status == SolveStatus::kOptimal);
  CHECK(sol.x[0] == Q("1/3"));
  CHECK(sol.stats.reconstruction_attempts >= 1);
}

TEST_CASE("driver matches brute force on random instances") {
  for (std::uint64_t seed : {2u, 5u, 11u, 17u}) {
    StandardLP lp = testkit::random_feasible_lp(seed, 2, 4);
    auto brute = testkit::brute_force_optimum(lp);
    REQUIRE(brute.found);
    SimplexOracle oracle;
    ExactSolution sol = solve_with_reconstruction(lp, oracle, {}, {});
    REQUIRE(sol.status == SolveStatus::kOptimal);
    CHECK(sol.objective == brute.objective);
  }
}

TEST_CASE("basic-point detection and the require-basic switch") {
  StandardLP lp;
  lp.a = RatMatrix::from_dense({{Q("1"), Q("1")}});
  lp.b = {Q("1")};
  lp.lower = {Q("0"), Q("0")};
  lp.cost = {Q("-1"), Q("-1")};
  CHECK(is_basic_point(lp, {Q("1"), Q("0")}));
  CHECK(is_basic_point(lp, {Q("0"), Q("1")}));
  // the midpoint of the optimal edge is optimal but has two off-bound columns
  CHECK_FALSE(is_basic_point(lp, {Q("1/2"), Q("1/2")}));

  StandardLP ex1 = test::example1_standard();
  SimplexOracle oracle;
  ReconConfig rcfg;
  rcfg.require_basic = true;
  ExactSolution sol = solve_with_reconstruction(ex1, oracle, rcfg, {});
  REQUIRE(sol.status == SolveStatus::kOptimal);
  CHECK(is_basic_point(ex1, sol.x));
}

TEST_CASE("driver rejects beta incompatible with the contraction rate") {
  StandardLP lp = test::tiny_standard();
  OracleConfig loose;
  loose.eta = Q("9/10");
  SimplexOracle oracle(loose);
  ReconConfig rcfg;
  rcfg.beta = Q("12/10");  // 1/eps = 10/9 < beta
  CHECK_THROWS_AS(solve_with_reconstruction(lp, oracle, rcfg, {}), std::invalid_argument);
}

TEST_CASE("failed attempts reschedule geometrically") {
  // a denominator far beyond early bounds forces several failed attempts
  StandardLP lp;
  lp.a = RatMatrix::from_dense({{Q("9999991")}});
  lp.b = {Q("1")};
  lp.lower = {Q("0")};
  lp.cost = {Q("1")};
  lp.columns = {{ColumnKind::kStructural, 0, "x"}};
  lp.row_names = {"r"};
  SimplexOracle oracle;
  ReconConfig rcfg;
  ExactSolution sol = solve_with_reconstruction(lp, oracle, rcfg, {});
  REQUIRE(sol.status == SolveStatus::kOptimal);
  CHECK(sol.x[0] == Q("1/9999991"));
  const auto& rounds = sol.stats.reconstruction_rounds;
  REQUIRE(rounds.size() >= 2);
  for (std::size_t i = 0; i + 1 < rounds.size(); ++i) {
    long expected_next = static_cast<long>(
        ceil_to_int(rcfg.freq * Rational(rounds[i], 1)).get_si());
    CHECK(rounds[i + 1] >= expected_next);  // attempts pause until ceil(f k)
    // and the very next attempt happens at the first eligible round
    CHECK(rounds[i + 1] <= std::max(expected_next, rounds[i] + 1));
  }
}
