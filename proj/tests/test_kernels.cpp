#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <random>

#include "exlp/kernels.hpp"
#include "test_util.hpp"

using namespace exlp;
using exlp::test::Q;

namespace {

RatMatrix random_sparse(std::mt19937_64& rng, int m, int n) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 12);
  std::uniform_int_distribution<int> keep(0, 2);
  std::vector<MatrixEntry> triplets;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (keep(rng) == 0) continue;
      int v = num(rng);
      if (v == 0) continue;
      triplets.push_back({i, j, make_rational(v, den(rng))});
    }
  }
  return RatMatrix::from_triplets(m, n, std::move(triplets));
}

RatVector random_vec(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-30, 30);
  std::uniform_int_distribution<int> den(1, 16);
  RatVector v(static_cast<std::size_t>(n));
  for (auto& x : v) x = make_rational(num(rng), den(rng));
  return v;
}

}  // namespace

TEST_CASE("parallel_for touches each index exactly once") {
  std::vector<std::atomic<int>> hits(257);
  kernels::parallel_for(hits.size(), kernels::Lane::kParallel,
                        [&](std::size_t i) { hits[i].fetch_add(1); });
  for (const auto& h : hits) CHECK(h.load() == 1);
}

TEST_CASE("lane picking is size driven") {
  CHECK(kernels::pick_lane(1) == kernels::Lane::kSerial);
  if (kernels::parallel_available()) {
    CHECK(kernels::pick_lane(1 << 20) == kernels::Lane::kParallel);
  } else {
    CHECK(kernels::pick_lane(1 << 20) == kernels::Lane::kSerial);
  }
}

TEST_CASE("matvec lanes agree exactly") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    RatMatrix a = random_sparse(rng, 30, 40);
    RatVector x = random_vec(rng, 40);
    CHECK(kernels::matvec(a, x, kernels::Lane::kSerial) ==
          kernels::matvec(a, x, kernels::Lane::kParallel));
    RatVector y = random_vec(rng, 30);
    CHECK(kernels::matvec_transpose(a, y, kernels::Lane::kSerial) ==
          kernels::matvec_transpose(a, y, kernels::Lane::kParallel));
  }
}

TEST_CASE("residual lanes agree exactly, delta included") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    StandardLP lp;
    lp.a = random_sparse(rng, 12, 20);
    lp.b = random_vec(rng, 12);
    lp.lower = random_vec(rng, 20);
    lp.cost = random_vec(rng, 20);
    RatVector x = random_vec(rng, 20);
    RatVector y = random_vec(rng, 12);
    auto serial = kernels::residuals(lp, x, y, kernels::Lane::kSerial);
    auto parallel = kernels::residuals(lp, x, y, kernels::Lane::kParallel);
    CHECK(serial.b_hat == parallel.b_hat);
    CHECK(serial.l_hat == parallel.l_hat);
    CHECK(serial.c_hat == parallel.c_hat);
    CHECK(serial.delta == parallel.delta);
  }
}

TEST_CASE("residual delta is the max violation, not the max magnitude") {
  StandardLP lp;
  lp.a = RatMatrix::identity(2);
  lp.b = {Q("1"), Q("1")};
  lp.lower = {Q("0"), Q("0")};
  lp.cost = {Q("1"), Q("1")};
  // x strictly inside, y dual feasible with slack: only |b - Ax| and the
  // complementarity product can contribute
  RatVector x{Q("1/2"), Q("1/2")};
  RatVector y{Q("0"), Q("0")};
  auto r = kernels::residuals(lp, x, y, kernels::Lane::kSerial);
  // b_hat = (1/2, 1/2), l_hat = (-1/2, -1/2), c_hat = (1, 1), product = 1
  CHECK(r.delta == 1);
  // with a dual-infeasible y the positive part of -c_hat takes over
  RatVector worse{Q("3"), Q("3")};
  auto r2 = kernels::residuals(lp, x, worse, kernels::Lane::kSerial);
  CHECK(r2.c_hat[0] == Q("-2"));
  CHECK(r2.delta == 2);
}
