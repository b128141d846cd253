#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>

#include "exlp/kernels.hpp"
#include "exlp/reconstruct.hpp"

using namespace exlp;

namespace {

using Clock = std::chrono::steady_clock;

double time_of(const std::function<void()>& fn) {
  auto start = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

RatMatrix random_matrix(std::mt19937_64& rng, int m, int n, int per_row) {
  std::uniform_int_distribution<int> col_dist(0, n - 1);
  std::uniform_int_distribution<int> num_dist(-99, 99);
  std::uniform_int_distribution<int> den_dist(1, 64);
  std::vector<MatrixEntry> triplets;
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < per_row; ++k) {
      int j = col_dist(rng);
      int num = num_dist(rng);
      if (num == 0) num = 1;
      bool dup = false;
      for (const auto& e : triplets) {
        if (e.row == i && e.col == j) {
          dup = true;
          break;
        }
      }
      if (!dup) triplets.push_back({i, j, make_rational(num, den_dist(rng))});
    }
  }
  return RatMatrix::from_triplets(m, n, std::move(triplets));
}

RatVector random_vector(std::mt19937_64& rng, int n, int den_limit) {
  std::uniform_int_distribution<int> num_dist(-999, 999);
  std::uniform_int_distribution<int> den_dist(1, den_limit);
  RatVector v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = make_rational(num_dist(rng), den_dist(rng));
  return v;
}

// Dyadic values with wide numerators, the shape refinement iterates take
// after many correction rounds.
RatVector random_iterate(std::mt19937_64& rng, int n, int bits) {
  RatVector v(static_cast<std::size_t>(n));
  Int den = Int(1) << static_cast<unsigned long>(bits);
  for (int j = 0; j < n; ++j) {
    Int num = 0;
    for (int w = 0; w < bits / 64 + 1; ++w) {
      num = (num << 64) + Int(rng());
    }
    if (rng() & 1) num = -num;
    v[static_cast<std::size_t>(j)] = make_rational(num, den);
  }
  return v;
}

void report(const char* name, int size, double serial, double parallel, bool equal) {
  std::printf("%-24s n=%-6d serial %8.4fs  parallel %8.4fs  speedup %5.2fx  %s\n", name, size,
              serial, parallel, parallel > 0 ? serial / parallel : 0.0,
              equal ? "results identical" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  const int size = quick ? 192 : 1536;
  std::mt19937_64 rng(42);

  std::printf("exact rational kernels, serial lane vs OpenMP lane (%s)\n",
              kernels::parallel_available() ? "OpenMP enabled" : "OpenMP not compiled in");

  const int iterate_bits = quick ? 256 : 2048;
  {
    RatMatrix a = random_matrix(rng, size, size, 12);
    RatVector x = random_iterate(rng, size, iterate_bits);
    RatVector serial_out, parallel_out;
    double ts = time_of([&] { serial_out = kernels::matvec(a, x, kernels::Lane::kSerial); });
    double tp = time_of([&] { parallel_out = kernels::matvec(a, x, kernels::Lane::kParallel); });
    report("matvec", size, ts, tp, serial_out == parallel_out);
  }
  {
    RatMatrix a = random_matrix(rng, size, size, 12);
    RatVector y = random_iterate(rng, size, iterate_bits);
    RatVector serial_out, parallel_out;
    double ts =
        time_of([&] { serial_out = kernels::matvec_transpose(a, y, kernels::Lane::kSerial); });
    double tp = time_of(
        [&] { parallel_out = kernels::matvec_transpose(a, y, kernels::Lane::kParallel); });
    report("matvec_transpose", size, ts, tp, serial_out == parallel_out);
  }
  {
    StandardLP lp;
    lp.a = random_matrix(rng, size, 2 * size, 10);
    lp.b = random_vector(rng, size, 32);
    lp.lower = random_vector(rng, 2 * size, 32);
    lp.cost = random_vector(rng, 2 * size, 32);
    RatVector x = random_iterate(rng, 2 * size, iterate_bits);
    RatVector y = random_iterate(rng, size, iterate_bits);
    kernels::Residuals rs, rp;
    double ts = time_of([&] { rs = kernels::residuals(lp, x, y, kernels::Lane::kSerial); });
    double tp = time_of([&] { rp = kernels::residuals(lp, x, y, kernels::Lane::kParallel); });
    bool equal = rs.b_hat == rp.b_hat && rs.l_hat == rp.l_hat && rs.c_hat == rp.c_hat &&
                 rs.delta == rp.delta;
    report("residuals", size, ts, tp, equal);
  }
  {
    // near-rational values with a tight common error bound, as reconstruction sees them
    const int n = quick ? 2000 : 20000;
    std::uniform_int_distribution<int> num_dist(-999999, 999999);
    std::uniform_int_distribution<int> den_dist(1, 999983);
    std::uniform_int_distribution<long> noise(-1000, 1000);
    RatVector v(static_cast<std::size_t>(n));
    Int bound = 1000000;
    for (int i = 0; i < n; ++i) {
      Rational exact = make_rational(num_dist(rng), den_dist(rng));
      Rational eps = make_rational(noise(rng), Int("10000000000000000"));
      v[static_cast<std::size_t>(i)] = exact + eps;
    }
    std::optional<RatVector> serial_out, parallel_out;
    double ts = time_of(
        [&] { serial_out = reconstruct_vector(v, bound, {}, true, kernels::Lane::kSerial); });
    double tp = time_of(
        [&] { parallel_out = reconstruct_vector(v, bound, {}, true, kernels::Lane::kParallel); });
    bool equal = serial_out.has_value() == parallel_out.has_value() &&
                 (!serial_out || *serial_out == *parallel_out);
    report("reconstruct_vector", n, ts, tp, equal);
  }
  return 0;
}
