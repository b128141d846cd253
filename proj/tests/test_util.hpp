#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "exlp/model.hpp"
#include "exlp/refine.hpp"

namespace exlp::test {

inline std::string read_data_file(const std::string& name) {
  std::string path = std::string(EXLP_TEST_DATA_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing test data file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline Rational Q(const std::string& text) {
  auto v = parse_rational(text);
  if (!v) throw std::runtime_error("bad rational literal in test: " + text);
  return *v;
}

inline GeneralLP example1_general() {
  return parse_exact_lp(read_data_file("example1.lp"));
}

inline StandardLP example1_standard() { return to_standard_form(example1_general()); }

/// min x subject to x = 1, x >= 0.
inline StandardLP tiny_standard() {
  StandardLP lp;
  lp.a = RatMatrix::from_triplets(1, 1, {{0, 0, Rational(1)}});
  lp.b = {Rational(1)};
  lp.lower = {Rational(0)};
  lp.cost = {Rational(1)};
  lp.columns = {{ColumnKind::kStructural, 0, "x"}};
  lp.row_names = {"fix"};
  return lp;
}

/// Checks, on every observer round, the exact residual contraction bounds,
/// the scaling growth rule, the iterate size growth cap with dyadic
/// denominators, and the basis conditions of the oracle basis.
struct InvariantProbe {
  const StandardLP& lp;
  Rational eps;
  Rational sigma;
  Int alpha;
  int precision;
  long rounds_seen = 0;
  Rational eps_pow{1};  // eps^k
  bool residuals_ok = true;
  bool scaling_ok = true;
  bool sizes_ok = true;
  bool basis_ok = true;

  bool all_good() const { return residuals_ok && scaling_ok && sizes_ok && basis_ok; }

  ObserverAction operator()(const RoundInfo& info) {
    ++rounds_seen;
    eps_pow *= eps;

    Rational primal_violation(0);
    for (const Rational& v : info.residuals.b_hat) {
      if (abs(v) > primal_violation) primal_violation = abs(v);
    }
    residuals_ok = residuals_ok && primal_violation <= eps_pow;
    for (std::size_t j = 0; j < info.x.size(); ++j) {
      residuals_ok = residuals_ok && info.residuals.l_hat[j] <= eps_pow;
      residuals_ok = residuals_ok && -info.residuals.c_hat[j] <= eps_pow;
    }
    Rational gap(0);
    for (std::size_t j = 0; j < info.x.size(); ++j) {
      gap += (info.x[j] - lp.lower[j]) * info.residuals.c_hat[j];
    }
    Rational gap_cap = sigma;
    for (long i = 1; i < info.round; ++i) gap_cap *= eps * eps;
    residuals_ok = residuals_ok && abs(gap) <= gap_cap;

    scaling_ok = scaling_ok && info.next_scale * eps >= info.scale;
    long log_alpha = ceil_log2(Rational(alpha, 1));
    scaling_ok = scaling_ok && info.scale <= pow2(log_alpha * (info.round - 1));

    long cap = 2 * log_alpha * info.round + 3 * precision + 2;
    for (const Rational& v : info.x) {
      sizes_ok = sizes_ok && has_pow2_denominator(v) && encoding_length(v) <= cap;
    }
    for (const Rational& v : info.y) {
      sizes_ok = sizes_ok && has_pow2_denominator(v) && encoding_length(v) <= cap;
    }

    std::vector<bool> in_basis(info.x.size(), false);
    for (int j : info.basis) in_basis[static_cast<std::size_t>(j)] = true;
    RatVector aty = lp.a.multiply_transpose(info.y);
    for (std::size_t j = 0; j < info.x.size(); ++j) {
      if (in_basis[j]) {
        basis_ok = basis_ok && abs(Rational(lp.cost[j] - aty[j])) <= eps_pow;
      } else {
        basis_ok = basis_ok && abs(Rational(info.x[j] - lp.lower[j])) <= eps_pow;
      }
    }
    return ObserverAction::kContinue;
  }
};

}  // namespace exlp::test
