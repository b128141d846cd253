#include "exlp/measures.hpp"

#include <stdexcept>

namespace exlp {

long encoding_length(const Int& value) {
  Int t = abs(value) + 1;
  long bits = static_cast<long>(mpz_sizeinbase(t.get_mpz_t(), 2));
  bool pow2 = mpz_popcount(t.get_mpz_t()) == 1;
  // ceil(log2 t) = bits - 1 when t is a power of two, else bits
  return 1 + (pow2 ? bits - 1 : bits);
}

long encoding_length(const Rational& value) {
  return encoding_length(value.get_num()) + encoding_length(value.get_den());
}

long encoding_length(const RatVector& values) {
  long total = 0;
  for (const Rational& v : values) total += encoding_length(v);
  return total;
}

long encoding_length(const RatMatrix& matrix) {
  long total = 0;
  for (const MatrixEntry& e : matrix.entries()) total += encoding_length(e.value);
  // implicit zeros: <0> = 1 and <0/1> = <0> + <1> = 3
  long zeros = static_cast<long>(matrix.rows()) * matrix.cols() -
               static_cast<long>(matrix.nonzero_count());
  return total + zeros * 3;
}

Rational max_norm(const RatVector& v) {
  if (v.empty()) throw std::invalid_argument("max_norm: empty vector");
  Rational best = abs(v[0]);
  for (std::size_t i = 1; i < v.size(); ++i) {
    Rational a = abs(v[i]);
    if (a > best) best = a;
  }
  return best;
}

Rational row_sum_norm(const RatMatrix& a) {
  if (a.rows() == 0) throw std::invalid_argument("row_sum_norm: empty matrix");
  RatVector sums = a.row_abs_sums();
  return max_norm(sums);
}

Int hadamard_denominator_bound(const RatMatrix& a, const RatVector& b,
                               const RatVector& lower, const RatVector& cost) {
  const int m = a.rows();
  const int n = a.cols();
  if (m < 1 || n < m) throw std::invalid_argument("hadamard_denominator_bound: bad shape");

  Int l = 1;
  for (const MatrixEntry& e : a.entries()) l = lcm(l, e.value.get_den());
  for (const Rational& v : b) l = lcm(l, v.get_den());
  for (const Rational& v : lower) l = lcm(l, v.get_den());
  for (const Rational& v : cost) l = lcm(l, v.get_den());

  Rational row_product(1);
  RatVector sums = a.row_abs_sums();
  for (const Rational& s : sums) {
    if (sgn(s) == 0) {
      throw std::invalid_argument("hadamard_denominator_bound: zero row (rank deficient)");
    }
    row_product *= s;
  }

  Int l_pow_n;
  mpz_pow_ui(l_pow_n.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(n));
  Int n_pow_m;
  mpz_ui_pow_ui(n_pow_m.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(m));

  // H = sqrt(n^m) * L^n * prod; return the smallest integer z with z >= H,
  // i.e. with z^2 >= n^m * (L^n * prod)^2.
  Rational scaled = Rational(l_pow_n, 1) * row_product;
  Rational h_squared = Rational(n_pow_m, 1) * scaled * scaled;
  return ceil_sqrt(h_squared);
}

}  // namespace exlp
