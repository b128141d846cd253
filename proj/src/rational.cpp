#include "exlp/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace exlp {

Rational make_rational(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// mantissa "d[.d]" with sign already stripped, times 10^exp10.
std::optional<Rational> decimal_to_rational(const std::string& mantissa, long exp10) {
  std::string digits;
  long frac_len = 0;
  bool seen_dot = false;
  for (char c : mantissa) {
    if (c == '.') {
      if (seen_dot) return std::nullopt;
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_dot) ++frac_len;
    } else {
      return std::nullopt;
    }
  }
  if (digits.empty()) return std::nullopt;
  Int num(digits, 10);
  Int den = 1;
  long shift = exp10 - frac_len;
  if (shift >= 0) {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift));
    num *= scale;
  } else {
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
  }
  return make_rational(num, den);
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::string s = text;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s.erase(0, 1);
  }
  if (s.empty()) return std::nullopt;

  std::optional<Rational> value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    Int d(den, 10);
    if (d == 0) return std::nullopt;
    value = make_rational(Int(num, 10), d);
  } else if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    std::string mant = s.substr(0, e);
    std::string exp = s.substr(e + 1);
    bool exp_neg = false;
    if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) {
      exp_neg = (exp[0] == '-');
      exp.erase(0, 1);
    }
    if (!all_digits(exp) || exp.size() > 6) return std::nullopt;
    long exp10 = std::stol(exp);
    value = decimal_to_rational(mant, exp_neg ? -exp10 : exp10);
  } else {
    value = decimal_to_rational(s, 0);
  }
  if (!value) return std::nullopt;
  if (negative) *value = -*value;
  return value;
}

std::string rational_to_string(const Rational& value) {
  return value.get_str();
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

bool has_pow2_denominator(const Rational& value) {
  return mpz_popcount(value.get_den().get_mpz_t()) == 1;
}

Rational pow2(long exponent) {
  Int one = 1;
  if (exponent >= 0) {
    return Rational(one << static_cast<unsigned long>(exponent), 1);
  }
  return Rational(one, one << static_cast<unsigned long>(-exponent));
}

long floor_log2(const Rational& value) {
  if (sgn(value) <= 0) throw std::domain_error("floor_log2: value must be positive");
  // bit lengths bracket the result within one
  long hint = static_cast<long>(mpz_sizeinbase(value.get_num().get_mpz_t(), 2)) -
              static_cast<long>(mpz_sizeinbase(value.get_den().get_mpz_t(), 2));
  for (long t = hint + 1; t >= hint - 1; --t) {
    if (pow2(t) <= value) return t;
  }
  throw std::logic_error("floor_log2: bracket failed");
}

long ceil_log2(const Rational& value) {
  long f = floor_log2(value);
  return pow2(f) == value ? f : f + 1;
}

Int floor_to_int(const Rational& value) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return q;
}

Int ceil_to_int(const Rational& value) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return q;
}

Int round_half_even(const Rational& value) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), value.get_num().get_mpz_t(),
              value.get_den().get_mpz_t());
  // r in [0, den); compare 2r against den
  Int twice = r * 2;
  int c = cmp(twice, value.get_den());
  if (c > 0) return q + 1;
  if (c < 0) return q;
  return mpz_even_p(q.get_mpz_t()) ? q : q + 1;
}

Int floor_sqrt(const Rational& value) {
  if (sgn(value) < 0) throw std::domain_error("floor_sqrt: negative value");
  const Int& p = value.get_num();
  const Int& q = value.get_den();
  Int c = sqrt(Int(p / q));
  for (Int z = c + 2; z >= 0; --z) {
    if (z * z * q <= p) return z;
  }
  return 0;
}

Int ceil_sqrt(const Rational& value) {
  Int f = floor_sqrt(value);
  return Rational(f * f, 1) == value ? f : f + 1;
}

}  // namespace exlp
