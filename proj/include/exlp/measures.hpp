#pragma once

#include "exlp/ratmatrix.hpp"
#include "exlp/rational.hpp"

namespace exlp {

/// Bit-size measure: 1 + ceil(log2(|n| + 1)).
long encoding_length(const Int& value);
/// Size of num plus size of den.
long encoding_length(const Rational& value);
/// Componentwise sum.
long encoding_length(const RatVector& values);
/// Componentwise sum over all m*n positions (implicit zeros count 1 each).
long encoding_length(const RatMatrix& matrix);

/// ||v||_inf. Requires a nonempty vector.
Rational max_norm(const RatVector& v);
/// Row sum norm: max_i sum_j |a_ij|. Requires at least one row.
Rational row_sum_norm(const RatMatrix& a);

/// Ceiling of n^{m/2} * L^n * prod_j(sum_k |a_jk|), where L is the lcm of all
/// denominators in a, b, lower, cost. Every basic primal-dual solution of the
/// LP has denominators bounded by this value. Throws if a has a zero row.
Int hadamard_denominator_bound(const RatMatrix& a, const RatVector& b,
                               const RatVector& lower, const RatVector& cost);

}  // namespace exlp
