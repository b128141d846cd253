#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exlp/measures.hpp"
#include "exlp/ratmatrix.hpp"

namespace exlp {

enum class Sense { kMin, kMax };
enum class Relation { kLe, kEq, kGe };
enum class LpFormat { kExactLp, kMpsSubset };

/// Input-side LP: rows with <=/=/>= relations, columns with optional bounds.
struct GeneralLP {
  Sense sense = Sense::kMin;
  RatVector objective;
  RatMatrix matrix;
  std::vector<Relation> relations;
  RatVector rhs;
  std::vector<std::optional<Rational>> lower;  // nullopt = -infinity
  std::vector<std::optional<Rational>> upper;  // nullopt = +infinity
  std::vector<std::string> row_names;
  std::vector<std::string> col_names;

  int num_rows() const { return matrix.rows(); }
  int num_cols() const { return matrix.cols(); }

  bool operator==(const GeneralLP&) const = default;
};

enum class ColumnKind {
  kStructural,
  kRowSlack,        // slack of a <= or >= row
  kBoundSlack,      // slack of an upper-bound row x + s = u
  kSplitPositive,   // x+ of a split free variable
  kSplitNegative,   // x- of a split free variable
};

struct ColumnOrigin {
  ColumnKind kind = ColumnKind::kStructural;
  int original_column = -1;  // -1 for row slacks
  std::string name;

  bool operator==(const ColumnOrigin&) const = default;
};

/// Equality-form LP: min cost^T x with a x = b, x >= lower. Full row rank of a
/// is assumed (not enforced); singular bases surface during verification.
struct StandardLP {
  RatMatrix a;
  RatVector b;
  RatVector lower;
  RatVector cost;
  std::vector<ColumnOrigin> columns;
  std::vector<std::string> row_names;
  bool objective_negated = false;  // true when a max objective was converted

  int num_rows() const { return a.rows(); }
  int num_cols() const { return a.cols(); }
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what), line(line), column(column) {}
  int line = 0;
  int column = 0;
};

GeneralLP parse_lp_file(const std::string& text, LpFormat format);
GeneralLP parse_exact_lp(const std::string& text);
GeneralLP parse_mps(const std::string& text);
/// Canonical exact-lp rendering; parse_exact_lp(to_exact_lp_text(lp)) == lp.
std::string to_exact_lp_text(const GeneralLP& lp);

/// min conversion, slack columns for inequality rows, bound rows for finite
/// uppers, x = x+ - x- splits for variables without a finite lower bound.
StandardLP to_standard_form(const GeneralLP& lp);

/// Maps a standard-form point back onto the original columns (x+ - x-).
RatVector map_to_original(const StandardLP& lp, const RatVector& x, int original_cols);

Int hadamard_denominator_bound(const StandardLP& lp);

/// Precision of the built-in double oracle: IEEE-754 doubles all lie in the
/// dyadic set with this exponent.
inline constexpr int kDoublePrecision = 1074;

struct OracleInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Data rounded into the oracle's working set: every entry is k/2^precision
/// with |k| <= 2^(2*precision), and exactly representable by the oracle.
struct FloatData {
  RatMatrix a;
  RatVector b;
  RatVector lower;
  RatVector cost;
  int precision = kDoublePrecision;
};

/// Nearest oracle-representable value, ties to even: the nearest IEEE-754
/// double when precision == kDoublePrecision, the nearest k/2^precision
/// otherwise. Throws OracleInputError when the value overflows the set.
Rational round_to_precision(const Rational& value, int precision);

RatVector round_vector(const RatVector& v, int precision);
RatMatrix round_matrix(const RatMatrix& a, int precision);
FloatData round_to_oracle_precision(const StandardLP& lp, int precision);

}  // namespace exlp
