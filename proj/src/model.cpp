#include "exlp/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace exlp {

namespace {

struct Token {
  std::string text;
  int line = 0;
  int column = 0;
};

[[noreturn]] void fail(const std::string& what, int line, int column) {
  std::ostringstream os;
  os << what << " (line " << line << ", column " << column << ")";
  throw ParseError(os.str(), line, column);
}

[[noreturn]] void fail_at(const std::string& what, const Token& t) {
  fail(what, t.line, t.column);
}

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

std::vector<Token> tokenize_exact_lp(const std::string& text) {
  std::vector<Token> tokens;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t{"", line, col};
    if (c == ';' || c == ':' || c == '+' || c == '-' || c == '*') {
      t.text = std::string(1, c);
      advance(1);
    } else if (c == '<' || c == '>') {
      t.text = std::string(1, c);
      if (i + 1 < text.size() && text[i + 1] == '=') t.text += '=';
      advance(t.text.size());
    } else if (c == '=') {
      t.text = "=";
      advance(1);
    } else if (text.compare(i, 3, "\xe2\x89\xa4") == 0) {  // U+2264
      t.text = "<=";
      advance(3);
    } else if (text.compare(i, 3, "\xe2\x89\xa5") == 0) {  // U+2265
      t.text = ">=";
      advance(3);
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '.' ||
              text[j] == '/' ||
              ((text[j] == 'e' || text[j] == 'E') && j + 1 < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[j + 1])) || text[j + 1] == '+' ||
                text[j + 1] == '-')) ||
              ((text[j] == '+' || text[j] == '-') && j > i &&
               (text[j - 1] == 'e' || text[j - 1] == 'E')))) {
        ++j;
      }
      t.text = text.substr(i, j - i);
      advance(j - i);
    } else if (is_name_start(c)) {
      std::size_t j = i;
      while (j < text.size() && is_name_char(text[j])) ++j;
      t.text = text.substr(i, j - i);
      advance(j - i);
    } else {
      fail("unexpected character", line, col);
    }
    tokens.push_back(std::move(t));
  }
  return tokens;
}

std::string lower_copy(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool is_relation(const std::string& s) { return s == "<=" || s == ">=" || s == "=" || s == "<" || s == ">"; }

Relation to_relation(const std::string& s) {
  if (s == "<=" || s == "<") return Relation::kLe;
  if (s == ">=" || s == ">") return Relation::kGe;
  return Relation::kEq;
}

bool looks_like_number(const std::string& s) {
  char c = s[0];
  return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
}

class ExactLpParser {
 public:
  explicit ExactLpParser(const std::string& text) : tokens_(tokenize_exact_lp(text)) {}

  GeneralLP parse() {
    Token head = expect_any("objective sense");
    std::string sense = lower_copy(head.text);
    if (sense != "min" && sense != "max") fail_at("expected 'min' or 'max'", head);
    lp_.sense = sense == "min" ? Sense::kMin : Sense::kMax;

    parse_objective();
    parse_rows();
    if (peek_keyword("bounds")) {
      next();
      parse_bounds();
    }
    if (peek_keyword("end")) next();
    if (pos_ < tokens_.size()) fail_at("trailing input after problem", tokens_[pos_]);

    finalize();
    return std::move(lp_);
  }

 private:
  const Token& expect_any(const std::string& what) {
    if (pos_ >= tokens_.size()) {
      fail("unexpected end of input, expected " + what,
           tokens_.empty() ? 1 : tokens_.back().line,
           tokens_.empty() ? 1 : tokens_.back().column);
    }
    return tokens_[pos_++];
  }

  const Token* peek() const { return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr; }

  bool peek_keyword(const std::string& kw) const {
    const Token* t = peek();
    return t != nullptr && lower_copy(t->text) == kw;
  }

  const Token& next() { return tokens_[pos_++]; }

  int intern_column(const std::string& name, const Token& t) {
    auto it = col_index_.find(name);
    if (it != col_index_.end()) return it->second;
    if (looks_like_number(name)) fail_at("expected variable name", t);
    int idx = static_cast<int>(lp_.col_names.size());
    lp_.col_names.push_back(name);
    col_index_.emplace(name, idx);
    return idx;
  }

  // Reads "sign? coefficient? name" terms until a token that cannot start one.
  // Returns per-column coefficients.
  std::map<int, Rational> parse_terms(bool allow_empty) {
    std::map<int, Rational> coeffs;
    bool first = true;
    while (true) {
      const Token* t = peek();
      if (t == nullptr) break;
      std::string low = lower_copy(t->text);
      bool could_start = t->text == "+" || t->text == "-" || looks_like_number(t->text) ||
                         (is_name_start(t->text[0]) && low != "st" && low != "bounds" &&
                          low != "end" && low != "free" && low != "s");
      if (!could_start) break;

      Rational sign(1);
      while (peek() != nullptr && (peek()->text == "+" || peek()->text == "-")) {
        if (next().text == "-") sign = -sign;
      }
      const Token& term = expect_any("term");
      Rational coeff(1);
      std::string var_name;
      if (looks_like_number(term.text)) {
        auto value = parse_rational(term.text);
        if (!value) fail_at("malformed coefficient '" + term.text + "'", term);
        coeff = *value;
        if (peek() != nullptr && peek()->text == "*") next();
        const Token& var = expect_any("variable name");
        if (!is_name_start(var.text[0])) fail_at("expected variable name", var);
        var_name = var.text;
        int idx = intern_column(var_name, var);
        add_coeff(coeffs, idx, sign * coeff, var);
      } else {
        var_name = term.text;
        int idx = intern_column(var_name, term);
        add_coeff(coeffs, idx, sign * coeff, term);
      }
      first = false;
    }
    if (first && !allow_empty) {
      const Token* t = peek();
      if (t != nullptr) fail_at("expected at least one term", *t);
      fail("expected at least one term", 1, 1);
    }
    return coeffs;
  }

  static void add_coeff(std::map<int, Rational>& coeffs, int idx, Rational value,
                        const Token& at) {
    auto [it, inserted] = coeffs.emplace(idx, value);
    if (!inserted) fail_at("duplicate coefficient for variable", at);
  }

  void parse_objective() {
    objective_coeffs_ = parse_terms(/*allow_empty=*/true);
    const Token& semi = expect_any("';' after objective");
    if (semi.text != ";") fail_at("expected ';' after objective", semi);
    Token st = expect_any("'st'");
    std::string low = lower_copy(st.text);
    if (low == "subject") {
      Token to = expect_any("'to'");
      if (lower_copy(to.text) != "to") fail_at("expected 'to'", to);
    } else if (low == "s") {
      // allow "s.t." split as s . t . -- tokenizer keeps dots inside names,
      // so "s.t." arrives as one name token; handled below
      fail_at("expected 'st'", st);
    } else if (low != "st" && low != "s.t.") {
      fail_at("expected 'st' introducing constraints", st);
    }
  }

  void parse_rows() {
    while (true) {
      if (peek() == nullptr || peek_keyword("bounds") || peek_keyword("end")) break;
      std::string row_name;
      if (pos_ + 1 < tokens_.size() && is_name_start(tokens_[pos_].text[0]) &&
          tokens_[pos_ + 1].text == ":") {
        row_name = tokens_[pos_].text;
        pos_ += 2;
      }
      const Token* row_head = peek();
      std::map<int, Rational> coeffs = parse_terms(/*allow_empty=*/false);
      const Token& rel = expect_any("relation");
      if (!is_relation(rel.text)) fail_at("expected <=, =, or >=", rel);
      const Token& rhs_tok = expect_any("right-hand side");
      bool neg = false;
      std::string rhs_text = rhs_tok.text;
      if (rhs_text == "-" || rhs_text == "+") {
        neg = rhs_text == "-";
        rhs_text = expect_any("right-hand side").text;
      }
      auto rhs = parse_rational(rhs_text);
      if (!rhs) fail_at("malformed right-hand side", rhs_tok);
      const Token& semi = expect_any("';' after row");
      if (semi.text != ";") fail_at("expected ';' after row", semi);

      if (row_name.empty()) {
        row_name = "c" + std::to_string(rows_.size() + 1);
      }
      if (!row_names_seen_.insert(row_name).second) {
        fail_at("duplicate row name '" + row_name + "'", *row_head);
      }
      rows_.push_back({row_name, to_relation(rel.text), neg ? Rational(-*rhs) : *rhs,
                       std::move(coeffs)});
    }
    if (rows_.empty()) {
      fail("problem has no constraint rows", 1, 1);
    }
  }

  void parse_bounds() {
    while (peek() != nullptr && !peek_keyword("end")) {
      const Token& first = expect_any("bound clause");
      if (looks_like_number(first.text) || first.text == "-" || first.text == "+") {
        // value <= name [<= value]
        Rational lo = read_signed_value(first);
        const Token& rel = expect_any("relation");
        if (rel.text != "<=" && rel.text != "<") fail_at("expected <= in bound", rel);
        const Token& var = expect_any("variable name");
        int idx = intern_column(var.text, var);
        set_lower(idx, lo, var);
        if (peek() != nullptr && (peek()->text == "<=" || peek()->text == "<")) {
          next();
          const Token& hi_tok = expect_any("upper bound value");
          Rational hi = read_signed_value(hi_tok);
          set_upper(idx, hi, hi_tok);
        }
      } else {
        int idx = intern_column(first.text, first);
        const Token& what = expect_any("bound relation");
        std::string low = lower_copy(what.text);
        if (low == "free") {
          explicit_lower_.insert(idx);
          lower_bounds_[idx] = std::nullopt;
          upper_bounds_[idx] = std::nullopt;
        } else if (what.text == ">=" || what.text == ">") {
          const Token& v = expect_any("bound value");
          set_lower(idx, read_signed_value(v), v);
        } else if (what.text == "<=" || what.text == "<") {
          const Token& v = expect_any("bound value");
          set_upper(idx, read_signed_value(v), v);
        } else if (what.text == "=") {
          const Token& v = expect_any("bound value");
          Rational value = read_signed_value(v);
          set_lower(idx, value, v);
          set_upper(idx, value, v);
        } else {
          fail_at("malformed bound clause", what);
        }
      }
      const Token& semi = expect_any("';' after bound");
      if (semi.text != ";") fail_at("expected ';' after bound", semi);
    }
  }

  Rational read_signed_value(const Token& first) {
    std::string text = first.text;
    bool neg = false;
    if (text == "-" || text == "+") {
      neg = text == "-";
      text = expect_any("value").text;
    }
    auto value = parse_rational(text);
    if (!value) fail_at("malformed number '" + text + "'", first);
    return neg ? Rational(-*value) : *value;
  }

  void set_lower(int idx, Rational value, const Token& at) {
    explicit_lower_.insert(idx);
    if (lower_bounds_.count(idx) != 0 && lower_bounds_[idx].has_value()) {
      fail_at("conflicting lower bound", at);
    }
    lower_bounds_[idx] = std::move(value);
  }

  void set_upper(int idx, Rational value, const Token& at) {
    if (upper_bounds_.count(idx) != 0 && upper_bounds_[idx].has_value()) {
      fail_at("conflicting upper bound", at);
    }
    upper_bounds_[idx] = std::move(value);
  }

  void finalize() {
    int n = static_cast<int>(lp_.col_names.size());
    int m = static_cast<int>(rows_.size());
    if (n == 0) fail("problem has no variables", 1, 1);

    lp_.objective.assign(static_cast<std::size_t>(n), Rational(0));
    for (const auto& [idx, coeff] : objective_coeffs_) {
      lp_.objective[static_cast<std::size_t>(idx)] = coeff;
    }
    std::vector<MatrixEntry> triplets;
    for (int i = 0; i < m; ++i) {
      lp_.row_names.push_back(rows_[static_cast<std::size_t>(i)].name);
      lp_.relations.push_back(rows_[static_cast<std::size_t>(i)].relation);
      lp_.rhs.push_back(rows_[static_cast<std::size_t>(i)].rhs);
      for (const auto& [idx, coeff] : rows_[static_cast<std::size_t>(i)].coeffs) {
        triplets.push_back({i, idx, coeff});
      }
    }
    lp_.matrix = RatMatrix::from_triplets(m, n, std::move(triplets));
    lp_.lower.assign(static_cast<std::size_t>(n), Rational(0));
    lp_.upper.assign(static_cast<std::size_t>(n), std::nullopt);
    for (const auto& [idx, value] : lower_bounds_) {
      lp_.lower[static_cast<std::size_t>(idx)] = value;
    }
    for (const auto& [idx, value] : upper_bounds_) {
      lp_.upper[static_cast<std::size_t>(idx)] = value;
    }
    for (int j = 0; j < n; ++j) {
      const auto& lo = lp_.lower[static_cast<std::size_t>(j)];
      const auto& hi = lp_.upper[static_cast<std::size_t>(j)];
      if (lo.has_value() && hi.has_value() && *lo > *hi) {
        fail("inconsistent bounds for variable '" + lp_.col_names[static_cast<std::size_t>(j)] +
                 "'",
             1, 1);
      }
    }
  }

  struct RowDraft {
    std::string name;
    Relation relation;
    Rational rhs;
    std::map<int, Rational> coeffs;
  };

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  GeneralLP lp_;
  std::map<std::string, int> col_index_;
  std::map<int, Rational> objective_coeffs_;
  std::vector<RowDraft> rows_;
  std::set<std::string> row_names_seen_;
  std::map<int, std::optional<Rational>> lower_bounds_;
  std::map<int, std::optional<Rational>> upper_bounds_;
  std::set<int> explicit_lower_;
};

struct MpsLine {
  std::vector<std::string> fields;
  bool header = false;  // section keywords start flush left; data lines are indented
};

std::vector<MpsLine> split_mps_lines(const std::string& text) {
  std::vector<MpsLine> lines;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    MpsLine line;
    if (!raw.empty() && raw[0] == '*') {
      lines.push_back(std::move(line));
      continue;
    }
    line.header = !raw.empty() && !std::isspace(static_cast<unsigned char>(raw[0]));
    std::istringstream ls(raw);
    std::string f;
    while (ls >> f) line.fields.push_back(f);
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

GeneralLP parse_exact_lp(const std::string& text) { return ExactLpParser(text).parse(); }

GeneralLP parse_mps(const std::string& text) {
  auto lines = split_mps_lines(text);
  GeneralLP lp;
  std::map<std::string, int> row_index;  // constraint rows only
  std::map<std::string, int> col_index;
  std::string objective_row;
  std::vector<Relation> relations;
  std::vector<std::string> row_names;
  std::map<int, Rational> objective;
  std::vector<MatrixEntry> triplets;
  std::set<std::pair<int, int>> seen_coeffs;
  std::map<int, Rational> rhs_map;
  std::map<int, std::optional<Rational>> lower;
  std::map<int, std::optional<Rational>> upper;
  std::set<int> lower_explicit;

  enum class Section { kNone, kRows, kColumns, kRhs, kBounds, kDone };
  Section section = Section::kNone;

  auto intern_col = [&](const std::string& name) {
    auto it = col_index.find(name);
    if (it != col_index.end()) return it->second;
    int idx = static_cast<int>(lp.col_names.size());
    lp.col_names.push_back(name);
    col_index.emplace(name, idx);
    return idx;
  };
  auto value_of = [&](const std::string& text_value, int line) {
    auto v = parse_rational(text_value);
    if (!v) fail("malformed MPS number '" + text_value + "'", line, 1);
    return *v;
  };

  for (int ln = 0; ln < static_cast<int>(lines.size()); ++ln) {
    const auto& f = lines[static_cast<std::size_t>(ln)].fields;
    if (f.empty()) continue;
    int line_no = ln + 1;
    std::string head = f[0];
    if (lines[static_cast<std::size_t>(ln)].header) {
      if (head == "NAME") continue;
      if (head == "ROWS") { section = Section::kRows; continue; }
      if (head == "COLUMNS") { section = Section::kColumns; continue; }
      if (head == "RHS") { section = Section::kRhs; continue; }
      if (head == "RANGES") fail("MPS RANGES section is not supported", line_no, 1);
      if (head == "BOUNDS") { section = Section::kBounds; continue; }
      if (head == "ENDATA") { section = Section::kDone; break; }
      fail("unknown MPS section '" + head + "'", line_no, 1);
    }

    switch (section) {
      case Section::kRows: {
        if (f.size() != 2) fail("malformed ROWS line", line_no, 1);
        std::string kind = f[0];
        const std::string& name = f[1];
        if (kind == "N") {
          if (!objective_row.empty()) fail("multiple objective rows", line_no, 1);
          objective_row = name;
        } else if (kind == "L" || kind == "G" || kind == "E") {
          if (row_index.count(name) != 0 || name == objective_row) {
            fail("duplicate row name '" + name + "'", line_no, 1);
          }
          row_index.emplace(name, static_cast<int>(row_names.size()));
          row_names.push_back(name);
          relations.push_back(kind == "L"   ? Relation::kLe
                              : kind == "G" ? Relation::kGe
                                            : Relation::kEq);
        } else {
          fail("unknown ROWS type '" + kind + "'", line_no, 1);
        }
        break;
      }
      case Section::kColumns: {
        if (f.size() >= 3 && f[1] == "'MARKER'") {
          fail("integrality markers are not supported", line_no, 1);
        }
        if (f.size() != 3 && f.size() != 5) fail("malformed COLUMNS line", line_no, 1);
        int col = intern_col(f[0]);
        for (std::size_t k = 1; k + 1 < f.size(); k += 2) {
          const std::string& row = f[k];
          Rational v = value_of(f[k + 1], line_no);
          if (row == objective_row) {
            if (objective.count(col) != 0) fail("duplicate objective coefficient", line_no, 1);
            objective.emplace(col, v);
          } else {
            auto it = row_index.find(row);
            if (it == row_index.end()) fail("unknown row '" + row + "'", line_no, 1);
            if (!seen_coeffs.emplace(it->second, col).second) {
              fail("duplicate coefficient", line_no, 1);
            }
            if (sgn(v) != 0) triplets.push_back({it->second, col, v});
          }
        }
        break;
      }
      case Section::kRhs: {
        if (f.size() != 3 && f.size() != 5) fail("malformed RHS line", line_no, 1);
        for (std::size_t k = 1; k + 1 < f.size(); k += 2) {
          const std::string& row = f[k];
          if (row == objective_row) {
            fail("RHS entry for the objective row is not supported", line_no, 1);
          }
          auto it = row_index.find(row);
          if (it == row_index.end()) fail("unknown row '" + row + "'", line_no, 1);
          if (rhs_map.count(it->second) != 0) fail("duplicate RHS entry", line_no, 1);
          rhs_map.emplace(it->second, value_of(f[k + 1], line_no));
        }
        break;
      }
      case Section::kBounds: {
        if (f.size() < 3) fail("malformed BOUNDS line", line_no, 1);
        const std::string& kind = f[0];
        int col = intern_col(f[2]);
        if (kind == "FR") {
          lower[col] = std::nullopt;
          upper[col] = std::nullopt;
          lower_explicit.insert(col);
        } else if (kind == "MI") {
          lower[col] = std::nullopt;
          lower_explicit.insert(col);
        } else if (kind == "PL") {
          upper[col] = std::nullopt;
        } else if (kind == "LO" || kind == "UP" || kind == "FX") {
          if (f.size() != 4) fail("missing bound value", line_no, 1);
          Rational v = value_of(f[3], line_no);
          if (kind == "LO") {
            lower[col] = v;
            lower_explicit.insert(col);
          } else if (kind == "UP") {
            upper[col] = v;
          } else {
            lower[col] = v;
            upper[col] = v;
            lower_explicit.insert(col);
          }
        } else {
          fail("unsupported bound type '" + kind + "'", line_no, 1);
        }
        break;
      }
      case Section::kNone:
        fail("content before any MPS section", line_no, 1);
      case Section::kDone:
        break;
    }
  }
  if (section != Section::kDone) fail("missing ENDATA", static_cast<int>(lines.size()), 1);
  if (objective_row.empty()) fail("missing objective (N) row", 1, 1);
  if (row_names.empty()) fail("problem has no constraint rows", 1, 1);
  if (lp.col_names.empty()) fail("problem has no variables", 1, 1);

  int m = static_cast<int>(row_names.size());
  int n = static_cast<int>(lp.col_names.size());
  lp.sense = Sense::kMin;
  lp.row_names = std::move(row_names);
  lp.relations = std::move(relations);
  lp.matrix = RatMatrix::from_triplets(m, n, std::move(triplets));
  lp.objective.assign(static_cast<std::size_t>(n), Rational(0));
  for (const auto& [col, v] : objective) lp.objective[static_cast<std::size_t>(col)] = v;
  lp.rhs.assign(static_cast<std::size_t>(m), Rational(0));
  for (const auto& [row, v] : rhs_map) lp.rhs[static_cast<std::size_t>(row)] = v;
  lp.lower.assign(static_cast<std::size_t>(n), Rational(0));
  lp.upper.assign(static_cast<std::size_t>(n), std::nullopt);
  for (const auto& [col, v] : lower) lp.lower[static_cast<std::size_t>(col)] = v;
  for (const auto& [col, v] : upper) lp.upper[static_cast<std::size_t>(col)] = v;
  for (int j = 0; j < n; ++j) {
    const auto& lo = lp.lower[static_cast<std::size_t>(j)];
    const auto& hi = lp.upper[static_cast<std::size_t>(j)];
    if (lo.has_value() && hi.has_value() && *lo > *hi) {
      fail("inconsistent bounds for column '" + lp.col_names[static_cast<std::size_t>(j)] + "'",
           1, 1);
    }
  }
  return lp;
}

GeneralLP parse_lp_file(const std::string& text, LpFormat format) {
  return format == LpFormat::kExactLp ? parse_exact_lp(text) : parse_mps(text);
}

std::string to_exact_lp_text(const GeneralLP& lp) {
  std::ostringstream os;
  os << (lp.sense == Sense::kMin ? "min" : "max");
  // every column appears here, zeros included, to pin the column order
  for (int j = 0; j < lp.num_cols(); ++j) {
    const Rational& c = lp.objective[static_cast<std::size_t>(j)];
    os << " + " << rational_to_string(c) << " " << lp.col_names[static_cast<std::size_t>(j)];
  }
  os << " ;\nst\n";
  auto dense = lp.matrix.to_dense();
  for (int i = 0; i < lp.num_rows(); ++i) {
    os << lp.row_names[static_cast<std::size_t>(i)] << ":";
    bool any = false;
    for (int j = 0; j < lp.num_cols(); ++j) {
      const Rational& v = dense[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (sgn(v) != 0) {
        os << " + " << rational_to_string(v) << " " << lp.col_names[static_cast<std::size_t>(j)];
        any = true;
      }
    }
    if (!any) os << " + 0 " << lp.col_names[0];
    switch (lp.relations[static_cast<std::size_t>(i)]) {
      case Relation::kLe: os << " <= "; break;
      case Relation::kEq: os << " = "; break;
      case Relation::kGe: os << " >= "; break;
    }
    os << rational_to_string(lp.rhs[static_cast<std::size_t>(i)]) << " ;\n";
  }
  os << "bounds\n";
  for (int j = 0; j < lp.num_cols(); ++j) {
    const auto& lo = lp.lower[static_cast<std::size_t>(j)];
    const auto& hi = lp.upper[static_cast<std::size_t>(j)];
    const std::string& name = lp.col_names[static_cast<std::size_t>(j)];
    if (!lo.has_value()) {
      os << name << " free ;\n";
      if (hi.has_value()) os << name << " <= " << rational_to_string(*hi) << " ;\n";
    } else if (hi.has_value()) {
      os << rational_to_string(*lo) << " <= " << name << " <= " << rational_to_string(*hi)
         << " ;\n";
    } else if (sgn(*lo) != 0) {
      os << name << " >= " << rational_to_string(*lo) << " ;\n";
    }
  }
  os << "end\n";
  return os.str();
}

StandardLP to_standard_form(const GeneralLP& lp) {
  const int n0 = lp.num_cols();
  const int m0 = lp.num_rows();
  if (n0 == 0 || m0 == 0) throw std::invalid_argument("to_standard_form: empty problem");
  if (static_cast<int>(lp.objective.size()) != n0 ||
      static_cast<int>(lp.relations.size()) != m0 ||
      static_cast<int>(lp.rhs.size()) != m0 ||
      static_cast<int>(lp.lower.size()) != n0 ||
      static_cast<int>(lp.upper.size()) != n0) {
    throw std::invalid_argument("to_standard_form: inconsistent dimensions");
  }

  StandardLP out;
  out.objective_negated = lp.sense == Sense::kMax;
  out.row_names = lp.row_names;

  // column layout: structural columns (split when the lower bound is -inf),
  // then row slacks, then upper-bound slacks
  std::vector<std::vector<int>> col_of_var(static_cast<std::size_t>(n0));
  RatVector cost;
  RatVector lower;
  for (int j = 0; j < n0; ++j) {
    const std::string& name = lp.col_names[static_cast<std::size_t>(j)];
    Rational c = lp.objective[static_cast<std::size_t>(j)];
    if (lp.sense == Sense::kMax) c = -c;
    if (lp.lower[static_cast<std::size_t>(j)].has_value()) {
      col_of_var[static_cast<std::size_t>(j)] = {static_cast<int>(out.columns.size())};
      out.columns.push_back({ColumnKind::kStructural, j, name});
      cost.push_back(c);
      lower.push_back(*lp.lower[static_cast<std::size_t>(j)]);
    } else {
      int pos = static_cast<int>(out.columns.size());
      out.columns.push_back({ColumnKind::kSplitPositive, j, name + "+"});
      out.columns.push_back({ColumnKind::kSplitNegative, j, name + "-"});
      col_of_var[static_cast<std::size_t>(j)] = {pos, pos + 1};
      cost.push_back(c);
      cost.push_back(-c);
      lower.push_back(Rational(0));
      lower.push_back(Rational(0));
    }
  }

  std::vector<MatrixEntry> triplets;
  auto add_var_entry = [&](int row, int var, const Rational& v) {
    const auto& cols = col_of_var[static_cast<std::size_t>(var)];
    triplets.push_back({row, cols[0], v});
    if (cols.size() == 2) triplets.push_back({row, cols[1], Rational(-v)});
  };

  RatVector b;
  for (int i = 0; i < m0; ++i) b.push_back(lp.rhs[static_cast<std::size_t>(i)]);

  for (const MatrixEntry& e : lp.matrix.entries()) add_var_entry(e.row, e.col, e.value);

  for (int i = 0; i < m0; ++i) {
    Relation rel = lp.relations[static_cast<std::size_t>(i)];
    if (rel == Relation::kEq) continue;
    int col = static_cast<int>(out.columns.size());
    out.columns.push_back(
        {ColumnKind::kRowSlack, -1, "slack_" + lp.row_names[static_cast<std::size_t>(i)]});
    cost.push_back(Rational(0));
    lower.push_back(Rational(0));
    triplets.push_back({i, col, rel == Relation::kLe ? Rational(1) : Rational(-1)});
  }

  int next_row = m0;
  for (int j = 0; j < n0; ++j) {
    if (!lp.upper[static_cast<std::size_t>(j)].has_value()) continue;
    int row = next_row++;
    out.row_names.push_back("ub_" + lp.col_names[static_cast<std::size_t>(j)]);
    b.push_back(*lp.upper[static_cast<std::size_t>(j)]);
    add_var_entry(row, j, Rational(1));
    int col = static_cast<int>(out.columns.size());
    out.columns.push_back(
        {ColumnKind::kBoundSlack, j, "ubs_" + lp.col_names[static_cast<std::size_t>(j)]});
    cost.push_back(Rational(0));
    lower.push_back(Rational(0));
    triplets.push_back({row, col, Rational(1)});
  }

  out.a = RatMatrix::from_triplets(next_row, static_cast<int>(out.columns.size()),
                                   std::move(triplets));
  out.b = std::move(b);
  out.cost = std::move(cost);
  out.lower = std::move(lower);
  return out;
}

RatVector map_to_original(const StandardLP& lp, const RatVector& x, int original_cols) {
  RatVector out(static_cast<std::size_t>(original_cols), Rational(0));
  for (std::size_t j = 0; j < lp.columns.size(); ++j) {
    const ColumnOrigin& origin = lp.columns[j];
    if (origin.original_column < 0) continue;
    switch (origin.kind) {
      case ColumnKind::kStructural:
      case ColumnKind::kSplitPositive:
        out[static_cast<std::size_t>(origin.original_column)] += x[j];
        break;
      case ColumnKind::kSplitNegative:
        out[static_cast<std::size_t>(origin.original_column)] -= x[j];
        break;
      default:
        break;
    }
  }
  return out;
}

Int hadamard_denominator_bound(const StandardLP& lp) {
  return hadamard_denominator_bound(lp.a, lp.b, lp.lower, lp.cost);
}

namespace {

// Nearest IEEE-754 double as an exact rational; ties to even mantissa.
Rational round_to_nearest_double(const Rational& value) {
  if (sgn(value) == 0) return Rational(0);
  Rational mag = abs(value);
  long exp = floor_log2(mag);
  Rational result;
  if (exp >= -1022) {
    Int mant = round_half_even(mag * pow2(52 - exp));
    if (mant == Int(1) << 53) {
      mant = Int(1) << 52;
      ++exp;
    }
    if (exp > 1023) throw OracleInputError("value overflows double precision");
    result = Rational(mant, 1) * pow2(exp - 52);
  } else {
    Int mant = round_half_even(mag * pow2(kDoublePrecision));
    result = Rational(mant, 1) * pow2(-kDoublePrecision);
  }
  return sgn(value) < 0 ? Rational(-result) : result;
}

}  // namespace

Rational round_to_precision(const Rational& value, int precision) {
  if (precision < 1) throw std::invalid_argument("round_to_precision: precision must be >= 1");
  if (precision == kDoublePrecision) return round_to_nearest_double(value);
  Int k = round_half_even(value * pow2(precision));
  Int limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), 2, static_cast<unsigned long>(2 * precision));
  if (abs(k) > limit) throw OracleInputError("value overflows the oracle number set");
  return make_rational(k, Int(1) << static_cast<unsigned long>(precision));
}

RatVector round_vector(const RatVector& v, int precision) {
  RatVector out;
  out.reserve(v.size());
  for (const Rational& x : v) out.push_back(round_to_precision(x, precision));
  return out;
}

RatMatrix round_matrix(const RatMatrix& a, int precision) {
  std::vector<MatrixEntry> triplets;
  triplets.reserve(a.nonzero_count());
  for (const MatrixEntry& e : a.entries()) {
    Rational r = round_to_precision(e.value, precision);
    if (sgn(r) != 0) triplets.push_back({e.row, e.col, std::move(r)});
  }
  return RatMatrix::from_triplets(a.rows(), a.cols(), std::move(triplets));
}

FloatData round_to_oracle_precision(const StandardLP& lp, int precision) {
  FloatData data;
  data.precision = precision;
  data.a = round_matrix(lp.a, precision);
  data.b = round_vector(lp.b, precision);
  data.lower = round_vector(lp.lower, precision);
  data.cost = round_vector(lp.cost, precision);
  return data;
}

}  // namespace exlp
