#include "exlp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace exlp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dense LU with row partial pivoting for the basis matrix.
class DenseLU {
 public:
  // cols[j] is the j-th basis column (length m). Returns false on a pivot
  // smaller than tiny.
  bool factor(const std::vector<const std::vector<double>*>& cols, double tiny) {
    m_ = static_cast<int>(cols.size());
    lu_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
    perm_.resize(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) perm_[static_cast<std::size_t>(i)] = i;
    for (int j = 0; j < m_; ++j) {
      for (int i = 0; i < m_; ++i) at(i, j) = (*cols[static_cast<std::size_t>(j)])[static_cast<std::size_t>(i)];
    }
    for (int k = 0; k < m_; ++k) {
      int pivot = k;
      double best = std::abs(at(k, k));
      for (int i = k + 1; i < m_; ++i) {
        double v = std::abs(at(i, k));
        if (v > best) {
          best = v;
          pivot = i;
        }
      }
      if (best <= tiny) return false;
      if (pivot != k) {
        for (int j = 0; j < m_; ++j) std::swap(at(pivot, j), at(k, j));
        std::swap(perm_[static_cast<std::size_t>(pivot)], perm_[static_cast<std::size_t>(k)]);
      }
      for (int i = k + 1; i < m_; ++i) {
        double f = at(i, k) / at(k, k);
        at(i, k) = f;
        if (f != 0.0) {
          for (int j = k + 1; j < m_; ++j) at(i, j) -= f * at(k, j);
        }
      }
    }
    return true;
  }

  // v := B^{-1} v
  void ftran(std::vector<double>& v) const {
    std::vector<double> w(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) w[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])];
    for (int i = 1; i < m_; ++i) {
      double s = w[static_cast<std::size_t>(i)];
      for (int j = 0; j < i; ++j) s -= at(i, j) * w[static_cast<std::size_t>(j)];
      w[static_cast<std::size_t>(i)] = s;
    }
    for (int i = m_ - 1; i >= 0; --i) {
      double s = w[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < m_; ++j) s -= at(i, j) * w[static_cast<std::size_t>(j)];
      w[static_cast<std::size_t>(i)] = s / at(i, i);
    }
    v = std::move(w);
  }

  // v := B^{-T} v
  void btran(std::vector<double>& v) const {
    // solve U^T w = v (forward), then L^T z = w (backward), then undo the
    // row permutation
    std::vector<double> w(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) {
      double s = v[static_cast<std::size_t>(i)];
      for (int j = 0; j < i; ++j) s -= at(j, i) * w[static_cast<std::size_t>(j)];
      w[static_cast<std::size_t>(i)] = s / at(i, i);
    }
    for (int i = m_ - 1; i >= 0; --i) {
      double s = w[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < m_; ++j) s -= at(j, i) * w[static_cast<std::size_t>(j)];
      w[static_cast<std::size_t>(i)] = s;
    }
    for (int i = 0; i < m_; ++i) v[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])] = w[static_cast<std::size_t>(i)];
  }

 private:
  double& at(int i, int j) { return lu_[static_cast<std::size_t>(i) * m_ + j]; }
  double at(int i, int j) const { return lu_[static_cast<std::size_t>(i) * m_ + j]; }

  int m_ = 0;
  std::vector<double> lu_;
  std::vector<int> perm_;
};

struct Eta {
  int pos;                  // basis position whose column was replaced
  std::vector<double> col;  // spike w = B^{-1} a_enter
};

// Basis solver: LU factors plus a product-form eta file.
class BasisSolver {
 public:
  bool refactor(const std::vector<const std::vector<double>*>& cols, double tiny) {
    etas_.clear();
    return lu_.factor(cols, tiny);
  }

  void push_eta(int pos, std::vector<double> spike) { etas_.push_back({pos, std::move(spike)}); }
  std::size_t eta_count() const { return etas_.size(); }

  void ftran(std::vector<double>& v) const {
    lu_.ftran(v);
    for (const Eta& e : etas_) {
      double t = v[static_cast<std::size_t>(e.pos)] / e.col[static_cast<std::size_t>(e.pos)];
      for (std::size_t i = 0; i < e.col.size(); ++i) {
        if (static_cast<int>(i) == e.pos) continue;
        v[i] -= e.col[i] * t;
      }
      v[static_cast<std::size_t>(e.pos)] = t;
    }
  }

  void btran(std::vector<double>& v) const {
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
      const Eta& e = *it;
      double s = v[static_cast<std::size_t>(e.pos)];
      for (std::size_t i = 0; i < e.col.size(); ++i) {
        if (static_cast<int>(i) == e.pos) continue;
        s -= e.col[i] * v[i];
      }
      v[static_cast<std::size_t>(e.pos)] = s / e.col[static_cast<std::size_t>(e.pos)];
    }
    lu_.btran(v);
  }

 private:
  DenseLU lu_;
  std::vector<Eta> etas_;
};

double to_double(const Rational& v) { return mpq_get_d(v.get_mpq_t()); }

enum class PhaseResult { kOptimal, kUnbounded, kIterationLimit, kSingular };

class Simplex {
 public:
  Simplex(const FloatData& data, const OracleConfig& cfg, double pivot_tol)
      : cfg_(cfg), pivot_tol_(pivot_tol) {
    m_ = data.a.rows();
    n_ = data.a.cols();
    total_ = n_ + m_;
    cols_.assign(static_cast<std::size_t>(total_),
                 std::vector<double>(static_cast<std::size_t>(m_), 0.0));
    for (const MatrixEntry& e : data.a.entries()) {
      cols_[static_cast<std::size_t>(e.col)][static_cast<std::size_t>(e.row)] =
          to_double(e.value);
    }
    lower_.resize(static_cast<std::size_t>(total_), 0.0);
    for (int j = 0; j < n_; ++j) lower_[static_cast<std::size_t>(j)] = to_double(data.lower[static_cast<std::size_t>(j)]);
    b_.resize(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) b_[static_cast<std::size_t>(i)] = to_double(data.b[static_cast<std::size_t>(i)]);
    cost_.resize(static_cast<std::size_t>(total_), 0.0);
    for (int j = 0; j < n_; ++j) cost_[static_cast<std::size_t>(j)] = to_double(data.cost[static_cast<std::size_t>(j)]);
  }

  OracleFailureReason run(const std::vector<int>* warm_basis) {
    if (warm_basis == nullptr || !warm_start(*warm_basis)) {
      setup_phase1();
      PhaseResult r1 = iterate(phase1_cost_, /*allow_artificials=*/true);
      if (r1 == PhaseResult::kIterationLimit) return OracleFailureReason::kIterationLimit;
      if (r1 == PhaseResult::kSingular) return OracleFailureReason::kNumericalBreakdown;
      if (r1 == PhaseResult::kUnbounded) return OracleFailureReason::kNumericalBreakdown;
      double infeas = 0.0;
      for (int j = n_; j < total_; ++j) infeas += x_[static_cast<std::size_t>(j)];
      if (infeas > feas_tol()) return OracleFailureReason::kPrimalInfeasible;
      drive_out_artificials();
    }

    PhaseResult r2 = iterate(cost_, /*allow_artificials=*/false);
    if (r2 == PhaseResult::kIterationLimit) return OracleFailureReason::kIterationLimit;
    if (r2 == PhaseResult::kSingular) return OracleFailureReason::kNumericalBreakdown;
    if (r2 == PhaseResult::kUnbounded) return OracleFailureReason::kUnbounded;
    return OracleFailureReason::kNone;
  }

  // Final primal values for structural columns; nonbasic columns are reported
  // via their index so the caller can substitute the exact rounded bound.
  const std::vector<double>& values() const { return x_; }
  const std::vector<int>& basic() const { return basic_; }
  bool is_basic_col(int j) const { return pos_of_[static_cast<std::size_t>(j)] >= 0; }
  int structural_cols() const { return n_; }
  long iterations() const { return iterations_; }

  std::vector<double> dual_values() {
    std::vector<double> y(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) {
      y[static_cast<std::size_t>(i)] = cost_[static_cast<std::size_t>(basic_[static_cast<std::size_t>(i)])];
    }
    solver_.btran(y);
    return y;
  }

  // Reduced cost of a column under phase-2 costs.
  double reduced_cost(int j, const std::vector<double>& y) const {
    double d = cost_[static_cast<std::size_t>(j)];
    const std::vector<double>& col = cols_[static_cast<std::size_t>(j)];
    for (int i = 0; i < m_; ++i) d -= y[static_cast<std::size_t>(i)] * col[static_cast<std::size_t>(i)];
    return d;
  }

 private:
  double feas_tol() const {
    double scale = 1.0;
    for (double v : b_) scale = std::max(scale, std::abs(v));
    return 1e-9 * scale;
  }

  void setup_phase1() {
    x_.assign(static_cast<std::size_t>(total_), 0.0);
    for (int j = 0; j < n_; ++j) x_[static_cast<std::size_t>(j)] = lower_[static_cast<std::size_t>(j)];
    std::vector<double> residual = b_;
    for (int j = 0; j < n_; ++j) {
      double xv = x_[static_cast<std::size_t>(j)];
      if (xv == 0.0) continue;
      const std::vector<double>& col = cols_[static_cast<std::size_t>(j)];
      for (int i = 0; i < m_; ++i) residual[static_cast<std::size_t>(i)] -= col[static_cast<std::size_t>(i)] * xv;
    }
    phase1_cost_.assign(static_cast<std::size_t>(total_), 0.0);
    basic_.resize(static_cast<std::size_t>(m_));
    pos_of_.assign(static_cast<std::size_t>(total_), -1);
    for (int i = 0; i < m_; ++i) {
      int art = n_ + i;
      double r = residual[static_cast<std::size_t>(i)];
      cols_[static_cast<std::size_t>(art)][static_cast<std::size_t>(i)] = r < 0.0 ? -1.0 : 1.0;
      x_[static_cast<std::size_t>(art)] = std::abs(r);
      phase1_cost_[static_cast<std::size_t>(art)] = 1.0;
      basic_[static_cast<std::size_t>(i)] = art;
      pos_of_[static_cast<std::size_t>(art)] = i;
    }
    refactor();
  }

  bool refactor() {
    std::vector<const std::vector<double>*> cols;
    cols.reserve(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) cols.push_back(&cols_[static_cast<std::size_t>(basic_[static_cast<std::size_t>(i)])]);
    return solver_.refactor(cols, 1e-13);
  }

  // Primal-feasible start from a known basis: nonbasic columns go to their
  // bounds, basic values solve the equations. Returns false when the basis is
  // singular in double precision or the resulting point is infeasible.
  bool warm_start(const std::vector<int>& basis) {
    if (static_cast<int>(basis.size()) != m_) return false;
    std::vector<bool> used(static_cast<std::size_t>(total_), false);
    for (int j : basis) {
      if (j < 0 || j >= n_ || used[static_cast<std::size_t>(j)]) return false;
      used[static_cast<std::size_t>(j)] = true;
    }
    basic_.assign(basis.begin(), basis.end());
    pos_of_.assign(static_cast<std::size_t>(total_), -1);
    for (int i = 0; i < m_; ++i) pos_of_[static_cast<std::size_t>(basic_[static_cast<std::size_t>(i)])] = i;
    phase1_cost_.assign(static_cast<std::size_t>(total_), 0.0);
    if (!refactor()) return false;

    x_.assign(static_cast<std::size_t>(total_), 0.0);
    std::vector<double> rhs = b_;
    for (int j = 0; j < n_; ++j) {
      if (pos_of_[static_cast<std::size_t>(j)] >= 0) continue;
      double lj = lower_[static_cast<std::size_t>(j)];
      x_[static_cast<std::size_t>(j)] = lj;
      if (lj == 0.0) continue;
      const std::vector<double>& col = cols_[static_cast<std::size_t>(j)];
      for (int i = 0; i < m_; ++i) rhs[static_cast<std::size_t>(i)] -= col[static_cast<std::size_t>(i)] * lj;
    }
    solver_.ftran(rhs);
    double tol = feas_tol();
    for (int i = 0; i < m_; ++i) {
      int bj = basic_[static_cast<std::size_t>(i)];
      if (rhs[static_cast<std::size_t>(i)] < lower_[static_cast<std::size_t>(bj)] - tol) return false;
      x_[static_cast<std::size_t>(bj)] = rhs[static_cast<std::size_t>(i)];
    }
    return true;
  }

  PhaseResult iterate(const std::vector<double>& cost, bool allow_artificials) {
    bool bland = false;
    long degenerate_streak = 0;
    while (true) {
      if (iterations_ >= cfg_.iteration_limit) return PhaseResult::kIterationLimit;
      if (solver_.eta_count() >= static_cast<std::size_t>(cfg_.refactor_interval)) {
        if (!refactor()) return PhaseResult::kSingular;
      }

      std::vector<double> y(static_cast<std::size_t>(m_));
      for (int i = 0; i < m_; ++i) y[static_cast<std::size_t>(i)] = cost[static_cast<std::size_t>(basic_[static_cast<std::size_t>(i)])];
      solver_.btran(y);

      int enter = -1;
      double best = -kDualTol;
      int limit = allow_artificials ? total_ : n_;
      for (int j = 0; j < limit; ++j) {
        if (pos_of_[static_cast<std::size_t>(j)] >= 0) continue;
        double d = cost[static_cast<std::size_t>(j)];
        const std::vector<double>& col = cols_[static_cast<std::size_t>(j)];
        for (int i = 0; i < m_; ++i) d -= y[static_cast<std::size_t>(i)] * col[static_cast<std::size_t>(i)];
        if (d < best) {
          enter = j;
          best = d;
          if (bland) break;  // first improving index
        }
      }
      if (enter < 0) return PhaseResult::kOptimal;

      std::vector<double> w = cols_[static_cast<std::size_t>(enter)];
      solver_.ftran(w);

      int leave_pos = -1;
      double theta = kInf;
      double leave_pivot = 0.0;
      for (int i = 0; i < m_; ++i) {
        double wi = w[static_cast<std::size_t>(i)];
        if (wi <= pivot_tol_) continue;
        int bj = basic_[static_cast<std::size_t>(i)];
        double room = x_[static_cast<std::size_t>(bj)] - lower_[static_cast<std::size_t>(bj)];
        if (room < 0.0) room = 0.0;
        double ratio = room / wi;
        bool better = ratio < theta - 1e-12;
        bool tie = std::abs(ratio - theta) <= 1e-12;
        // under Bland's rule ties resolve by smallest column index (anti-
        // cycling); otherwise prefer the larger pivot element
        bool take_tie = false;
        if (tie && leave_pos >= 0) {
          if (bland) {
            take_tie = bj < basic_[static_cast<std::size_t>(leave_pos)];
          } else {
            take_tie = wi > leave_pivot ||
                       (wi == leave_pivot && bj < basic_[static_cast<std::size_t>(leave_pos)]);
          }
        }
        if (better || take_tie) {
          theta = ratio;
          leave_pos = i;
          leave_pivot = wi;
        }
      }
      if (leave_pos < 0) return PhaseResult::kUnbounded;

      if (theta <= 1e-12) {
        if (++degenerate_streak > cfg_.bland_threshold) bland = true;
      } else {
        degenerate_streak = 0;
      }

      for (int i = 0; i < m_; ++i) {
        int bj = basic_[static_cast<std::size_t>(i)];
        x_[static_cast<std::size_t>(bj)] -= theta * w[static_cast<std::size_t>(i)];
      }
      int leave_col = basic_[static_cast<std::size_t>(leave_pos)];
      x_[static_cast<std::size_t>(leave_col)] = lower_[static_cast<std::size_t>(leave_col)];
      x_[static_cast<std::size_t>(enter)] = lower_[static_cast<std::size_t>(enter)] + theta;

      basic_[static_cast<std::size_t>(leave_pos)] = enter;
      pos_of_[static_cast<std::size_t>(leave_col)] = -1;
      pos_of_[static_cast<std::size_t>(enter)] = leave_pos;
      solver_.push_eta(leave_pos, std::move(w));
      ++iterations_;
    }
  }

  // Degenerate pivots that replace basic artificials by structural columns
  // where a usable pivot element exists.
  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basic_[static_cast<std::size_t>(i)] < n_) continue;
      std::vector<double> rho(static_cast<std::size_t>(m_), 0.0);
      rho[static_cast<std::size_t>(i)] = 1.0;
      solver_.btran(rho);
      int replacement = -1;
      double best = pivot_tol_ * 10;
      for (int j = 0; j < n_; ++j) {
        if (pos_of_[static_cast<std::size_t>(j)] >= 0) continue;
        const std::vector<double>& col = cols_[static_cast<std::size_t>(j)];
        double alpha = 0.0;
        for (int r = 0; r < m_; ++r) alpha += rho[static_cast<std::size_t>(r)] * col[static_cast<std::size_t>(r)];
        if (std::abs(alpha) > best) {
          best = std::abs(alpha);
          replacement = j;
        }
      }
      if (replacement < 0) continue;  // structurally rank-deficient row
      std::vector<double> w = cols_[static_cast<std::size_t>(replacement)];
      solver_.ftran(w);
      int leave_col = basic_[static_cast<std::size_t>(i)];
      x_[static_cast<std::size_t>(leave_col)] = 0.0;
      x_[static_cast<std::size_t>(replacement)] = lower_[static_cast<std::size_t>(replacement)];
      basic_[static_cast<std::size_t>(i)] = replacement;
      pos_of_[static_cast<std::size_t>(leave_col)] = -1;
      pos_of_[static_cast<std::size_t>(replacement)] = i;
      solver_.push_eta(i, std::move(w));
    }
  }

  static constexpr double kDualTol = 1e-9;

  const OracleConfig& cfg_;
  double pivot_tol_;
  int m_ = 0, n_ = 0, total_ = 0;
  std::vector<std::vector<double>> cols_;
  std::vector<double> lower_, b_, cost_, phase1_cost_, x_;
  std::vector<int> basic_, pos_of_;
  BasisSolver solver_;
  long iterations_ = 0;
};

}  // namespace

const char* to_string(ResidualCheck check) {
  switch (check) {
    case ResidualCheck::kPass: return "pass";
    case ResidualCheck::kPrimalResidual: return "primal-residual";
    case ResidualCheck::kPrimalBound: return "primal-bound";
    case ResidualCheck::kDualFeasibility: return "dual-feasibility";
    case ResidualCheck::kComplementarity: return "complementarity";
    case ResidualCheck::kBasisPrimal: return "basis-primal";
    case ResidualCheck::kBasisDual: return "basis-dual";
    case ResidualCheck::kBasisShape: return "basis-shape";
  }
  return "unknown";
}

ResidualCheck check_oracle_residuals(const OracleSolution& sol, const StandardLP& exact,
                                     const OracleConfig& cfg) {
  const std::size_t m = static_cast<std::size_t>(exact.num_rows());
  const std::size_t n = static_cast<std::size_t>(exact.num_cols());
  if (sol.basis.size() != m) return ResidualCheck::kBasisShape;

  RatVector ax = exact.a.multiply(sol.x);
  for (std::size_t i = 0; i < m; ++i) {
    if (abs(Rational(exact.b[i] - ax[i])) > cfg.eta) return ResidualCheck::kPrimalResidual;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (sol.x[j] < exact.lower[j] - cfg.eta) return ResidualCheck::kPrimalBound;
  }
  std::vector<bool> in_basis(n, false);
  for (int j : sol.basis) {
    if (j < 0 || j >= static_cast<int>(n)) return ResidualCheck::kBasisShape;
    in_basis[static_cast<std::size_t>(j)] = true;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!in_basis[j] && abs(Rational(sol.x[j] - exact.lower[j])) > cfg.eta) {
      return ResidualCheck::kBasisPrimal;
    }
  }
  RatVector aty = exact.a.multiply_transpose(sol.y);
  RatVector slack(n);
  for (std::size_t j = 0; j < n; ++j) slack[j] = exact.cost[j] - aty[j];
  for (std::size_t j = 0; j < n; ++j) {
    if (in_basis[j] && abs(slack[j]) > cfg.eta) return ResidualCheck::kBasisDual;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (slack[j] < -cfg.eta) return ResidualCheck::kDualFeasibility;
  }
  Rational gap(0);
  for (std::size_t j = 0; j < n; ++j) gap += (sol.x[j] - exact.lower[j]) * slack[j];
  if (abs(gap) > cfg.sigma) return ResidualCheck::kComplementarity;
  return ResidualCheck::kPass;
}

namespace {

OracleSolution attempt_solve(const FloatData& data, const StandardLP& exact,
                             const OracleConfig& cfg, double pivot_tol,
                             const std::vector<int>* warm_basis) {
  OracleSolution sol;
  Simplex simplex(data, cfg, pivot_tol);
  OracleFailureReason reason = simplex.run(warm_basis);
  sol.iterations = simplex.iterations();
  if (reason != OracleFailureReason::kNone) {
    sol.failure = reason;
    sol.detail = "simplex did not reach a verified optimum";
    return sol;
  }

  const int n = simplex.structural_cols();
  const int m = exact.num_rows();
  std::vector<double> y = simplex.dual_values();
  for (int j = 0; j < n; ++j) {
    if (simplex.is_basic_col(j) && !std::isfinite(simplex.values()[static_cast<std::size_t>(j)])) {
      sol.failure = OracleFailureReason::kNumericalBreakdown;
      sol.detail = "non-finite primal value";
      return sol;
    }
  }
  for (int i = 0; i < m; ++i) {
    if (!std::isfinite(y[static_cast<std::size_t>(i)])) {
      sol.failure = OracleFailureReason::kNumericalBreakdown;
      sol.detail = "non-finite dual value";
      return sol;
    }
  }
  sol.x.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (simplex.is_basic_col(j)) {
      sol.x[static_cast<std::size_t>(j)] = Rational(simplex.values()[static_cast<std::size_t>(j)]);
    } else {
      sol.x[static_cast<std::size_t>(j)] = data.lower[static_cast<std::size_t>(j)];
    }
  }
  sol.y.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) sol.y[static_cast<std::size_t>(i)] = Rational(y[static_cast<std::size_t>(i)]);

  std::vector<int> basis;
  for (int j : simplex.basic()) {
    if (j < n) basis.push_back(j);
  }
  if (static_cast<int>(basis.size()) < m) {
    // rank-deficient rows left artificials basic; pad with the nonbasic
    // structural columns of smallest reduced cost so the exact verification
    // below stays the gatekeeper
    sol.basis_padded = true;
    std::vector<std::pair<double, int>> candidates;
    for (int j = 0; j < n; ++j) {
      if (simplex.is_basic_col(j)) continue;
      candidates.emplace_back(std::abs(simplex.reduced_cost(j, y)), j);
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [score, j] : candidates) {
      if (static_cast<int>(basis.size()) >= m) break;
      basis.push_back(j);
    }
  }
  std::sort(basis.begin(), basis.end());
  sol.basis = std::move(basis);

  if (data.precision != kDoublePrecision) {
    for (Rational& v : sol.x) v = round_to_precision(v, data.precision);
    for (Rational& v : sol.y) v = round_to_precision(v, data.precision);
  }

  ResidualCheck check = check_oracle_residuals(sol, exact, cfg);
  if (check != ResidualCheck::kPass) {
    sol.status = OracleStatus::kFailure;
    sol.failure = OracleFailureReason::kResidualCheck;
    sol.detail = std::string("residual verification failed: ") + to_string(check);
    return sol;
  }
  sol.status = OracleStatus::kSolution;
  return sol;
}

}  // namespace

OracleSolution SimplexOracle::solve(const FloatData& data, const StandardLP& exact,
                                    const std::vector<int>* warm_basis) {
  OracleSolution first = attempt_solve(data, exact, cfg_, 1e-9, warm_basis);
  if (first.status == OracleStatus::kSolution ||
      first.failure != OracleFailureReason::kResidualCheck) {
    return first;
  }
  // one retry from scratch with the ratio-test tolerance tightened by 10x
  OracleSolution second = attempt_solve(data, exact, cfg_, 1e-8, warm_basis);
  if (second.status == OracleStatus::kSolution) return second;
  second.failure = OracleFailureReason::kResidualCheck;
  return second;
}

OracleSolution oracle_solve(const FloatData& data, const StandardLP& exact,
                            const OracleConfig& cfg) {
  SimplexOracle oracle(cfg);
  return oracle.solve(data, exact);
}

}  // namespace exlp
