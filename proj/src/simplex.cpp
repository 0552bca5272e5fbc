#include "starbound/simplex.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <limits>

namespace starbound {

const char* status_name(LPStatus s) {
  switch (s) {
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Infeasible: return "infeasible";
    case LPStatus::IterationLimit: return "iteration-limit";
  }
  return "?";
}

namespace {

// Columns shifted to x' in [0, range] with c' <= 0; box rows appended.
struct FloatForm {
  int m = 0, n = 0;
  std::vector<bool> reflected;
  std::vector<double> lo, hi, cprime;
  std::vector<std::vector<std::pair<int, double>>> cols;  // A' by column, LP rows only
  std::vector<std::vector<std::pair<int, double>>> rows;  // A' by row
  std::vector<double> bprime;                             // size m + n
  double c0 = 0;
};

FloatForm shift(const LPProblem& lp) {
  FloatForm f;
  f.m = lp.num_rows();
  f.n = lp.num_vars();
  f.reflected.assign(f.n, false);
  f.lo.resize(f.n);
  f.hi.resize(f.n);
  f.cprime.assign(f.n, 0);
  f.cols.resize(f.n);
  f.rows.resize(f.m);
  std::vector<double> c(f.n, 0), shift_by(f.n);
  for (const auto& [j, r] : lp.objective) c[j] = r.get_d();
  for (int j = 0; j < f.n; ++j) {
    f.lo[j] = lp.vars[j].lo.value();
    f.hi[j] = lp.vars[j].hi.value();
    f.reflected[j] = c[j] > 0;
    shift_by[j] = f.reflected[j] ? f.hi[j] : f.lo[j];
    f.cprime[j] = f.reflected[j] ? -c[j] : c[j];
    f.c0 += c[j] * shift_by[j];
  }
  f.bprime.resize(f.m + f.n);
  for (int i = 0; i < f.m; ++i) {
    double b = lp.rows[i].rhs.value();
    for (const auto& [j, q] : lp.rows[i].terms) {
      double a = q.value();
      b -= a * shift_by[j];
      f.cols[j].emplace_back(i, f.reflected[j] ? -a : a);
      f.rows[i].emplace_back(j, f.reflected[j] ? -a : a);
    }
    f.bprime[i] = b;
  }
  for (int j = 0; j < f.n; ++j) f.bprime[f.m + j] = std::max(0.0, f.hi[j] - f.lo[j]);
  return f;
}

// Column v of [-A'^T | I] as a dense vector of length n.
Eigen::VectorXd dual_column(const FloatForm& f, int M, int v) {
  Eigen::VectorXd col = Eigen::VectorXd::Zero(f.n);
  if (v >= M) {
    col[v - M] = 1.0;
  } else if (v >= f.m) {
    col[v - f.m] = -1.0;
  } else {
    for (const auto& [j, a] : f.rows[v]) col[j] -= a;
  }
  return col;
}

// Revised primal simplex on  max -b'.z  s.t.  -A'^T z + s = -c',  z, s >= 0,
// with an explicit basis inverse refactored every `kRefactor` pivots.
class DualSimplex {
 public:
  static constexpr int kRefactor = 64;
  static constexpr double kLift = 1e-7;

  DualSimplex(const FloatForm& f, const SolveOptions& opt) : f_(f), opt_(opt) {
    M_ = f.m + f.n;
    V_ = M_ + f.n;
    cost_.assign(V_, 0.0);
    for (int i = 0; i < M_; ++i) cost_[i] = -f.bprime[i];
    rhs_.resize(f.n);
    for (int j = 0; j < f.n; ++j) rhs_[j] = -f.cprime[j];
    // Most of -c' is zero; a small deterministic lift breaks the degeneracy. It is
    // removed at the end by dual simplex pivots.
    true_rhs_ = rhs_;
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    for (int j = 0; j < f.n; ++j) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      rhs_[j] += kLift * (1.0 + static_cast<double>(state >> 11) * 0x1.0p-53);
    }
    basis_.resize(f.n);
    for (int j = 0; j < f.n; ++j) basis_[j] = M_ + j;
    in_basis_.assign(V_, -1);
    for (int j = 0; j < f.n; ++j) in_basis_[M_ + j] = j;
    refactor();
  }

  LPStatus run(int& iterations, int& unbounded_col) {
    int degenerate = 0, since = 0;
    const int n = f_.n;
    Eigen::VectorXd y(n), alpha(n);
    for (iterations = 0; iterations < opt_.max_iterations; ++iterations) {
      if (since >= kRefactor) {
        refactor();
        since = 0;
      }
      bool bland = degenerate >= opt_.bland_after;
      prices(y);
      int q = -1;
      double best = opt_.tol;
      for (int v = 0; v < V_; ++v) {
        if (in_basis_[v] >= 0) continue;
        double d = cost_[v] - dot(y, v);
        if (d > best) {
          q = v;
          if (bland) break;
          best = d;
        }
      }
      if (q < 0) return LPStatus::Optimal;
      int r = ratio(q, alpha, bland);
      if (r < 0 && since > 0) {
        refactor();
        since = 0;
        r = ratio(q, alpha, bland);
      }
      if (r < 0) {
        unbounded_col = q;
        alpha_ = alpha;
        return LPStatus::Infeasible;
      }
      double step = std::max(0.0, xb_[r]) / alpha[r];
      degenerate = step <= 1e-12 ? degenerate + 1 : 0;
      pivot(r, q, alpha);
      ++since;
    }
    return LPStatus::IterationLimit;
  }

  const std::vector<int>& basis() const { return basis_; }
  const Eigen::VectorXd& unbounded_direction() const { return alpha_; }

  /// Drops the lift and restores nonnegative basic values with dual simplex pivots;
  /// the reduced costs stay optimal throughout. False when no pivot is found.
  bool remove_lift(int& iterations) {
    rhs_ = true_rhs_;
    refactor();
    const int n = f_.n;
    Eigen::VectorXd y(n), rho(n), alpha(n);
    for (int it = 0; it < opt_.max_iterations; ++it, ++iterations) {
      int r = 0;
      for (int k = 1; k < n; ++k)
        if (xb_[k] < xb_[r]) r = k;
      if (xb_[r] >= -1e-11) return true;
      prices(y);
      rho = binv_.row(r).transpose();
      const double piv_tol = 1e-9 * std::max(1.0, rho.cwiseAbs().maxCoeff());
      int q = -1;
      double best = std::numeric_limits<double>::infinity(), best_a = 0;
      for (int v = 0; v < V_; ++v) {
        if (in_basis_[v] >= 0) continue;
        double a = dot(rho, v);
        if (a >= -piv_tol) continue;
        double d = std::min(0.0, cost_[v] - dot(y, v));
        double rr = d / a;
        if (rr < best - 1e-12 || (rr <= best + 1e-12 && -a > best_a)) {
          best = std::min(best, rr);
          best_a = -a;
          q = v;
        }
      }
      if (q < 0) return false;
      column(q, alpha);
      pivot(r, q, alpha, false);
      if (it % kRefactor == kRefactor - 1) refactor();
    }
    return false;
  }

  const Eigen::VectorXd& basic_values() const { return xb_; }

 private:
  double dot(const Eigen::VectorXd& y, int v) const {
    if (v >= M_) return y[v - M_];
    if (v >= f_.m) return -y[v - f_.m];
    double s = 0;
    for (const auto& [j, a] : f_.rows[v]) s -= a * y[j];
    return s;
  }

  void column(int v, Eigen::VectorXd& alpha) const {
    alpha.setZero();
    if (v >= M_) {
      alpha = binv_.col(v - M_);
    } else if (v >= f_.m) {
      alpha = -binv_.col(v - f_.m);
    } else {
      for (const auto& [j, a] : f_.rows[v]) alpha -= a * binv_.col(j);
    }
  }

  // Harris two-pass test: the largest pivot among rows whose ratio is within the
  // feasibility tolerance of the minimum. Bland mode takes the smallest basis index.
  int ratio(int q, Eigen::VectorXd& alpha, bool bland) const {
    column(q, alpha);
    const double piv_tol = 1e-9 * std::max(1.0, alpha.cwiseAbs().maxCoeff());
    const double feas = 1e-10;
    double theta = std::numeric_limits<double>::infinity();
    for (int k = 0; k < f_.n; ++k)
      if (alpha[k] > piv_tol) theta = std::min(theta, (std::max(0.0, xb_[k]) + feas) / alpha[k]);
    int r = -1;
    for (int k = 0; k < f_.n; ++k) {
      if (alpha[k] <= piv_tol || std::max(0.0, xb_[k]) / alpha[k] > theta) continue;
      if (r < 0) {
        r = k;
        continue;
      }
      bool better = bland ? basis_[k] < basis_[r] : alpha[k] > alpha[r];
      if (better) r = k;
    }
    return r;
  }

  void prices(Eigen::VectorXd& y) const {
    y.setZero();
    for (int k = 0; k < f_.n; ++k)
      if (double c = cost_[basis_[k]]; c != 0.0) y += c * binv_.row(k).transpose();
  }

  void pivot(int r, int q, const Eigen::VectorXd& alpha, bool clamp = true) {
    const int n = f_.n;
    double inv = 1.0 / alpha[r];
    binv_.row(r) *= inv;
    xb_[r] *= inv;
    for (int k = 0; k < n; ++k) {
      if (k == r || alpha[k] == 0.0) continue;
      binv_.row(k) -= alpha[k] * binv_.row(r);
      xb_[k] -= alpha[k] * xb_[r];
    }
    if (clamp)
      for (int k = 0; k < n; ++k)
        if (xb_[k] < 0) xb_[k] = 0;
    in_basis_[basis_[r]] = -1;
    basis_[r] = q;
    in_basis_[q] = r;
  }

  void refactor() {
    const int n = f_.n;
    Eigen::MatrixXd B(n, n);
    for (int k = 0; k < n; ++k) B.col(k) = dual_column(f_, M_, basis_[k]);
    binv_ = Eigen::PartialPivLU<Eigen::MatrixXd>(B).inverse();
    xb_ = binv_ * rhs_;
  }

  const FloatForm& f_;
  const SolveOptions& opt_;
  int M_ = 0, V_ = 0;
  std::vector<double> cost_;
  Eigen::VectorXd rhs_, true_rhs_, xb_, alpha_;
  Eigen::MatrixXd binv_;
  std::vector<int> basis_, in_basis_;
};

}  // namespace

SolveResult solve_max(const LPProblem& lp, const SolveOptions& opt) {
  FloatForm f = shift(lp);
  SolveResult res;
  const int M = f.m + f.n;
  if (f.n == 0) {
    res.status = LPStatus::Optimal;
    res.dual.assign(M, 0.0);
    for (int i = 0; i < f.m; ++i) {
      if (f.bprime[i] < -opt.tol) {
        res.status = LPStatus::Infeasible;
        res.ray.assign(M, 0.0);
        res.ray[i] = 1.0;
        break;
      }
    }
    return res;
  }
  DualSimplex tab(f, opt);
  int unbounded_col = -1;
  res.status = tab.run(res.iterations, unbounded_col);
  if (res.status == LPStatus::IterationLimit) return res;

  if (res.status == LPStatus::Infeasible) {
    res.ray.assign(M, 0.0);
    if (unbounded_col < M) res.ray[unbounded_col] = 1.0;
    const Eigen::VectorXd& alpha = tab.unbounded_direction();
    for (int k = 0; k < f.n; ++k) {
      int b = tab.basis()[k];
      if (b < M) res.ray[b] = std::max(0.0, -alpha[k]);
    }
    return res;
  }

  tab.remove_lift(res.iterations);

  // Recompute the basic solution from the original data to shed pivot round-off.
  Eigen::MatrixXd B(f.n, f.n);
  Eigen::VectorXd cost(f.n);
  for (int k = 0; k < f.n; ++k) {
    int v = tab.basis()[k];
    B.col(k) = dual_column(f, M, v);
    cost[k] = v < M ? -f.bprime[v] : 0.0;
  }
  Eigen::VectorXd rhs(f.n);
  for (int j = 0; j < f.n; ++j) rhs[j] = -f.cprime[j];
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(B);
  Eigen::VectorXd zb = lu.solve(rhs);
  Eigen::VectorXd u = lu.transpose().solve(cost);  // row prices are the shifted primal

  res.dual.assign(M, 0.0);
  for (int k = 0; k < f.n; ++k) {
    int v = tab.basis()[k];
    if (v < M) res.dual[v] = zb[k];
  }
  res.x.resize(f.n);
  for (int j = 0; j < f.n; ++j) {
    double xp = std::clamp(u[j], 0.0, std::max(0.0, f.hi[j] - f.lo[j]));
    res.x[j] = f.reflected[j] ? f.hi[j] - xp : f.lo[j] + xp;
  }
  res.value = objective_value(lp, res.x);
  return res;
}

}  // namespace starbound
