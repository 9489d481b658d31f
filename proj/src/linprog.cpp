#include "anglebound/linprog.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "anglebound/errors.hpp"

namespace anglebound {

namespace {

constexpr double kPivotEps = 1e-12;

// Tableau for: min sum(a) s.t. A w + a = b, w >= 0, a >= 0, with b >= 0.
// Rows 0..m-1 are constraints, row m holds reduced costs; the last column is b.
class PhaseOneTableau {
 public:
  PhaseOneTableau(const Eigen::MatrixXd& A, const Eigen::VectorXd& b)
      : m_(A.rows()), n_(A.cols()), t_(Eigen::MatrixXd::Zero(m_ + 1, n_ + m_ + 1)), basis_(m_) {
    for (Eigen::Index i = 0; i < m_; ++i) {
      const double sign = b[i] < 0.0 ? -1.0 : 1.0;
      t_.row(i).head(n_) = sign * A.row(i);
      t_(i, n_ + i) = 1.0;
      t_(i, n_ + m_) = sign * b[i];
      basis_[i] = n_ + i;
    }
    // Reduced costs of the phase-one objective after pricing out the artificials.
    for (Eigen::Index i = 0; i < m_; ++i) t_.row(m_) -= t_.row(i);
    for (Eigen::Index i = 0; i < m_; ++i) t_(m_, n_ + i) = 0.0;
  }

  void solve() {
    // Bland's rule: smallest entering index, ties in the ratio test by smallest basic index.
    const Eigen::Index cols = n_ + m_;
    const Eigen::Index max_iters = 50 * (cols + m_) + 1000;
    for (Eigen::Index iter = 0; iter < max_iters; ++iter) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < cols; ++j) {
        if (t_(m_, j) < -kPivotEps) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return;
      Eigen::Index leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < m_; ++i) {
        const double a = t_(i, enter);
        if (a > kPivotEps) {
          const double ratio = t_(i, cols) / a;
          if (ratio < best_ratio - 1e-15 ||
              (leave >= 0 && std::abs(ratio - best_ratio) <= 1e-15 &&
               basis_[i] < basis_[leave])) {
            best_ratio = ratio;
            leave = i;
          }
        }
      }
      if (leave < 0) return;  // unbounded direction; cannot happen for phase one
      pivot(leave, enter);
    }
    throw std::logic_error("simplex iteration limit reached");
  }

  double objective() const { return -t_(m_, n_ + m_); }

  Eigen::VectorXd primal() const {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(n_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[i] < n_) w[basis_[i]] = std::max(0.0, t_(i, n_ + m_));
    }
    return w;
  }

 private:
  void pivot(Eigen::Index row, Eigen::Index col) {
    t_.row(row) /= t_(row, col);
    for (Eigen::Index i = 0; i <= m_; ++i) {
      if (i != row && t_(i, col) != 0.0) t_.row(i) -= t_(i, col) * t_.row(row);
    }
    basis_[row] = col;
  }

  Eigen::Index m_, n_;
  Eigen::MatrixXd t_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace

ConvexCombination solve_convex_combination(const Point& p, std::span<const Point> points,
                                           double tolerance) {
  ConvexCombination out;
  const Eigen::Index n = static_cast<Eigen::Index>(points.size());
  const Eigen::Index dim = p.size();
  out.weights = Eigen::VectorXd::Zero(n);
  if (n == 0) {
    out.infeasibility = 1.0;
    return out;
  }
  double scale = 0.0;
  for (const auto& s : points) {
    if (s.size() != dim) throw Error(ErrorCode::InvalidInput, "dimension mismatch in LP");
    scale = std::max(scale, (s - p).norm());
  }
  if (scale == 0.0) {
    out.feasible = true;
    out.weights.setConstant(1.0 / static_cast<double>(n));
    return out;
  }

  Eigen::MatrixXd A(dim + 1, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    A.col(j).head(dim) = (points[static_cast<std::size_t>(j)] - p) / scale;
    A(dim, j) = 1.0;
  }
  Eigen::VectorXd b = Eigen::VectorXd::Zero(dim + 1);
  b[dim] = 1.0;

  PhaseOneTableau tableau(A, b);
  tableau.solve();
  out.infeasibility = tableau.objective();
  out.weights = tableau.primal();
  const double total = out.weights.sum();
  if (total > 0.0) out.weights /= total;
  const double residual = (A.topRows(dim) * out.weights).norm();
  out.feasible = out.infeasibility <= tolerance && residual <= tolerance;
  return out;
}

}  // namespace anglebound
