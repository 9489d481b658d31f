#include "anglebound/miniball.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <vector>

#include "anglebound/errors.hpp"

namespace anglebound {

namespace {

class WelzlSolver {
 public:
  explicit WelzlSolver(std::span<const Eigen::VectorXd> points)
      : points_(points), dim_(points.front().size()) {
    for (std::size_t i = 0; i < points.size(); ++i) order_.push_back(i);
    scale_ = 0.0;
    for (const auto& p : points) scale_ = std::max(scale_, (p - points.front()).norm());
    if (scale_ == 0.0) scale_ = 1.0;
  }

  Ball solve() {
    center_ = points_.front();
    radius2_ = -1.0;
    mtf(order_.end());
    return {center_, std::sqrt(std::max(0.0, radius2_))};
  }

 private:
  // Circumcenter of the support set inside its affine hull; false if degenerate.
  bool circumball(const std::vector<std::size_t>& support, Eigen::VectorXd& c, double& r2) const {
    if (support.empty()) return false;
    const Eigen::VectorXd& q0 = points_[support.front()];
    const Eigen::Index k = static_cast<Eigen::Index>(support.size()) - 1;
    if (k == 0) {
      c = q0;
      r2 = 0.0;
      return true;
    }
    Eigen::MatrixXd Q(dim_, k);
    for (Eigen::Index j = 0; j < k; ++j) {
      Q.col(j) = (points_[support[static_cast<std::size_t>(j) + 1]] - q0) / scale_;
    }
    const Eigen::MatrixXd G = 2.0 * Q.transpose() * Q;
    Eigen::VectorXd rhs(k);
    for (Eigen::Index j = 0; j < k; ++j) rhs[j] = Q.col(j).squaredNorm();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(G);
    lu.setThreshold(1e-12);
    if (lu.rank() < k) return false;
    const Eigen::VectorXd alpha = lu.solve(rhs);
    c = q0 + scale_ * (Q * alpha);
    r2 = (c - q0).squaredNorm();
    return true;
  }

  bool outside(const Eigen::VectorXd& p) const {
    if (radius2_ < 0.0) return true;
    const double r = std::sqrt(radius2_);
    return (p - center_).norm() > r + 1e-13 * scale_;
  }

  void mtf(std::list<std::size_t>::iterator end) {
    if (!support_.empty()) {
      Eigen::VectorXd c;
      double r2 = 0.0;
      if (circumball(support_, c, r2)) {
        center_ = c;
        radius2_ = r2;
      }
    }
    if (static_cast<Eigen::Index>(support_.size()) == dim_ + 1) return;
    for (auto it = order_.begin(); it != end;) {
      auto next = std::next(it);
      if (outside(points_[*it])) {
        support_.push_back(*it);
        Eigen::VectorXd c;
        double r2 = 0.0;
        if (circumball(support_, c, r2)) {
          mtf(it);
          order_.splice(order_.begin(), order_, it);
        }
        support_.pop_back();
      }
      it = next;
    }
  }

  std::span<const Eigen::VectorXd> points_;
  Eigen::Index dim_;
  double scale_;
  std::list<std::size_t> order_;
  std::vector<std::size_t> support_;
  Eigen::VectorXd center_;
  double radius2_ = -1.0;
};

bool encloses(const Ball& ball, std::span<const Eigen::VectorXd> points, double scale) {
  for (const auto& p : points) {
    if ((p - ball.center).norm() > ball.radius + 1e-10 * scale) return false;
  }
  return true;
}

}  // namespace

Ball min_enclosing_ball_welzl(std::span<const Eigen::VectorXd> points) {
  if (points.empty()) throw Error(ErrorCode::InvalidInput, "enclosing ball of no points");
  return WelzlSolver(points).solve();
}

Ball min_enclosing_ball_iterative(std::span<const Eigen::VectorXd> points, double tol) {
  if (points.empty()) throw Error(ErrorCode::InvalidInput, "enclosing ball of no points");
  const std::size_t n = points.size();
  if (n == 1) return {points.front(), 0.0};
  auto farthest_from = [&](const Eigen::VectorXd& c) {
    std::size_t best = 0;
    double d = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double di = (points[i] - c).squaredNorm();
      if (di > d) {
        d = di;
        best = i;
      }
    }
    return best;
  };
  const std::size_t a = farthest_from(points.front());
  const std::size_t b = farthest_from(points[a]);
  Eigen::VectorXd u = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  u[static_cast<Eigen::Index>(a)] += 0.5;
  u[static_cast<Eigen::Index>(b)] += 0.5;

  std::vector<double> dist2(n);
  Eigen::VectorXd c;
  for (int iter = 0; iter < 1'000'000; ++iter) {
    c = Eigen::VectorXd::Zero(points.front().size());
    double weighted_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double w = u[static_cast<Eigen::Index>(i)];
      if (w > 0.0) {
        c += w * points[i];
        weighted_sq += w * points[i].squaredNorm();
      }
    }
    const double r2 = weighted_sq - c.squaredNorm();
    if (!(r2 > 0.0)) break;
    std::size_t far = 0, near = n;
    for (std::size_t i = 0; i < n; ++i) {
      dist2[i] = (points[i] - c).squaredNorm();
      if (dist2[i] > dist2[far]) far = i;
      if (u[static_cast<Eigen::Index>(i)] > 0.0 && (near == n || dist2[i] < dist2[near])) near = i;
    }
    const double up = dist2[far] / r2 - 1.0;
    const double down = 1.0 - dist2[near] / r2;
    if (std::max(up, down) <= tol) break;
    if (up >= down) {
      const double lambda = up / (2.0 * (1.0 + up));
      u *= (1.0 - lambda);
      u[static_cast<Eigen::Index>(far)] += lambda;
    } else {
      const double un = u[static_cast<Eigen::Index>(near)];
      const double lambda = std::min(down / (2.0 * (1.0 - down)), un / (1.0 - un));
      u *= (1.0 + lambda);
      u[static_cast<Eigen::Index>(near)] -= lambda;
      if (u[static_cast<Eigen::Index>(near)] < 1e-15) u[static_cast<Eigen::Index>(near)] = 0.0;
    }
  }
  double radius = 0.0;
  for (const auto& p : points) radius = std::max(radius, (p - c).norm());
  return {c, radius};
}

Ball min_enclosing_ball(std::span<const Eigen::VectorXd> points) {
  if (points.empty()) throw Error(ErrorCode::InvalidInput, "enclosing ball of no points");
  double scale = 0.0;
  for (const auto& p : points) scale = std::max(scale, (p - points.front()).norm());
  if (scale == 0.0) scale = 1.0;
  if (points.front().size() <= kWelzlMaxDim) {
    Ball ball = min_enclosing_ball_welzl(points);
    if (encloses(ball, points, scale)) return ball;
  }
  return min_enclosing_ball_iterative(points);
}

}  // namespace anglebound
