// Copyright 2026 The homocalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOMOCALC_CONVEXSETS_HPP_
#define HOMOCALC_CONVEXSETS_HPP_

// Nonempty convex compact subsets of R^n: finite vertex hulls and Euclidean
// balls. These are the sets that hold the subdifferential of a sublinear map
// and the superdifferential of a superlinear map at the origin.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <variant>
#include <vector>

#include "homocalc/error.hpp"

namespace homocalc {

struct VPolytope {
  std::vector<Vector> vertices;
};

struct Ball {
  Vector center;
  double radius = 0.0;
};

class ConvexCompactSet {
 public:
  using Shape = std::variant<VPolytope, Ball>;

  static ConvexCompactSet polytope(std::vector<Vector> vertices) {
    if (vertices.empty()) {
      throw Error(ErrorKind::InvalidInput, "polytope", "vertex list is empty");
    }
    const Eigen::Index n = vertices.front().size();
    if (n < 1) throw Error(ErrorKind::InvalidInput, "polytope", "dimension must be >= 1");
    for (const auto& v : vertices) {
      detail::require_dim(n, v.size(), "polytope");
      if (!v.allFinite()) throw Error(ErrorKind::InvalidInput, "polytope", "non-finite vertex");
    }
    return ConvexCompactSet(VPolytope{std::move(vertices)}, n);
  }

  static ConvexCompactSet ball(Vector center, double radius) {
    if (center.size() < 1) throw Error(ErrorKind::InvalidInput, "ball", "dimension must be >= 1");
    if (!(radius >= 0.0) || !std::isfinite(radius)) {
      throw Error(ErrorKind::InvalidInput, "ball", "radius must be finite and >= 0");
    }
    if (!center.allFinite()) throw Error(ErrorKind::InvalidInput, "ball", "non-finite center");
    return ConvexCompactSet(Ball{std::move(center), radius}, 0);
  }

  static ConvexCompactSet singleton(Vector point) {
    return polytope({std::move(point)});
  }

  Eigen::Index dim() const { return dim_; }
  const Shape& shape() const { return shape_; }
  bool is_polytope() const { return std::holds_alternative<VPolytope>(shape_); }
  const VPolytope& as_polytope() const { return std::get<VPolytope>(shape_); }
  const Ball& as_ball() const { return std::get<Ball>(shape_); }

  /// A point of the set used to seed iterative methods.
  Vector anchor() const {
    if (const auto* b = std::get_if<Ball>(&shape_)) return b->center;
    const auto& vs = as_polytope().vertices;
    Vector c = Vector::Zero(dim_);
    for (const auto& v : vs) c += v;
    return c / static_cast<double>(vs.size());
  }

 private:
  ConvexCompactSet(Shape shape, Eigen::Index n) : shape_(std::move(shape)), dim_(n) {
    if (const auto* b = std::get_if<Ball>(&shape_)) dim_ = b->center.size();
  }

  Shape shape_;
  Eigen::Index dim_;
};

/// sup over the set of a.x
inline double support(const ConvexCompactSet& set, const Vector& x) {
  detail::require_dim(set.dim(), x.size(), "support");
  if (set.is_polytope()) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : set.as_polytope().vertices) best = std::max(best, v.dot(x));
    return best;
  }
  const Ball& b = set.as_ball();
  return b.center.dot(x) + b.radius * x.norm();
}

/// A maximizer of a.x over the set. Polytope ties go to the lowest vertex
/// index; a ball with x = 0 yields its center.
inline Vector support_argmax(const ConvexCompactSet& set, const Vector& x) {
  detail::require_dim(set.dim(), x.size(), "support_argmax");
  if (set.is_polytope()) {
    const auto& vs = set.as_polytope().vertices;
    std::size_t best = 0;
    double best_val = vs[0].dot(x);
    for (std::size_t i = 1; i < vs.size(); ++i) {
      const double val = vs[i].dot(x);
      if (val > best_val) {
        best_val = val;
        best = i;
      }
    }
    return vs[best];
  }
  const Ball& b = set.as_ball();
  const double norm = x.norm();
  if (norm == 0.0) return b.center;
  return b.center + (b.radius / norm) * x;
}

namespace detail {

struct MinNormResult {
  Vector point;
  double gap = 0.0;
  bool converged = false;
};

// Affine minimizer of |sum mu_i P_i| subject to sum mu_i = 1 over the active
// points; returns the coefficients mu.
inline Eigen::VectorXd affine_min_norm(const std::vector<Vector>& pts,
                                       const std::vector<std::size_t>& active) {
  const auto k = static_cast<Eigen::Index>(active.size());
  Eigen::VectorXd mu(k);
  if (k == 1) {
    mu(0) = 1.0;
    return mu;
  }
  const Vector& base = pts[active[0]];
  Eigen::MatrixXd diffs(base.size(), k - 1);
  for (Eigen::Index i = 1; i < k; ++i) diffs.col(i - 1) = pts[active[i]] - base;
  const Eigen::VectorXd nu = diffs.colPivHouseholderQr().solve(-base);
  mu(0) = 1.0 - nu.sum();
  mu.tail(k - 1) = nu;
  return mu;
}

// Wolfe's minimum-norm-point method over conv(pts). Active sets stay affinely
// independent, so each affine solve is well posed.
inline MinNormResult min_norm_point(const std::vector<Vector>& pts, std::size_t max_iter) {
  double radius = 0.0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double r = pts[i].norm();
    radius = std::max(radius, r);
    if (r < pts[start].norm()) start = i;
  }
  std::vector<std::size_t> active{start};
  std::vector<double> weights{1.0};
  Vector x = pts[start];
  double gap = std::numeric_limits<double>::infinity();

  auto combine = [&] {
    Vector y = Vector::Zero(x.size());
    for (std::size_t i = 0; i < active.size(); ++i) y += weights[i] * pts[active[i]];
    return y;
  };

  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    std::size_t entering = 0;
    double lowest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const double v = x.dot(pts[j]);
      if (v < lowest) {
        lowest = v;
        entering = j;
      }
    }
    gap = std::max(0.0, x.squaredNorm() - lowest);
    const double noise = 1e-13 * radius * radius;
    if (gap <= noise ||
        std::find(active.begin(), active.end(), entering) != active.end()) {
      return {x, gap, true};
    }
    active.push_back(entering);
    weights.push_back(0.0);

    for (std::size_t minor = 0; minor <= pts.size() + 1; ++minor) {
      const Eigen::VectorXd mu = affine_min_norm(pts, active);
      if ((mu.array() > 0.0).all()) {
        for (std::size_t i = 0; i < active.size(); ++i) weights[i] = mu(static_cast<Eigen::Index>(i));
        x = combine();
        break;
      }
      double theta = std::numeric_limits<double>::infinity();
      std::size_t leaving = 0;
      for (std::size_t i = 0; i < active.size(); ++i) {
        const double m = mu(static_cast<Eigen::Index>(i));
        if (m <= 0.0) {
          const double t = weights[i] > m ? weights[i] / (weights[i] - m) : 0.0;
          if (t < theta) {
            theta = t;
            leaving = i;
          }
        }
      }
      for (std::size_t i = 0; i < active.size(); ++i) {
        weights[i] += theta * (mu(static_cast<Eigen::Index>(i)) - weights[i]);
      }
      weights[leaving] = 0.0;
      for (std::size_t i = active.size(); i-- > 0;) {
        if (weights[i] <= 0.0) {
          active.erase(active.begin() + static_cast<std::ptrdiff_t>(i));
          weights.erase(weights.begin() + static_cast<std::ptrdiff_t>(i));
        }
      }
      double total = 0.0;
      for (double w : weights) total += w;
      for (double& w : weights) w /= total;
      x = combine();
    }
  }
  return {x, gap, false};
}

}  // namespace detail

/// Euclidean projection of p onto the set. Balls use the closed form;
/// polytopes run a minimum-norm-point solve on the translated vertices.
inline Vector project(const ConvexCompactSet& set, const Vector& p, double tol = 1e-9,
                      std::size_t max_iter = 100000) {
  detail::require_dim(set.dim(), p.size(), "project");
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidInput, "project", "tol must be > 0");
  if (!set.is_polytope()) {
    const Ball& b = set.as_ball();
    const Vector d = p - b.center;
    const double norm = d.norm();
    if (norm <= b.radius) return p;
    return b.center + (b.radius / norm) * d;
  }
  const auto& vs = set.as_polytope().vertices;
  if (vs.size() == 1) return vs.front();
  std::vector<Vector> shifted;
  shifted.reserve(vs.size());
  for (const auto& v : vs) shifted.push_back(v - p);
  const auto result = detail::min_norm_point(shifted, max_iter);
  if (!result.converged && result.gap > tol) {
    throw Error(ErrorKind::NoConvergence, "project",
                "optimality gap " + std::to_string(result.gap) + " after " +
                    std::to_string(max_iter) + " iterations");
  }
  return p + result.point;
}

inline double distance(const ConvexCompactSet& set, const Vector& a, double tol = 1e-9,
                       std::size_t max_iter = 100000) {
  return (a - project(set, a, tol, max_iter)).norm();
}

/// dist(a, set) <= tol
inline bool contains(const ConvexCompactSet& set, const Vector& a, double tol) {
  detail::require_dim(set.dim(), a.size(), "contains");
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidInput, "contains", "tol must be > 0");
  return distance(set, a, tol) <= tol;
}

/// A point within tol of both sets, by alternating projections started at
/// an anchor of `a`. A residual that stops improving (relative change below
/// 1e-12 over 50 rounds) is reported as an empty intersection.
inline Vector feasible_point(const ConvexCompactSet& a, const ConvexCompactSet& b,
                             double tol = 1e-9, std::size_t max_iter = 100000) {
  detail::require_dim(a.dim(), b.dim(), "feasible_point");
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidInput, "feasible_point", "tol must be > 0");
  constexpr std::size_t kStallWindow = 50;
  constexpr double kStallRatio = 1e-12;

  std::vector<double> residuals;
  Vector x = a.anchor();
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    const Vector y = project(b, x, tol);
    const Vector z = project(a, y, tol);
    const double residual = (z - y).norm();
    if (residual <= tol) return y;
    residuals.push_back(residual);
    if (residuals.size() > kStallWindow) {
      const double earlier = residuals[residuals.size() - 1 - kStallWindow];
      if (earlier - residual <= kStallRatio * earlier) {
        throw Error(ErrorKind::EmptyIntersection, "feasible_point",
                    "alternating-projection residual stalled at " + std::to_string(residual));
      }
    }
    x = z;
  }
  throw Error(ErrorKind::NoConvergence, "feasible_point",
              "residual above tol after " + std::to_string(max_iter) + " iterations");
}

/// max(support(e_k), support(-e_k)), with k 1-based. Bounds |a_k| over the set.
inline double coordinate_bound(const ConvexCompactSet& set, Eigen::Index k) {
  if (k < 1 || k > set.dim()) {
    throw Error(ErrorKind::OutOfRange, "coordinate_bound",
                "index " + std::to_string(k) + " outside 1.." + std::to_string(set.dim()));
  }
  Vector e = Vector::Zero(set.dim());
  e(k - 1) = 1.0;
  return std::max(support(set, e), support(set, -e));
}

}  // namespace homocalc

#endif  // HOMOCALC_CONVEXSETS_HPP_
