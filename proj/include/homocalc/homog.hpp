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

#ifndef HOMOCALC_HOMOG_HPP_
#define HOMOCALC_HOMOG_HPP_

// Sublinear and superlinear maps on R^n, positively homogeneous functions
// given as the pointwise infimum of sublinear maps (upper semicontinuous) or
// the pointwise supremum of superlinear maps (lower semicontinuous), and the
// built-in functions with their explicit families.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homocalc/convexsets.hpp"
#include "homocalc/random.hpp"
#include "homocalc/sphere.hpp"

namespace homocalc {

/// phi(x) = max over subdiff of a.x
struct SublinearMap {
  ConvexCompactSet subdiff;
  std::string label;

  Eigen::Index dim() const { return subdiff.dim(); }
};

/// psi(x) = min over superdiff of a.x
struct SuperlinearMap {
  ConvexCompactSet superdiff;
  std::string label;

  Eigen::Index dim() const { return superdiff.dim(); }
};

inline double eval_sublinear(const SublinearMap& phi, const Vector& x) {
  detail::require_dim(phi.dim(), x.size(), "eval_sublinear");
  return support(phi.subdiff, x) + 0.0;
}

inline double eval_superlinear(const SuperlinearMap& psi, const Vector& x) {
  detail::require_dim(psi.dim(), x.size(), "eval_superlinear");
  return -support(psi.superdiff, -x) + 0.0;
}

inline double eval_map(const SublinearMap& phi, const Vector& x) { return eval_sublinear(phi, x); }
inline double eval_map(const SuperlinearMap& psi, const Vector& x) { return eval_superlinear(psi, x); }

/// An indexed family of maps: either an explicit list, or a deterministic
/// generator that is read in index order up to `budget` and abandoned once
/// `window` consecutive maps fail to improve the running value by more than
/// the evaluation tolerance.
template <class Map>
class FamilyEnumeration {
 public:
  using Generator = std::function<Map(std::size_t)>;

  FamilyEnumeration() = default;

  static FamilyEnumeration finite(std::vector<Map> maps) {
    FamilyEnumeration f;
    f.maps_ = std::move(maps);
    return f;
  }

  static FamilyEnumeration generated(Generator gen, std::size_t budget, std::size_t window) {
    if (!gen) throw Error(ErrorKind::InvalidInput, "FamilyEnumeration", "missing generator");
    if (window == 0) throw Error(ErrorKind::InvalidInput, "FamilyEnumeration", "window must be >= 1");
    FamilyEnumeration f;
    f.generator_ = std::move(gen);
    f.budget_ = budget;
    f.window_ = window;
    return f;
  }

  bool is_generated() const { return static_cast<bool>(generator_); }
  std::size_t count() const { return is_generated() ? budget_ : maps_.size(); }
  std::size_t window() const { return is_generated() ? window_ : maps_.size(); }
  std::size_t budget() const { return budget_; }
  const std::vector<Map>& maps() const { return maps_; }

  Map at(std::size_t i) const { return is_generated() ? generator_(i) : maps_.at(i); }

  /// Same generator with a different budget.
  FamilyEnumeration with_budget(std::size_t budget) const {
    FamilyEnumeration f = *this;
    if (f.is_generated()) f.budget_ = budget;
    return f;
  }

 private:
  std::vector<Map> maps_;
  Generator generator_;
  std::size_t budget_ = 0;
  std::size_t window_ = 0;
};

using SublinearFamily = FamilyEnumeration<SublinearMap>;
using SuperlinearFamily = FamilyEnumeration<SuperlinearMap>;

enum class Semicontinuity { Upper, Lower, Continuous };

inline std::string_view to_string(Semicontinuity kind) {
  switch (kind) {
    case Semicontinuity::Upper: return "usc";
    case Semicontinuity::Lower: return "lsc";
    case Semicontinuity::Continuous: return "cts";
  }
  return "?";
}

/// A positively homogeneous function bounded on the unit sphere, carried by
/// its representing families and optionally a closed-form evaluator.
struct PHFunction {
  std::string name;
  Eigen::Index dim = 0;
  Semicontinuity kind = Semicontinuity::Upper;
  std::optional<SublinearFamily> inf_family;
  std::optional<SuperlinearFamily> sup_family;
  std::function<double(const Vector&)> oracle;

  bool has_oracle() const { return static_cast<bool>(oracle); }

  static PHFunction upper(std::string name, Eigen::Index dim, SublinearFamily family,
                          std::function<double(const Vector&)> oracle = {}) {
    return {std::move(name), dim, Semicontinuity::Upper, std::move(family), std::nullopt,
            std::move(oracle)};
  }

  static PHFunction lower(std::string name, Eigen::Index dim, SuperlinearFamily family,
                          std::function<double(const Vector&)> oracle = {}) {
    return {std::move(name), dim, Semicontinuity::Lower, std::nullopt, std::move(family),
            std::move(oracle)};
  }

  static PHFunction continuous(std::string name, Eigen::Index dim, SublinearFamily inf,
                               SuperlinearFamily sup,
                               std::function<double(const Vector&)> oracle = {}) {
    return {std::move(name), dim, Semicontinuity::Continuous, std::move(inf), std::move(sup),
            std::move(oracle)};
  }
};

struct FamilyValue {
  double value = 0.0;
  std::size_t terms_used = 0;
  bool representation_warning = false;
};

namespace detail {

template <class Map>
FamilyValue run_family(const FamilyEnumeration<Map>& family, const Vector& x, double tol,
                       bool minimize, const char* op) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidInput, op, "tol must be > 0");
  const std::size_t count = family.count();
  if (count == 0) throw Error(ErrorKind::EmptyFamily, op, "family has no maps");
  const std::size_t window = family.window();
  double best = minimize ? std::numeric_limits<double>::infinity()
                         : -std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  std::size_t stall = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const double v = family.is_generated() ? eval_map(family.at(i), x)
                                           : eval_map(family.maps()[i], x);
    ++used;
    const double gain = minimize ? best - v : v - best;
    if (gain > 0.0) best = v;
    if (gain > tol) {
      stall = 0;
    } else if (++stall >= window && family.is_generated()) {
      break;
    }
  }
  return {best + 0.0, used, false};
}

inline void flag_against_oracle(const PHFunction& h, const Vector& x, double tol, FamilyValue& r) {
  if (h.has_oracle() && std::abs(r.value - h.oracle(x)) > 10.0 * tol) {
    r.representation_warning = true;
  }
}

}  // namespace detail

/// inf over the sublinear family at x
inline FamilyValue eval_inf_family(const PHFunction& h, const Vector& x, double tol = 1e-9) {
  detail::require_dim(h.dim, x.size(), "eval_family");
  if (!h.inf_family) throw Error(ErrorKind::EmptyFamily, "eval_family", h.name + " has no inf-family");
  auto r = detail::run_family(*h.inf_family, x, tol, true, "eval_family");
  detail::flag_against_oracle(h, x, tol, r);
  return r;
}

/// sup over the superlinear family at x
inline FamilyValue eval_sup_family(const PHFunction& h, const Vector& x, double tol = 1e-9) {
  detail::require_dim(h.dim, x.size(), "eval_family");
  if (!h.sup_family) throw Error(ErrorKind::EmptyFamily, "eval_family", h.name + " has no sup-family");
  auto r = detail::run_family(*h.sup_family, x, tol, false, "eval_family");
  detail::flag_against_oracle(h, x, tol, r);
  return r;
}

/// Running infimum (usc) or supremum (lsc) over the representing family.
/// Continuous functions are evaluated through their inf-family when present.
inline FamilyValue eval_family(const PHFunction& h, const Vector& x, double tol = 1e-9) {
  switch (h.kind) {
    case Semicontinuity::Upper: return eval_inf_family(h, x, tol);
    case Semicontinuity::Lower: return eval_sup_family(h, x, tol);
    case Semicontinuity::Continuous:
      return h.inf_family ? eval_inf_family(h, x, tol) : eval_sup_family(h, x, tol);
  }
  return {};
}

inline double pointwise_value(const PHFunction& h, const Vector& x) {
  return h.has_oracle() ? h.oracle(x) : eval_family(h, x).value;
}

struct SphereBounds {
  double m = 0.0;  // -min over the grid, clamped at 0
  double M = 0.0;  // max over the grid, clamped at 0
  Vector argmin;
  Vector argmax;
};

inline SphereBounds sphere_bounds(const PHFunction& h, std::size_t grid_density) {
  if (grid_density < 8) throw Error(ErrorKind::InvalidInput, "sphere_bounds", "grid_density must be >= 8");
  const auto grid = sphere_grid(h.dim, grid_density);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  SphereBounds b;
  for (const auto& u : grid) {
    const double v = pointwise_value(h, u);
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::InvalidInput, "sphere_bounds", h.name + " is not finite on the sphere");
    }
    if (v < lo) {
      lo = v;
      b.argmin = u;
    }
    if (v > hi) {
      hi = v;
      b.argmax = u;
    }
  }
  b.m = std::max(0.0, -lo);
  b.M = std::max(0.0, hi);
  return b;
}

struct Envelopes {
  SuperlinearMap lower;  // -m |x|
  SublinearMap upper;    //  M |x|
  SphereBounds bounds;
  double inflation = 1.0;
};

/// psi = -m|.| <= h <= M|.| = phi. The grid extrema are widened by
/// 1/cos(2 * grid spacing) and the ordering is then confirmed on a denser,
/// shifted grid.
inline Envelopes domination_envelopes(const PHFunction& h, std::size_t grid_density) {
  const SphereBounds b = sphere_bounds(h, grid_density);
  const double spacing = sphere_grid_spacing(h.dim, grid_density);
  const double inflation = 1.0 / std::cos(std::min(2.0 * spacing, 1.0));
  const Vector origin = Vector::Zero(h.dim);
  Envelopes env{
      SuperlinearMap{ConvexCompactSet::ball(origin, b.m * inflation), "envelope-lower"},
      SublinearMap{ConvexCompactSet::ball(origin, b.M * inflation), "envelope-upper"},
      b,
      inflation,
  };
  for (const auto& u : sphere_grid(h.dim, 4 * grid_density, 0.5)) {
    const double v = pointwise_value(h, u);
    const double lo = eval_superlinear(env.lower, u);
    const double hi = eval_sublinear(env.upper, u);
    if (lo > v + 1e-12 || v > hi + 1e-12) {
      throw Error(ErrorKind::EnvelopeViolation, "domination_envelopes",
                  h.name + " leaves [" + std::to_string(lo) + ", " + std::to_string(hi) +
                      "] with value " + std::to_string(v));
    }
  }
  return env;
}

struct HomogeneityViolation {
  Vector x;
  double lambda = 0.0;
  double scaled = 0.0;    // h(lambda x)
  double expected = 0.0;  // lambda h(x)
};

struct HomogeneityReport {
  std::size_t samples = 0;
  std::vector<HomogeneityViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// |h(lambda x) - lambda h(x)| <= tol (1 + lambda) on random x in [-5,5]^n,
/// lambda in [0,10]. The first sample always uses lambda = 0.
inline HomogeneityReport check_positive_homogeneity(const PHFunction& h, std::size_t samples,
                                                    double tol, std::uint64_t seed = 1) {
  if (!h.has_oracle()) {
    throw Error(ErrorKind::MissingOracle, "check_positive_homogeneity", h.name + " has no oracle");
  }
  Rng rng(seed, "homogeneity/" + h.name);
  HomogeneityReport report;
  for (std::size_t s = 0; s < samples; ++s) {
    const Vector x = rng.vector(h.dim, -5.0, 5.0);
    const double lambda = s == 0 ? 0.0 : rng.uniform(0.0, 10.0);
    const double scaled = h.oracle(lambda * x);
    const double expected = lambda * h.oracle(x);
    ++report.samples;
    if (std::abs(scaled - expected) > tol * (1.0 + lambda)) {
      report.violations.push_back({x, lambda, scaled, expected});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Built-in functions.

namespace detail {

inline Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

// k-th pair (i, j) of N^2 in diagonal order: i + j ascending, then i ascending.
inline std::pair<std::size_t, std::size_t> diagonal_pair(std::size_t k) {
  auto d = static_cast<std::size_t>((std::sqrt(8.0 * static_cast<double>(k) + 1.0) - 1.0) / 2.0);
  while (d * (d + 1) / 2 > k) --d;
  while ((d + 1) * (d + 2) / 2 <= k) ++d;
  const std::size_t i = k - d * (d + 1) / 2;
  return {i, d - i};
}

// Angle of the k-th map in the refined square-mean grid: `base` uniform
// angles, then the midpoints of each successive level.
inline double refined_angle(std::size_t k, std::size_t base) {
  if (k < base) return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(base);
  std::size_t level_size = base;
  while (k >= 2 * level_size) level_size *= 2;
  const std::size_t offset = k - level_size;
  return 2.0 * std::numbers::pi * static_cast<double>(2 * offset + 1) /
         static_cast<double>(2 * level_size);
}

}  // namespace detail

/// phi_{m,n}(x,y) = max{mx + ny, 0} with subdifferential hull{(m,n), (0,0)}.
inline SublinearMap example71_map(double m, double n) {
  return {ConvexCompactSet::polytope({detail::vec2(m, n), detail::vec2(0.0, 0.0)}),
          "phi[" + std::to_string(static_cast<long long>(m)) + "," +
              std::to_string(static_cast<long long>(n)) + "]"};
}

/// psi_{l,n}(x,y) = min{lx, ny} with superdifferential hull{(l,0), (0,n)}.
inline SuperlinearMap example72_map(double lambda, double n) {
  return {ConvexCompactSet::polytope({detail::vec2(lambda, 0.0), detail::vec2(0.0, n)}),
          "psi[" + std::to_string(static_cast<long long>(lambda)) + "," +
              std::to_string(static_cast<long long>(n)) + "]"};
}

inline double example71_oracle(const Vector& x) {
  return (x(0) >= 0.0 && x(1) >= 0.0) ? x(0) + x(1) : 0.0;
}

inline double example72_oracle(const Vector& x) {
  if (x(0) > 0.0 && x(1) > 0.0) return x(0);
  if (x(1) < 0.0) return x(1);
  return 0.0;
}

/// x + y on the closed positive quadrant, 0 elsewhere. The family is
/// phi_{m,n} with (m, n) = (2^i, 2^j), (i, j) in diagonal order.
inline PHFunction make_example71() {
  auto gen = [](std::size_t k) {
    const auto [i, j] = detail::diagonal_pair(k);
    return example71_map(std::ldexp(1.0, static_cast<int>(i)), std::ldexp(1.0, static_cast<int>(j)));
  };
  return PHFunction::upper("example-7.1", 2, SublinearFamily::generated(gen, 10000, 200),
                           example71_oracle);
}

/// x on the open positive quadrant, y for y < 0, 0 elsewhere. The family is
/// psi_{l,n} with l in {0,1}, n = 2^j, ordered by j then l.
inline PHFunction make_example72() {
  auto gen = [](std::size_t k) {
    return example72_map(static_cast<double>(k % 2), std::ldexp(1.0, static_cast<int>(k / 2)));
  };
  return PHFunction::lower("example-7.2", 2, SuperlinearFamily::generated(gen, 2000, 200),
                           example72_oracle);
}

/// Linear maps (cos t, sin t) for `count` equally spaced angles.
inline std::vector<SuperlinearMap> angle_grid_maps(std::size_t count) {
  std::vector<SuperlinearMap> maps;
  maps.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
    maps.push_back({ConvexCompactSet::singleton(detail::vec2(std::cos(t), std::sin(t))),
                    "angle[" + std::to_string(k) + "/" + std::to_string(count) + "]"});
  }
  return maps;
}

/// Support function of the regular polygon circumscribing the unit disk with
/// `sides` edges; dominates the Euclidean norm.
inline SublinearMap circumscribed_disk_map(std::size_t sides) {
  std::vector<Vector> vs;
  const double scale = 1.0 / std::cos(std::numbers::pi / static_cast<double>(sides));
  for (std::size_t k = 0; k < sides; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(sides);
    vs.push_back(detail::vec2(scale * std::cos(t), scale * std::sin(t)));
  }
  return {ConvexCompactSet::polytope(std::move(vs)), "polygon[" + std::to_string(sides) + "]"};
}

inline SublinearMap unit_disk_map() {
  return {ConvexCompactSet::ball(Vector::Zero(2), 1.0), "disk"};
}

/// sqrt(x^2 + y^2): the disk as its inf-family, linear maps on a refining
/// angle grid (512 angles, then midpoints) as its sup-family.
inline PHFunction make_square_mean() {
  constexpr std::size_t kBase = 512;
  constexpr std::size_t kBudget = 8192;
  auto gen = [](std::size_t k) {
    const double t = detail::refined_angle(k, kBase);
    return SuperlinearMap{ConvexCompactSet::singleton(detail::vec2(std::cos(t), std::sin(t))),
                          "angle[" + std::to_string(k) + "]"};
  };
  return PHFunction::continuous("square-mean", 2, SublinearFamily::finite({unit_disk_map()}),
                                SuperlinearFamily::generated(gen, kBudget, kBudget),
                                [](const Vector& x) { return std::hypot(x(0), x(1)); });
}

/// sum |x_i|: the cube of sign vectors, or the sign vectors one at a time.
inline PHFunction make_abs_sum(Eigen::Index n) {
  if (n < 1 || n > 16) throw Error(ErrorKind::InvalidInput, "builtin", "abs-sum supports 1 <= n <= 16");
  std::vector<Vector> signs;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Vector s(n);
    for (Eigen::Index i = 0; i < n; ++i) s(i) = ((mask >> i) & 1U) ? -1.0 : 1.0;
    signs.push_back(s);
  }
  std::vector<SuperlinearMap> linear;
  for (std::size_t k = 0; k < signs.size(); ++k) {
    linear.push_back({ConvexCompactSet::singleton(signs[k]), "sign[" + std::to_string(k) + "]"});
  }
  return PHFunction::continuous(
      "abs-sum", n, SublinearFamily::finite({{ConvexCompactSet::polytope(signs), "cube"}}),
      SuperlinearFamily::finite(std::move(linear)),
      [](const Vector& x) { return x.cwiseAbs().sum(); });
}

/// max_i x_i: the standard simplex, or the coordinate maps one at a time.
inline PHFunction make_max_coord(Eigen::Index n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "builtin", "max-coord needs n >= 1");
  std::vector<Vector> units;
  std::vector<SuperlinearMap> linear;
  for (Eigen::Index i = 0; i < n; ++i) {
    Vector e = Vector::Zero(n);
    e(i) = 1.0;
    units.push_back(e);
    linear.push_back({ConvexCompactSet::singleton(e), "e" + std::to_string(i + 1)});
  }
  return PHFunction::continuous(
      "max-coord", n, SublinearFamily::finite({{ConvexCompactSet::polytope(units), "simplex"}}),
      SuperlinearFamily::finite(std::move(linear)), [](const Vector& x) { return x.maxCoeff(); });
}

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"example-7.1", "example-7.2", "square-mean",
                                              "abs-sum", "max-coord"};
  return names;
}

/// `dim` applies to abs-sum and max-coord; 0 selects the default of 2.
inline PHFunction builtin(const std::string& name, Eigen::Index dim = 0) {
  const bool fixed_plane = name == "example-7.1" || name == "example-7.2" || name == "square-mean";
  if (fixed_plane && dim != 0 && dim != 2) {
    throw Error(ErrorKind::DimensionMismatch, "builtin", name + " is defined on R^2");
  }
  if (name == "example-7.1") return make_example71();
  if (name == "example-7.2") return make_example72();
  if (name == "square-mean") return make_square_mean();
  if (name == "abs-sum") return make_abs_sum(dim == 0 ? 2 : dim);
  if (name == "max-coord") return make_max_coord(dim == 0 ? 2 : dim);
  throw Error(ErrorKind::UnknownBuiltin, "builtin", "unknown built-in '" + name + "'");
}

}  // namespace homocalc

#endif  // HOMOCALC_HOMOG_HPP_
