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

#ifndef HOMOCALC_SPHERE_HPP_
#define HOMOCALC_SPHERE_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "homocalc/error.hpp"

namespace homocalc {

/// Deterministic point sets on the unit sphere of R^n.
///   n = 1: {-1, +1}
///   n = 2: `density` equally spaced angles starting at 0
///   n = 3: Fibonacci lattice with `density` points
///   n > 3: `density` normalized Gaussian points from a fixed seed
/// `phase` in [0, 1) shifts the n = 2 angles by phase * spacing and the
/// n > 3 seed, giving a second grid disjoint from the first.
inline std::vector<Vector> sphere_grid(Eigen::Index n, std::size_t density, double phase = 0.0) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "sphere_grid", "dimension must be >= 1");
  std::vector<Vector> pts;
  if (n == 1) {
    pts.push_back(Vector::Constant(1, -1.0));
    pts.push_back(Vector::Constant(1, 1.0));
    return pts;
  }
  pts.reserve(density);
  if (n == 2) {
    const double step = 2.0 * std::numbers::pi / static_cast<double>(density);
    for (std::size_t k = 0; k < density; ++k) {
      const double theta = (static_cast<double>(k) + phase) * step;
      Vector u(2);
      u << std::cos(theta), std::sin(theta);
      pts.push_back(u);
    }
    return pts;
  }
  if (n == 3) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    const auto count = static_cast<double>(density);
    for (std::size_t k = 0; k < density; ++k) {
      const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0 + phase) / count;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double theta = golden * static_cast<double>(k);
      Vector u(3);
      u << r * std::cos(theta), r * std::sin(theta), z;
      pts.push_back(u);
    }
    return pts;
  }
  std::mt19937_64 gen(0x5eed0000u + static_cast<std::uint64_t>(phase * 1e6));
  auto unit = [&gen] { return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53; };
  while (pts.size() < density) {
    Vector u(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      // Box-Muller
      u(i) = std::sqrt(-2.0 * std::log(unit())) * std::cos(2.0 * std::numbers::pi * unit());
    }
    const double norm = u.norm();
    if (norm > 1e-12) pts.push_back(u / norm);
  }
  return pts;
}

/// Typical angular distance between neighbouring grid points.
inline double sphere_grid_spacing(Eigen::Index n, std::size_t density) {
  if (n <= 1) return 0.0;
  if (n == 2) return 2.0 * std::numbers::pi / static_cast<double>(density);
  // (surface area / count)^(1/(n-1)); the area of S^{n-1} is 2 pi^{n/2} / Gamma(n/2).
  const double half = static_cast<double>(n) / 2.0;
  const double area = 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
  return std::pow(area / static_cast<double>(density), 1.0 / static_cast<double>(n - 1));
}

/// Grid density used to validate orderings between maps in dimension n.
inline std::size_t validation_density(Eigen::Index n) { return n == 2 ? 720 : 2000; }

}  // namespace homocalc

#endif  // HOMOCALC_SPHERE_HPP_
