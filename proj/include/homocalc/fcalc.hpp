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

#ifndef HOMOCALC_FCALC_HPP_
#define HOMOCALC_FCALC_HPP_

// Functional calculus over the concrete lattices. Every lattice-level
// supremum or infimum is computed coordinatewise (piecewise): coordinate
// projections and point evaluations are lattice homomorphisms, and these
// commute with sublinear and superlinear maps.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "homocalc/convexsets.hpp"
#include "homocalc/homog.hpp"
#include "homocalc/lattice.hpp"
#include "homocalc/sphere.hpp"

namespace homocalc {

namespace detail {

inline void require_arity(Eigen::Index n, std::span<const LatticeElement> fs, const char* op) {
  if (static_cast<Eigen::Index>(fs.size()) != n) {
    throw Error(ErrorKind::DimensionMismatch, op,
                "map takes " + std::to_string(n) + " arguments, got " + std::to_string(fs.size()));
  }
}

}  // namespace detail

/// phi(f_1, ..., f_n) = sup over the subdifferential of sum a_i f_i.
inline LatticeElement fc_sublinear(const SublinearMap& phi, std::span<const LatticeElement> fs) {
  detail::require_arity(phi.dim(), fs, "fc_sublinear");
  return apply_pointwise(fs, [&](const Vector& t) { return support(phi.subdiff, t) + 0.0; },
                         "fc_sublinear");
}

/// psi(f_1, ..., f_n) = inf over the superdifferential of sum a_i f_i.
inline LatticeElement fc_superlinear(const SuperlinearMap& psi, std::span<const LatticeElement> fs) {
  detail::require_arity(psi.dim(), fs, "fc_superlinear");
  return apply_pointwise(fs, [&](const Vector& t) { return -support(psi.superdiff, -t) + 0.0; },
                         "fc_superlinear");
}

struct FcResult {
  LatticeElement element;
  std::size_t family_terms_used = 0;  // largest count over coordinates
  double max_residual = 0.0;          // largest |family value - oracle|, 0 without oracle
};

namespace detail {

inline FcResult fc_family(const PHFunction& h, std::span<const LatticeElement> fs, double tol,
                          FamilyValue (*eval)(const PHFunction&, const Vector&, double)) {
  require_arity(h.dim, fs, "fc_semicontinuous");
  FcResult r;
  r.element = apply_pointwise(fs, [&](const Vector& t) {
    const FamilyValue v = eval(h, t, tol);
    r.family_terms_used = std::max(r.family_terms_used, v.terms_used);
    if (h.has_oracle()) r.max_residual = std::max(r.max_residual, std::abs(v.value - h.oracle(t)));
    return v.value;
  }, "fc_semicontinuous");
  return r;
}

}  // namespace detail

/// h(f_1, ..., f_n) through h's representing family: the infimum of
/// phi(f_1, ..., f_n) over the inf-family (usc, and cts by default) or the
/// supremum of psi(f_1, ..., f_n) over the sup-family (lsc).
inline FcResult fc_semicontinuous(const PHFunction& h, std::span<const LatticeElement> fs,
                                  double tol = 1e-9) {
  return detail::fc_family(h, fs, tol, &eval_family);
}

/// Same, forced through the inf-family.
inline FcResult fc_via_inf_family(const PHFunction& h, std::span<const LatticeElement> fs,
                                  double tol = 1e-9) {
  return detail::fc_family(h, fs, tol, &eval_inf_family);
}

/// Same, forced through the sup-family.
inline FcResult fc_via_sup_family(const PHFunction& h, std::span<const LatticeElement> fs,
                                  double tol = 1e-9) {
  return detail::fc_family(h, fs, tol, &eval_sup_family);
}

/// Lattice-level path: the meet (usc) or join (lsc) of the first `terms`
/// family members applied to fs, without any per-coordinate stopping rule.
inline LatticeElement fc_family_lattice(const PHFunction& h, std::span<const LatticeElement> fs,
                                        std::size_t terms) {
  detail::require_arity(h.dim, fs, "fc_family_lattice");
  const bool use_inf = h.kind != Semicontinuity::Lower && h.inf_family.has_value();
  const std::size_t available = use_inf ? (h.inf_family ? h.inf_family->count() : 0)
                                        : (h.sup_family ? h.sup_family->count() : 0);
  const std::size_t count = std::min(terms, available);
  if (count == 0) throw Error(ErrorKind::EmptyFamily, "fc_family_lattice", h.name);
  LatticeElement acc = use_inf ? fc_sublinear(h.inf_family->at(0), fs)
                               : fc_superlinear(h.sup_family->at(0), fs);
  for (std::size_t i = 1; i < count; ++i) {
    acc = use_inf ? meet(acc, fc_sublinear(h.inf_family->at(i), fs))
                  : join(acc, fc_superlinear(h.sup_family->at(i), fs));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Saddle representations.

/// Coefficients a^{phi psi}, stored phi-major.
struct SaddleFamily {
  std::size_t phi_count = 0;
  std::size_t psi_count = 0;
  std::vector<Vector> coefficients;
  std::vector<std::string> phi_labels;
  std::vector<std::string> psi_labels;

  Eigen::Index dim() const { return coefficients.empty() ? 0 : coefficients.front().size(); }
  const Vector& at(std::size_t phi, std::size_t psi) const { return coefficients.at(phi * psi_count + psi); }
  Vector& at(std::size_t phi, std::size_t psi) { return coefficients.at(phi * psi_count + psi); }

  void validate() const {
    if (phi_count == 0 || psi_count == 0) {
      throw Error(ErrorKind::InvalidInput, "SaddleFamily", "both index families must be nonempty");
    }
    if (coefficients.size() != phi_count * psi_count) {
      throw Error(ErrorKind::InvalidInput, "SaddleFamily", "coefficient count != phi_count * psi_count");
    }
    for (const auto& a : coefficients) detail::require_dim(dim(), a.size(), "SaddleFamily");
  }
};

/// Builds a^{phi psi} in subdiff(phi) intersect superdiff(psi) for every pair.
/// Requires psi <= phi pointwise, validated on a sphere grid first.
inline SaddleFamily saddle_build(std::span<const SublinearMap> phis, std::span<const SuperlinearMap> psis,
                                 double tol = 1e-9) {
  if (phis.empty() || psis.empty()) {
    throw Error(ErrorKind::InvalidInput, "saddle_build", "both families must be nonempty");
  }
  const Eigen::Index n = phis.front().dim();
  for (const auto& phi : phis) detail::require_dim(n, phi.dim(), "saddle_build");
  for (const auto& psi : psis) detail::require_dim(n, psi.dim(), "saddle_build");

  const auto grid = sphere_grid(n, validation_density(n));
  std::vector<double> phi_min(grid.size(), std::numeric_limits<double>::infinity());
  std::vector<double> psi_max(grid.size(), -std::numeric_limits<double>::infinity());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    for (const auto& phi : phis) phi_min[g] = std::min(phi_min[g], eval_sublinear(phi, grid[g]));
    for (const auto& psi : psis) psi_max[g] = std::max(psi_max[g], eval_superlinear(psi, grid[g]));
    if (psi_max[g] > phi_min[g] + tol) {
      throw Error(ErrorKind::NotOrdered, "saddle_build",
                  "sup psi = " + std::to_string(psi_max[g]) + " exceeds inf phi = " +
                      std::to_string(phi_min[g]) + " on the sphere grid");
    }
  }

  SaddleFamily s;
  s.phi_count = phis.size();
  s.psi_count = psis.size();
  s.coefficients.reserve(s.phi_count * s.psi_count);
  for (const auto& phi : phis) {
    s.phi_labels.push_back(phi.label);
    for (const auto& psi : psis) {
      const Vector a = feasible_point(phi.subdiff, psi.superdiff, tol);
      for (const auto& u : grid) {
        const double v = a.dot(u);
        if (v > eval_sublinear(phi, u) + 2.0 * tol || v < eval_superlinear(psi, u) - 2.0 * tol) {
          throw Error(ErrorKind::NoConvergence, "saddle_build",
                      "coefficient for (" + phi.label + ", " + psi.label + ") leaves the sandwich");
        }
      }
      s.coefficients.push_back(a);
    }
  }
  for (const auto& psi : psis) s.psi_labels.push_back(psi.label);
  return s;
}

struct SaddleValue {
  double infsup = 0.0;  // inf_phi sup_psi a.x
  double supinf = 0.0;  // sup_psi inf_phi a.x
};

inline SaddleValue saddle_eval(const SaddleFamily& s, const Vector& x) {
  s.validate();
  detail::require_dim(s.dim(), x.size(), "saddle_eval");
  std::vector<double> col_min(s.psi_count, std::numeric_limits<double>::infinity());
  double infsup = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < s.phi_count; ++i) {
    double row_max = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < s.psi_count; ++j) {
      const double v = s.at(i, j).dot(x);
      row_max = std::max(row_max, v);
      col_min[j] = std::min(col_min[j], v);
    }
    infsup = std::min(infsup, row_max);
  }
  const double supinf = *std::max_element(col_min.begin(), col_min.end());
  return {infsup + 0.0, supinf + 0.0};
}

/// Per-coordinate saddle evaluation; returns the inf-sup ordering and
/// raises SaddleGap where the two orderings differ by more than tol.
inline LatticeElement fc_saddle(const SaddleFamily& s, std::span<const LatticeElement> fs, double tol = 1e-6) {
  s.validate();
  detail::require_arity(s.dim(), fs, "fc_saddle");
  return apply_pointwise(fs, [&](const Vector& t) {
    const SaddleValue v = saddle_eval(s, t);
    if (std::abs(v.infsup - v.supinf) > tol) {
      throw Error(ErrorKind::SaddleGap, "fc_saddle",
                  "inf-sup " + std::to_string(v.infsup) + " vs sup-inf " + std::to_string(v.supinf));
    }
    return v.infsup;
  }, "fc_saddle");
}

}  // namespace homocalc

#endif  // HOMOCALC_FCALC_HPP_
