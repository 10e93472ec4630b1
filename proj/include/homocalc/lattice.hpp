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

#ifndef HOMOCALC_LATTICE_HPP_
#define HOMOCALC_LATTICE_HPP_

// Concrete Archimedean vector lattices: R^m with the coordinatewise order,
// and real step functions on [0,1]. Pieces are half-open [t_{i-1}, t_i);
// t = 1 belongs to the last piece.

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "homocalc/error.hpp"

namespace homocalc {

struct RmElement {
  Vector coords;
};

class StepFunction {
 public:
  StepFunction() : breakpoints_{0.0, 1.0}, values_{0.0} {}

  StepFunction(std::vector<double> breakpoints, std::vector<double> values)
      : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.size() < 2) {
      throw Error(ErrorKind::InvalidInput, "StepFunction", "need at least breakpoints {0, 1}");
    }
    if (breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0) {
      throw Error(ErrorKind::InvalidInput, "StepFunction", "breakpoints must start at 0 and end at 1");
    }
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
      if (!(breakpoints_[i] > breakpoints_[i - 1])) {
        throw Error(ErrorKind::InvalidInput, "StepFunction", "breakpoints must be strictly increasing");
      }
    }
    if (values_.size() != breakpoints_.size() - 1) {
      throw Error(ErrorKind::InvalidInput, "StepFunction",
                  "expected " + std::to_string(breakpoints_.size() - 1) + " values, got " +
                      std::to_string(values_.size()));
    }
    for (double v : values_) {
      if (!std::isfinite(v)) throw Error(ErrorKind::InvalidInput, "StepFunction", "non-finite value");
    }
  }

  static StepFunction constant(double value) { return StepFunction({0.0, 1.0}, {value}); }

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t pieces() const { return values_.size(); }

  std::size_t piece_index(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) {
      throw Error(ErrorKind::OutOfRange, "StepFunction", "t = " + std::to_string(t) + " outside [0,1]");
    }
    const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    const auto idx = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
    return std::min(idx, pieces() - 1);
  }

  double at(double t) const { return values_[piece_index(t)]; }

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

using LatticeElement = std::variant<RmElement, StepFunction>;

/// 1-based coordinate projection on R^m.
struct CoordinateHom {
  Eigen::Index j = 1;
};

/// Point evaluation f -> f(t) on step functions.
struct PointEvalHom {
  double t = 0.0;
};

using HomDescriptor = std::variant<CoordinateHom, PointEvalHom>;

inline bool is_rm(const LatticeElement& f) { return std::holds_alternative<RmElement>(f); }
inline bool is_step(const LatticeElement& f) { return std::holds_alternative<StepFunction>(f); }

/// Merged breakpoints of several step functions.
inline std::vector<double> common_breakpoints(std::span<const StepFunction> fs) {
  std::vector<double> merged;
  for (const auto& f : fs) merged.insert(merged.end(), f.breakpoints().begin(), f.breakpoints().end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

/// Re-express f on a finer partition (which must contain f's breakpoints).
inline StepFunction restate_on(const StepFunction& f, const std::vector<double>& partition) {
  std::vector<double> values;
  values.reserve(partition.size() - 1);
  for (std::size_t i = 0; i + 1 < partition.size(); ++i) values.push_back(f.at(partition[i]));
  return StepFunction(partition, std::move(values));
}

inline std::vector<StepFunction> refine_all(std::span<const StepFunction> fs) {
  const auto partition = common_breakpoints(fs);
  std::vector<StepFunction> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(restate_on(f, partition));
  return out;
}

/// f and g on their common partition
inline std::pair<StepFunction, StepFunction> refine(const StepFunction& f, const StepFunction& g) {
  const StepFunction both[] = {f, g};
  auto r = refine_all(both);
  return {std::move(r[0]), std::move(r[1])};
}

/// Builds the element whose every coordinate (or piece) is fn applied to the
/// tuple of the inputs' coordinates (pieces) at that position. All inputs must
/// come from the same lattice; R^m inputs must share m.
template <class Fn>
LatticeElement apply_pointwise(std::span<const LatticeElement> fs, Fn&& fn, const char* op) {
  if (fs.empty()) throw Error(ErrorKind::InvalidInput, op, "no lattice elements given");
  const auto n = static_cast<Eigen::Index>(fs.size());
  if (is_rm(fs.front())) {
    const Eigen::Index m = std::get<RmElement>(fs.front()).coords.size();
    for (const auto& f : fs) {
      if (!is_rm(f)) throw Error(ErrorKind::LatticeMismatch, op, "mixed R^m and step-function inputs");
      if (std::get<RmElement>(f).coords.size() != m) {
        throw Error(ErrorKind::LatticeMismatch, op, "R^m inputs of different lengths");
      }
    }
    Vector out(m);
    Vector tuple(n);
    for (Eigen::Index j = 0; j < m; ++j) {
      for (Eigen::Index i = 0; i < n; ++i) tuple(i) = std::get<RmElement>(fs[static_cast<std::size_t>(i)]).coords(j);
      out(j) = fn(tuple);
    }
    return RmElement{std::move(out)};
  }
  std::vector<StepFunction> steps;
  steps.reserve(fs.size());
  for (const auto& f : fs) {
    if (!is_step(f)) throw Error(ErrorKind::LatticeMismatch, op, "mixed R^m and step-function inputs");
    steps.push_back(std::get<StepFunction>(f));
  }
  const auto refined = refine_all(steps);
  const auto& partition = refined.front().breakpoints();
  std::vector<double> values(refined.front().pieces());
  Vector tuple(n);
  for (std::size_t p = 0; p < values.size(); ++p) {
    for (Eigen::Index i = 0; i < n; ++i) tuple(i) = refined[static_cast<std::size_t>(i)].values()[p];
    values[p] = fn(tuple);
  }
  return StepFunction(partition, std::move(values));
}

inline LatticeElement join(const LatticeElement& f, const LatticeElement& g) {
  const LatticeElement fs[] = {f, g};
  return apply_pointwise(fs, [](const Vector& t) { return std::max(t(0), t(1)); }, "join");
}

inline LatticeElement meet(const LatticeElement& f, const LatticeElement& g) {
  const LatticeElement fs[] = {f, g};
  return apply_pointwise(fs, [](const Vector& t) { return std::min(t(0), t(1)); }, "meet");
}

/// alpha f + beta g
inline LatticeElement combine(double alpha, const LatticeElement& f, double beta, const LatticeElement& g) {
  const LatticeElement fs[] = {f, g};
  return apply_pointwise(fs, [=](const Vector& t) { return alpha * t(0) + beta * t(1); }, "combine");
}

/// f <= g in the lattice order.
inline bool leq(const LatticeElement& f, const LatticeElement& g) {
  bool ok = true;
  const LatticeElement fs[] = {f, g};
  apply_pointwise(fs, [&](const Vector& t) {
    ok = ok && t(0) <= t(1);
    return 0.0;
  }, "leq");
  return ok;
}

/// Pointwise equality (step functions compared on the common partition).
inline bool equivalent(const LatticeElement& f, const LatticeElement& g) {
  return leq(f, g) && leq(g, f);
}

inline double hom_eval(const HomDescriptor& T, const LatticeElement& f) {
  if (const auto* c = std::get_if<CoordinateHom>(&T)) {
    const auto* r = std::get_if<RmElement>(&f);
    if (!r) throw Error(ErrorKind::LatticeMismatch, "hom_eval", "coordinate homomorphism on a step function");
    if (c->j < 1 || c->j > r->coords.size()) {
      throw Error(ErrorKind::OutOfRange, "hom_eval",
                  "coordinate " + std::to_string(c->j) + " outside 1.." + std::to_string(r->coords.size()));
    }
    return r->coords(c->j - 1);
  }
  const auto& p = std::get<PointEvalHom>(T);
  const auto* s = std::get_if<StepFunction>(&f);
  if (!s) throw Error(ErrorKind::LatticeMismatch, "hom_eval", "point evaluation on an R^m element");
  return s->at(p.t);
}

/// Point evaluations of f at the grid points; a lattice homomorphism into R^m.
inline RmElement embed_step_to_grid(const StepFunction& f, std::span<const double> grid) {
  Vector out(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t i = 0; i < grid.size(); ++i) out(static_cast<Eigen::Index>(i)) = f.at(grid[i]);
  return RmElement{std::move(out)};
}

/// True when every piece of the partition contains a grid point, i.e. the
/// embedding is injective on step functions over that partition.
inline bool grid_separates(const std::vector<double>& partition, std::span<const double> grid) {
  for (std::size_t i = 0; i + 1 < partition.size(); ++i) {
    const double lo = partition[i];
    const double hi = partition[i + 1];
    const bool last = i + 2 == partition.size();
    const bool hit = std::any_of(grid.begin(), grid.end(), [&](double t) {
      return t >= lo && (t < hi || (last && t <= hi));
    });
    if (!hit) return false;
  }
  return true;
}

}  // namespace homocalc

#endif  // HOMOCALC_LATTICE_HPP_
