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

#ifndef HOMOCALC_VERIFY_HPP_
#define HOMOCALC_VERIFY_HPP_

// Brute-force oracles and randomized property checks. oracle_fc walks the
// lattice elements itself and applies the closed-form evaluator; it never
// touches the family machinery in fcalc, so agreement between the two is
// evidence rather than a tautology.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "homocalc/fcalc.hpp"
#include "homocalc/random.hpp"

namespace homocalc {

struct CheckFailure {
  std::string input;  // replayable digest: seed, case index, short description
  double observed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
};

struct CheckReport {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// Closed-form h applied per coordinate (R^m) or per piece of the common
/// partition (step functions).
inline LatticeElement oracle_fc(const PHFunction& h, std::span<const LatticeElement> fs) {
  if (!h.has_oracle()) throw Error(ErrorKind::MissingOracle, "oracle_fc", h.name + " has no oracle");
  if (static_cast<Eigen::Index>(fs.size()) != h.dim) {
    throw Error(ErrorKind::DimensionMismatch, "oracle_fc", "wrong number of lattice elements");
  }
  Vector x(h.dim);
  if (const auto* first = std::get_if<RmElement>(&fs.front())) {
    const Eigen::Index m = first->coords.size();
    Vector out(m);
    for (Eigen::Index j = 0; j < m; ++j) {
      for (Eigen::Index i = 0; i < h.dim; ++i) {
        const auto* r = std::get_if<RmElement>(&fs[static_cast<std::size_t>(i)]);
        if (!r || r->coords.size() != m) throw Error(ErrorKind::LatticeMismatch, "oracle_fc", "inputs differ");
        x(i) = r->coords(j);
      }
      out(j) = h.oracle(x);
    }
    return RmElement{out};
  }
  std::set<double> cuts;
  for (const auto& f : fs) {
    const auto* s = std::get_if<StepFunction>(&f);
    if (!s) throw Error(ErrorKind::LatticeMismatch, "oracle_fc", "inputs differ");
    cuts.insert(s->breakpoints().begin(), s->breakpoints().end());
  }
  const std::vector<double> partition(cuts.begin(), cuts.end());
  std::vector<double> values;
  for (std::size_t p = 0; p + 1 < partition.size(); ++p) {
    for (Eigen::Index i = 0; i < h.dim; ++i) x(i) = std::get<StepFunction>(fs[static_cast<std::size_t>(i)]).at(partition[p]);
    values.push_back(h.oracle(x));
  }
  return StepFunction(partition, values);
}

namespace detail {

inline std::string digest(std::uint64_t seed, std::size_t trial, const std::string& what) {
  std::ostringstream os;
  os << "seed=" << seed << ";case=" << trial;
  if (!what.empty()) os << ";" << what;
  return os.str();
}

/// Largest |f - g| over coordinates (pieces of the common partition).
inline double max_abs_diff(const LatticeElement& f, const LatticeElement& g) {
  double worst = 0.0;
  const LatticeElement both[] = {f, g};
  apply_pointwise(both, [&](const Vector& t) {
    worst = std::max(worst, std::abs(t(0) - t(1)));
    return 0.0;
  }, "max_abs_diff");
  return worst;
}

inline std::vector<LatticeElement> random_rm(Rng& rng, Eigen::Index n, Eigen::Index m, double lo = -5.0,
                                             double hi = 5.0) {
  std::vector<LatticeElement> fs;
  for (Eigen::Index i = 0; i < n; ++i) fs.push_back(RmElement{rng.vector(m, lo, hi)});
  return fs;
}

inline StepFunction random_step(Rng& rng, std::size_t max_pieces = 6) {
  const std::size_t pieces = 1 + rng.index(max_pieces);
  std::set<double> cuts{0.0, 1.0};
  while (cuts.size() < pieces + 1) cuts.insert(std::round(rng.uniform(0.01, 0.99) * 1024.0) / 1024.0);
  std::vector<double> bps(cuts.begin(), cuts.end());
  std::vector<double> vals;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) vals.push_back(rng.uniform(-5.0, 5.0));
  return StepFunction(bps, vals);
}

inline ConvexCompactSet random_set(Rng& rng, Eigen::Index n) {
  if (rng.coin()) {
    std::vector<Vector> vs;
    const std::size_t k = 1 + rng.index(8);
    for (std::size_t i = 0; i < k; ++i) vs.push_back(rng.vector(n, -3.0, 3.0));
    return ConvexCompactSet::polytope(std::move(vs));
  }
  return ConvexCompactSet::ball(rng.vector(n, -2.0, 2.0), rng.uniform(0.0, 3.0));
}

inline ConvexCompactSet corrupted(const ConvexCompactSet& set) {
  if (set.is_polytope()) {
    std::vector<Vector> vs = set.as_polytope().vertices;
    for (auto& v : vs) v.array() += 1e-3;
    return ConvexCompactSet::polytope(std::move(vs));
  }
  return ConvexCompactSet::ball(set.as_ball().center, set.as_ball().radius + 1e-3);
}

/// Sublinear maps with subdifferential Ball(-eps u_k, 1 + eps) for `count`
/// angles u_k. Each dominates the norm and touches it along u_k.
inline std::vector<SublinearMap> tilted_disk_maps(std::size_t count, double eps = 0.25) {
  std::vector<SublinearMap> maps;
  for (std::size_t k = 0; k < count; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
    maps.push_back({ConvexCompactSet::ball(vec2(-eps * std::cos(t), -eps * std::sin(t)), 1.0 + eps),
                    "tilted[" + std::to_string(k) + "/" + std::to_string(count) + "]"});
  }
  return maps;
}

}  // namespace detail

/// fc_semicontinuous against oracle_fc on random R^m inputs in [-5,5]
/// (m drawn from 1..16 when `dim` is 0).
inline CheckReport check_engine_vs_oracle(const PHFunction& h, std::size_t trials, double tol,
                                          std::uint64_t seed, Eigen::Index dim = 0) {
  CheckReport rep{"engine-vs-oracle/" + h.name, seed, 0, {}};
  Rng rng(seed, rep.name);
  for (std::size_t t = 0; t < trials; ++t) {
    const Eigen::Index m = dim > 0 ? dim : 1 + static_cast<Eigen::Index>(rng.index(16));
    const auto fs = detail::random_rm(rng, h.dim, m);
    const auto engine = fc_semicontinuous(h, fs).element;
    const auto truth = oracle_fc(h, fs);
    const auto& e = std::get<RmElement>(engine).coords;
    const auto& o = std::get<RmElement>(truth).coords;
    ++rep.cases;
    for (Eigen::Index j = 0; j < m; ++j) {
      if (!(std::abs(e(j) - o(j)) <= tol)) {
        rep.failures.push_back({detail::digest(seed, t, "coord=" + std::to_string(j + 1)), e(j), o(j), tol});
      }
    }
  }
  return rep;
}

struct FaultInjection {
  bool corrupt_support = false;
  bool corrupt_saddle = false;
};

/// T(phi(f)) = phi(T f) and T(psi(f)) = psi(T f) for random sets, random
/// lattice elements (R^m or step functions) and random homomorphisms T.
inline CheckReport check_interchange(std::size_t trials, double tol, std::uint64_t seed,
                                     FaultInjection fault = {}) {
  CheckReport rep{fault.corrupt_support ? "interchange/fault-injected" : "interchange", seed, 0, {}};
  Rng rng(seed, rep.name);
  for (std::size_t t = 0; t < trials; ++t) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng.index(4));
    const ConvexCompactSet set = detail::random_set(rng, n);
    const ConvexCompactSet lattice_set = fault.corrupt_support ? detail::corrupted(set) : set;
    std::vector<LatticeElement> fs;
    HomDescriptor T;
    if (rng.coin()) {
      const Eigen::Index m = 1 + static_cast<Eigen::Index>(rng.index(8));
      fs = detail::random_rm(rng, n, m);
      T = CoordinateHom{1 + static_cast<Eigen::Index>(rng.index(static_cast<std::size_t>(m)))};
    } else {
      for (Eigen::Index i = 0; i < n; ++i) fs.push_back(detail::random_step(rng));
      T = PointEvalHom{rng.unit()};
    }
    Vector image(n);
    for (Eigen::Index i = 0; i < n; ++i) image(i) = hom_eval(T, fs[static_cast<std::size_t>(i)]);

    const SublinearMap phi{lattice_set, "phi"};
    const SuperlinearMap psi{lattice_set, "psi"};
    const double lhs_sub = hom_eval(T, fc_sublinear(phi, fs));
    const double rhs_sub = eval_sublinear({set, "phi"}, image);
    const double lhs_sup = hom_eval(T, fc_superlinear(psi, fs));
    const double rhs_sup = eval_superlinear({set, "psi"}, image);
    rep.cases += 2;
    if (!(std::abs(lhs_sub - rhs_sub) <= tol)) {
      rep.failures.push_back({detail::digest(seed, t, "sublinear"), lhs_sub, rhs_sub, tol});
    }
    if (!(std::abs(lhs_sup - rhs_sup) <= tol)) {
      rep.failures.push_back({detail::digest(seed, t, "superlinear"), lhs_sup, rhs_sup, tol});
    }
  }
  return rep;
}

/// |a_k| <= max(phi(e_k), phi(-e_k)) for every vertex of random polytopes.
inline CheckReport check_coordinate_bound(std::size_t trials, std::uint64_t seed) {
  constexpr double kSlack = 1e-12;
  CheckReport rep{"coordinate-bound", seed, 0, {}};
  Rng rng(seed, rep.name);
  for (std::size_t t = 0; t < trials; ++t) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng.index(6));
    std::vector<Vector> vs;
    const std::size_t count = 1 + rng.index(32);
    for (std::size_t i = 0; i < count; ++i) vs.push_back(rng.vector(n, -5.0, 5.0));
    const auto set = ConvexCompactSet::polytope(vs);
    for (Eigen::Index k = 1; k <= n; ++k) {
      const double bound = coordinate_bound(set, k);
      for (std::size_t i = 0; i < vs.size(); ++i) {
        ++rep.cases;
        if (std::abs(vs[i](k - 1)) > bound + kSlack) {
          rep.failures.push_back({detail::digest(seed, t, "vertex=" + std::to_string(i) + ",k=" + std::to_string(k)),
                                  std::abs(vs[i](k - 1)), bound, kSlack});
        }
      }
    }
  }
  return rep;
}

/// The disk's inf-path against the sup-path over `angles` linear maps, on
/// random pairs in ([-5,5]^dim)^2.
inline CheckReport check_continuous_agreement(std::size_t trials, double tol, std::size_t angles,
                                              std::uint64_t seed, Eigen::Index dim = 8) {
  CheckReport rep{"continuous-agreement/" + std::to_string(angles), seed, 0, {}};
  Rng rng(seed, "continuous-agreement");
  const auto h = PHFunction::continuous("square-mean/" + std::to_string(angles), 2,
                                        SublinearFamily::finite({unit_disk_map()}),
                                        SuperlinearFamily::finite(angle_grid_maps(angles)));
  for (std::size_t t = 0; t < trials; ++t) {
    const auto fs = detail::random_rm(rng, 2, dim);
    const auto inf_path = fc_via_inf_family(h, fs).element;
    const auto sup_path = fc_via_sup_family(h, fs).element;
    const double diff = detail::max_abs_diff(inf_path, sup_path);
    ++rep.cases;
    if (!(diff <= tol)) rep.failures.push_back({detail::digest(seed, t, "max |inf - sup|"), diff, 0.0, tol});
  }
  return rep;
}

/// Two representations of the same function must give the same calculus.
inline CheckReport check_rep_independence(const PHFunction& a, const PHFunction& b, std::size_t trials,
                                          double tol, std::uint64_t seed, Eigen::Index dim = 8) {
  CheckReport rep{"rep-independence/" + a.name + "~" + b.name, seed, 0, {}};
  Rng rng(seed, "rep-independence");
  for (std::size_t t = 0; t < trials; ++t) {
    const auto fs = detail::random_rm(rng, a.dim, dim);
    const double diff = detail::max_abs_diff(fc_semicontinuous(a, fs).element, fc_semicontinuous(b, fs).element);
    ++rep.cases;
    if (!(diff <= tol)) rep.failures.push_back({detail::digest(seed, t, "max |a - b|"), diff, 0.0, tol});
  }
  return rep;
}

/// Square-mean through the disk against the circumscribed `sides`-gon, both
/// as one-member inf-families.
inline CheckReport check_rep_independence(std::size_t trials, double tol, std::size_t sides, std::uint64_t seed) {
  const auto disk = PHFunction::upper("disk", 2, SublinearFamily::finite({unit_disk_map()}));
  const auto polygon = PHFunction::upper("polygon-" + std::to_string(sides), 2,
                                         SublinearFamily::finite({circumscribed_disk_map(sides)}));
  return check_rep_independence(disk, polygon, trials, tol, seed);
}

/// fc on step functions followed by embedding into R^grid equals embedding
/// first, exactly. With `separating` false the grid is {0.5}, which misses
/// pieces of most partitions; those cases are reported as failures because
/// the embedding is then not injective.
inline CheckReport check_sublattice_invariance(std::size_t trials, std::uint64_t seed, bool separating = true) {
  CheckReport rep{separating ? "sublattice-invariance" : "sublattice-invariance/coarse-grid", seed, 0, {}};
  Rng rng(seed, "sublattice-invariance");
  const std::vector<PHFunction> hs{builtin("example-7.1"), builtin("example-7.2"), builtin("square-mean"),
                                   builtin("abs-sum", 3), builtin("max-coord", 3)};
  for (std::size_t t = 0; t < trials; ++t) {
    const PHFunction& h = hs[t % hs.size()];
    std::vector<StepFunction> steps;
    for (Eigen::Index i = 0; i < h.dim; ++i) steps.push_back(detail::random_step(rng));
    const std::vector<LatticeElement> fs(steps.begin(), steps.end());
    const auto partition = common_breakpoints(steps);
    std::vector<double> grid;
    if (separating) {
      for (std::size_t p = 0; p + 1 < partition.size(); ++p) {
        grid.push_back(partition[p]);
        grid.push_back(0.5 * (partition[p] + partition[p + 1]));
      }
      grid.push_back(1.0);
    } else {
      grid = {0.5};
    }
    std::vector<LatticeElement> embedded;
    for (const auto& s : steps) embedded.push_back(embed_step_to_grid(s, grid));

    const auto via_step = embed_step_to_grid(std::get<StepFunction>(fc_semicontinuous(h, fs).element), grid);
    const auto via_grid = std::get<RmElement>(fc_semicontinuous(h, embedded).element);
    ++rep.cases;
    for (Eigen::Index j = 0; j < via_step.coords.size(); ++j) {
      if (via_step.coords(j) != via_grid.coords(j)) {
        rep.failures.push_back({detail::digest(seed, t, h.name + ";grid=" + std::to_string(j)),
                                via_step.coords(j), via_grid.coords(j), 0.0});
      }
    }
    if (!grid_separates(partition, grid)) {
      rep.failures.push_back({detail::digest(seed, t, h.name + ";grid misses a piece of the partition"),
                              static_cast<double>(grid.size()), static_cast<double>(partition.size() - 1), 0.0});
    }
  }
  return rep;
}

/// Finite square-mean saddle: Phi = tilted disks, Psi = linear maps, both on
/// `angles` angles. Checks every coefficient against both sets, the
/// inf-sup/sup-inf gap on a 720-point circle, and fc_saddle against the fc of
/// the Psi family on random R^4 pairs.
inline CheckReport check_saddle(std::size_t trials, double tol, std::size_t angles, std::uint64_t seed,
                                FaultInjection fault = {}) {
  CheckReport rep{std::string(fault.corrupt_saddle ? "saddle/corrupted" : "saddle") + "/" + std::to_string(angles),
                  seed, 0, {}};
  Rng rng(seed, "saddle");
  const auto phis = detail::tilted_disk_maps(angles);
  const auto psis = angle_grid_maps(angles);
  SaddleFamily s = saddle_build(phis, psis);
  if (fault.corrupt_saddle) s.at(0, 0) = -s.at(0, 0);

  for (std::size_t i = 0; i < s.phi_count; ++i) {
    for (std::size_t j = 0; j < s.psi_count; ++j) {
      ++rep.cases;
      const double da = distance(phis[i].subdiff, s.at(i, j));
      const double db = distance(psis[j].superdiff, s.at(i, j));
      if (!(std::max(da, db) <= 1e-9)) {
        rep.failures.push_back({detail::digest(seed, i * s.psi_count + j, "coefficient membership"),
                                std::max(da, db), 0.0, 1e-9});
      }
    }
  }
  for (const auto& u : sphere_grid(2, 720)) {
    const auto v = saddle_eval(s, u);
    ++rep.cases;
    if (!(std::abs(v.infsup - v.supinf) <= 1e-9)) {
      rep.failures.push_back({detail::digest(seed, 0, "circle gap"), v.infsup, v.supinf, 1e-9});
    }
  }
  const auto h = PHFunction::lower("square-mean/psi" + std::to_string(angles), 2, SuperlinearFamily::finite(psis));
  for (std::size_t t = 0; t < trials; ++t) {
    const auto fs = detail::random_rm(rng, 2, 4);
    ++rep.cases;
    try {
      const double diff = detail::max_abs_diff(fc_saddle(s, fs, 1e-9), fc_semicontinuous(h, fs).element);
      if (!(diff <= tol)) rep.failures.push_back({detail::digest(seed, t, "fc_saddle vs family"), diff, 0.0, tol});
    } catch (const Error& e) {
      rep.failures.push_back({detail::digest(seed, t, e.what()), NAN, 0.0, tol});
    }
  }
  return rep;
}

/// fc_saddle of the finite square-mean saddle against the exact disk
/// calculus on random pairs in ([-5,5]^4)^2.
inline CheckReport check_saddle_vs_disk(std::size_t trials, double tol, std::size_t angles, std::uint64_t seed) {
  CheckReport rep{"saddle-vs-disk/" + std::to_string(angles), seed, 0, {}};
  Rng rng(seed, "saddle-vs-disk");
  const auto s = saddle_build(detail::tilted_disk_maps(angles), angle_grid_maps(angles));
  const SublinearMap disk = unit_disk_map();
  for (std::size_t t = 0; t < trials; ++t) {
    const auto fs = detail::random_rm(rng, 2, 4);
    ++rep.cases;
    const double diff = detail::max_abs_diff(fc_saddle(s, fs, 1e-9), fc_sublinear(disk, fs));
    if (!(diff <= tol)) rep.failures.push_back({detail::digest(seed, t, "fc_saddle vs disk"), diff, 0.0, tol});
  }
  return rep;
}

/// psi_env(f) <= h(f) <= phi_env(f) coordinatewise.
inline CheckReport check_envelope_ordering(const PHFunction& h, std::size_t trials, double tol,
                                           std::uint64_t seed, std::size_t density = 720) {
  CheckReport rep{"envelope-ordering/" + h.name, seed, 0, {}};
  Rng rng(seed, rep.name);
  const Envelopes env = domination_envelopes(h, density);
  for (std::size_t t = 0; t < trials; ++t) {
    const Eigen::Index m = 1 + static_cast<Eigen::Index>(rng.index(16));
    const auto fs = detail::random_rm(rng, h.dim, m);
    const auto lo = std::get<RmElement>(fc_superlinear(env.lower, fs)).coords;
    const auto mid = std::get<RmElement>(fc_semicontinuous(h, fs).element).coords;
    const auto hi = std::get<RmElement>(fc_sublinear(env.upper, fs)).coords;
    for (Eigen::Index j = 0; j < m; ++j) {
      ++rep.cases;
      if (!(lo(j) <= mid(j) + tol)) rep.failures.push_back({detail::digest(seed, t, "lower"), lo(j), mid(j), tol});
      if (!(mid(j) <= hi(j) + tol)) rep.failures.push_back({detail::digest(seed, t, "upper"), mid(j), hi(j), tol});
    }
  }
  return rep;
}

/// Per-coordinate evaluation against the meet (join) of the first `terms`
/// family members computed directly in the lattice.
inline CheckReport check_lattice_path(const PHFunction& h, std::size_t trials, std::size_t terms, double tol,
                                      std::uint64_t seed) {
  CheckReport rep{"lattice-path/" + h.name, seed, 0, {}};
  Rng rng(seed, rep.name);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto fs = detail::random_rm(rng, h.dim, 1 + static_cast<Eigen::Index>(rng.index(8)));
    const double diff = detail::max_abs_diff(fc_semicontinuous(h, fs).element, fc_family_lattice(h, fs, terms));
    ++rep.cases;
    if (!(diff <= tol)) rep.failures.push_back({detail::digest(seed, t, "coordinate vs lattice"), diff, 0.0, tol});
  }
  return rep;
}

inline CheckReport check_homogeneity(const PHFunction& h, std::size_t samples, double tol, std::uint64_t seed) {
  CheckReport rep{"homogeneity/" + h.name, seed, 0, {}};
  const auto r = check_positive_homogeneity(h, samples, tol, seed);
  rep.cases = r.samples;
  for (const auto& v : r.violations) {
    rep.failures.push_back({"seed=" + std::to_string(seed) + ";lambda=" + std::to_string(v.lambda), v.scaled,
                            v.expected, tol * (1.0 + v.lambda)});
  }
  return rep;
}

/// Injected faults must be detected: a corrupted support function in the
/// interchange check and a corrupted saddle coefficient.
inline CheckReport check_negative_controls(std::uint64_t seed) {
  CheckReport rep{"negative-controls", seed, 2, {}};
  FaultInjection support_fault;
  support_fault.corrupt_support = true;
  const auto a = check_interchange(200, 1e-12, seed, support_fault);
  if (a.passed()) rep.failures.push_back({"corrupted support function went undetected", 0.0, 1.0, 0.0});
  FaultInjection saddle_fault;
  saddle_fault.corrupt_saddle = true;
  const auto b = check_saddle(20, 1e-9, 32, seed, saddle_fault);
  if (b.passed()) rep.failures.push_back({"corrupted saddle coefficient went undetected", 0.0, 1.0, 0.0});
  return rep;
}

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "continuous-agreement", "coordinate-bound",    "engine-vs-oracle",   "envelope-ordering",
      "homogeneity",          "interchange",         "lattice-path",       "negative-controls",
      "rep-independence",     "saddle",              "sublattice-invariance"};
  return names;
}

/// Runs one named check with its default parameters. `trials` = 0 keeps the
/// default count. Checks that cover several functions return several reports.
inline std::vector<CheckReport> run_check(const std::string& name, std::uint64_t seed, std::size_t trials = 0) {
  auto pick = [&](std::size_t d) { return trials == 0 ? d : trials; };
  std::vector<CheckReport> out;
  if (name == "engine-vs-oracle") {
    for (const char* b : {"example-7.1", "example-7.2", "square-mean"}) {
      out.push_back(check_engine_vs_oracle(builtin(b), pick(500), 1e-6, seed));
    }
  } else if (name == "interchange") {
    out.push_back(check_interchange(pick(1000), 1e-12, seed));
  } else if (name == "coordinate-bound") {
    out.push_back(check_coordinate_bound(pick(200), seed));
  } else if (name == "continuous-agreement") {
    out.push_back(check_continuous_agreement(pick(200), 1e-3, 720, seed));
    out.push_back(check_continuous_agreement(pick(200), 1e-5, 4096, seed));
  } else if (name == "rep-independence") {
    out.push_back(check_rep_independence(pick(200), 1e-3, 720, seed));
  } else if (name == "sublattice-invariance") {
    out.push_back(check_sublattice_invariance(pick(200), seed));
  } else if (name == "saddle") {
    out.push_back(check_saddle(pick(100), 1e-9, 32, seed));
  } else if (name == "envelope-ordering") {
    for (const char* b : {"example-7.1", "example-7.2"}) {
      out.push_back(check_envelope_ordering(builtin(b), pick(200), 1e-9, seed));
    }
  } else if (name == "homogeneity") {
    for (const auto& b : builtin_names()) out.push_back(check_homogeneity(builtin(b), pick(200), 1e-9, seed));
  } else if (name == "lattice-path") {
    for (const char* b : {"example-7.1", "example-7.2", "abs-sum"}) {
      out.push_back(check_lattice_path(builtin(b), pick(50), 2000, 1e-12, seed));
    }
  } else if (name == "negative-controls") {
    out.push_back(check_negative_controls(seed));
  } else {
    throw Error(ErrorKind::InvalidInput, "run_check", "unknown check '" + name + "'");
  }
  return out;
}

/// Every check with default parameters, ordered by report name.
inline std::vector<CheckReport> default_suite(std::uint64_t seed) {
  std::vector<CheckReport> all;
  for (const auto& name : check_names()) {
    auto part = run_check(name, seed);
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end(), [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
  return all;
}

}  // namespace homocalc

#endif  // HOMOCALC_VERIFY_HPP_
