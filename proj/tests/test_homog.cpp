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

#include <gtest/gtest.h>

#include "homocalc/homog.hpp"
#include "test_support.hpp"

namespace homocalc {
namespace {

using testing::vec;

TEST(EvalSublinear, Examples) {
  EXPECT_DOUBLE_EQ(eval_sublinear(unit_disk_map(), vec({3, 4})), 5.0);
  EXPECT_EQ(eval_sublinear(example71_map(1, 1), vec({2, 3})), 5.0);
  EXPECT_EQ(eval_sublinear(example71_map(4, 2), vec({0, 0})), 0.0);
}

TEST(EvalSuperlinear, Examples) {
  EXPECT_EQ(eval_superlinear(example72_map(1, 2), vec({1, 1})), 1.0);
  EXPECT_EQ(eval_superlinear(example72_map(1, 2), vec({0, 0})), 0.0);
  const SuperlinearMap linear{ConvexCompactSet::singleton(vec({-1, 0})), "neg-x"};
  EXPECT_EQ(eval_superlinear(linear, vec({2, 5})), -2.0);
}

TEST(EvalFamily, WorkedExamples) {
  const auto h71 = builtin("example-7.1");
  const auto h72 = builtin("example-7.2");
  EXPECT_EQ(eval_family(h71, vec({1, 1})).value, 2.0);
  EXPECT_EQ(eval_family(h71, vec({-1, 2})).value, 0.0);
  EXPECT_EQ(eval_family(h72, vec({5, -1})).value, -1.0);
}

TEST(EvalFamily, NearAxisInputsReachExactInfimum) {
  const auto h71 = builtin("example-7.1");
  // x < 0 < y with y / |x| = 5e9: needs m of order 2^33.
  const auto r = eval_family(h71, vec({-1e-9, 5}));
  EXPECT_EQ(r.value, 0.0);
  EXPECT_FALSE(r.representation_warning);
  const auto h72 = builtin("example-7.2");
  EXPECT_EQ(eval_family(h72, vec({4, 1e-9})).value, 4.0);
}

TEST(EvalFamily, EmptyFamily) {
  const auto h = PHFunction::upper("empty", 2, SublinearFamily::finite({}));
  try {
    eval_family(h, vec({1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyFamily);
  }
}

TEST(EvalFamily, FlagsRepresentationWarning) {
  // A family that only represents example 7.1 on the positive quadrant.
  const auto h = PHFunction::upper("truncated", 2, SublinearFamily::finite({example71_map(1, 1)}),
                                   example71_oracle);
  EXPECT_FALSE(eval_family(h, vec({1, 2})).representation_warning);
  EXPECT_TRUE(eval_family(h, vec({-1, 2})).representation_warning);
}

TEST(EvalFamily, GeneratedFamilyHonoursBudget) {
  const auto h = builtin("example-7.1");
  PHFunction small = h;
  small.inf_family = h.inf_family->with_budget(3);
  const auto r = eval_family(small, vec({-1e-6, 5}));
  EXPECT_EQ(r.terms_used, 3u);
  EXPECT_GT(r.value, 0.0);
  EXPECT_TRUE(r.representation_warning);
}

// Every built-in agrees with its closed form on 1000 random points.
TEST(EvalFamily, BuiltinsMatchOracles) {
  for (const auto& name : builtin_names()) {
    const auto h = builtin(name);
    Rng rng(42, name);
    for (int i = 0; i < 1000; ++i) {
      const Vector x = rng.vector(h.dim, -5, 5);
      EXPECT_NEAR(eval_family(h, x, 1e-9).value, h.oracle(x), 1e-6) << name << " at " << x.transpose();
      if (h.kind == Semicontinuity::Continuous) {
        EXPECT_NEAR(eval_sup_family(h, x, 1e-9).value, h.oracle(x), 1e-6) << name;
      }
    }
  }
}

TEST(EvalFamily, Example71ExactOffMixedSigns) {
  const auto h = builtin("example-7.1");
  Rng rng(9);
  for (int i = 0; i < 500; ++i) {
    Vector x = rng.vector(2, 0, 5);
    if (rng.coin()) x = -x;
    EXPECT_EQ(eval_family(h, x).value, example71_oracle(x));
  }
}

TEST(Builtin, Oracles) {
  EXPECT_EQ(builtin("example-7.1").oracle(vec({1, 1})), 2.0);
  EXPECT_EQ(builtin("example-7.2").oracle(vec({-1, 1})), 0.0);
  EXPECT_EQ(builtin("square-mean").oracle(vec({1, 0})), 1.0);
  EXPECT_EQ(builtin("abs-sum", 3).oracle(vec({1, -2, 3})), 6.0);
  EXPECT_EQ(builtin("max-coord", 4).oracle(vec({1, -2, 3, 0})), 3.0);
}

TEST(Builtin, UnknownName) {
  try {
    builtin("example-9");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownBuiltin);
  }
  EXPECT_THROW(builtin("example-7.1", 3), Error);
}

TEST(Builtin, Example72CaseTable) {
  const auto h = builtin("example-7.2");
  EXPECT_EQ(eval_family(h, vec({2, 3})).value, 2.0);    // x, y > 0
  EXPECT_EQ(eval_family(h, vec({-2, -3})).value, -3.0); // both negative
  EXPECT_EQ(eval_family(h, vec({2, -3})).value, -3.0);  // y < 0 <= x
  EXPECT_EQ(eval_family(h, vec({-2, 3})).value, 0.0);   // x <= 0 < y
  EXPECT_EQ(eval_family(h, vec({7, 0})).value, 0.0);    // y = 0
}

TEST(Diagonal, EnumeratesPairsInOrder) {
  std::vector<std::pair<std::size_t, std::size_t>> expected{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}};
  for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_EQ(detail::diagonal_pair(k), expected[k]);
  for (std::size_t k = 0; k < 5000; ++k) {
    const auto [i, j] = detail::diagonal_pair(k);
    const std::size_t d = i + j;
    EXPECT_EQ(d * (d + 1) / 2 + i, k);
  }
}

TEST(SphereBounds, Example71) {
  const auto h = builtin("example-7.1");
  const auto b = sphere_bounds(h, 720);
  const double sweep = testing::sweep_circle_max(example71_oracle);
  EXPECT_NEAR(sweep, std::sqrt(2.0), 1e-10);
  EXPECT_NEAR(b.M, sweep, 1e-12);
  EXPECT_EQ(b.m, 0.0);
}

TEST(SphereBounds, SquareMeanAndLinear) {
  const auto b = sphere_bounds(builtin("square-mean"), 64);
  EXPECT_NEAR(b.M, 1.0, 1e-15);
  EXPECT_EQ(b.m, 0.0);
  const Vector a = vec({1.5, -2.0});
  const auto lin = PHFunction::upper("linear", 2,
                                     SublinearFamily::finite({{ConvexCompactSet::singleton(a), "a"}}),
                                     [a](const Vector& x) { return a.dot(x); });
  const auto lb = sphere_bounds(lin, 720);
  // Cauchy-Schwarz: max = |a|; the grid misses it by at most |a| (1 - cos(pi / 720)).
  EXPECT_LE(lb.M, a.norm() + 1e-15);
  EXPECT_GE(lb.M, a.norm() * std::cos(std::numbers::pi / 720));
  EXPECT_NEAR(lb.m, a.norm(), a.norm() * (1 - std::cos(std::numbers::pi / 720)) + 1e-15);
  EXPECT_THROW(sphere_bounds(lin, 4), Error);
}

TEST(Envelopes, Example71And72) {
  const auto e71 = domination_envelopes(builtin("example-7.1"), 720);
  EXPECT_NEAR(e71.upper.subdiff.as_ball().radius, std::sqrt(2.0), 1e-3);
  EXPECT_EQ(e71.lower.superdiff.as_ball().radius, 0.0);
  const auto e72 = domination_envelopes(builtin("example-7.2"), 720);
  const double sweep_min = testing::sweep_circle_min(example72_oracle);
  EXPECT_EQ(sweep_min, -1.0);
  EXPECT_NEAR(e72.bounds.m, 1.0, 1e-12);
  EXPECT_NEAR(e72.lower.superdiff.as_ball().radius, 1.0, 1e-3);
}

TEST(Envelopes, ZeroFunction) {
  const auto zero = PHFunction::upper("zero", 2, SublinearFamily::finite({{ConvexCompactSet::singleton(vec({0, 0})), "0"}}),
                                      [](const Vector&) { return 0.0; });
  const auto e = domination_envelopes(zero, 64);
  EXPECT_EQ(eval_sublinear(e.upper, vec({3, 4})), 0.0);
  EXPECT_EQ(eval_superlinear(e.lower, vec({3, 4})), 0.0);
}

TEST(Envelopes, BadOracleIsReported) {
  // Unbounded spike between grid points: 0 on the grid, large off it.
  const auto spike = PHFunction::upper(
      "spike", 2, SublinearFamily::finite({unit_disk_map()}), [](const Vector& x) {
        const double t = std::atan2(x(1), x(0));
        const double step = 2.0 * std::numbers::pi / 16;
        const double frac = std::remainder(t, step);
        return std::abs(frac) > 0.25 * step ? 100.0 * x.norm() : 0.0;
      });
  try {
    domination_envelopes(spike, 16);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EnvelopeViolation);
  }
}

TEST(Envelopes, DominateOnDenseSweep) {
  for (const char* name : {"example-7.1", "example-7.2", "square-mean"}) {
    const auto h = builtin(name);
    const auto e = domination_envelopes(h, 720);
    for (int k = 0; k < 100000; ++k) {
      const double t = 2.0 * std::numbers::pi * (k + 0.37) / 100000;
      const Vector u = vec({std::cos(t), std::sin(t)});
      ASSERT_LE(eval_superlinear(e.lower, u), h.oracle(u) + 1e-12) << name;
      ASSERT_LE(h.oracle(u), eval_sublinear(e.upper, u) + 1e-12) << name;
    }
  }
}

TEST(Homogeneity, Examples) {
  const auto h71 = builtin("example-7.1");
  EXPECT_EQ(h71.oracle(vec({0, 0})), 0.0);
  const auto h72 = builtin("example-7.2");
  EXPECT_EQ(h72.oracle(vec({4, 6})), 4.0);
  EXPECT_EQ(2.0 * h72.oracle(vec({2, 3})), 4.0);
  EXPECT_DOUBLE_EQ(builtin("square-mean").oracle(0.5 * vec({3, 4})), 2.5);
  for (const auto& name : builtin_names()) {
    EXPECT_TRUE(check_positive_homogeneity(builtin(name), 500, 1e-9).passed()) << name;
  }
}

TEST(Homogeneity, DetectsNonHomogeneous) {
  const auto affine = PHFunction::upper("affine", 2, SublinearFamily::finite({unit_disk_map()}),
                                        [](const Vector& x) { return x(0) + 1.0; });
  const auto r = check_positive_homogeneity(affine, 50, 1e-9);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.violations.front().lambda, 0.0);
  const auto no_oracle = PHFunction::upper("plain", 2, SublinearFamily::finite({unit_disk_map()}));
  EXPECT_THROW(check_positive_homogeneity(no_oracle, 5, 1e-9), Error);
}

// Sub/superadditivity and the Lipschitz bound sum_k coordinate_bound(k).
TEST(MapProperties, SublinearSuperlinearLipschitz) {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng.index(4));
    std::vector<Vector> vs;
    for (int i = 0; i < 4; ++i) vs.push_back(rng.vector(n, -3, 3));
    const auto set = ConvexCompactSet::polytope(vs);
    const SublinearMap phi{set, "phi"};
    const SuperlinearMap psi{set, "psi"};
    const Vector x = rng.vector(n, -5, 5);
    const Vector y = rng.vector(n, -5, 5);
    EXPECT_LE(eval_sublinear(phi, x + y), eval_sublinear(phi, x) + eval_sublinear(phi, y) + 1e-12);
    EXPECT_GE(eval_superlinear(psi, x + y), eval_superlinear(psi, x) + eval_superlinear(psi, y) - 1e-12);
    double lipschitz = 0.0;
    for (Eigen::Index k = 1; k <= n; ++k) lipschitz += coordinate_bound(set, k);
    EXPECT_LE(std::abs(eval_sublinear(phi, x) - eval_sublinear(phi, y)), lipschitz * (x - y).norm() + 1e-12);
  }
}

}  // namespace
}  // namespace homocalc
