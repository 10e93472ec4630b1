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

#include "homocalc/lattice.hpp"
#include "homocalc/random.hpp"
#include "test_support.hpp"

namespace homocalc {
namespace {

using testing::vec;

const StepFunction kF({0.0, 0.5, 1.0}, {1.0, 3.0});

TEST(Rm, JoinMeet) {
  const LatticeElement f = RmElement{vec({1, -2, 0})};
  const LatticeElement g = RmElement{vec({0, 5, 0})};
  EXPECT_EQ(std::get<RmElement>(join(f, g)).coords, vec({1, 5, 0}));
  EXPECT_EQ(std::get<RmElement>(meet(f, g)).coords, vec({0, -2, 0}));
  EXPECT_THROW(join(f, RmElement{vec({1, 2})}), Error);
  EXPECT_THROW(join(f, LatticeElement{kF}), Error);
}

TEST(Step, JoinRefinesThenTakesMax) {
  const auto j = std::get<StepFunction>(join(kF, StepFunction::constant(2.0)));
  EXPECT_EQ(j.breakpoints(), (std::vector<double>{0.0, 0.5, 1.0}));
  EXPECT_EQ(j.values(), (std::vector<double>{2.0, 3.0}));
  EXPECT_EQ(std::get<StepFunction>(meet(kF, kF)), kF);
}

TEST(Step, Refine) {
  const StepFunction g({0.0, 1.0 / 3.0, 1.0}, {-1.0, 4.0});
  const auto [f2, g2] = refine(kF, g);
  EXPECT_EQ(f2.breakpoints(), (std::vector<double>{0.0, 1.0 / 3.0, 0.5, 1.0}));
  EXPECT_EQ(g2.breakpoints(), f2.breakpoints());
  for (double t : {0.0, 0.4, 0.9}) {
    EXPECT_EQ(f2.at(t), kF.at(t));
    EXPECT_EQ(g2.at(t), g.at(t));
  }
  const auto [a, b] = refine(kF, kF);
  EXPECT_EQ(a, kF);
  EXPECT_EQ(b, kF);
}

TEST(Step, Validation) {
  EXPECT_THROW(StepFunction({0.0, 0.5}, {1.0}), Error);
  EXPECT_THROW(StepFunction({0.0, 0.5, 0.5, 1.0}, {1.0, 2.0, 3.0}), Error);
  EXPECT_THROW(StepFunction({0.0, 1.0}, {1.0, 2.0}), Error);
  EXPECT_THROW(kF.at(1.5), Error);
}

TEST(Hom, Examples) {
  EXPECT_EQ(hom_eval(CoordinateHom{2}, RmElement{vec({7, -1, 4})}), -1.0);
  EXPECT_EQ(hom_eval(PointEvalHom{0.5}, kF), 3.0);
  EXPECT_EQ(hom_eval(PointEvalHom{1.0}, kF), 3.0);
  EXPECT_EQ(hom_eval(PointEvalHom{0.0}, kF), 1.0);
  EXPECT_THROW(hom_eval(CoordinateHom{4}, RmElement{vec({7, -1, 4})}), Error);
  EXPECT_THROW(hom_eval(CoordinateHom{1}, kF), Error);
  EXPECT_THROW(hom_eval(PointEvalHom{0.5}, RmElement{vec({1})}), Error);
}

TEST(Embed, Examples) {
  const double grid[] = {0.25, 0.75};
  EXPECT_EQ(embed_step_to_grid(kF, grid).coords, vec({1, 3}));
  const double many[] = {0.0, 0.1, 0.5, 1.0};
  EXPECT_EQ(embed_step_to_grid(StepFunction::constant(5.0), many).coords, Vector::Constant(4, 5.0));
}

StepFunction random_step(Rng& rng) {
  std::vector<double> bps{0.0};
  const int pieces = 1 + static_cast<int>(rng.index(5));
  for (int i = 1; i < pieces; ++i) bps.push_back(bps.back() + rng.uniform(0.01, 0.2));
  const double scale = bps.back() + 0.1;
  for (double& b : bps) b /= scale;
  bps.push_back(1.0);
  std::vector<double> vals;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) vals.push_back(rng.uniform(-5, 5));
  return StepFunction(bps, vals);
}

// Homomorphisms are linear and preserve joins and meets; embeddings commute
// with the lattice operations.
TEST(HomProperties, LinearAndLatticePreserving) {
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const double alpha = rng.uniform(-3, 3);
    const double beta = rng.uniform(-3, 3);
    const Eigen::Index m = 1 + static_cast<Eigen::Index>(rng.index(6));
    const LatticeElement f = RmElement{rng.vector(m, -5, 5)};
    const LatticeElement g = RmElement{rng.vector(m, -5, 5)};
    const HomDescriptor T = CoordinateHom{1 + static_cast<Eigen::Index>(rng.index(static_cast<std::size_t>(m)))};
    EXPECT_EQ(hom_eval(T, join(f, g)), std::max(hom_eval(T, f), hom_eval(T, g)));
    EXPECT_EQ(hom_eval(T, meet(f, g)), std::min(hom_eval(T, f), hom_eval(T, g)));
    EXPECT_EQ(hom_eval(T, combine(alpha, f, beta, g)), alpha * hom_eval(T, f) + beta * hom_eval(T, g));

    const StepFunction sf = random_step(rng);
    const StepFunction sg = random_step(rng);
    const HomDescriptor P = PointEvalHom{rng.unit()};
    EXPECT_EQ(hom_eval(P, join(sf, sg)), std::max(hom_eval(P, sf), hom_eval(P, sg)));
    EXPECT_EQ(hom_eval(P, combine(alpha, sf, beta, sg)), alpha * hom_eval(P, sf) + beta * hom_eval(P, sg));

    const auto [rf, rg] = refine(sf, sg);
    for (int k = 0; k < 10; ++k) {
      const double t = rng.unit();
      EXPECT_EQ(rf.at(t), sf.at(t));
      EXPECT_EQ(rg.at(t), sg.at(t));
    }

    std::vector<double> grid;
    for (int k = 0; k < 7; ++k) grid.push_back(rng.unit());
    const auto lhs = embed_step_to_grid(std::get<StepFunction>(join(sf, sg)), grid);
    const auto rhs = join(embed_step_to_grid(sf, grid), embed_step_to_grid(sg, grid));
    EXPECT_EQ(lhs.coords, std::get<RmElement>(rhs).coords);
  }
}

TEST(Order, CoordinatewiseAndPiecewise) {
  Rng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const LatticeElement f = RmElement{rng.vector(4, -1, 1)};
    const LatticeElement g = join(f, RmElement{rng.vector(4, -1, 1)});
    const LatticeElement h = join(g, RmElement{rng.vector(4, -1, 1)});
    EXPECT_TRUE(leq(f, g));
    EXPECT_TRUE(leq(g, h));
    EXPECT_TRUE(leq(f, h));
    if (leq(g, f)) {
      EXPECT_TRUE(equivalent(f, g));
    }
  }
  const StepFunction refined({0.0, 0.25, 0.5, 1.0}, {1.0, 1.0, 3.0});
  EXPECT_TRUE(equivalent(kF, refined));
  EXPECT_FALSE(leq(kF, StepFunction::constant(2.0)));
}

TEST(Separation, GridMustHitEveryPiece) {
  const std::vector<double> partition{0.0, 0.5, 1.0};
  const double good[] = {0.25, 0.75};
  const double bad[] = {0.25};
  EXPECT_TRUE(grid_separates(partition, good));
  EXPECT_FALSE(grid_separates(partition, bad));
}

}  // namespace
}  // namespace homocalc
