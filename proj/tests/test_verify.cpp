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

#include "homocalc/verify.hpp"
#include "test_support.hpp"

namespace homocalc {
namespace {

using testing::vec;

TEST(OracleFc, Example72OnRm) {
  const std::vector<LatticeElement> fs{RmElement{vec({2, 5, -1})}, RmElement{vec({3, -1, 1})}};
  EXPECT_EQ(std::get<RmElement>(oracle_fc(builtin("example-7.2"), fs)).coords, vec({2, -1, 0}));
}

TEST(OracleFc, ZeroInputs) {
  for (const auto& name : builtin_names()) {
    const auto h = builtin(name);
    std::vector<LatticeElement> fs(static_cast<std::size_t>(h.dim), RmElement{Vector::Zero(3)});
    EXPECT_EQ(std::get<RmElement>(oracle_fc(h, fs)).coords, Vector::Zero(3)) << name;
  }
}

TEST(OracleFc, StepFunctionsOnCommonPartition) {
  const std::vector<LatticeElement> fs{StepFunction({0.0, 0.5, 1.0}, {2.0, 5.0}),
                                       StepFunction({0.0, 0.25, 1.0}, {3.0, -1.0})};
  const auto r = std::get<StepFunction>(oracle_fc(builtin("example-7.1"), fs));
  EXPECT_EQ(r.breakpoints(), (std::vector<double>{0.0, 0.25, 0.5, 1.0}));
  EXPECT_EQ(r.values(), (std::vector<double>{5.0, 0.0, 0.0}));
}

TEST(OracleFc, MissingOracle) {
  const auto h = PHFunction::upper("bare", 2, SublinearFamily::finite({unit_disk_map()}));
  const std::vector<LatticeElement> fs{RmElement{vec({1})}, RmElement{vec({1})}};
  try {
    oracle_fc(h, fs);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingOracle);
  }
}

TEST(Checks, PassOnCorrectEngine) {
  EXPECT_TRUE(check_engine_vs_oracle(builtin("example-7.1"), 100, 1e-6, 3).passed());
  EXPECT_TRUE(check_engine_vs_oracle(builtin("example-7.2"), 100, 1e-6, 3).passed());
  EXPECT_TRUE(check_interchange(300, 1e-12, 3).passed());
  EXPECT_TRUE(check_coordinate_bound(50, 3).passed());
  EXPECT_TRUE(check_continuous_agreement(30, 1e-3, 720, 3).passed());
  EXPECT_TRUE(check_rep_independence(30, 1e-3, 720, 3).passed());
  EXPECT_TRUE(check_sublattice_invariance(100, 3).passed());
  EXPECT_TRUE(check_saddle(20, 1e-9, 32, 3).passed());
  EXPECT_TRUE(check_lattice_path(builtin("abs-sum"), 20, 2000, 1e-12, 3).passed());
  EXPECT_TRUE(check_homogeneity(builtin("max-coord"), 50, 1e-9, 3).passed());
  EXPECT_TRUE(check_negative_controls(3).passed());
}

TEST(Checks, FaultsAreDetected) {
  FaultInjection support;
  support.corrupt_support = true;
  const auto a = check_interchange(200, 1e-12, 5, support);
  EXPECT_FALSE(a.passed());
  EXPECT_EQ(a.name, "interchange/fault-injected");
  FaultInjection saddle;
  saddle.corrupt_saddle = true;
  EXPECT_FALSE(check_saddle(10, 1e-9, 32, 5, saddle).passed());
}

TEST(Checks, CoarsePolygonIsNotRepresentationIndependent) {
  const auto r = check_rep_independence(50, 1e-6, 8, 7);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.failures.front().input.empty());
}

TEST(Checks, NonSeparatingGridLosesInformation) {
  EXPECT_FALSE(check_sublattice_invariance(100, 7, false).passed());
}

TEST(Checks, SameSeedSameReport) {
  const auto a = check_rep_independence(20, 1e-6, 8, 11);
  const auto b = check_rep_independence(20, 1e-6, 8, 11);
  ASSERT_EQ(a.failures.size(), b.failures.size());
  for (std::size_t i = 0; i < a.failures.size(); ++i) {
    EXPECT_EQ(a.failures[i].input, b.failures[i].input);
    EXPECT_EQ(a.failures[i].observed, b.failures[i].observed);
  }
}

TEST(Suite, RunCheckRejectsUnknownNames) {
  EXPECT_THROW(run_check("no-such-check", 1), Error);
  EXPECT_EQ(check_names().size(), 11u);
}

}  // namespace
}  // namespace homocalc
