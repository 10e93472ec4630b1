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

// Runs every acceptance criterion once with seed 1 and prints one line per
// criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "homocalc/verify.hpp"

namespace {

using homocalc::CheckReport;

struct Outcome {
  bool passed = true;
  std::string detail;
};

double worst(const CheckReport& r) {
  double w = 0.0;
  for (const auto& f : r.failures) w = std::max(w, std::isnan(f.observed) ? INFINITY : f.observed);
  return w;
}

void absorb(Outcome& o, const CheckReport& r) {
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += r.name + ": " + std::to_string(r.cases - std::min(r.cases, r.failures.size())) + "/" +
              std::to_string(r.cases) + " ok";
  if (!r.passed()) {
    o.passed = false;
    char buf[64];
    std::snprintf(buf, sizeof buf, ", %zu failing, worst %.3g", r.failures.size(), worst(r));
    o.detail += buf;
  }
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  using namespace homocalc;
  constexpr std::uint64_t seed = 1;

  const std::vector<Criterion> criteria{
      {1, "worked examples match their case oracles (R^16, 500 inputs, 1e-6)", 5.0,
       [] {
         Outcome o;
         for (const char* b : {"example-7.1", "example-7.2"}) absorb(o, check_engine_vs_oracle(builtin(b), 500, 1e-6, seed, 16));
         return o;
       }},
      {2, "homomorphisms interchange with the calculus (1000 triples, 1e-12)", 2.0,
       [] {
         Outcome o;
         absorb(o, check_interchange(1000, 1e-12, seed));
         return o;
       }},
      {3, "subdifferential coordinate bound (200 polytopes)", 1.0,
       [] {
         Outcome o;
         absorb(o, check_coordinate_bound(200, seed));
         return o;
       }},
      {4, "square-mean inf/sup paths agree (720 angles 1e-3, 4096 angles 1e-5)", 10.0,
       [] {
         Outcome o;
         absorb(o, check_continuous_agreement(200, 1e-3, 720, seed));
         absorb(o, check_continuous_agreement(200, 1e-5, 4096, seed));
         return o;
       }},
      {5, "step-function calculus commutes with grid embedding (200 tuples, exact)", 2.0,
       [] {
         Outcome o;
         absorb(o, check_sublattice_invariance(200, seed));
         return o;
       }},
      {6, "32-angle saddle: circle gap 1e-9 and disk agreement 2e-3 (100 R^4 pairs)", 10.0,
       [] {
         Outcome o;
         absorb(o, check_saddle(100, 1e-9, 32, seed));
         absorb(o, check_saddle_vs_disk(100, 2e-3, 32, seed));
         return o;
       }},
      {7, "domination envelopes bracket the calculus (200 inputs, 1e-9)", 3.0,
       [] {
         Outcome o;
         for (const char* b : {"example-7.1", "example-7.2"}) absorb(o, check_envelope_ordering(builtin(b), 200, 1e-9, seed));
         return o;
       }},
      {8, "injected faults are detected", 1.0,
       [] {
         Outcome o;
         absorb(o, check_negative_controls(seed));
         return o;
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    const bool ok = o.passed && in_time;
    if (!ok) ++failed;
    std::printf("[%s] %d %s (%s; %.2fs of %.0fs%s)\n", ok ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs,
                c.limit_s, in_time ? "" : ", too slow");
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
