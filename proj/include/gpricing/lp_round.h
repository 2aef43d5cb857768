// Copyright 2026 The gpricing Authors
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

// Randomized rounding of the LP relaxation.
//
// Each Left item u draws its price p'(u) = p with probability y[u,p]. A
// customer e at u then gets the fractional amount
//   x''_e = scale * x[e,p'(u)] / y[u,p'(u)]
// (zero when e cannot afford p'(u)), every Right item whose load exceeds
// its capacity drops all its x'', and the integral answer is val(p'), which
// is at least the surviving fractional value because the b-matching
// polytope of a bipartite graph is integral.

#ifndef GPRICING_LP_ROUND_H_
#define GPRICING_LP_ROUND_H_

#include <cstdint>
#include <vector>

#include "gpricing/instance.h"
#include "gpricing/lp.h"

namespace gpricing {

struct RoundingResult {
  Prices prices;
  Allocation allocation;
  double fractional_value = 0;        // sum p' * x'' after the discard step
  std::vector<int> discarded_items;   // Right items whose load overflowed
};

// Draws p' and applies the discard rule with an arbitrary scale in (0, 1].
RoundingResult RoundWithScale(const LSidedInstance& instance,
                              const LpModel& model, const LpSolution& lp,
                              double scale, std::uint64_t seed);

// Scale 1 - epsilon. Throws kInvalidInput unless epsilon is in (0, 1) and
// kPrecondition on parallel customers.
RoundingResult RoundLargeCapacity(const LSidedInstance& instance,
                                  const LpModel& model, const LpSolution& lp,
                                  double epsilon, std::uint64_t seed);

// Scale 1/2; any instance.
RoundingResult RoundGeneric(const LSidedInstance& instance,
                            const LpModel& model, const LpSolution& lp,
                            std::uint64_t seed);

inline constexpr double kHybridScale = 0.57;

struct RoundingSummary {
  RoundingResult best;  // highest revenue; ties to the earliest seed
  double mean_revenue = 0;
  double stddev_revenue = 0;
  int rounds = 0;
};

// Runs seeds seed, seed + 1, ..., seed + k - 1.
RoundingSummary RoundRepeatedly(const LSidedInstance& instance,
                                const LpModel& model, const LpSolution& lp,
                                double scale, std::uint64_t seed, int k,
                                int threads = 0);

enum class HybridPath { kMatching, kMultiSwap, kRounding };
const char* HybridPathName(HybridPath path);

struct HybridResult {
  HybridPath path = HybridPath::kMatching;
  Prices prices;
  Allocation allocation;
  std::int64_t capacity = 0;  // the uniform mu
  int d = 0;                  // multi-swap depth, when used
  double guarantee = 0;       // target fraction of OPT (or LP)
  double lp_objective = 0;    // rounding path only
  double mean_revenue = 0;    // rounding path only
  bool cap_hit = false;       // multi-swap path only
};

struct HybridOptions {
  double epsilon = 0.01;
  std::uint64_t seed = 1;
  int rounds = 32;
  std::int64_t max_evaluations = 1'000'000;
  int threads = 0;
};

// Smallest d with (C - C^-d) / (2C - 1 - C^-d) >= target.
int MinimalDepth(int c, double target);

// mu = 1: maximum-weight matching on budgets. 2 <= mu <= 21: multi-swap with
// C = mu and the smallest d reaching 21/41 - epsilon. mu >= 22: LP plus
// 0.57-scaled rounding, best of `rounds` seeds. Throws kPrecondition unless
// every item has the same finite capacity and no two customers share a
// bundle.
HybridResult HybridSolve(const LSidedInstance& instance,
                         const HybridOptions& options = {});

}  // namespace gpricing

#endif  // GPRICING_LP_ROUND_H_
