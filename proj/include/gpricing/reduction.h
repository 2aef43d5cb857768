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

// From general graph pricing to L-sided pricing and back.
//
// A bipartition puts every item on the Left or Right. Customers whose bundle
// crosses the cut survive, as do singletons on a Left item; everything else
// is dropped. Pricing the Left side and giving Right items away loses at
// most a factor 4 in expectation, and any pairwise-independent family of
// bipartitions contains a member doing at least that well.

#ifndef GPRICING_REDUCTION_H_
#define GPRICING_REDUCTION_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "gpricing/instance.h"

namespace gpricing {

struct Bipartition {
  LSidedInstance instance;           // same item ids as the original
  std::vector<int> customer_origin;  // original id per surviving customer
};

Bipartition Restrict(const PricingInstance& instance,
                     const std::vector<Side>& side);

// Each item lands on the Left with probability 1/2.
Bipartition RandomBipartition(const PricingInstance& instance,
                              std::uint64_t seed);

// Side assignments of the GF(2) inner-product family over k = ceil(log2(n +
// 1)) bits: item i gets label i + 1, and member s puts it on the Left iff
// popcount((i + 1) & s) is odd. All 2^k vectors s are included, which makes
// every pair of items exactly uniform over the four side combinations.
std::vector<std::vector<Side>> PairwiseIndependentSides(int num_items);

std::vector<Bipartition> DerandomizedBipartitions(
    const PricingInstance& instance);

// Zero-extends Right prices and maps accepted customers back. Throws
// PricingError(kInternal) if the result is infeasible for the original.
struct LiftedSolution {
  Prices prices;
  Allocation allocation;
};
LiftedSolution Lift(const PricingInstance& original, const Bipartition& part,
                    const Prices& prices, const Allocation& allocation);

// Solves every member of the family and keeps the best lift; ties go to the
// smaller family index.
using LSidedSolver =
    std::function<LiftedSolution(const LSidedInstance& instance)>;
struct ReductionResult {
  LiftedSolution solution;
  int member = -1;
  int family_size = 0;
};
ReductionResult SolveViaBipartitions(const PricingInstance& instance,
                                     const LSidedSolver& solver,
                                     int threads = 0);

}  // namespace gpricing

#endif  // GPRICING_REDUCTION_H_
