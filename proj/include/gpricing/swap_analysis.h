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

// Certificates behind the local search guarantees.
//
// Given a reference allocation B* (prices p*) and a local allocation B
// (prices p), the pairing greedily maps optimal customers to local customers
// that share their Right item. The test swap for (u, i) prices the directed
// ball B+(u, i) of the pairing digraph at p* and exhibits the explicit
// allocation
//
//   (B - delta_B(ball) - sigma(delta_B'(boundary))) + delta_B*(ball)
//
// which is feasible under the swapped prices, so its value lower-bounds the
// swapped val. Radius 0 is the single-swap test swap for u.

#ifndef GPRICING_SWAP_ANALYSIS_H_
#define GPRICING_SWAP_ANALYSIS_H_

#include <vector>

#include "gpricing/ball_cover.h"
#include "gpricing/instance.h"
#include "gpricing/matching.h"

namespace gpricing {

struct Pairing {
  std::vector<int> paired;  // B', ascending customer ids
  std::vector<int> sigma;   // per customer id: image in B, or -1
};

// Processes B* in ascending customer id and pairs each customer with a Right
// item to the smallest not-yet-used B customer on the same Right item.
Pairing BuildPairing(const LSidedInstance& instance,
                     const Allocation& optimal, const Allocation& local);

// Violations of: sigma injective, images in B sharing the Right item, and
// for each Right v either delta_B*(v) within B' or delta_B(v) within
// sigma(B').
std::vector<std::string> CheckPairing(const LSidedInstance& instance,
                                      const Allocation& optimal,
                                      const Allocation& local,
                                      const Pairing& pairing);

// Arc left(e*) -> left(sigma(e*)) for each e* in B'. Vertices are item ids.
Digraph PairingDigraph(const LSidedInstance& instance, const Pairing& pairing);

struct SwapCertificate {
  std::vector<int> ball;        // items repriced to p*
  std::vector<int> test_set;    // explicit allocation under swapped prices
  Money local_value = 0;        // val(p)
  Money bound = 0;              // value(test_set) - val(p)
  Money swapped_value = 0;      // val(swapped prices)
  bool holds() const { return swapped_value >= local_value + bound; }
};

// Builds and checks the test swap. Throws PricingError(kInternal) if the
// constructed set is infeasible, which would indicate a bug here.
SwapCertificate VerifySwapInequality(const RevenueEvaluator& evaluator,
                                     const Prices& local_prices,
                                     const Allocation& local,
                                     const Prices& optimal_prices,
                                     const Allocation& optimal,
                                     const Pairing& pairing,
                                     const Digraph& h, int u, int radius);

// p*(u)|delta_B*(u)| - p(u)|delta_B(u)| - sum over e in delta_B'(u) of
// p(sigma(e)), the closed-form single-swap lower bound.
Money SingleSwapFormulaBound(const LSidedInstance& instance,
                             const Prices& local_prices,
                             const Allocation& local,
                             const Prices& optimal_prices,
                             const Allocation& optimal, const Pairing& pairing,
                             int u);

}  // namespace gpricing

#endif  // GPRICING_SWAP_ANALYSIS_H_
