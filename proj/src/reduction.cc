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

#include "gpricing/reduction.h"

#include <bit>
#include <random>

#include "gpricing/error.h"
#include "gpricing/parallel.h"

namespace gpricing {

Bipartition Restrict(const PricingInstance& instance,
                     const std::vector<Side>& side) {
  Bipartition out;
  out.instance.base.items = instance.items;
  out.instance.side = side;
  for (int e = 0; e < instance.num_customers(); ++e) {
    const Customer& c = instance.customers[e];
    const bool keep = c.IsSingleton()
                          ? side[c.first] == Side::kLeft
                          : side[c.first] != side[c.second];
    if (!keep) continue;
    out.instance.base.customers.push_back(c);
    out.customer_origin.push_back(e);
  }
  return out;
}

Bipartition RandomBipartition(const PricingInstance& instance,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Side> side(instance.items.size());
  for (auto& s : side) s = (rng() >> 63) ? Side::kLeft : Side::kRight;
  return Restrict(instance, side);
}

std::vector<std::vector<Side>> PairwiseIndependentSides(int num_items) {
  const int bits = std::bit_width(static_cast<unsigned>(num_items));
  std::vector<std::vector<Side>> family;
  for (unsigned s = 0; s < (1u << bits); ++s) {
    std::vector<Side> side(num_items);
    for (int i = 0; i < num_items; ++i) {
      const unsigned label = static_cast<unsigned>(i) + 1;
      side[i] = std::popcount(label & s) % 2 ? Side::kLeft : Side::kRight;
    }
    family.push_back(std::move(side));
  }
  return family;
}

std::vector<Bipartition> DerandomizedBipartitions(
    const PricingInstance& instance) {
  std::vector<Bipartition> out;
  for (const auto& side : PairwiseIndependentSides(instance.num_items())) {
    out.push_back(Restrict(instance, side));
  }
  return out;
}

LiftedSolution Lift(const PricingInstance& original, const Bipartition& part,
                    const Prices& prices, const Allocation& allocation) {
  LiftedSolution out;
  out.prices = prices;
  for (size_t v = 0; v < out.prices.size(); ++v) {
    if (!part.instance.IsLeft(static_cast<int>(v))) out.prices[v] = 0;
  }
  for (int e : allocation.accepted) {
    out.allocation.accepted.push_back(part.customer_origin[e]);
  }
  out.allocation.revenue = allocation.revenue;
  const auto problems = CheckFeasible(original, out.prices, out.allocation);
  if (!problems.empty()) {
    throw PricingError(ErrorKind::kInternal,
                       "lifted solution infeasible: " + problems.front());
  }
  return out;
}

ReductionResult SolveViaBipartitions(const PricingInstance& instance,
                                     const LSidedSolver& solver,
                                     int threads) {
  const std::vector<Bipartition> family = DerandomizedBipartitions(instance);
  std::vector<LiftedSolution> solved(family.size());
  ParallelFor(static_cast<int>(family.size()),
              threads > 0 ? threads : DefaultThreads(), [&](int k) {
                const LiftedSolution s = solver(family[k].instance);
                solved[k] = Lift(instance, family[k], s.prices, s.allocation);
              });
  ReductionResult out;
  out.family_size = static_cast<int>(family.size());
  for (int k = 0; k < out.family_size; ++k) {
    if (out.member < 0 || solved[k].allocation.revenue >
                              out.solution.allocation.revenue) {
      out.member = k;
      out.solution = solved[k];
    }
  }
  return out;
}

}  // namespace gpricing
