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

#include "gpricing/oracle.h"

#include <gtest/gtest.h>

#include <random>

#include "brute_force.h"
#include "gpricing/error.h"
#include "gpricing/generators.h"

namespace gpricing {
namespace {

LSidedInstance OneCustomer(Money budget) {
  LSidedInstance inst;
  inst.base.items = {{1}, {1}};
  inst.side = {Side::kLeft, Side::kRight};
  inst.base.customers = {{0, 1, budget}};
  return inst;
}

TEST(ExactLSidedTest, SingleCustomer) {
  const OracleResult r = ExactLSided(OneCustomer(7));
  EXPECT_EQ(r.prices, (Prices{7, 0}));
  EXPECT_EQ(r.allocation.revenue, 7);
}

TEST(ExactLSidedTest, SingleGapOptimum) {
  const GapInstance g = GenSingleGap(3, 1);
  EXPECT_EQ(ExactLSided(g.instance).allocation.revenue, 4);
}

TEST(ExactLSidedTest, AgreesWithDoubleBruteForce) {
  std::mt19937_64 rng(11);
  testing::TinyProfile prof;
  prof.max_customers = 8;
  for (int round = 0; round < 150; ++round) {
    const LSidedInstance inst = testing::RandomTinyLSided(rng, prof);
    const OracleResult r = ExactLSided(inst);
    EXPECT_EQ(r.allocation.revenue, testing::BruteForceLSided(inst))
        << WriteInstance(inst);
    EXPECT_TRUE(CheckFeasible(inst.base, r.prices, r.allocation).empty());
  }
}

TEST(ExactLSidedTest, TiesPickLexicographicallySmallest) {
  // Budgets 2 and 4 on one item with capacity 2: price 2 sells twice and
  // price 4 once, both earning 4.
  LSidedInstance inst;
  inst.base.items = {{2}, {1}, {1}};
  inst.side = {Side::kLeft, Side::kRight, Side::kRight};
  inst.base.customers = {{0, 1, 2}, {0, 2, 4}};
  const OracleResult r = ExactLSided(inst);
  EXPECT_EQ(r.allocation.revenue, 4);
  EXPECT_EQ(r.prices[0], 2);
}

TEST(ExactLSidedTest, LimitExceeded) {
  LSidedInstance inst;
  for (int u = 0; u < 8; ++u) {
    inst.base.items.push_back({1});
    inst.side.push_back(Side::kLeft);
  }
  inst.base.items.push_back({});
  inst.side.push_back(Side::kRight);
  for (int u = 0; u < 8; ++u) {
    for (Money b = 1; b <= 10; ++b) inst.base.customers.push_back({u, 8, b});
  }
  try {
    ExactLSided(inst, {.max_pricings = 1000});
    FAIL() << "expected a limit error";
  } catch (const PricingError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kLimitExceeded);
  }
}

TEST(ExactFullTest, SingletonCustomer) {
  PricingInstance inst{{{1}}, {{0, kNoItem, 3}}};
  const FullOracleResult r = ExactFull(inst);
  EXPECT_EQ(r.allocation.revenue, 3);
  EXPECT_TRUE(r.full_integer_grid);
}

TEST(ExactFullTest, TriangleUnitBudgets) {
  // Three items in a triangle, capacity 1, budgets 1. Integer prices sell
  // at most one customer at revenue 1 (any pair of customers shares an
  // item), and one customer pays at most its budget.
  PricingInstance inst{{{1}, {1}, {1}}, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}};
  const FullOracleResult r = ExactFull(inst);
  EXPECT_EQ(r.allocation.revenue, 1);
  EXPECT_EQ(r.allocation.revenue,
            testing::BruteForceRevenue(inst, r.prices));
}

TEST(ExactFullTest, MatchesLSidedOracleOnBipartite) {
  // Integer pricing of both sides is at least as good as L-sided pricing.
  std::mt19937_64 rng(17);
  testing::TinyProfile prof;
  prof.max_left = 2;
  prof.max_right = 2;
  prof.max_customers = 5;
  prof.max_budget = 5;
  for (int round = 0; round < 40; ++round) {
    const LSidedInstance inst = testing::RandomTinyLSided(rng, prof);
    const FullOracleResult full = ExactFull(inst.base);
    EXPECT_GE(full.allocation.revenue, ExactLSided(inst).allocation.revenue);
    EXPECT_EQ(full.allocation.revenue,
              testing::BruteForceRevenue(inst.base, full.prices));
  }
}

TEST(ExhaustiveAllocationTest, MatchesBruteForce) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 200; ++round) {
    const LSidedInstance inst = testing::RandomTinyLSided(rng);
    Prices p(inst.base.items.size());
    for (auto& q : p) q = static_cast<Money>(rng() % 6);
    const Allocation a = ExhaustiveAllocation(inst.base, p);
    EXPECT_EQ(a.revenue, testing::BruteForceRevenue(inst.base, p));
    EXPECT_TRUE(CheckFeasible(inst.base, p, a).empty());
  }
}

// Vertex cover by brute force over independent sets: the complement of a
// maximum independent set is a minimum cover.
int ComplementOfIndependentSet(const Graph& g) {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.num_vertices); ++mask) {
    bool independent = true;
    for (auto [a, b] : g.edges) {
      if ((mask >> a & 1) && (mask >> b & 1)) independent = false;
    }
    if (independent) best = std::max(best, std::popcount(mask));
  }
  return g.num_vertices - best;
}

TEST(MinVertexCoverTest, Examples) {
  Graph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  EXPECT_EQ(MinVertexCover(k4).size, 3);
  Graph c6{6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}};
  EXPECT_EQ(MinVertexCover(c6).size, 3);
}

TEST(MinVertexCoverTest, CubicGraphsMatchIndependentSets) {
  for (int n : {4, 6, 8}) {
    for (const Graph& g : ConnectedCubicGraphs(n)) {
      const VertexCover vc = MinVertexCover(g);
      EXPECT_EQ(vc.size, ComplementOfIndependentSet(g));
      for (auto [a, b] : g.edges) {
        EXPECT_TRUE(std::count(vc.vertices.begin(), vc.vertices.end(), a) ||
                    std::count(vc.vertices.begin(), vc.vertices.end(), b));
      }
    }
  }
}

TEST(MinVertexCoverTest, LimitExceeded) {
  EXPECT_THROW(MinVertexCover(Graph{21, {}}), PricingError);
}

}  // namespace
}  // namespace gpricing
