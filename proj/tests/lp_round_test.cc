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

#include "gpricing/lp_round.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "brute_force.h"
#include "gpricing/error.h"
#include "gpricing/generators.h"
#include "gpricing/local_search.h"
#include "gpricing/matching.h"
#include "gpricing/oracle.h"

namespace gpricing {
namespace {

LSidedInstance FromFile(const InstanceFile& f) {
  return {f.instance, *f.side};
}

TEST(RoundTest, SingleCustomerAlwaysSells) {
  LSidedInstance inst;
  inst.base.items = {{1}, {1}};
  inst.side = {Side::kLeft, Side::kRight};
  inst.base.customers = {{0, 1, 5}};
  const LpModel m = BuildLp(inst);
  const LpSolution lp = SolveLp(m);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RoundingResult r = RoundGeneric(inst, m, lp, seed);
    EXPECT_EQ(r.prices[0], 5);
    EXPECT_EQ(r.allocation.revenue, 5);
    EXPECT_DOUBLE_EQ(r.fractional_value, 2.5);
  }
}

TEST(RoundTest, IntegralValueCoversFractional) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 100; ++round) {
    const LSidedInstance inst = testing::RandomTinyLSided(rng);
    const LpModel m = BuildLp(inst);
    const LpSolution lp = SolveLp(m);
    for (double scale : {0.5, 0.57, 0.8, 1.0}) {
      const RoundingResult r = RoundWithScale(inst, m, lp, scale, round);
      EXPECT_TRUE(IsValidPricing(inst, r.prices));
      EXPECT_TRUE(CheckFeasible(inst.base, r.prices, r.allocation).empty());
      EXPECT_EQ(r.allocation, Val(inst, r.prices));
      EXPECT_GE(static_cast<double>(r.allocation.revenue),
                r.fractional_value - 1e-6);
    }
  }
}

TEST(RoundTest, DeterministicPerSeed) {
  std::mt19937_64 rng(5);
  const LSidedInstance inst = testing::RandomTinyLSided(rng);
  const LpModel m = BuildLp(inst);
  const LpSolution lp = SolveLp(m);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const RoundingResult a = RoundGeneric(inst, m, lp, seed);
    const RoundingResult b = RoundGeneric(inst, m, lp, seed);
    EXPECT_EQ(a.prices, b.prices);
    EXPECT_EQ(a.allocation, b.allocation);
  }
  const RoundingSummary one = RoundRepeatedly(inst, m, lp, 0.5, 7, 50, 1);
  const RoundingSummary many = RoundRepeatedly(inst, m, lp, 0.5, 7, 50, 8);
  EXPECT_EQ(one.best.prices, many.best.prices);
  EXPECT_DOUBLE_EQ(one.mean_revenue, many.mean_revenue);
}

TEST(RoundTest, PriceMarginalsFollowY) {
  // One Left item with budgets 1, 2, 3 and a hand-set y = (.2, .5, .3).
  LSidedInstance inst;
  inst.base.items = {{3}, {1}, {1}, {1}};
  inst.side = {Side::kLeft, Side::kRight, Side::kRight, Side::kRight};
  inst.base.customers = {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}};
  const LpModel m = BuildLp(inst);
  ASSERT_EQ(m.num_y(), 3);
  LpSolution lp;
  lp.values.assign(m.variables.size(), 0.0);
  const double y[] = {0.2, 0.5, 0.3};
  for (int k = 0; k < 3; ++k) lp.values[m.y_index[0] + k] = y[k];
  const int n = 20000;
  int count[3] = {0, 0, 0};
  for (int s = 0; s < n; ++s) {
    ++count[RoundGeneric(inst, m, lp, s).prices[0] - 1];
  }
  double chi2 = 0;
  for (int k = 0; k < 3; ++k) {
    const double expect = n * y[k];
    chi2 += (count[k] - expect) * (count[k] - expect) / expect;
  }
  // 99.9% quantile of chi-square with 2 degrees of freedom.
  EXPECT_LT(chi2, 13.82);
}

TEST(RoundTest, ZeroYIsNeverDrawn) {
  LSidedInstance inst;
  inst.base.items = {{3}, {1}, {1}};
  inst.side = {Side::kLeft, Side::kRight, Side::kRight};
  inst.base.customers = {{0, 1, 1}, {0, 2, 2}};
  const LpModel m = BuildLp(inst);
  LpSolution lp;
  lp.values.assign(m.variables.size(), 0.0);
  lp.values[m.y_index[0] + 1] = 1.0;
  for (int s = 0; s < 200; ++s) {
    EXPECT_EQ(RoundGeneric(inst, m, lp, s).prices[0], 2);
  }
}

TEST(RoundTest, OverloadedRightItemIsDiscarded) {
  // Two Left items at price 4 both lean on Right item 2 with capacity 1;
  // with scale 1 the load is 2 and the item drops out of the fractional sum.
  LSidedInstance inst;
  inst.base.items = {{1}, {1}, {1}};
  inst.side = {Side::kLeft, Side::kLeft, Side::kRight};
  inst.base.customers = {{0, 2, 4}, {1, 2, 4}};
  const LpModel m = BuildLp(inst);
  LpSolution lp;
  lp.values.assign(m.variables.size(), 1.0);
  const RoundingResult r = RoundWithScale(inst, m, lp, 1.0, 0);
  EXPECT_EQ(r.discarded_items, std::vector<int>{2});
  EXPECT_DOUBLE_EQ(r.fractional_value, 0.0);
  EXPECT_EQ(r.allocation.revenue, 4);
}

TEST(RoundTest, LargeCapacityPreconditions) {
  LSidedInstance inst;
  inst.base.items = {{2}, {2}};
  inst.side = {Side::kLeft, Side::kRight};
  inst.base.customers = {{0, 1, 3}, {0, 1, 3}};
  const LpModel m = BuildLp(inst);
  const LpSolution lp = SolveLp(m);
  try {
    RoundLargeCapacity(inst, m, lp, 0.2, 1);
    FAIL();
  } catch (const PricingError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPrecondition);
  }
  inst.base.customers.pop_back();
  EXPECT_THROW(RoundLargeCapacity(inst, m, lp, 0.0, 1), PricingError);
}

TEST(RoundTest, GenericMeanBeatsQuarterLp) {
  RandomProfile prof;
  prof.left = 5;
  prof.right = 5;
  prof.customers = 14;
  prof.parallel_prob = 0.3;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    prof.seed = seed;
    const LSidedInstance inst = FromFile(GenRandom(prof));
    const LpModel m = BuildLp(inst);
    const LpSolution lp = SolveLp(m);
    const RoundingSummary s = RoundRepeatedly(inst, m, lp, 0.5, 0, 400);
    const double se = s.stddev_revenue / std::sqrt(400.0);
    EXPECT_GE(s.mean_revenue, lp.objective / 4 - 3 * se);
  }
}

TEST(MinimalDepthTest, Values) {
  // (C - C^-d) / (2C - 1 - C^-d) climbs towards C / (2C - 1) > 21/41 for C
  // up to 20; at C = 21 the limit equals 21/41 so epsilon is needed.
  EXPECT_EQ(MinimalDepth(2, 0.5), 0);
  EXPECT_EQ(MinimalDepth(2, 0.6), 1);
  for (int c = 2; c <= 21; ++c) {
    const int d = MinimalDepth(c, 21.0 / 41.0 - 0.01);
    EXPECT_GE(MultiSwapGuarantee(c, d), 21.0 / 41.0 - 0.01);
    if (d > 0) EXPECT_LT(MultiSwapGuarantee(c, d - 1), 21.0 / 41.0 - 0.01);
  }
  EXPECT_THROW(MinimalDepth(2, 0.9), PricingError);
}

LSidedInstance UniformRandom(std::int64_t mu, std::uint64_t seed, int left,
                             int right, int customers) {
  RandomProfile prof;
  prof.left = left;
  prof.right = right;
  prof.customers = customers;
  prof.capacity_min = prof.capacity_max = mu;
  prof.parallel_prob = 0;
  prof.singleton_prob = 0;
  prof.seed = seed;
  LSidedInstance inst = FromFile(GenRandom(prof));
  // Drop repeated bundles so the graph is simple.
  std::vector<Customer> kept;
  for (const Customer& c : inst.base.customers) {
    bool dup = false;
    for (const Customer& k : kept) {
      dup |= k.first == c.first && k.second == c.second;
    }
    if (!dup) kept.push_back(c);
  }
  inst.base.customers = kept;
  return inst;
}

TEST(HybridTest, UnitCapacityIsOptimal) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const LSidedInstance inst = UniformRandom(1, seed, 3, 4, 8);
    const HybridResult r = HybridSolve(inst);
    EXPECT_EQ(r.path, HybridPath::kMatching);
    EXPECT_EQ(r.allocation.revenue, ExactLSided(inst).allocation.revenue)
        << WriteInstance(inst);
  }
}

TEST(HybridTest, MultiSwapPath) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const LSidedInstance inst = UniformRandom(5, seed, 3, 3, 9);
    const HybridResult r = HybridSolve(inst);
    EXPECT_EQ(r.path, HybridPath::kMultiSwap);
    EXPECT_EQ(r.capacity, 5);
    EXPECT_GE(r.guarantee, 21.0 / 41.0 - 0.01);
    EXPECT_GE(static_cast<double>(r.allocation.revenue),
              r.guarantee *
                  static_cast<double>(ExactLSided(inst).allocation.revenue));
  }
}

TEST(HybridTest, RoundingPath) {
  const LSidedInstance inst = UniformRandom(22, 3, 4, 4, 14);
  const HybridResult r = HybridSolve(inst, {.rounds = 64});
  EXPECT_EQ(r.path, HybridPath::kRounding);
  EXPECT_GE(static_cast<double>(r.allocation.revenue),
            0.516 * r.lp_objective - 1e-9);
  EXPECT_LE(static_cast<double>(r.allocation.revenue), r.lp_objective + 1e-6);
}

TEST(HybridTest, Preconditions) {
  LSidedInstance inst;
  inst.base.items = {{2}, {3}};
  inst.side = {Side::kLeft, Side::kRight};
  inst.base.customers = {{0, 1, 3}};
  EXPECT_THROW(HybridSolve(inst), PricingError);
  inst.base.items[1].capacity = 2;
  inst.base.customers.push_back({0, 1, 4});
  EXPECT_THROW(HybridSolve(inst), PricingError);
  inst.base.customers.pop_back();
  EXPECT_NO_THROW(HybridSolve(inst));
}

}  // namespace
}  // namespace gpricing
