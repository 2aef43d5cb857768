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

#include "gpricing/generators.h"

#include <gtest/gtest.h>

#include <map>

#include "brute_force.h"
#include "gpricing/error.h"
#include "gpricing/local_search.h"
#include "gpricing/matching.h"
#include "gpricing/oracle.h"

namespace gpricing {
namespace {

TEST(SingleGapTest, Shape) {
  const GapInstance g = GenSingleGap(4, 2);
  int left = 0, right = 0;
  for (Side s : g.instance.side) (s == Side::kLeft ? left : right)++;
  EXPECT_EQ(left, 4);
  EXPECT_EQ(right, 8);
  EXPECT_TRUE(Validate(g.instance).empty());
  EXPECT_TRUE(IsValidPricing(g.instance, g.local));
  EXPECT_TRUE(IsValidPricing(g.instance, g.optimal));
}

TEST(SingleGapTest, ReferenceValues) {
  for (auto [n, c] : {std::pair{2, 1}, {3, 1}, {4, 2}, {10, 3}, {6, 4}}) {
    const GapInstance g = GenSingleGap(n, c);
    EXPECT_EQ(Val(g.instance, g.local).revenue, Money{c} * n);
    EXPECT_EQ(Val(g.instance, g.optimal).revenue, Money{2} * c * (n - 1));
    EXPECT_EQ(g.local_value, Money{c} * n);
    EXPECT_EQ(g.optimal_value, Money{2} * c * (n - 1));
  }
}

TEST(SingleGapTest, TinyCasesMatchBruteForce) {
  for (auto [n, c] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    const GapInstance g = GenSingleGap(n, c);
    EXPECT_EQ(testing::BruteForceRevenue(g.instance.base, g.local),
              g.local_value);
    EXPECT_EQ(testing::BruteForceLSided(g.instance),
              std::max(g.optimal_value, g.local_value));
  }
}

TEST(SingleGapTest, LocalPricingIsSingleSwapOptimal) {
  for (auto [n, c] : {std::pair{2, 1}, {4, 2}, {10, 3}}) {
    const GapInstance g = GenSingleGap(n, c);
    const RevenueEvaluator eval(g.instance);
    EXPECT_FALSE(BestImprovementStep(eval, g.local, 1).has_value());
  }
}

TEST(HighGirthTest, TrivialTarget) {
  const Graph g = GenHighGirthRegular(2, 12, 3);
  EXPECT_TRUE(IsSimple(g));
  EXPECT_TRUE(IsRegular(g, 4));
}

TEST(HighGirthTest, ReachesModerateGirth) {
  for (int girth : {4, 5, 6}) {
    const Graph g = GenHighGirthRegular(2, 120, girth, {.seed = 3});
    EXPECT_TRUE(IsSimple(g));
    EXPECT_TRUE(IsRegular(g, 4));
    EXPECT_GE(Girth(g), girth);
  }
  const Graph g = GenHighGirthRegular(3, 200, 5, {.seed = 9});
  EXPECT_TRUE(IsRegular(g, 6));
  EXPECT_GE(Girth(g), 5);
}

TEST(HighGirthTest, BelowMooreBoundFails) {
  try {
    GenHighGirthRegular(2, 50, 7);  // needs 53 vertices
    FAIL() << "expected GirthNotReached";
  } catch (const PricingError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kGirthNotReached);
    EXPECT_NE(std::string(e.what()).find("best girth"), std::string::npos);
  }
}

TEST(HighGirthTest, Deterministic) {
  const Graph a = GenHighGirthRegular(2, 60, 5, {.seed = 4});
  const Graph b = GenHighGirthRegular(2, 60, 5, {.seed = 4});
  EXPECT_EQ(a.edges, b.edges);
}

TEST(EulerianOrientationTest, BalancesDegrees) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = GenHighGirthRegular(2, 30, 3, {.seed = seed});
    const auto arcs = EulerianOrientation(g);
    ASSERT_EQ(arcs.size(), g.edges.size());
    std::vector<int> in(g.num_vertices, 0), out(g.num_vertices, 0);
    std::map<std::pair<int, int>, int> count;
    for (auto [a, b] : arcs) {
      ++out[a];
      ++in[b];
      ++count[std::minmax(a, b)];
    }
    for (int x = 0; x < g.num_vertices; ++x) {
      EXPECT_EQ(in[x], 2);
      EXPECT_EQ(out[x], 2);
    }
    for (auto [a, b] : g.edges) EXPECT_EQ(count[std::minmax(a, b)], 1);
  }
}

TEST(EulerianOrientationTest, OddDegreeRejected) {
  EXPECT_THROW(EulerianOrientation(Graph{2, {{0, 1}}}), PricingError);
}

TEST(MultiGapTest, LayerShapeAndValues) {
  const Graph base = GenHighGirthRegular(2, 12, 4, {.seed = 2});
  for (int t : {1, 2, 4}) {
    const MultiGapInstance g = GenMultiGapFromBase(2, t, base);
    EXPECT_TRUE(Validate(g.instance).empty());
    int left = 0, right = 0;
    for (Side s : g.instance.side) (s == Side::kLeft ? left : right)++;
    EXPECT_EQ(left, t * 12);
    EXPECT_EQ(right, 2 * left);
    EXPECT_EQ(Val(g.instance, g.local).revenue, Money{4} * left);
    EXPECT_EQ(Val(g.instance, g.optimal).revenue,
              t == 1 ? Money{4} * left : Money{3} * 2 * (left - 12));
    EXPECT_EQ(Val(g.instance, g.optimal).revenue, g.optimal_value);
    EXPECT_EQ(g.local_value, Money{4} * left);
    // (C, 1)-biregular between L_i and R_i; every R item has degree <= 2.
    const auto deg = ItemDegrees(g.instance.base);
    for (int u = 0; u < left; ++u) {
      EXPECT_EQ(deg[u], u < 12 ? 2 : 4);
    }
  }
}

TEST(MultiGapTest, GirthDoublesBaseGirth) {
  const Graph base = GenHighGirthRegular(2, 40, 5, {.seed = 6});
  const MultiGapInstance g = GenMultiGapFromBase(2, 3, base);
  EXPECT_GE(Girth(ItemGraph(g.instance.base)), 2 * Girth(base));
}

TEST(MultiGapTest, LocalPricingIsSwapOptimalForSmallRadius) {
  // rho * t = 2 needs base girth >= 3, which any simple graph has.
  const MultiGapInstance g = GenMultiGap(2, 1, 2, 8, {.seed = 1});
  const RevenueEvaluator eval(g.instance);
  EXPECT_FALSE(BestImprovementStep(eval, g.local, 1).has_value());
  const MultiGapInstance h = GenMultiGapFromBase(
      2, 2, GenHighGirthRegular(2, 30, 5, {.seed = 8}));
  EXPECT_FALSE(BestImprovementStep(RevenueEvaluator(h.instance), h.local, 2)
                   .has_value());
}

TEST(VcHardnessTest, K4Counts) {
  Graph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  const LSidedInstance inst = GenVcHardness(k4);
  int left = 0, right = 0;
  for (Side s : inst.side) (s == Side::kLeft ? left : right)++;
  EXPECT_EQ(left, 4);
  EXPECT_EQ(right, 10);
  int node = 0, edge = 0;
  for (const Customer& c : inst.base.customers) {
    if (c.budget == 2) ++node;
    if (c.budget == 1) ++edge;
  }
  EXPECT_EQ(node, 4);
  EXPECT_EQ(edge, 12);
  EXPECT_EQ(ExactLSided(inst).allocation.revenue, 11);
}

TEST(VcHardnessTest, CoverPricingRevenue) {
  for (int n : {4, 6, 8}) {
    for (const Graph& g : ConnectedCubicGraphs(n)) {
      const LSidedInstance inst = GenVcHardness(g);
      const int m = static_cast<int>(g.edges.size());
      const VertexCover vc = MinVertexCover(g);
      EXPECT_EQ(Val(inst, VcPricing(g, vc.vertices)).revenue,
                m + 2 * n - vc.size);
      std::vector<int> all(n);
      for (int v = 0; v < n; ++v) all[v] = v;
      EXPECT_EQ(Val(inst, VcPricing(g, all)).revenue, m + n);
    }
  }
}

TEST(VcHardnessTest, RejectsNonCubic) {
  EXPECT_THROW(GenVcHardness(Graph{3, {{0, 1}, {1, 2}, {2, 0}}}),
               PricingError);
}

TEST(RandomTest, SeedReproducible) {
  RandomProfile prof;
  prof.seed = 42;
  prof.customers = 30;
  const std::string a = WriteInstance(GenRandom(prof).lsided());
  const std::string b = WriteInstance(GenRandom(prof).lsided());
  EXPECT_EQ(a, b);
  prof.seed = 43;
  EXPECT_NE(a, WriteInstance(GenRandom(prof).lsided()));
}

TEST(RandomTest, ProfilesValidate) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    RandomProfile prof;
    prof.seed = seed;
    prof.unbounded_prob = 0.2;
    prof.parallel_prob = 0.3;
    EXPECT_TRUE(Validate(GenRandom(prof).lsided()).empty());
    prof.lsided = false;
    EXPECT_TRUE(Validate(GenRandom(prof).instance).empty());
  }
  RandomProfile empty;
  empty.customers = 0;
  const InstanceFile f = GenRandom(empty);
  EXPECT_TRUE(f.instance.customers.empty());
  EXPECT_TRUE(Validate(f.lsided()).empty());
}

}  // namespace
}  // namespace gpricing
