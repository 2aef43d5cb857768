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

#include "gpricing/graph.h"

#include <gtest/gtest.h>

#include <random>

namespace gpricing {
namespace {

Graph Cycle(int n) {
  Graph g{n, {}};
  for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
  return g;
}

Graph Complete(int n) {
  Graph g{n, {}};
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) g.edges.emplace_back(a, b);
  }
  return g;
}

// Shortest cycle by trying every edge: remove it and BFS between its ends.
int EdgeRemovalGirth(const Graph& g) {
  int best = kInfiniteGirth;
  for (size_t skip = 0; skip < g.edges.size(); ++skip) {
    std::vector<std::vector<int>> adj(g.num_vertices);
    for (size_t e = 0; e < g.edges.size(); ++e) {
      if (e == skip) continue;
      adj[g.edges[e].first].push_back(g.edges[e].second);
      adj[g.edges[e].second].push_back(g.edges[e].first);
    }
    const auto [s, t] = g.edges[skip];
    std::vector<int> dist(g.num_vertices, -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (size_t q = 0; q < queue.size(); ++q) {
      for (int y : adj[queue[q]]) {
        if (dist[y] < 0) {
          dist[y] = dist[queue[q]] + 1;
          queue.push_back(y);
        }
      }
    }
    if (dist[t] >= 0) best = std::min(best, dist[t] + 1);
  }
  return best;
}

TEST(GirthTest, Basics) {
  EXPECT_EQ(Girth(Cycle(3)), 3);
  EXPECT_EQ(Girth(Cycle(7)), 7);
  EXPECT_EQ(Girth(Complete(4)), 3);
  EXPECT_EQ(Girth(Graph{3, {{0, 1}, {1, 2}}}), kInfiniteGirth);
  EXPECT_EQ(Girth(Graph{2, {{0, 1}, {1, 0}}}), 2);
  EXPECT_EQ(Girth(Graph{1, {{0, 0}}}), 1);
}

TEST(GirthTest, MatchesEdgeRemovalOracle) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 300; ++round) {
    const int n = 2 + static_cast<int>(rng() % 10);
    Graph g{n, {}};
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (rng() % 4 == 0) g.edges.emplace_back(a, b);
      }
    }
    EXPECT_EQ(Girth(g), EdgeRemovalGirth(g)) << "round " << round;
  }
}

TEST(MooreBoundTest, KnownValues) {
  EXPECT_EQ(MooreBound(3, 5), 10);   // Petersen
  EXPECT_EQ(MooreBound(3, 6), 14);   // Heawood
  EXPECT_EQ(MooreBound(4, 3), 5);    // K5
  EXPECT_EQ(MooreBound(4, 4), 8);    // K4,4
  EXPECT_EQ(MooreBound(4, 13), 1457);
  EXPECT_EQ(MooreBound(4, 7), 53);
}

TEST(CubicCatalogueTest, KnownCounts) {
  const int expected[] = {1, 2, 5};
  for (int n : {4, 6, 8}) {
    const auto graphs = ConnectedCubicGraphs(n);
    EXPECT_EQ(static_cast<int>(graphs.size()), expected[n / 2 - 2]) << n;
    for (size_t i = 0; i < graphs.size(); ++i) {
      EXPECT_TRUE(IsSimple(graphs[i]));
      EXPECT_TRUE(IsRegular(graphs[i], 3));
      EXPECT_TRUE(IsConnected(graphs[i]));
      for (size_t j = 0; j < i; ++j) {
        EXPECT_FALSE(Isomorphic(graphs[i], graphs[j]));
      }
    }
  }
  EXPECT_TRUE(Isomorphic(ConnectedCubicGraphs(4)[0], Complete(4)));
}

TEST(IsomorphicTest, RelabelledCycle) {
  Graph a = Cycle(6);
  Graph b{6, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5}, {5, 0}}};
  EXPECT_TRUE(Isomorphic(a, b));
  Graph two_triangles{6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}};
  EXPECT_FALSE(Isomorphic(a, two_triangles));
}

}  // namespace
}  // namespace gpricing
