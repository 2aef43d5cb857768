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

#ifndef GPRICING_GRAPH_H_
#define GPRICING_GRAPH_H_

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "gpricing/instance.h"

namespace gpricing {

// Undirected multigraph on vertices 0..n-1, stored as an edge list.
struct Graph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<std::vector<int>> Adjacency() const;
  std::vector<int> Degrees() const;
};

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

// Shortest cycle length; loops count 1 and parallel edges 2. kInfiniteGirth
// for forests.
int Girth(const Graph& g);

bool IsSimple(const Graph& g);
bool IsRegular(const Graph& g, int degree);
bool IsConnected(const Graph& g);

// Smallest vertex count a k-regular graph of girth >= g can have.
std::int64_t MooreBound(int k, int g);

// The item/customer graph of an instance (singletons dropped).
Graph ItemGraph(const PricingInstance& instance);

// All connected simple cubic graphs on n in {4, 6, 8} vertices, one per
// isomorphism class (1, 2 and 5 of them).
std::vector<Graph> ConnectedCubicGraphs(int n);

// Exhaustive isomorphism test; only sensible for tiny graphs.
bool Isomorphic(const Graph& a, const Graph& b);

}  // namespace gpricing

#endif  // GPRICING_GRAPH_H_
