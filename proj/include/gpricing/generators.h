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

// Instance families: locality-gap constructions for single and multi swap,
// the vertex-cover reduction, and seeded random instances.

#ifndef GPRICING_GENERATORS_H_
#define GPRICING_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gpricing/graph.h"
#include "gpricing/instance.h"

namespace gpricing {

// An instance with a locally optimal pricing and a better reference one.
struct GapInstance {
  LSidedInstance instance;
  Prices local;
  Prices optimal;
  Money local_value = 0;    // val(local), by construction
  Money optimal_value = 0;  // val(optimal), by construction
};

// Paths u_1 v_{1,j} u_2 v_{2,j} ... u_n v_{n,j} for j < C. Items: u_i is
// i - 1, v_{i,j} is n + (i - 1) * C + j. Edges u_i v_{i,j} have budget 1,
// edges u_{i+1} v_{i,j} budget 2. The local pricing is all ones; the
// reference pricing is 2 except on u_1, whose only candidate price is 1.
GapInstance GenSingleGap(int n, int c);

// Random simple (2c)-regular graph on n vertices with girth >= girth.
// Throws PricingError(kGirthNotReached) when n is below the Moore bound or
// no attempt reaches the target; the message carries the best girth seen.
struct GirthSearch {
  std::uint64_t seed = 1;
  int max_attempts = 200;
};
Graph GenHighGirthRegular(int c, int n, int girth,
                          const GirthSearch& search = {});

// Orients every edge along an Euler circuit of its component, so a graph
// with all degrees even gets indegree == outdegree everywhere. Arcs come
// out in traversal order. Throws kPrecondition on an odd degree.
std::vector<std::pair<int, int>> EulerianOrientation(const Graph& g);

struct MultiGapInstance : GapInstance {
  Graph base;                              // the (2C)-regular graph H
  std::vector<std::pair<int, int>> arcs;   // its Eulerian orientation
  int layers = 0;                          // t
  int layer_size = 0;                      // |L_i| = |V(H)|
};

// Layered graph L_1 R_1 ... L_t R_t over the oriented base graph. For an arc
// a = (x -> y) and layer i, R_i[a] joins L_i[x] at budget C and, below the
// last layer, L_{i+1}[y] at budget 2C - 1. Items: L_i[x] is i*n + x, R_i[a]
// is t*n + i*|arcs| + a. Capacities are C on L and 1 on R. Local pricing is
// C everywhere; reference pricing is 2C - 1 except on L_1, where only C is a
// candidate.
MultiGapInstance GenMultiGapFromBase(int c, int t, const Graph& base);

// Samples the base graph with girth > rho * t; base_size 0 picks four
// times the Moore bound.
MultiGapInstance GenMultiGap(int c, int rho, int t, int base_size = 0,
                             const GirthSearch& search = {});

// Vertex-cover reduction on a simple cubic graph G = (V, E), n = |V|,
// m = |E|. Items: l_i = i (Left, capacity 4), r_i = n + i and d_j = 2n + j
// (Right, capacity 1). Customers: (l_i, r_i) with budget 2 for each vertex,
// then (l_a, d_j) and (l_b, d_j) with budget 1 for each edge j = ab.
LSidedInstance GenVcHardness(const Graph& g);

// Price 1 on the cover, 2 elsewhere; revenue m + 2n - |cover| when `cover`
// is a vertex cover.
Prices VcPricing(const Graph& g, const std::vector<int>& cover);

struct RandomProfile {
  bool lsided = true;
  int left = 3;    // L-sided: Left item count
  int right = 4;   // L-sided: Right item count
  int items = 6;   // general instances
  int customers = 8;
  std::int64_t capacity_min = 1;
  std::int64_t capacity_max = 3;
  Money budget_min = 1;
  Money budget_max = 10;
  double unbounded_prob = 0.0;
  double singleton_prob = 0.1;
  double parallel_prob = 0.1;  // reuse the bundle of an earlier customer
  std::uint64_t seed = 1;
};

// Reproducible for a given profile on every platform: draws come straight
// from mt19937_64 without the library distributions.
InstanceFile GenRandom(const RandomProfile& profile);

}  // namespace gpricing

#endif  // GPRICING_GENERATORS_H_
