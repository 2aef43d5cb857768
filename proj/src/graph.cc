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

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "gpricing/error.h"

namespace gpricing {

std::vector<std::vector<int>> Graph::Adjacency() const {
  std::vector<std::vector<int>> adj(num_vertices);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    if (a != b) adj[b].push_back(a);
  }
  return adj;
}

std::vector<int> Graph::Degrees() const {
  std::vector<int> deg(num_vertices, 0);
  for (auto [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

int Girth(const Graph& g) {
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : g.edges) {
    if (a == b) return 1;
    if (!seen.insert(std::minmax(a, b)).second) return 2;
  }
  // Simple graph: BFS from every vertex; a non-tree edge (x, y) closes a
  // walk of length dist[x] + dist[y] + 1 which contains a cycle at most that
  // long, and the minimum over all roots is exact.
  const auto adj = g.Adjacency();
  int best = kInfiniteGirth;
  std::vector<int> dist(g.num_vertices), parent(g.num_vertices);
  for (int s = 0; s < g.num_vertices; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      if (best != kInfiniteGirth && 2 * dist[x] >= best) break;
      for (int y : adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (y != parent[x]) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  return best;
}

bool IsSimple(const Graph& g) {
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : g.edges) {
    if (a == b || !seen.insert(std::minmax(a, b)).second) return false;
  }
  return true;
}

bool IsRegular(const Graph& g, int degree) {
  const auto deg = g.Degrees();
  return std::all_of(deg.begin(), deg.end(),
                     [degree](int d) { return d == degree; });
}

bool IsConnected(const Graph& g) {
  if (g.num_vertices == 0) return true;
  const auto adj = g.Adjacency();
  std::vector<bool> seen(g.num_vertices, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == g.num_vertices;
}

std::int64_t MooreBound(int k, int g) {
  if (g <= 2) return 1;
  // Count the vertices forced within distance floor((g-1)/2) of a vertex
  // (odd g) or of an edge (even g).
  std::int64_t total = 0, layer = 1;
  const int r = (g - 1) / 2;
  if (g % 2 == 1) {
    total = 1;
    layer = k;
    for (int i = 1; i <= r; ++i) {
      total += layer;
      layer *= (k - 1);
      if (total > (std::int64_t{1} << 50)) return total;
    }
  } else {
    layer = 1;
    for (int i = 0; i < g / 2; ++i) {
      total += 2 * layer;
      layer *= (k - 1);
      if (total > (std::int64_t{1} << 50)) return total;
    }
  }
  return total;
}

Graph ItemGraph(const PricingInstance& instance) {
  Graph g;
  g.num_vertices = instance.num_items();
  for (const Customer& c : instance.customers) {
    if (!c.IsSingleton()) g.edges.emplace_back(c.first, c.second);
  }
  return g;
}

bool Isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices != b.num_vertices || a.edges.size() != b.edges.size()) {
    return false;
  }
  const int n = a.num_vertices;
  auto matrix = [n](const Graph& g) {
    std::vector<int> m(n * n, 0);
    for (auto [x, y] : g.edges) {
      ++m[x * n + y];
      if (x != y) ++m[y * n + x];
    }
    return m;
  };
  auto da = a.Degrees(), db = b.Degrees();
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  const auto ma = matrix(a), mb = matrix(b);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (da[x] != db[perm[x]]) ok = false;
      for (int y = 0; y < n && ok; ++y) {
        if (ma[x * n + y] != mb[perm[x] * n + perm[y]]) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<Graph> ConnectedCubicGraphs(int n) {
  if (n != 4 && n != 6 && n != 8) {
    throw PricingError(ErrorKind::kInvalidInput,
                       "cubic catalogue covers 4, 6 and 8 vertices");
  }
  // Every connected cubic graph on at most 8 vertices is Hamiltonian (the
  // smallest bridged one has 10 vertices), so each is an n-cycle plus a
  // perfect matching of chords. Enumerate the chord matchings and keep one
  // graph per isomorphism class, in discovery order.
  std::vector<Graph> classes;
  std::vector<int> partner(n, -1);
  std::function<void()> extend = [&]() {
    int x = 0;
    while (x < n && partner[x] >= 0) ++x;
    if (x == n) {
      Graph g;
      g.num_vertices = n;
      for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
      for (int i = 0; i < n; ++i) {
        if (i < partner[i]) g.edges.emplace_back(i, partner[i]);
      }
      if (!IsSimple(g)) return;
      for (const Graph& h : classes) {
        if (Isomorphic(g, h)) return;
      }
      classes.push_back(std::move(g));
      return;
    }
    for (int y = x + 1; y < n; ++y) {
      if (partner[y] >= 0) continue;
      partner[x] = y;
      partner[y] = x;
      extend();
      partner[x] = partner[y] = -1;
    }
  };
  extend();
  return classes;
}

}  // namespace gpricing
