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

#include <algorithm>
#include <deque>
#include <random>
#include <string>

#include "gpricing/error.h"

namespace gpricing {

namespace {

void Require(bool ok, const std::string& what) {
  if (!ok) throw PricingError(ErrorKind::kInvalidInput, what);
}

// Uniform in [lo, hi]. Modulo bias is irrelevant at these ranges, and
// unlike std::uniform_int_distribution the result is the same everywhere.
std::int64_t Draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

bool Coin(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

}  // namespace

GapInstance GenSingleGap(int n, int c) {
  Require(n >= 2, "single gap needs n >= 2");
  Require(c >= 1, "single gap needs C >= 1");
  GapInstance out;
  LSidedInstance& inst = out.instance;
  for (int i = 0; i < n; ++i) {
    inst.base.items.push_back({c});
    inst.side.push_back(Side::kLeft);
  }
  for (int k = 0; k < n * c; ++k) {
    inst.base.items.push_back({1});
    inst.side.push_back(Side::kRight);
  }
  auto v = [n, c](int i, int j) { return n + i * c + j; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < c; ++j) inst.base.customers.push_back({i, v(i, j), 1});
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < c; ++j) {
      inst.base.customers.push_back({i, v(i - 1, j), 2});
    }
  }
  out.local.assign(inst.base.items.size(), 0);
  out.optimal.assign(inst.base.items.size(), 0);
  for (int i = 0; i < n; ++i) {
    out.local[i] = 1;
    out.optimal[i] = i == 0 ? 1 : 2;
  }
  out.local_value = Money{c} * n;
  out.optimal_value = Money{2} * c * (n - 1);
  return out;
}

Graph GenHighGirthRegular(int c, int n, int girth,
                          const GirthSearch& search) {
  Require(c >= 1, "need C >= 1");
  Require(girth >= 3, "girth target must be at least 3");
  const int k = 2 * c;
  const std::int64_t moore = MooreBound(k, girth);
  if (n < moore) {
    throw PricingError(ErrorKind::kGirthNotReached,
                       "no " + std::to_string(k) + "-regular graph on " +
                           std::to_string(n) + " vertices has girth " +
                           std::to_string(girth) + " (Moore bound " +
                           std::to_string(moore) + "); best girth 0");
  }
  std::mt19937_64 rng(search.seed);
  int best = 0;
  for (int attempt = 0; attempt < search.max_attempts; ++attempt) {
    // Greedy pairing: repeatedly join the neediest vertex to a random
    // partner far enough away that no cycle shorter than `girth` closes.
    // When nothing is far enough, take the farthest simple option instead
    // so the attempt still yields a graph whose girth can be reported.
    std::vector<int> need(n, k);
    std::vector<std::vector<int>> adj(n);
    std::vector<std::uint64_t> tiebreak(n);
    for (auto& t : tiebreak) t = rng();
    bool stuck = false;
    std::vector<int> dist(n, -1);
    for (int e = 0; e < n * c && !stuck; ++e) {
      int x = -1;
      for (int y = 0; y < n; ++y) {
        if (need[y] == 0) continue;
        if (x < 0 || need[y] > need[x] ||
            (need[y] == need[x] && tiebreak[y] < tiebreak[x])) {
          x = y;
        }
      }
      std::fill(dist.begin(), dist.end(), -1);
      dist[x] = 0;
      std::deque<int> queue{x};
      while (!queue.empty()) {
        const int y = queue.front();
        queue.pop_front();
        if (dist[y] >= girth - 2) continue;
        for (int z : adj[y]) {
          if (dist[z] < 0) {
            dist[z] = dist[y] + 1;
            queue.push_back(z);
          }
        }
      }
      std::vector<int> far, fallback;
      int fallback_dist = 1;
      for (int y = 0; y < n; ++y) {
        if (y == x || need[y] == 0) continue;
        if (dist[y] < 0) {
          far.push_back(y);
        } else if (dist[y] > fallback_dist) {
          fallback_dist = dist[y];
          fallback = {y};
        } else if (dist[y] == fallback_dist && dist[y] > 1) {
          fallback.push_back(y);
        }
      }
      const std::vector<int>& pool = far.empty() ? fallback : far;
      if (pool.empty()) {
        stuck = true;
        break;
      }
      const int y = pool[Draw(rng, 0, static_cast<int>(pool.size()) - 1)];
      adj[x].push_back(y);
      adj[y].push_back(x);
      --need[x];
      --need[y];
    }
    if (stuck) continue;
    Graph g;
    g.num_vertices = n;
    for (int x = 0; x < n; ++x) {
      for (int y : adj[x]) {
        if (x < y) g.edges.emplace_back(x, y);
      }
    }
    std::sort(g.edges.begin(), g.edges.end());
    if (!IsSimple(g) || !IsRegular(g, k)) continue;
    const int got = Girth(g);
    best = std::max(best, got);
    if (got >= girth) return g;
  }
  throw PricingError(ErrorKind::kGirthNotReached,
                     "girth " + std::to_string(girth) + " not reached in " +
                         std::to_string(search.max_attempts) +
                         " attempts; best girth " + std::to_string(best));
}

std::vector<std::pair<int, int>> EulerianOrientation(const Graph& g) {
  const auto deg = g.Degrees();
  for (int x = 0; x < g.num_vertices; ++x) {
    if (deg[x] % 2 != 0) {
      throw PricingError(ErrorKind::kPrecondition,
                         "vertex " + std::to_string(x) + " has odd degree");
    }
  }
  std::vector<std::vector<int>> incident(g.num_vertices);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    incident[g.edges[e].first].push_back(e);
    if (g.edges[e].first != g.edges[e].second) {
      incident[g.edges[e].second].push_back(e);
    }
  }
  std::vector<bool> used(g.edges.size(), false);
  std::vector<size_t> next(g.num_vertices, 0);
  std::vector<std::pair<int, int>> arcs;
  for (int start = 0; start < g.num_vertices; ++start) {
    // Hierholzer: entries are (vertex, vertex we came from). Popped entries
    // form the circuit backwards.
    std::vector<std::pair<int, int>> stack{{start, -1}};
    std::vector<std::pair<int, int>> circuit;
    while (!stack.empty()) {
      const int x = stack.back().first;
      while (next[x] < incident[x].size() && used[incident[x][next[x]]]) {
        ++next[x];
      }
      if (next[x] < incident[x].size()) {
        const int e = incident[x][next[x]];
        used[e] = true;
        const auto [a, b] = g.edges[e];
        stack.emplace_back(a == x ? b : a, x);
      } else {
        if (stack.back().second >= 0) {
          circuit.emplace_back(stack.back().second, x);
        }
        stack.pop_back();
      }
    }
    arcs.insert(arcs.end(), circuit.rbegin(), circuit.rend());
  }
  return arcs;
}

MultiGapInstance GenMultiGapFromBase(int c, int t, const Graph& base) {
  Require(c >= 2, "multi gap needs C >= 2");
  Require(t >= 1, "multi gap needs t >= 1");
  if (!IsRegular(base, 2 * c)) {
    throw PricingError(ErrorKind::kPrecondition,
                       "base graph is not " + std::to_string(2 * c) +
                           "-regular");
  }
  MultiGapInstance out;
  out.base = base;
  out.arcs = EulerianOrientation(base);
  out.layers = t;
  out.layer_size = base.num_vertices;
  const int n = base.num_vertices;
  const int f = static_cast<int>(out.arcs.size());
  LSidedInstance& inst = out.instance;
  for (int i = 0; i < t * n; ++i) {
    inst.base.items.push_back({c});
    inst.side.push_back(Side::kLeft);
  }
  for (int i = 0; i < t * f; ++i) {
    inst.base.items.push_back({1});
    inst.side.push_back(Side::kRight);
  }
  auto left = [n](int i, int x) { return i * n + x; };
  auto right = [n, f, t](int i, int a) { return t * n + i * f + a; };
  for (int i = 0; i < t; ++i) {
    for (int a = 0; a < f; ++a) {
      inst.base.customers.push_back(
          {left(i, out.arcs[a].first), right(i, a), Money{c}});
    }
  }
  for (int i = 0; i + 1 < t; ++i) {
    for (int a = 0; a < f; ++a) {
      inst.base.customers.push_back(
          {left(i + 1, out.arcs[a].second), right(i, a), Money{2 * c - 1}});
    }
  }
  out.local.assign(inst.base.items.size(), 0);
  out.optimal.assign(inst.base.items.size(), 0);
  for (int u = 0; u < t * n; ++u) {
    out.local[u] = c;
    out.optimal[u] = u < n ? c : 2 * c - 1;
  }
  out.local_value = Money{c} * c * t * n;
  // With t == 1 there is no E* and the reference pricing equals the local
  // one, since L_1 only has candidate price C.
  out.optimal_value =
      t == 1 ? out.local_value : Money{2 * c - 1} * c * (t - 1) * n;
  return out;
}

MultiGapInstance GenMultiGap(int c, int rho, int t, int base_size,
                             const GirthSearch& search) {
  Require(rho >= 1, "multi gap needs rho >= 1");
  Require(t >= 1, "multi gap needs t >= 1");
  const int girth = std::max(3, rho * t + 1);
  if (base_size == 0) {
    const std::int64_t moore = MooreBound(2 * c, girth);
    Require(moore <= (1 << 20), "girth target too large for a default size");
    base_size = static_cast<int>(std::max<std::int64_t>(4 * moore, 2 * c + 1));
  }
  return GenMultiGapFromBase(c, t,
                             GenHighGirthRegular(c, base_size, girth, search));
}

LSidedInstance GenVcHardness(const Graph& g) {
  if (!IsSimple(g) || !IsRegular(g, 3)) {
    throw PricingError(ErrorKind::kInvalidInput,
                       "vertex-cover reduction needs a simple cubic graph");
  }
  const int n = g.num_vertices;
  const int m = static_cast<int>(g.edges.size());
  LSidedInstance inst;
  for (int i = 0; i < n; ++i) {
    inst.base.items.push_back({4});
    inst.side.push_back(Side::kLeft);
  }
  for (int i = 0; i < n + m; ++i) {
    inst.base.items.push_back({1});
    inst.side.push_back(Side::kRight);
  }
  for (int i = 0; i < n; ++i) inst.base.customers.push_back({i, n + i, 2});
  for (int j = 0; j < m; ++j) {
    inst.base.customers.push_back({g.edges[j].first, 2 * n + j, 1});
    inst.base.customers.push_back({g.edges[j].second, 2 * n + j, 1});
  }
  return inst;
}

Prices VcPricing(const Graph& g, const std::vector<int>& cover) {
  const int n = g.num_vertices;
  Prices p(2 * n + g.edges.size(), 0);
  for (int i = 0; i < n; ++i) p[i] = 2;
  for (int v : cover) p[v] = 1;
  return p;
}

InstanceFile GenRandom(const RandomProfile& prof) {
  Require(prof.customers >= 0, "customer count must be non-negative");
  Require(prof.capacity_min >= 0 && prof.capacity_min <= prof.capacity_max,
          "bad capacity range");
  Require(prof.budget_min >= 0 && prof.budget_min <= prof.budget_max,
          "bad budget range");
  std::mt19937_64 rng(prof.seed);
  InstanceFile out;
  PricingInstance& inst = out.instance;
  int num_items = prof.items;
  if (prof.lsided) {
    Require(prof.left >= 1 && prof.right >= 0, "need a Left item");
    num_items = prof.left + prof.right;
    std::vector<Side> side(num_items, Side::kRight);
    std::fill(side.begin(), side.begin() + prof.left, Side::kLeft);
    out.side = side;
  } else {
    Require(num_items >= 1, "need at least one item");
  }
  for (int i = 0; i < num_items; ++i) {
    Item item;
    if (!Coin(rng, prof.unbounded_prob)) {
      item.capacity = Draw(rng, prof.capacity_min, prof.capacity_max);
    }
    inst.items.push_back(item);
  }
  const bool can_pair = prof.lsided ? prof.right > 0 : num_items > 1;
  for (int e = 0; e < prof.customers; ++e) {
    Customer c;
    if (e > 0 && Coin(rng, prof.parallel_prob)) {
      const Customer& earlier = inst.customers[Draw(rng, 0, e - 1)];
      c.first = earlier.first;
      c.second = earlier.second;
    } else if (prof.lsided) {
      c.first = static_cast<int>(Draw(rng, 0, prof.left - 1));
      if (can_pair && !Coin(rng, prof.singleton_prob)) {
        c.second = prof.left + static_cast<int>(Draw(rng, 0, prof.right - 1));
      }
    } else {
      c.first = static_cast<int>(Draw(rng, 0, num_items - 1));
      if (can_pair && !Coin(rng, prof.singleton_prob)) {
        int other = static_cast<int>(Draw(rng, 0, num_items - 2));
        if (other >= c.first) ++other;
        c.second = other;
      }
    }
    c.budget = Draw(rng, prof.budget_min, prof.budget_max);
    inst.customers.push_back(c);
  }
  return out;
}

}  // namespace gpricing
