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

#include "gpricing/ball_cover.h"

#include <algorithm>
#include <deque>
#include <limits>

#include "gpricing/error.h"

namespace gpricing {

Digraph::Digraph(int num_vertices)
    : out_(num_vertices),
      in_(num_vertices),
      in_degree_(num_vertices, 0),
      out_degree_(num_vertices, 0) {}

void Digraph::AddArc(int from, int to) {
  arcs_.emplace_back(from, to);
  ++out_degree_[from];
  ++in_degree_[to];
  auto insert = [](std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
  };
  insert(out_[from], to);
  insert(in_[to], from);
}

int Digraph::max_in_degree() const {
  return in_degree_.empty()
             ? 0
             : *std::max_element(in_degree_.begin(), in_degree_.end());
}

namespace {

std::vector<std::pair<int, int>> Bfs(const Digraph& h, int source, int radius,
                                     bool reverse) {
  std::vector<int> dist(h.num_vertices(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  std::vector<std::pair<int, int>> out;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    out.emplace_back(v, dist[v]);
    if (dist[v] == radius) continue;
    for (int w : reverse ? h.predecessors(v) : h.successors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<int> DirectedBall(const Digraph& h, int u, int r) {
  std::vector<int> out;
  for (auto [v, dist] : Bfs(h, u, r, false)) out.push_back(v);
  return out;
}

std::vector<int> BallBoundary(const Digraph& h, int u, int r) {
  std::vector<int> out;
  for (auto [v, dist] : Bfs(h, u, r, false)) {
    if (dist == r) out.push_back(v);
  }
  return out;
}

TruncatedDistances::TruncatedDistances(const Digraph& h, int radius,
                                       bool reverse)
    : radius_(radius), reach_(h.num_vertices()) {
  for (int s = 0; s < h.num_vertices(); ++s) {
    reach_[s] = Bfs(h, s, radius, reverse);
  }
}

int TruncatedDistances::Distance(int source, int target) const {
  const auto& r = reach_[source];
  auto it = std::lower_bound(r.begin(), r.end(), std::make_pair(target, -1));
  return (it != r.end() && it->first == target) ? it->second : -1;
}

std::int64_t IntPow(std::int64_t base, int exponent) {
  std::int64_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && out > std::numeric_limits<std::int64_t>::max() / base) {
      throw PricingError(ErrorKind::kInvalidInput, "power overflows int64");
    }
    out *= base;
  }
  return out;
}

std::int64_t GeometricSum(std::int64_t c, int d) {
  std::int64_t sum = 0;
  for (int i = 0; i <= d; ++i) sum += IntPow(c, i);
  return sum;
}

TauWeighting ComputeTau(const Digraph& h, int c, int d) {
  if (c < 1 || d < 0) {
    throw PricingError(ErrorKind::kInvalidInput, "need c >= 1 and d >= 0");
  }
  for (int v = 0; v < h.num_vertices(); ++v) {
    if (h.in_degree(v) > c) {
      throw PricingError(ErrorKind::kPrecondition,
                         "vertex " + std::to_string(v) + " has indegree " +
                             std::to_string(h.in_degree(v)) + " above C = " +
                             std::to_string(c));
    }
  }
  const int n = h.num_vertices();
  // into[u] lists (v, dist(v, u)) for dist <= d.
  const TruncatedDistances into(h, d, /*reverse=*/true);
  TauWeighting w{c, d, std::vector<std::vector<std::int64_t>>(
                           n, std::vector<std::int64_t>(d + 1, 0))};
  for (int u = 0; u < n; ++u) w.tau[u][d] = 1;
  for (int i = d - 1; i >= 0; --i) {
    for (int u = 0; u < n; ++u) {
      std::int64_t sum = 0;
      for (auto [v, dist] : into.from(u)) {
        const int j = i + dist;
        if (dist >= 1 && j <= d) sum += w.tau[v][j];
      }
      w.tau[u][i] = IntPow(c, d - i) - sum;
    }
  }
  return w;
}

CoverReport VerifyCover(const Digraph& h, const TauWeighting& tau) {
  CoverReport report;
  const int n = h.num_vertices();
  const int c = tau.c;
  const int d = tau.d;
  auto fail = [&report](const std::string& s) {
    report.violations.push_back(s);
  };
  if (static_cast<int>(tau.tau.size()) != n) {
    fail("weighting covers " + std::to_string(tau.tau.size()) +
         " vertices, graph has " + std::to_string(n));
    return report;
  }
  const std::int64_t rho = GeometricSum(c, d);
  const std::int64_t c_pow_d = IntPow(c, d);

  for (int u = 0; u < n; ++u) {
    for (int r = 0; r <= d; ++r) {
      const std::int64_t t = tau(u, r);
      if (t < 0 || t > IntPow(c, d - r)) {
        fail("tau(" + std::to_string(u) + "," + std::to_string(r) + ") = " +
             std::to_string(t) + " outside [0, C^(d-r)]");
      }
    }
    if (tau(u, d) != 1) fail("tau(" + std::to_string(u) + ",d) != 1");
  }

  std::vector<std::int64_t> member(n, 0), boundary(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int r = 0; r <= d; ++r) {
      for (int v : DirectedBall(h, u, r)) member[v] += tau(u, r);
      for (int v : BallBoundary(h, u, r)) boundary[v] += tau(u, r);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (member[v] != rho) {
      fail("vertex " + std::to_string(v) + ": ball weight " +
           std::to_string(member[v]) + " != " + std::to_string(rho));
    }
    if (boundary[v] != c_pow_d) {
      fail("vertex " + std::to_string(v) + ": boundary weight " +
           std::to_string(boundary[v]) + " != " + std::to_string(c_pow_d));
    }
  }

  // sum_{j>=i} sum_{v : dist(v,u) = j-i} tau(v, j) = C^(d-i).
  const TruncatedDistances from(h, d);
  std::vector<std::vector<std::int64_t>> shifted(
      n, std::vector<std::int64_t>(d + 1, 0));
  for (int v = 0; v < n; ++v) {
    for (auto [u, dist] : from.from(v)) {
      for (int j = dist; j <= d; ++j) shifted[u][j - dist] += tau(v, j);
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int i = 0; i <= d; ++i) {
      if (shifted[u][i] != IntPow(c, d - i)) {
        fail("vertex " + std::to_string(u) + " level " + std::to_string(i) +
             ": shifted sum " + std::to_string(shifted[u][i]) +
             " != C^(d-i)");
      }
    }
  }
  return report;
}

}  // namespace gpricing
