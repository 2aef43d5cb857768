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

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <set>
#include <string>

#include "gpricing/error.h"
#include "gpricing/matching.h"
#include "gpricing/parallel.h"

namespace gpricing {

namespace {

// Product of grid sizes, or -1 once it passes `limit`.
std::int64_t GridSize(const std::vector<std::vector<Money>>& grid,
                      std::int64_t limit) {
  std::int64_t total = 1;
  for (const auto& g : grid) {
    if (g.empty()) continue;
    total *= static_cast<std::int64_t>(g.size());
    if (total > limit) return -1;
  }
  return total;
}

void Decode(const std::vector<std::vector<Money>>& grid, std::int64_t index,
            Prices& out) {
  // Item 0 is the most significant digit, so index order is lexicographic.
  for (int u = static_cast<int>(grid.size()) - 1; u >= 0; --u) {
    if (grid[u].empty()) {
      out[u] = 0;
      continue;
    }
    const auto size = static_cast<std::int64_t>(grid[u].size());
    out[u] = grid[u][index % size];
    index /= size;
  }
}

struct Best {
  std::int64_t index = -1;
  Money value = -1;
};

// Maximises score(prices) over the grid; deterministic first-max.
Best SearchGrid(const std::vector<std::vector<Money>>& grid,
                std::int64_t total, int threads,
                const std::function<Money(const Prices&)>& score) {
  threads = threads > 0 ? threads : DefaultThreads();
  const int chunks = static_cast<int>(
      std::min<std::int64_t>(total, std::max(1, threads) * 8));
  std::vector<Best> partial(chunks);
  ParallelFor(chunks, threads, [&](int k) {
    const std::int64_t lo = total * k / chunks, hi = total * (k + 1) / chunks;
    Prices p(grid.size(), 0);
    Best& best = partial[k];
    for (std::int64_t i = lo; i < hi; ++i) {
      Decode(grid, i, p);
      const Money v = score(p);
      if (v > best.value) best = {i, v};
    }
  });
  Best best;
  for (const Best& b : partial) {
    if (b.index >= 0 && b.value > best.value) best = b;
  }
  return best;
}

std::string LimitMessage(std::int64_t limit) {
  return "price grid exceeds the limit of " + std::to_string(limit);
}

}  // namespace

OracleResult ExactLSided(const LSidedInstance& instance,
                         const OracleLimits& limits) {
  const auto problems = Validate(instance);
  if (!problems.empty()) {
    throw PricingError(ErrorKind::kInvalidInput, problems.front());
  }
  const auto grid = CandidatePrices(instance);
  const std::int64_t total = GridSize(grid, limits.max_pricings);
  if (total < 0) {
    throw PricingError(ErrorKind::kLimitExceeded,
                       LimitMessage(limits.max_pricings));
  }
  const RevenueEvaluator evaluator(instance);
  const Best best = SearchGrid(grid, total, limits.threads, [&](const Prices& p) {
    return evaluator.Evaluate(p).revenue;
  });
  OracleResult out;
  out.prices.assign(grid.size(), 0);
  Decode(grid, best.index, out.prices);
  out.allocation = evaluator.Evaluate(out.prices);
  out.pricings = total;
  return out;
}

Allocation ExhaustiveAllocation(const PricingInstance& instance,
                                const Prices& prices) {
  // Only customers paying something matter; zero-payment customers are
  // left out so the witness matches the matching-based evaluator.
  struct Option {
    int id;
    int a, b;
    Money pay;
  };
  std::vector<Option> options;
  for (int e = 0; e < instance.num_customers(); ++e) {
    const Customer& c = instance.customers[e];
    const Money pay =
        prices[c.first] + (c.IsSingleton() ? 0 : prices[c.second]);
    if (pay > 0 && pay <= c.budget) {
      options.push_back({e, c.first, c.second, pay});
    }
  }
  std::vector<Money> suffix(options.size() + 1, 0);
  for (int k = static_cast<int>(options.size()) - 1; k >= 0; --k) {
    suffix[k] = suffix[k + 1] + options[k].pay;
  }
  const auto cap = EffectiveCapacities(instance);
  std::vector<std::int64_t> left(cap.begin(), cap.end());
  std::vector<int> chosen, best_set;
  Money best = 0;
  std::function<void(size_t, Money)> dfs = [&](size_t k, Money value) {
    if (value > best) {
      best = value;
      best_set = chosen;
    }
    if (k == options.size() || value + suffix[k] <= best) return;
    const Option& o = options[k];
    if (left[o.a] > 0 && (o.b == kNoItem || left[o.b] > 0)) {
      --left[o.a];
      if (o.b != kNoItem) --left[o.b];
      chosen.push_back(o.id);
      dfs(k + 1, value + o.pay);
      chosen.pop_back();
      ++left[o.a];
      if (o.b != kNoItem) ++left[o.b];
    }
    dfs(k + 1, value);
  };
  dfs(0, 0);
  return {best_set, best};
}

FullOracleResult ExactFull(const PricingInstance& instance,
                           const OracleLimits& limits) {
  const auto problems = Validate(instance);
  if (!problems.empty()) {
    throw PricingError(ErrorKind::kInvalidInput, problems.front());
  }
  const int n = instance.num_items();
  std::vector<std::set<Money>> budgets(n);
  for (const Customer& c : instance.customers) {
    budgets[c.first].insert(c.budget);
    if (!c.IsSingleton()) budgets[c.second].insert(c.budget);
  }
  std::vector<std::vector<Money>> grid(n);
  for (int u = 0; u < n; ++u) {
    const Money top = budgets[u].empty() ? 0 : *budgets[u].rbegin();
    for (Money q = 0; q <= top; ++q) {
      grid[u].push_back(q);
      if (static_cast<std::int64_t>(grid[u].size()) > limits.max_pricings) {
        break;
      }
    }
  }
  FullOracleResult out;
  std::int64_t total = GridSize(grid, limits.max_pricings);
  out.full_integer_grid = total >= 0;
  if (!out.full_integer_grid) {
    Money max_budget = 0;
    for (const Customer& c : instance.customers) {
      max_budget = std::max(max_budget, c.budget);
    }
    for (int u = 0; u < n; ++u) {
      std::set<Money> closed(budgets[u].begin(), budgets[u].end());
      closed.insert(0);
      for (const Customer& c : instance.customers) {
        if (c.IsSingleton() || !c.Contains(u)) continue;
        const int partner = c.first == u ? c.second : c.first;
        for (Money q : budgets[partner]) {
          if (c.budget - q >= 0 && c.budget - q <= max_budget) {
            closed.insert(c.budget - q);
          }
        }
      }
      grid[u].assign(closed.begin(), closed.end());
    }
    total = GridSize(grid, limits.max_pricings);
    if (total < 0) {
      throw PricingError(ErrorKind::kLimitExceeded,
                         LimitMessage(limits.max_pricings));
    }
  }
  const Best best = SearchGrid(grid, total, limits.threads, [&](const Prices& p) {
    return ExhaustiveAllocation(instance, p).revenue;
  });
  out.prices.assign(n, 0);
  Decode(grid, best.index, out.prices);
  out.allocation = ExhaustiveAllocation(instance, out.prices);
  out.pricings = total;
  return out;
}

VertexCover MinVertexCover(const Graph& g) {
  const int n = g.num_vertices;
  if (n > 20) {
    throw PricingError(ErrorKind::kLimitExceeded,
                       "vertex cover oracle handles at most 20 vertices");
  }
  std::optional<std::uint32_t> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (best && std::popcount(mask) >= std::popcount(*best)) continue;
    bool covers = true;
    for (auto [a, b] : g.edges) {
      if (!(mask >> a & 1) && !(mask >> b & 1)) {
        covers = false;
        break;
      }
    }
    if (covers) best = mask;
  }
  VertexCover out;
  for (int v = 0; v < n; ++v) {
    if (*best >> v & 1) out.vertices.push_back(v);
  }
  out.size = static_cast<int>(out.vertices.size());
  return out;
}

}  // namespace gpricing
