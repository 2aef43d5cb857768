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

#include "gpricing/local_search.h"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "gpricing/ball_cover.h"
#include "gpricing/error.h"
#include "gpricing/parallel.h"

namespace gpricing {

bool Move::KeyLess(const Move& other) const {
  if (items != other.items) return items < other.items;
  return prices < other.prices;
}

int SwapRadius(int c, int d) {
  const std::int64_t rho = GeometricSum(c, d);
  if (rho > (1 << 30)) {
    throw PricingError(ErrorKind::kInvalidInput, "swap radius too large");
  }
  return static_cast<int>(rho);
}

double MultiSwapGuarantee(int c, int d) {
  const double x = std::pow(static_cast<double>(c), -d);
  return (c - x) / (2.0 * c - 1.0 - x);
}

Prices GreedyInitialPricing(const LSidedInstance& instance) {
  const auto candidates = CandidatePrices(instance);
  const auto cap = EffectiveCapacities(instance.base);
  std::vector<std::vector<Money>> budgets(instance.base.items.size());
  for (const Customer& c : instance.base.customers) {
    budgets[LeftItem(instance, c)].push_back(c.budget);
  }
  Prices p(instance.base.items.size(), 0);
  for (int u = 0; u < instance.base.num_items(); ++u) {
    if (!instance.IsLeft(u)) continue;
    Money best_value = -1;
    for (Money q : candidates[u]) {
      const auto buyers = std::count_if(budgets[u].begin(), budgets[u].end(),
                                        [q](Money b) { return b >= q; });
      const Money value = q * std::min<std::int64_t>(cap[u], buyers);
      if (value > best_value) {
        best_value = value;
        p[u] = q;
      }
    }
  }
  return p;
}

namespace {

std::vector<int> MovableItems(const std::vector<std::vector<Money>>& cand) {
  std::vector<int> movable;
  for (int u = 0; u < static_cast<int>(cand.size()); ++u) {
    if (cand[u].size() >= 2) movable.push_back(u);
  }
  return movable;
}

// Depth-first enumeration of subsets (ascending item order) extending the
// current one with items movable[k..], each with every alternative price.
class NeighborWalker {
 public:
  NeighborWalker(const std::vector<std::vector<Money>>& cand,
                 const std::vector<int>& movable, const Prices& base,
                 int radius, const NeighborVisitor& visit)
      : cand_(cand),
        movable_(movable),
        base_(base),
        radius_(radius),
        visit_(visit) {}

  // Enumerates every subset whose smallest movable index is `first`.
  bool RunFrom(int first) { return Extend(first, first + 1); }

 private:
  bool Extend(int k, int next_start) {
    const int u = movable_[k];
    items_.push_back(u);
    prices_.push_back(0);
    for (Money q : cand_[u]) {
      if (q == base_[u]) continue;
      prices_.back() = q;
      if (!visit_(items_, prices_)) return false;
      if (static_cast<int>(items_.size()) < radius_) {
        for (int k2 = next_start; k2 < static_cast<int>(movable_.size());
             ++k2) {
          if (!Extend(k2, k2 + 1)) return false;
        }
      }
    }
    items_.pop_back();
    prices_.pop_back();
    return true;
  }

  const std::vector<std::vector<Money>>& cand_;
  const std::vector<int>& movable_;
  const Prices& base_;
  int radius_;
  const NeighborVisitor& visit_;
  std::vector<int> items_;
  std::vector<Money> prices_;
};

}  // namespace

void ForEachNeighbor(const std::vector<std::vector<Money>>& candidates,
                     const Prices& prices, int radius,
                     const NeighborVisitor& visit) {
  if (radius < 1) return;
  const std::vector<int> movable = MovableItems(candidates);
  NeighborWalker walker(candidates, movable, prices, radius, visit);
  for (int k = 0; k < static_cast<int>(movable.size()); ++k) {
    if (!walker.RunFrom(k)) return;
  }
}

std::optional<Move> BestImprovementStep(const RevenueEvaluator& evaluator,
                                        const Prices& prices, int radius,
                                        std::int64_t* evaluations,
                                        std::int64_t max_evaluations,
                                        bool* cap_hit, int threads) {
  const auto cand = CandidatePrices(evaluator.instance());
  const std::vector<int> movable = MovableItems(cand);
  std::atomic<std::int64_t> used{evaluations ? *evaluations : 0};
  std::atomic<bool> out_of_budget{false};
  auto spend = [&]() {
    if (max_evaluations >= 0 && used.load() >= max_evaluations) {
      out_of_budget = true;
      return false;
    }
    ++used;
    return true;
  };
  if (!spend()) {
    if (cap_hit) *cap_hit = true;
    return std::nullopt;
  }
  const Money current = evaluator.Evaluate(prices).revenue;

  std::vector<std::optional<Move>> best_by_first(movable.size());
  ParallelFor(static_cast<int>(movable.size()),
              threads > 0 ? threads : DefaultThreads(), [&](int k) {
                Prices trial = prices;
                std::optional<Move>& best = best_by_first[k];
                NeighborVisitor visit = [&](std::span<const int> items,
                                            std::span<const Money> ps) {
                  if (out_of_budget || !spend()) return false;
                  for (size_t i = 0; i < items.size(); ++i) {
                    trial[items[i]] = ps[i];
                  }
                  const Money gain =
                      evaluator.Evaluate(trial).revenue - current;
                  for (int u : items) trial[u] = prices[u];
                  if (gain <= 0) return true;
                  Move m{{items.begin(), items.end()},
                         {ps.begin(), ps.end()},
                         gain};
                  if (!best || gain > best->gain ||
                      (gain == best->gain && m.KeyLess(*best))) {
                    best = std::move(m);
                  }
                  return true;
                };
                NeighborWalker(cand, movable, prices, radius, visit)
                    .RunFrom(k);
              });
  if (evaluations) *evaluations = used.load();
  if (out_of_budget) {
    if (cap_hit) *cap_hit = true;
    return std::nullopt;
  }
  std::optional<Move> best;
  for (auto& m : best_by_first) {
    if (!m) continue;
    if (!best || m->gain > best->gain ||
        (m->gain == best->gain && m->KeyLess(*best))) {
      best = std::move(m);
    }
  }
  return best;
}

std::optional<Move> FindImprovingMove(const RevenueEvaluator& evaluator,
                                      const Prices& prices, int radius) {
  const auto cand = CandidatePrices(evaluator.instance());
  const Money current = evaluator.Evaluate(prices).revenue;
  Prices trial = prices;
  std::optional<Move> found;
  ForEachNeighbor(cand, prices, radius,
                  [&](std::span<const int> items, std::span<const Money> ps) {
                    for (size_t i = 0; i < items.size(); ++i) {
                      trial[items[i]] = ps[i];
                    }
                    const Money gain =
                        evaluator.Evaluate(trial).revenue - current;
                    for (int u : items) trial[u] = prices[u];
                    if (gain > 0) {
                      found = Move{{items.begin(), items.end()},
                                   {ps.begin(), ps.end()},
                                   gain};
                      return false;
                    }
                    return true;
                  });
  return found;
}

SearchResult LocalSearch(const LSidedInstance& instance, int radius,
                         std::optional<Prices> initial,
                         const SearchConfig& config) {
  if (radius < 1) {
    throw PricingError(ErrorKind::kInvalidInput, "swap radius must be >= 1");
  }
  SearchResult result;
  result.prices = initial ? *initial : GreedyInitialPricing(instance);
  if (!IsValidPricing(instance, result.prices)) {
    throw PricingError(ErrorKind::kInvalidInput,
                       "initial pricing is not drawn from the candidate sets");
  }
  const RevenueEvaluator evaluator(instance);
  Money value = 0;
  while (true) {
    std::optional<Move> move = BestImprovementStep(
        evaluator, result.prices, radius, &result.evaluations,
        config.max_evaluations, &result.cap_hit, config.threads);
    if (!move) break;
    for (size_t i = 0; i < move->items.size(); ++i) {
      result.prices[move->items[i]] = move->prices[i];
    }
    ++result.steps;
    if (config.on_step) {
      value = evaluator.Evaluate(result.prices).revenue;
      config.on_step({result.steps, *move, value});
    }
  }
  result.allocation = evaluator.Evaluate(result.prices);
  return result;
}

SearchResult SingleSwapSolve(const LSidedInstance& instance,
                             std::optional<Prices> initial,
                             const SearchConfig& config) {
  return LocalSearch(instance, 1, std::move(initial), config);
}

SearchResult MultiSwapSolve(const LSidedInstance& instance, int c, int d,
                            std::optional<Prices> initial,
                            const SearchConfig& config) {
  if (c < 1 || d < 0) {
    throw PricingError(ErrorKind::kInvalidInput, "need C >= 1 and d >= 0");
  }
  const auto cap = EffectiveCapacities(instance.base);
  for (int u = 0; u < instance.base.num_items(); ++u) {
    if (instance.IsLeft(u) && cap[u] > c) {
      throw PricingError(ErrorKind::kPrecondition,
                         "Left item " + std::to_string(u) + " has capacity " +
                             std::to_string(cap[u]) + " above C = " +
                             std::to_string(c));
    }
  }
  return LocalSearch(instance, SwapRadius(c, d), std::move(initial), config);
}

}  // namespace gpricing
