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

#include <cmath>
#include <random>

#include "gpricing/error.h"
#include "gpricing/local_search.h"
#include "gpricing/matching.h"
#include "gpricing/parallel.h"

namespace gpricing {

RoundingResult RoundWithScale(const LSidedInstance& instance,
                              const LpModel& model, const LpSolution& lp,
                              double scale, std::uint64_t seed) {
  const PricingInstance& base = instance.base;
  std::mt19937_64 rng(seed);
  RoundingResult out;
  out.prices.assign(base.items.size(), 0);
  // y_pick[u] is the chosen y variable of u.
  std::vector<int> y_pick(base.items.size(), -1);
  for (int u = 0; u < base.num_items(); ++u) {
    if (!instance.IsLeft(u)) continue;
    const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    double cumulative = 0;
    int last_support = -1;
    for (int j = model.y_index[u];
         j < static_cast<int>(model.variables.size()) &&
         model.variables[j].is_y && model.variables[j].item == u;
         ++j) {
      if (lp.values[j] <= 0) continue;  // sample over the support only
      last_support = j;
      cumulative += lp.values[j];
      if (r < cumulative) break;
    }
    if (last_support < 0) last_support = model.y_index[u];
    y_pick[u] = last_support;
    out.prices[u] = model.variables[last_support].price;
  }

  std::vector<double> share(base.customers.size(), 0.0);
  for (int j = 0; j < static_cast<int>(model.variables.size()); ++j) {
    const LpVariable& var = model.variables[j];
    if (var.is_y || var.price != out.prices[var.item]) continue;
    const double y = lp.values[y_pick[var.item]];
    if (y > 0) share[var.customer] = scale * lp.values[j] / y;
  }
  const auto cap = EffectiveCapacities(base);
  std::vector<double> load(base.items.size(), 0.0);
  for (int e = 0; e < base.num_customers(); ++e) {
    const int v = RightItem(instance, base.customers[e]);
    if (v != kNoItem) load[v] += share[e];
  }
  for (int v = 0; v < base.num_items(); ++v) {
    if (instance.IsLeft(v)) continue;
    if (load[v] > static_cast<double>(cap[v]) + 1e-9) {
      out.discarded_items.push_back(v);
    }
  }
  for (int e = 0; e < base.num_customers(); ++e) {
    const Customer& c = base.customers[e];
    const int v = RightItem(instance, c);
    if (v != kNoItem &&
        load[v] > static_cast<double>(cap[v]) + 1e-9) {
      continue;
    }
    out.fractional_value +=
        share[e] * static_cast<double>(out.prices[LeftItem(instance, c)]);
  }
  out.allocation = Val(instance, out.prices);
  return out;
}

RoundingResult RoundLargeCapacity(const LSidedInstance& instance,
                                  const LpModel& model, const LpSolution& lp,
                                  double epsilon, std::uint64_t seed) {
  if (!(epsilon > 0 && epsilon < 1)) {
    throw PricingError(ErrorKind::kInvalidInput, "epsilon must lie in (0, 1)");
  }
  if (!IsSimple(instance.base)) {
    throw PricingError(ErrorKind::kPrecondition,
                       "large-capacity rounding needs a simple graph");
  }
  return RoundWithScale(instance, model, lp, 1 - epsilon, seed);
}

RoundingResult RoundGeneric(const LSidedInstance& instance,
                            const LpModel& model, const LpSolution& lp,
                            std::uint64_t seed) {
  return RoundWithScale(instance, model, lp, 0.5, seed);
}

RoundingSummary RoundRepeatedly(const LSidedInstance& instance,
                                const LpModel& model, const LpSolution& lp,
                                double scale, std::uint64_t seed, int k,
                                int threads) {
  std::vector<RoundingResult> runs(std::max(k, 0));
  ParallelFor(k, threads > 0 ? threads : DefaultThreads(), [&](int i) {
    runs[i] = RoundWithScale(instance, model, lp, scale, seed + i);
  });
  RoundingSummary out;
  out.rounds = k;
  double sum = 0, sum_sq = 0;
  for (int i = 0; i < k; ++i) {
    const auto r = static_cast<double>(runs[i].allocation.revenue);
    sum += r;
    sum_sq += r * r;
    if (i == 0 || runs[i].allocation.revenue > out.best.allocation.revenue) {
      out.best = runs[i];
    }
  }
  if (k > 0) {
    out.mean_revenue = sum / k;
    out.stddev_revenue =
        std::sqrt(std::max(0.0, sum_sq / k - out.mean_revenue * out.mean_revenue));
  }
  return out;
}

const char* HybridPathName(HybridPath path) {
  switch (path) {
    case HybridPath::kMatching: return "matching";
    case HybridPath::kMultiSwap: return "multi-swap";
    case HybridPath::kRounding: return "rounding";
  }
  return "unknown";
}

int MinimalDepth(int c, double target) {
  for (int d = 0; d < 64; ++d) {
    if (MultiSwapGuarantee(c, d) >= target) return d;
  }
  throw PricingError(ErrorKind::kInvalidInput,
                     "no multi-swap depth reaches the target ratio");
}

namespace {

// With every capacity 1, a Left item sells to at most one customer, at that
// customer's budget at best, so the optimum is a maximum-weight matching
// with budgets as weights.
HybridResult SolveUnitCapacity(const LSidedInstance& instance) {
  const PricingInstance& base = instance.base;
  MatchingProblem problem;
  problem.left_capacity.assign(base.items.size(), 0);
  problem.right_capacity.assign(base.items.size(), 0);
  for (int u = 0; u < base.num_items(); ++u) {
    (instance.IsLeft(u) ? problem.left_capacity : problem.right_capacity)[u] = 1;
  }
  for (const Customer& c : base.customers) {
    const int v = RightItem(instance, c);
    problem.edges.push_back(
        {LeftItem(instance, c), v == kNoItem ? kNoNode : v, c.budget});
  }
  const MatchingResult matched = MaxWeightBMatching(problem);
  const auto cand = CandidatePrices(instance);
  HybridResult out;
  out.prices.assign(base.items.size(), 0);
  for (int u = 0; u < base.num_items(); ++u) {
    if (instance.IsLeft(u)) out.prices[u] = cand[u].back();
  }
  for (int e : matched.chosen) {
    out.prices[problem.edges[e].left] = problem.edges[e].weight;
  }
  out.allocation = Val(instance, out.prices);
  out.guarantee = 1.0;
  return out;
}

}  // namespace

HybridResult HybridSolve(const LSidedInstance& instance,
                         const HybridOptions& options) {
  const auto problems = Validate(instance);
  if (!problems.empty()) {
    throw PricingError(ErrorKind::kInvalidInput, problems.front());
  }
  const PricingInstance& base = instance.base;
  if (base.items.empty()) return {};
  const auto& first = base.items.front().capacity;
  for (const Item& item : base.items) {
    if (!item.capacity.has_value() || item.capacity != first) {
      throw PricingError(ErrorKind::kPrecondition,
                         "hybrid solver needs one finite capacity shared by "
                         "all items");
    }
  }
  if (!IsSimple(base)) {
    throw PricingError(ErrorKind::kPrecondition,
                       "hybrid solver needs a simple graph");
  }
  const std::int64_t mu = *first;
  if (mu < 1) {
    throw PricingError(ErrorKind::kPrecondition, "capacity must be positive");
  }
  HybridResult out;
  if (mu == 1) {
    out = SolveUnitCapacity(instance);
  } else if (mu <= 21) {
    const int c = static_cast<int>(mu);
    out.path = HybridPath::kMultiSwap;
    out.d = MinimalDepth(c, 21.0 / 41.0 - options.epsilon);
    out.guarantee = MultiSwapGuarantee(c, out.d);
    SearchConfig config;
    config.max_evaluations = options.max_evaluations;
    config.threads = options.threads;
    const SearchResult r =
        MultiSwapSolve(instance, c, out.d, std::nullopt, config);
    out.prices = r.prices;
    out.allocation = r.allocation;
    out.cap_hit = r.cap_hit;
  } else {
    out.path = HybridPath::kRounding;
    const LpModel model = BuildLp(instance);
    const LpSolution lp = SolveLp(model);
    const RoundingSummary s = RoundRepeatedly(
        instance, model, lp, kHybridScale, options.seed, options.rounds,
        options.threads);
    out.prices = s.best.prices;
    out.allocation = s.best.allocation;
    out.lp_objective = lp.objective;
    out.mean_revenue = s.mean_revenue;
    out.guarantee = 0.516;
  }
  out.capacity = mu;
  return out;
}

}  // namespace gpricing
