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

// Swap-based local search for L-sided pricing.
//
// A pricing assigns every Left item a price from its candidate set P_u. The
// rho-swap neighbourhood of p contains every pricing that differs from p on
// at least one and at most rho Left items. Each step moves to the neighbour
// with the largest strict gain in val; ties go to the lexicographically
// smallest (sorted changed items, new prices) pair. Single swap is rho = 1;
// the multi-swap search with parameters (C, d) uses rho = 1 + C + ... + C^d.

#ifndef GPRICING_LOCAL_SEARCH_H_
#define GPRICING_LOCAL_SEARCH_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gpricing/instance.h"
#include "gpricing/matching.h"

namespace gpricing {

struct Move {
  std::vector<int> items;     // ascending
  std::vector<Money> prices;  // new price per entry of `items`
  Money gain = 0;

  // Lexicographic order on (items, prices); gain is not compared.
  bool KeyLess(const Move& other) const;
};

struct StepRecord {
  int step = 0;
  Move move;
  Money value = 0;  // val after the move
};

struct SearchConfig {
  // Total val evaluations allowed across the run.
  std::int64_t max_evaluations = 1'000'000;
  int threads = 0;  // 0 picks DefaultThreads()
  std::function<void(const StepRecord&)> on_step;
};

struct SearchResult {
  Prices prices;
  Allocation allocation;
  int steps = 0;
  std::int64_t evaluations = 0;
  bool cap_hit = false;
};

// Swap radius 1 + c + ... + c^d.
int SwapRadius(int c, int d);

// Per item, the price q in P_u maximising q * min(mu_u, #{e in delta(u) :
// b_e >= q}); ties go to the smallest q. Optimal when Right supply is
// unlimited.
Prices GreedyInitialPricing(const LSidedInstance& instance);

// Calls visit(items, prices) for every pricing within swap distance
// [1, radius] of `prices`, each exactly once. Returning false stops the scan.
using NeighborVisitor =
    std::function<bool(std::span<const int>, std::span<const Money>)>;
void ForEachNeighbor(const std::vector<std::vector<Money>>& candidates,
                     const Prices& prices, int radius,
                     const NeighborVisitor& visit);

// Best strictly improving move, or nullopt at a local optimum. `evaluations`
// is incremented per val call; the scan gives up (returning nullopt and
// setting *cap_hit) once it reaches `max_evaluations`.
std::optional<Move> BestImprovementStep(const RevenueEvaluator& evaluator,
                                        const Prices& prices, int radius,
                                        std::int64_t* evaluations = nullptr,
                                        std::int64_t max_evaluations = -1,
                                        bool* cap_hit = nullptr,
                                        int threads = 1);

// Stops at the first improving move; nullopt means locally optimal.
std::optional<Move> FindImprovingMove(const RevenueEvaluator& evaluator,
                                      const Prices& prices, int radius);

SearchResult SingleSwapSolve(const LSidedInstance& instance,
                             std::optional<Prices> initial = std::nullopt,
                             const SearchConfig& config = {});

// Throws PricingError(kPrecondition) when some Left capacity exceeds c.
SearchResult MultiSwapSolve(const LSidedInstance& instance, int c, int d,
                            std::optional<Prices> initial = std::nullopt,
                            const SearchConfig& config = {});

// Runs best-improvement search with an explicit radius.
SearchResult LocalSearch(const LSidedInstance& instance, int radius,
                         std::optional<Prices> initial,
                         const SearchConfig& config);

// Approximation ratio guaranteed for multi-swap local optima,
// (C - C^-d) / (2C - 1 - C^-d).
double MultiSwapGuarantee(int c, int d);

}  // namespace gpricing

#endif  // GPRICING_LOCAL_SEARCH_H_
