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

// Exact maximum-weight bipartite b-matching and the revenue function val(p)
// of an L-sided pricing.
//
// The matching is solved as a min-cost flow on the network
//   source -> left (capacity mu_u) -> right (1 per edge) -> sink (mu_v)
// with edge costs equal to the negated weights, using successive shortest
// paths with Johnson potentials. Augmentation stops at the first path of
// nonnegative cost, which yields a maximum-weight (not maximum-cardinality)
// solution. Edges whose right endpoint is kNoNode go straight to the sink and
// only consume left capacity.

#ifndef GPRICING_MATCHING_H_
#define GPRICING_MATCHING_H_

#include <cstdint>
#include <vector>

#include "gpricing/instance.h"

namespace gpricing {

inline constexpr int kNoNode = -1;

struct MatchingEdge {
  int left = 0;
  int right = kNoNode;
  Money weight = 0;
};

struct MatchingProblem {
  std::vector<std::int64_t> left_capacity;
  std::vector<std::int64_t> right_capacity;
  std::vector<MatchingEdge> edges;  // parallel edges allowed
};

struct MatchingResult {
  std::vector<int> chosen;  // edge indices, ascending
  Money weight = 0;
};

// Zero-weight edges are never chosen. The result is a deterministic function
// of the problem, including edge order.
MatchingResult MaxWeightBMatching(const MatchingProblem& problem);

// Evaluates val(p) on a fixed L-sided instance. Holds the node mapping so
// repeated evaluations (local search, oracles) skip the setup work.
class RevenueEvaluator {
 public:
  explicit RevenueEvaluator(const LSidedInstance& instance);

  // Maximum revenue under `prices` and a witness allocation. Customers that
  // cannot afford their bundle, or would pay 0, are never accepted.
  Allocation Evaluate(const Prices& prices) const;

  const LSidedInstance& instance() const { return *instance_; }

 private:
  const LSidedInstance* instance_;
  std::vector<int> node_of_item_;  // left or right index, by side
  std::vector<int> left_item_of_customer_;
  std::vector<int> right_item_of_customer_;
  std::vector<std::int64_t> left_capacity_;
  std::vector<std::int64_t> right_capacity_;
};

// One-shot convenience wrapper around RevenueEvaluator.
Allocation Val(const LSidedInstance& instance, const Prices& prices);

}  // namespace gpricing

#endif  // GPRICING_MATCHING_H_
