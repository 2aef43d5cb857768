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

#include "gpricing/matching.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <utility>

#include "gpricing/error.h"

namespace gpricing {

namespace {

constexpr Money kInf = std::numeric_limits<Money>::max() / 4;

// Residual network in adjacency-array form. Arc 2k is forward, 2k+1 its
// reverse.
class FlowNetwork {
 public:
  explicit FlowNetwork(int num_nodes) : first_(num_nodes, -1) {}

  int AddArc(int from, int to, std::int64_t capacity, Money cost) {
    const int id = static_cast<int>(head_.size());
    Push(from, to, capacity, cost);
    Push(to, from, 0, -cost);
    return id;
  }

  int num_nodes() const { return static_cast<int>(first_.size()); }

  // Successive shortest paths from `s` to `t`, stopping once the cheapest
  // augmenting path has nonnegative cost. `potential` must be feasible for
  // the initial residual network.
  void MinCostAugment(int s, int t, std::vector<Money> potential) {
    const int n = num_nodes();
    std::vector<Money> dist(n);
    std::vector<int> parent_arc(n);
    using Entry = std::pair<Money, int>;
    while (true) {
      std::fill(dist.begin(), dist.end(), kInf);
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
      dist[s] = 0;
      pq.emplace(0, s);
      while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d > dist[v]) continue;
        for (int a = first_[v]; a != -1; a = next_[a]) {
          if (residual_[a] <= 0) continue;
          const int w = head_[a];
          const Money nd = d + cost_[a] + potential[v] - potential[w];
          if (nd < dist[w]) {
            dist[w] = nd;
            parent_arc[w] = a;
            pq.emplace(nd, w);
          }
        }
      }
      if (dist[t] >= kInf) return;
      const Money path_cost = dist[t] + potential[t] - potential[s];
      if (path_cost >= 0) return;
      std::int64_t push = std::numeric_limits<std::int64_t>::max();
      for (int v = t; v != s; v = head_[parent_arc[v] ^ 1]) {
        push = std::min(push, residual_[parent_arc[v]]);
      }
      for (int v = t; v != s; v = head_[parent_arc[v] ^ 1]) {
        residual_[parent_arc[v]] -= push;
        residual_[parent_arc[v] ^ 1] += push;
      }
      const Money cap = dist[t];
      for (int v = 0; v < n; ++v) potential[v] += std::min(dist[v], cap);
    }
  }

  std::int64_t flow(int arc) const { return residual_[arc ^ 1]; }

 private:
  void Push(int from, int to, std::int64_t capacity, Money cost) {
    head_.push_back(to);
    residual_.push_back(capacity);
    cost_.push_back(cost);
    next_.push_back(first_[from]);
    first_[from] = static_cast<int>(head_.size()) - 1;
  }

  std::vector<int> first_;
  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<std::int64_t> residual_;
  std::vector<Money> cost_;
};

}  // namespace

MatchingResult MaxWeightBMatching(const MatchingProblem& problem) {
  const int nl = static_cast<int>(problem.left_capacity.size());
  const int nr = static_cast<int>(problem.right_capacity.size());
  const int source = nl + nr;
  const int sink = source + 1;
  FlowNetwork net(nl + nr + 2);

  for (int u = 0; u < nl; ++u) {
    net.AddArc(source, u, std::max<std::int64_t>(problem.left_capacity[u], 0),
               0);
  }
  for (int v = 0; v < nr; ++v) {
    net.AddArc(nl + v, sink,
               std::max<std::int64_t>(problem.right_capacity[v], 0), 0);
  }
  // The network is a DAG source -> L -> R -> sink, so shortest distances
  // from the source give feasible initial potentials.
  std::vector<Money> potential(nl + nr + 2, 0);
  std::vector<int> arc_of_edge(problem.edges.size(), -1);
  for (size_t i = 0; i < problem.edges.size(); ++i) {
    const MatchingEdge& e = problem.edges[i];
    if (e.left < 0 || e.left >= nl || e.right >= nr || e.weight < 0) {
      throw PricingError(ErrorKind::kInternal, "malformed matching edge");
    }
    if (e.weight == 0) continue;
    const int to = e.right == kNoNode ? sink : nl + e.right;
    arc_of_edge[i] = net.AddArc(e.left, to, 1, -e.weight);
    potential[to] = std::min(potential[to], -e.weight);
  }
  for (int v = 0; v < nr; ++v) {
    potential[sink] = std::min(potential[sink], potential[nl + v]);
  }
  net.MinCostAugment(source, sink, std::move(potential));

  MatchingResult result;
  for (size_t i = 0; i < problem.edges.size(); ++i) {
    if (arc_of_edge[i] >= 0 && net.flow(arc_of_edge[i]) > 0) {
      result.chosen.push_back(static_cast<int>(i));
      result.weight += problem.edges[i].weight;
    }
  }
  return result;
}

RevenueEvaluator::RevenueEvaluator(const LSidedInstance& instance)
    : instance_(&instance) {
  const PricingInstance& base = instance.base;
  const std::vector<std::int64_t> cap = EffectiveCapacities(base);
  node_of_item_.assign(base.items.size(), -1);
  for (int v = 0; v < base.num_items(); ++v) {
    if (instance.IsLeft(v)) {
      node_of_item_[v] = static_cast<int>(left_capacity_.size());
      left_capacity_.push_back(cap[v]);
    } else {
      node_of_item_[v] = static_cast<int>(right_capacity_.size());
      right_capacity_.push_back(cap[v]);
    }
  }
  for (const Customer& c : base.customers) {
    left_item_of_customer_.push_back(LeftItem(instance, c));
    right_item_of_customer_.push_back(RightItem(instance, c));
  }
}

Allocation RevenueEvaluator::Evaluate(const Prices& prices) const {
  const PricingInstance& base = instance_->base;
  MatchingProblem problem;
  problem.left_capacity = left_capacity_;
  problem.right_capacity = right_capacity_;
  std::vector<int> customer_of_edge;
  for (int e = 0; e < base.num_customers(); ++e) {
    const int u = left_item_of_customer_[e];
    const Money price = prices[u];
    if (price <= 0 || price > base.customers[e].budget) continue;
    const int v = right_item_of_customer_[e];
    problem.edges.push_back(
        {node_of_item_[u], v == kNoItem ? kNoNode : node_of_item_[v], price});
    customer_of_edge.push_back(e);
  }
  const MatchingResult m = MaxWeightBMatching(problem);
  Allocation out;
  out.revenue = m.weight;
  out.accepted.reserve(m.chosen.size());
  for (int i : m.chosen) out.accepted.push_back(customer_of_edge[i]);
  return out;
}

Allocation Val(const LSidedInstance& instance, const Prices& prices) {
  return RevenueEvaluator(instance).Evaluate(prices);
}

}  // namespace gpricing
