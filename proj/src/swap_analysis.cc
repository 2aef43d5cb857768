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

#include "gpricing/swap_analysis.h"

#include <algorithm>

#include "gpricing/error.h"

namespace gpricing {

namespace {

std::vector<bool> Membership(int n, const std::vector<int>& ids) {
  std::vector<bool> in(n, false);
  for (int e : ids) in[e] = true;
  return in;
}

}  // namespace

Pairing BuildPairing(const LSidedInstance& instance,
                     const Allocation& optimal, const Allocation& local) {
  const PricingInstance& base = instance.base;
  Pairing out;
  out.sigma.assign(base.customers.size(), -1);
  std::vector<bool> used(base.customers.size(), false);
  std::vector<std::vector<int>> local_at(base.items.size());
  for (int e : local.accepted) {
    const int v = RightItem(instance, base.customers[e]);
    if (v != kNoItem) local_at[v].push_back(e);
  }
  for (auto& list : local_at) std::sort(list.begin(), list.end());
  std::vector<int> order = optimal.accepted;
  std::sort(order.begin(), order.end());
  for (int e_star : order) {
    const int v = RightItem(instance, base.customers[e_star]);
    if (v == kNoItem) continue;
    for (int e : local_at[v]) {
      if (!used[e]) {
        used[e] = true;
        out.sigma[e_star] = e;
        out.paired.push_back(e_star);
        break;
      }
    }
  }
  return out;
}

std::vector<std::string> CheckPairing(const LSidedInstance& instance,
                                      const Allocation& optimal,
                                      const Allocation& local,
                                      const Pairing& pairing) {
  const PricingInstance& base = instance.base;
  const int m = base.num_customers();
  std::vector<std::string> out;
  const auto in_local = Membership(m, local.accepted);
  const auto in_optimal = Membership(m, optimal.accepted);
  const auto in_paired = Membership(m, pairing.paired);
  std::vector<bool> is_image(m, false);
  for (int e_star : pairing.paired) {
    const int e = pairing.sigma[e_star];
    const std::string who = "pair " + std::to_string(e_star);
    if (!in_optimal[e_star]) out.push_back(who + ": not in B*");
    if (e < 0 || !in_local[e]) {
      out.push_back(who + ": image not in B");
      continue;
    }
    if (is_image[e]) out.push_back(who + ": sigma not injective");
    is_image[e] = true;
    if (RightItem(instance, base.customers[e]) !=
        RightItem(instance, base.customers[e_star])) {
      out.push_back(who + ": image on a different Right item");
    }
  }
  for (int v = 0; v < base.num_items(); ++v) {
    if (instance.IsLeft(v)) continue;
    bool optimal_covered = true, local_covered = true;
    for (int e = 0; e < m; ++e) {
      if (RightItem(instance, base.customers[e]) != v) continue;
      if (in_optimal[e] && !in_paired[e]) optimal_covered = false;
      if (in_local[e] && !is_image[e]) local_covered = false;
    }
    if (!optimal_covered && !local_covered) {
      out.push_back("Right item " + std::to_string(v) +
                    ": neither side fully paired");
    }
  }
  return out;
}

Digraph PairingDigraph(const LSidedInstance& instance,
                       const Pairing& pairing) {
  Digraph h(instance.base.num_items());
  for (int e_star : pairing.paired) {
    const auto& customers = instance.base.customers;
    h.AddArc(LeftItem(instance, customers[e_star]),
             LeftItem(instance, customers[pairing.sigma[e_star]]));
  }
  return h;
}

SwapCertificate VerifySwapInequality(const RevenueEvaluator& evaluator,
                                     const Prices& local_prices,
                                     const Allocation& local,
                                     const Prices& optimal_prices,
                                     const Allocation& optimal,
                                     const Pairing& pairing,
                                     const Digraph& h, int u, int radius) {
  const LSidedInstance& instance = evaluator.instance();
  const PricingInstance& base = instance.base;
  const int m = base.num_customers();
  SwapCertificate cert;
  cert.ball = DirectedBall(h, u, radius);
  const std::vector<bool> in_ball = Membership(base.num_items(), cert.ball);
  const std::vector<bool> on_boundary =
      Membership(base.num_items(), BallBoundary(h, u, radius));

  Prices swapped = local_prices;
  for (int w : cert.ball) swapped[w] = optimal_prices[w];

  std::vector<bool> removed(m, false);
  for (int e : local.accepted) {
    if (in_ball[LeftItem(instance, base.customers[e])]) removed[e] = true;
  }
  for (int e_star : pairing.paired) {
    if (on_boundary[LeftItem(instance, base.customers[e_star])]) {
      removed[pairing.sigma[e_star]] = true;
    }
  }
  std::vector<bool> chosen(m, false);
  for (int e : local.accepted) chosen[e] = !removed[e];
  for (int e : optimal.accepted) {
    if (in_ball[LeftItem(instance, base.customers[e])]) chosen[e] = true;
  }
  for (int e = 0; e < m; ++e) {
    if (chosen[e]) cert.test_set.push_back(e);
  }
  const Money test_value = RevenueOf(base, swapped, cert.test_set);
  const auto problems =
      CheckFeasible(base, swapped, {cert.test_set, test_value});
  if (!problems.empty()) {
    throw PricingError(ErrorKind::kInternal,
                       "test swap allocation infeasible: " + problems.front());
  }
  cert.local_value = RevenueOf(base, local_prices, local.accepted);
  cert.bound = test_value - cert.local_value;
  cert.swapped_value = evaluator.Evaluate(swapped).revenue;
  return cert;
}

Money SingleSwapFormulaBound(const LSidedInstance& instance,
                             const Prices& local_prices,
                             const Allocation& local,
                             const Prices& optimal_prices,
                             const Allocation& optimal, const Pairing& pairing,
                             int u) {
  const auto& customers = instance.base.customers;
  Money bound = 0;
  for (int e : optimal.accepted) {
    if (LeftItem(instance, customers[e]) == u) bound += optimal_prices[u];
  }
  for (int e : local.accepted) {
    if (LeftItem(instance, customers[e]) == u) bound -= local_prices[u];
  }
  for (int e_star : pairing.paired) {
    if (LeftItem(instance, customers[e_star]) == u) {
      const int image = pairing.sigma[e_star];
      bound -= local_prices[LeftItem(instance, customers[image])];
    }
  }
  return bound;
}

}  // namespace gpricing
