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

// Data model for capacitated graph pricing.
//
// Items are sold in limited supply to single-minded customers, each of whom
// wants a bundle of one or two distinct items and has an integer budget. A
// solution is a nonnegative integer price per item together with a set of
// accepted customers. It is feasible when every accepted customer can afford
// its bundle and no item is sold more often than its capacity.
//
// The L-sided variant tags every item Left or Right. Right items are always
// priced 0 and every two-item bundle has exactly one endpoint on each side.

#ifndef GPRICING_INSTANCE_H_
#define GPRICING_INSTANCE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gpricing {

using Money = std::int64_t;

inline constexpr int kNoItem = -1;

struct Item {
  // std::nullopt encodes unlimited supply.
  std::optional<std::int64_t> capacity;

  bool operator==(const Item&) const = default;
};

struct Customer {
  int first = 0;
  int second = kNoItem;  // kNoItem for a singleton bundle
  Money budget = 0;

  bool IsSingleton() const { return second == kNoItem; }
  bool Contains(int item) const { return first == item || second == item; }
  bool operator==(const Customer&) const = default;
};

struct PricingInstance {
  std::vector<Item> items;
  std::vector<Customer> customers;

  int num_items() const { return static_cast<int>(items.size()); }
  int num_customers() const { return static_cast<int>(customers.size()); }
  bool operator==(const PricingInstance&) const = default;
};

enum class Side { kLeft, kRight };

struct LSidedInstance {
  PricingInstance base;
  std::vector<Side> side;  // one entry per item

  bool IsLeft(int item) const { return side[item] == Side::kLeft; }
  bool operator==(const LSidedInstance&) const = default;
};

// Full price vector indexed by item id. In the L-sided setting Right entries
// are 0 and every Left entry is drawn from that item's candidate set.
using Prices = std::vector<Money>;

struct Allocation {
  std::vector<int> accepted;  // customer ids, ascending
  Money revenue = 0;

  bool operator==(const Allocation&) const = default;
};

// Number of customers whose bundle contains `item`.
std::vector<int> ItemDegrees(const PricingInstance& instance);

// Capacity with unlimited supply replaced by the item's degree. Never
// changes the set of feasible allocations.
std::vector<std::int64_t> EffectiveCapacities(const PricingInstance& instance);

// Left endpoint of a customer in an L-sided instance.
int LeftItem(const LSidedInstance& instance, const Customer& customer);
// Right endpoint, or kNoItem for singletons.
int RightItem(const LSidedInstance& instance, const Customer& customer);

// Candidate prices P_u: the distinct budgets of customers interested in u,
// ascending. Right items get an empty set; Left items without customers get
// {0}.
std::vector<std::vector<Money>> CandidatePrices(const LSidedInstance& instance);

// True when p(u) is in P_u for every Left u and p(v) = 0 for every Right v.
bool IsValidPricing(const LSidedInstance& instance, const Prices& prices);

// Structural checks. Violations are returned as data; an empty result means
// the instance is well formed.
std::vector<std::string> Validate(const PricingInstance& instance);
std::vector<std::string> Validate(const LSidedInstance& instance);

// Checks affordability, supply and the revenue sum of (prices, allocation)
// with exact integer arithmetic.
std::vector<std::string> CheckFeasible(const PricingInstance& instance,
                                       const Prices& prices,
                                       const Allocation& allocation);

// True when no two customers share the same bundle.
bool IsSimple(const PricingInstance& instance);

// Revenue of `accepted` under `prices` (no feasibility check).
Money RevenueOf(const PricingInstance& instance, const Prices& prices,
                const std::vector<int>& accepted);

// ---------------------------------------------------------------------------
// JSON file formats.

inline constexpr int kSchemaVersion = 1;

struct InstanceFile {
  PricingInstance instance;
  std::optional<std::vector<Side>> side;

  bool is_lsided() const { return side.has_value(); }
  LSidedInstance lsided() const;
  bool operator==(const InstanceFile&) const = default;
};

struct Solution {
  Prices prices;
  std::vector<int> accepted;
  Money revenue = 0;

  Allocation allocation() const { return {accepted, revenue}; }
  bool operator==(const Solution&) const = default;
};

// Parsers throw PricingError(kInvalidInput) with a line number or field path
// in the message.
InstanceFile ReadInstance(std::string_view text);
std::string WriteInstance(const PricingInstance& instance,
                          const std::vector<Side>* side = nullptr);
std::string WriteInstance(const LSidedInstance& instance);

Solution ReadSolution(std::string_view text);
std::string WriteSolution(const Solution& solution);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace gpricing

#endif  // GPRICING_INSTANCE_H_
