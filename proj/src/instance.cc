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

#include "gpricing/instance.h"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "gpricing/error.h"
#include "json.hpp"

namespace gpricing {

namespace {

using Json = nlohmann::ordered_json;

// Budgets times degrees must stay well below the int64 range so that sums
// of revenues and negated flow costs never overflow.
constexpr Money kMoneyLimit = std::numeric_limits<Money>::max() / 4;

}  // namespace

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput:
      return "invalid_input";
    case ErrorKind::kPrecondition:
      return "precondition";
    case ErrorKind::kLimitExceeded:
      return "limit_exceeded";
    case ErrorKind::kGirthNotReached:
      return "girth_not_reached";
    case ErrorKind::kInternal:
      return "internal";
  }
  return "unknown";
}

std::vector<int> ItemDegrees(const PricingInstance& instance) {
  std::vector<int> degree(instance.items.size(), 0);
  for (const Customer& c : instance.customers) {
    ++degree[c.first];
    if (!c.IsSingleton()) ++degree[c.second];
  }
  return degree;
}

std::vector<std::int64_t> EffectiveCapacities(
    const PricingInstance& instance) {
  const std::vector<int> degree = ItemDegrees(instance);
  std::vector<std::int64_t> cap(instance.items.size());
  for (size_t v = 0; v < cap.size(); ++v) {
    const auto& c = instance.items[v].capacity;
    cap[v] = c.has_value() ? std::min<std::int64_t>(*c, degree[v]) : degree[v];
  }
  return cap;
}

int LeftItem(const LSidedInstance& instance, const Customer& customer) {
  if (customer.IsSingleton() || instance.IsLeft(customer.first)) {
    return customer.first;
  }
  return customer.second;
}

int RightItem(const LSidedInstance& instance, const Customer& customer) {
  if (customer.IsSingleton()) return kNoItem;
  return instance.IsLeft(customer.first) ? customer.second : customer.first;
}

std::vector<std::vector<Money>> CandidatePrices(
    const LSidedInstance& instance) {
  std::vector<std::vector<Money>> prices(instance.base.items.size());
  for (const Customer& c : instance.base.customers) {
    prices[LeftItem(instance, c)].push_back(c.budget);
  }
  for (size_t u = 0; u < prices.size(); ++u) {
    auto& p = prices[u];
    if (!instance.IsLeft(static_cast<int>(u))) {
      p.clear();
      continue;
    }
    if (p.empty()) p.push_back(0);
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
  }
  return prices;
}

bool IsValidPricing(const LSidedInstance& instance, const Prices& prices) {
  if (prices.size() != instance.base.items.size()) return false;
  const auto candidates = CandidatePrices(instance);
  for (size_t u = 0; u < prices.size(); ++u) {
    if (!instance.IsLeft(static_cast<int>(u))) {
      if (prices[u] != 0) return false;
    } else if (!std::binary_search(candidates[u].begin(), candidates[u].end(),
                                   prices[u])) {
      return false;
    }
  }
  return true;
}

std::vector<std::string> Validate(const PricingInstance& instance) {
  std::vector<std::string> out;
  const int n = instance.num_items();
  for (int v = 0; v < n; ++v) {
    const auto& cap = instance.items[v].capacity;
    if (cap.has_value() && *cap < 0) {
      out.push_back("item " + std::to_string(v) + ": negative capacity");
    }
  }
  bool ids_ok = true;
  for (int i = 0; i < instance.num_customers(); ++i) {
    const Customer& c = instance.customers[i];
    const std::string who = "customer " + std::to_string(i);
    std::vector<int> bundle{c.first};
    if (!c.IsSingleton()) bundle.push_back(c.second);
    for (int item : bundle) {
      if (item < 0 || item >= n) {
        out.push_back(who + ": unknown item id " + std::to_string(item));
        ids_ok = false;
      }
    }
    if (!c.IsSingleton() && c.first == c.second) {
      out.push_back(who + ": loop bundle");
    }
    if (c.budget < 0) out.push_back(who + ": negative budget");
  }
  if (ids_ok) {
    const std::vector<int> degree = ItemDegrees(instance);
    const int max_degree =
        degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
    Money total = 0;
    bool overflow = false;
    for (const Customer& c : instance.customers) {
      if (c.budget > kMoneyLimit - total) {
        overflow = true;
        break;
      }
      total += std::max<Money>(c.budget, 0);
    }
    if (!overflow && max_degree > 0 && total > kMoneyLimit / max_degree) {
      overflow = true;
    }
    if (overflow) {
      out.push_back("budget total times maximum degree exceeds overflow bound");
    }
  }
  return out;
}

std::vector<std::string> Validate(const LSidedInstance& instance) {
  std::vector<std::string> out = Validate(instance.base);
  if (instance.side.size() != instance.base.items.size()) {
    out.push_back("side list length " + std::to_string(instance.side.size()) +
                  " does not match item count " +
                  std::to_string(instance.base.items.size()));
    return out;
  }
  if (!out.empty()) return out;
  for (int i = 0; i < instance.base.num_customers(); ++i) {
    const Customer& c = instance.base.customers[i];
    const std::string who = "customer " + std::to_string(i);
    if (c.IsSingleton()) {
      if (!instance.IsLeft(c.first)) {
        out.push_back(who + ": singleton bundle on a Right item");
      }
    } else if (instance.IsLeft(c.first) == instance.IsLeft(c.second)) {
      out.push_back(who + ": bundle does not cross the bipartition");
    }
  }
  return out;
}

Money RevenueOf(const PricingInstance& instance, const Prices& prices,
                const std::vector<int>& accepted) {
  Money revenue = 0;
  for (int e : accepted) {
    const Customer& c = instance.customers[e];
    revenue += prices[c.first];
    if (!c.IsSingleton()) revenue += prices[c.second];
  }
  return revenue;
}

std::vector<std::string> CheckFeasible(const PricingInstance& instance,
                                       const Prices& prices,
                                       const Allocation& allocation) {
  std::vector<std::string> out;
  if (prices.size() != instance.items.size()) {
    out.push_back("price vector has " + std::to_string(prices.size()) +
                  " entries for " + std::to_string(instance.items.size()) +
                  " items");
    return out;
  }
  for (size_t v = 0; v < prices.size(); ++v) {
    if (prices[v] < 0) {
      out.push_back("item " + std::to_string(v) + ": negative price");
    }
  }
  std::vector<std::int64_t> load(instance.items.size(), 0);
  std::vector<bool> seen(instance.customers.size(), false);
  Money revenue = 0;
  for (int e : allocation.accepted) {
    if (e < 0 || e >= instance.num_customers()) {
      out.push_back("unknown customer id " + std::to_string(e));
      continue;
    }
    if (seen[e]) {
      out.push_back("customer " + std::to_string(e) + " accepted twice");
      continue;
    }
    seen[e] = true;
    const Customer& c = instance.customers[e];
    Money pay = prices[c.first];
    ++load[c.first];
    if (!c.IsSingleton()) {
      pay += prices[c.second];
      ++load[c.second];
    }
    if (pay > c.budget) {
      std::ostringstream os;
      os << "affordability: customer " << e << " pays " << pay
         << " above budget " << c.budget;
      out.push_back(os.str());
    }
    revenue += pay;
  }
  for (size_t v = 0; v < load.size(); ++v) {
    const auto& cap = instance.items[v].capacity;
    if (cap.has_value() && load[v] > *cap) {
      std::ostringstream os;
      os << "supply: item " << v << " sold " << load[v] << " times, capacity "
         << *cap;
      out.push_back(os.str());
    }
  }
  if (revenue != allocation.revenue) {
    std::ostringstream os;
    os << "revenue mismatch: recorded " << allocation.revenue << ", actual "
       << revenue;
    out.push_back(os.str());
  }
  return out;
}

bool IsSimple(const PricingInstance& instance) {
  std::vector<std::pair<int, int>> bundles;
  bundles.reserve(instance.customers.size());
  for (const Customer& c : instance.customers) {
    bundles.emplace_back(std::min(c.first, c.second),
                         std::max(c.first, c.second));
  }
  std::sort(bundles.begin(), bundles.end());
  return std::adjacent_find(bundles.begin(), bundles.end()) == bundles.end();
}

LSidedInstance InstanceFile::lsided() const {
  if (!side.has_value()) {
    throw PricingError(ErrorKind::kInvalidInput,
                       "instance file has no \"side\" field");
  }
  return {instance, *side};
}

// ---------------------------------------------------------------------------
// JSON

namespace {

[[noreturn]] void Fail(const std::string& msg) {
  throw PricingError(ErrorKind::kInvalidInput, msg);
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const size_t limit = std::min(e.byte, text.size());
    const int line =
        1 + static_cast<int>(std::count(text.begin(), text.begin() + limit,
                                        '\n'));
    Fail("parse error at line " + std::to_string(line) + ": " + e.what());
  }
}

std::int64_t GetInt(const Json& j, const std::string& path, bool nonneg) {
  if (!j.is_number_integer()) Fail(path + ": expected an integer");
  const std::int64_t v = j.get<std::int64_t>();
  if (nonneg && v < 0) Fail(path + ": expected a nonnegative integer");
  return v;
}

const Json& Field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) Fail(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) Fail(path + "." + key + ": missing field");
  return *it;
}

void CheckVersion(const Json& root) {
  const Json& v = Field(root, "version", "$");
  if (GetInt(v, "$.version", false) != kSchemaVersion) {
    Fail("$.version: unsupported schema version " + v.dump() + " (expected " +
         std::to_string(kSchemaVersion) + ")");
  }
}

std::vector<int> GetIntList(const Json& j, const std::string& path) {
  if (!j.is_array()) Fail(path + ": expected an array");
  std::vector<int> out;
  for (size_t i = 0; i < j.size(); ++i) {
    const std::int64_t v =
        GetInt(j[i], path + "[" + std::to_string(i) + "]", false);
    if (v < std::numeric_limits<int>::min() ||
        v > std::numeric_limits<int>::max()) {
      Fail(path + "[" + std::to_string(i) + "]: out of range");
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace

InstanceFile ReadInstance(std::string_view text) {
  const Json root = ParseJson(text);
  CheckVersion(root);
  InstanceFile file;
  const Json& items = Field(root, "items", "$");
  if (!items.is_array()) Fail("$.items: expected an array");
  for (size_t i = 0; i < items.size(); ++i) {
    const std::string path = "$.items[" + std::to_string(i) + "]";
    const Json& cap = Field(items[i], "capacity", path);
    Item item;
    if (!cap.is_null()) item.capacity = GetInt(cap, path + ".capacity", true);
    file.instance.items.push_back(item);
  }
  const Json& customers = Field(root, "customers", "$");
  if (!customers.is_array()) Fail("$.customers: expected an array");
  for (size_t i = 0; i < customers.size(); ++i) {
    const std::string path = "$.customers[" + std::to_string(i) + "]";
    const std::vector<int> bundle =
        GetIntList(Field(customers[i], "bundle", path), path + ".bundle");
    if (bundle.empty() || bundle.size() > 2) {
      Fail(path + ".bundle: expected one or two item ids");
    }
    Customer c;
    c.first = bundle[0];
    c.second = bundle.size() == 2 ? bundle[1] : kNoItem;
    c.budget = GetInt(Field(customers[i], "budget", path), path + ".budget",
                      true);
    file.instance.customers.push_back(c);
  }
  if (auto it = root.find("side"); it != root.end() && !it->is_null()) {
    if (!it->is_array()) Fail("$.side: expected an array");
    std::vector<Side> side;
    for (size_t i = 0; i < it->size(); ++i) {
      const Json& s = (*it)[i];
      if (s == "L") {
        side.push_back(Side::kLeft);
      } else if (s == "R") {
        side.push_back(Side::kRight);
      } else {
        Fail("$.side[" + std::to_string(i) + "]: expected \"L\" or \"R\"");
      }
    }
    file.side = std::move(side);
  }
  std::vector<std::string> problems = Validate(file.instance);
  if (problems.empty() && file.side.has_value()) {
    problems = Validate(file.lsided());
  }
  if (!problems.empty()) Fail("invalid instance: " + problems.front());
  return file;
}

std::string WriteInstance(const PricingInstance& instance,
                          const std::vector<Side>* side) {
  Json root;
  root["version"] = kSchemaVersion;
  Json items = Json::array();
  for (const Item& item : instance.items) {
    Json j;
    j["capacity"] =
        item.capacity.has_value() ? Json(*item.capacity) : Json(nullptr);
    items.push_back(std::move(j));
  }
  root["items"] = std::move(items);
  Json customers = Json::array();
  for (const Customer& c : instance.customers) {
    Json j;
    j["bundle"] = c.IsSingleton() ? Json::array({c.first})
                                  : Json::array({c.first, c.second});
    j["budget"] = c.budget;
    customers.push_back(std::move(j));
  }
  root["customers"] = std::move(customers);
  if (side != nullptr) {
    Json s = Json::array();
    for (Side x : *side) s.push_back(x == Side::kLeft ? "L" : "R");
    root["side"] = std::move(s);
  }
  return root.dump() + "\n";
}

std::string WriteInstance(const LSidedInstance& instance) {
  return WriteInstance(instance.base, &instance.side);
}

Solution ReadSolution(std::string_view text) {
  const Json root = ParseJson(text);
  if (root.contains("version")) CheckVersion(root);
  Solution s;
  const Json& prices = Field(root, "prices", "$");
  if (!prices.is_array()) Fail("$.prices: expected an array");
  for (size_t i = 0; i < prices.size(); ++i) {
    s.prices.push_back(
        GetInt(prices[i], "$.prices[" + std::to_string(i) + "]", true));
  }
  s.accepted = GetIntList(Field(root, "accepted", "$"), "$.accepted");
  s.revenue = GetInt(Field(root, "revenue", "$"), "$.revenue", true);
  return s;
}

std::string WriteSolution(const Solution& solution) {
  Json root;
  root["prices"] = solution.prices;
  root["accepted"] = solution.accepted;
  root["revenue"] = solution.revenue;
  return root.dump() + "\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail("cannot write " + path);
  out << contents;
}

}  // namespace gpricing
