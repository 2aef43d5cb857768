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

// Algorithm dispatch shared by `solve` and `bench`.

#ifndef GPRICING_TOOLS_RUN_H_
#define GPRICING_TOOLS_RUN_H_

#include <cstdint>
#include <optional>
#include <string>

#include "gpricing/instance.h"
#include "json.hpp"

namespace gpricing::cli {

using Json = nlohmann::ordered_json;

struct AlgorithmSpec {
  std::string name;  // single-swap, multi-swap, lp-large, lp-generic, ...
  int c = 2;
  int d = 1;
  std::optional<double> epsilon;  // per-algorithm default when unset
  std::uint64_t seed = 1;
  std::optional<int> seeds;       // rounding repetitions
  std::int64_t iter_cap = 1'000'000;
  std::string inner = "single-swap";  // reduce4 only
  std::optional<Prices> initial;      // local search start, else greedy
};

// Throws PricingError(kInvalidInput) for an unknown name or bad parameters.
void ValidateSpec(const AlgorithmSpec& spec);

struct RunOutput {
  Prices prices;
  Allocation allocation;
  Json metadata;  // algorithm-specific details, deterministic
  std::optional<double> lp_bound;
  std::optional<double> mean_revenue;  // rounding runs
  std::optional<double> standard_error;
};

RunOutput RunAlgorithm(const InstanceFile& file, const AlgorithmSpec& spec,
                       int threads);

// Parameters echoed into output metadata.
Json SpecToJson(const AlgorithmSpec& spec);

}  // namespace gpricing::cli

#endif  // GPRICING_TOOLS_RUN_H_
