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

// Exhaustive solvers for tiny instances. Slow on purpose.

#ifndef GPRICING_ORACLE_H_
#define GPRICING_ORACLE_H_

#include <cstdint>
#include <vector>

#include "gpricing/graph.h"
#include "gpricing/instance.h"

namespace gpricing {

struct OracleLimits {
  std::int64_t max_pricings = 1'000'000;
  int threads = 0;  // 0 picks DefaultThreads()
};

struct OracleResult {
  Prices prices;
  Allocation allocation;
  std::int64_t pricings = 0;  // price vectors enumerated
};

// Best pricing over prod P_u, scored by val. Ties go to the
// lexicographically smallest price vector. Throws kLimitExceeded when the
// product exceeds the limit.
OracleResult ExactLSided(const LSidedInstance& instance,
                         const OracleLimits& limits = {});

// Best integer pricing of a general instance. Each item ranges over every
// integer in [0, max incident budget] when the product fits the limit;
// otherwise over its incident budgets closed once under b_e - q for q in the
// partner's budget grid. Allocations are found by exhaustive search, so
// odd cycles are fine.
struct FullOracleResult : OracleResult {
  bool full_integer_grid = false;
};
FullOracleResult ExactFull(const PricingInstance& instance,
                           const OracleLimits& limits = {});

// Best allocation for fixed prices by exhaustive search over customers.
Allocation ExhaustiveAllocation(const PricingInstance& instance,
                                const Prices& prices);

struct VertexCover {
  int size = 0;
  std::vector<int> vertices;  // ascending
};

// Minimum vertex cover by subset enumeration; kLimitExceeded above 20
// vertices.
VertexCover MinVertexCover(const Graph& g);

}  // namespace gpricing

#endif  // GPRICING_ORACLE_H_
