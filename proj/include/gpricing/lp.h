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

// The price-selection LP relaxation of L-sided pricing.
//
// Variables y[u,p] choose a price p in P_u for each Left item u, and x[e,p]
// sells customer e at its Left item's price p (only when p <= b_e).
//
//   maximise   sum p * x[e,p]
//   subject to sum_p y[u,p] = 1                      for u in L
//              sum_{e at u} x[e,p] <= mu_u * y[u,p]   for u in L, p in P_u
//              sum_{e at v, p} x[e,p] <= mu_v         for v in R
//              x[e,p] <= y[u,p]                       for every x variable
//
// Singleton customers have no Right item and appear in no Right row.
// Unbounded capacities are replaced by the item degree, which is
// equivalent.

#ifndef GPRICING_LP_H_
#define GPRICING_LP_H_

#include <cstdint>
#include <string>
#include <vector>

#include "gpricing/instance.h"

namespace gpricing {

enum class LpGroup { kChoice, kLeftLoad, kRightLoad, kLink };

struct LpVariable {
  bool is_y = true;
  int item = 0;       // Left item u
  int customer = -1;  // x variables only
  Money price = 0;
};

struct LpRow {
  LpGroup group = LpGroup::kChoice;
  bool equality = false;
  std::vector<std::pair<int, std::int64_t>> terms;  // (variable, coefficient)
  std::int64_t rhs = 0;
  int anchor = 0;  // item (choice, load rows) or x variable (link rows)
};

struct LpModel {
  std::vector<LpVariable> variables;
  std::vector<std::int64_t> objective;  // per variable
  std::vector<LpRow> rows;
  std::vector<int> y_index;  // first y variable of each item, or -1

  int num_y() const;
  int num_x() const;
  int CountRows(LpGroup group) const;
};

LpModel BuildLp(const LSidedInstance& instance);

// CPLEX LP text, for feeding the same model to an external solver.
std::string WriteLpFormat(const LpModel& model);

enum class LpArithmetic { kAuto, kExact, kFloat };

struct LpOptions {
  LpArithmetic arithmetic = LpArithmetic::kAuto;
  // kAuto uses exact rationals up to this many tableau cells.
  std::int64_t exact_cell_limit = 150'000;
  double tolerance = 1e-9;
  // Consecutive degenerate pivots after which Bland's rule takes over.
  int degenerate_streak = 50;
};

struct LpSolution {
  std::vector<double> values;  // per variable
  std::vector<double> duals;   // per row, >= 0
  double objective = 0;
  std::string exact_objective;  // "p/q" when solved exactly, else empty
  bool exact = false;
  int pivots = 0;
  double primal_residual = 0;  // max constraint violation
  double dual_residual = 0;    // max violation of A^T y >= c, y >= 0
  double dual_bound = 0;       // b . y, an upper bound on the optimum

  double y(const LpModel& m, int u, int k) const {
    return values[m.y_index[u] + k];
  }
};

// Throws PricingError(kInternal) if the simplex fails (unbounded or
// cycling), which the model structure rules out.
LpSolution SolveLp(const LpModel& model, const LpOptions& options = {});

}  // namespace gpricing

#endif  // GPRICING_LP_H_
