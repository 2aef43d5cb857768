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

#include "gpricing/lp.h"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gpricing/error.h"

namespace gpricing {

int LpModel::num_y() const {
  return static_cast<int>(std::count_if(
      variables.begin(), variables.end(),
      [](const LpVariable& v) { return v.is_y; }));
}

int LpModel::num_x() const {
  return static_cast<int>(variables.size()) - num_y();
}

int LpModel::CountRows(LpGroup group) const {
  return static_cast<int>(std::count_if(
      rows.begin(), rows.end(),
      [group](const LpRow& r) { return r.group == group; }));
}

LpModel BuildLp(const LSidedInstance& instance) {
  const PricingInstance& base = instance.base;
  const auto cand = CandidatePrices(instance);
  const auto cap = EffectiveCapacities(base);
  LpModel m;
  m.y_index.assign(base.items.size(), -1);
  for (int u = 0; u < base.num_items(); ++u) {
    if (!instance.IsLeft(u)) continue;
    m.y_index[u] = static_cast<int>(m.variables.size());
    for (Money p : cand[u]) {
      m.variables.push_back({true, u, -1, p});
      m.objective.push_back(0);
    }
  }
  // x variables, grouped per customer in ascending price order.
  std::vector<std::vector<int>> x_of_customer(base.customers.size());
  for (int e = 0; e < base.num_customers(); ++e) {
    const Customer& c = base.customers[e];
    const int u = LeftItem(instance, c);
    for (Money p : cand[u]) {
      if (p > c.budget) break;
      x_of_customer[e].push_back(static_cast<int>(m.variables.size()));
      m.variables.push_back({false, u, e, p});
      m.objective.push_back(p);
    }
  }
  auto y_var = [&](int u, Money p) {
    const auto it = std::lower_bound(cand[u].begin(), cand[u].end(), p);
    return m.y_index[u] + static_cast<int>(it - cand[u].begin());
  };

  for (int u = 0; u < base.num_items(); ++u) {
    if (!instance.IsLeft(u)) continue;
    LpRow row{LpGroup::kChoice, true, {}, 1, u};
    for (size_t k = 0; k < cand[u].size(); ++k) {
      row.terms.emplace_back(m.y_index[u] + static_cast<int>(k), 1);
    }
    m.rows.push_back(std::move(row));
  }
  for (int u = 0; u < base.num_items(); ++u) {
    if (!instance.IsLeft(u)) continue;
    for (Money p : cand[u]) {
      LpRow row{LpGroup::kLeftLoad, false, {}, 0, u};
      for (int e = 0; e < base.num_customers(); ++e) {
        for (int x : x_of_customer[e]) {
          if (m.variables[x].item == u && m.variables[x].price == p) {
            row.terms.emplace_back(x, 1);
          }
        }
      }
      row.terms.emplace_back(y_var(u, p), -cap[u]);
      m.rows.push_back(std::move(row));
    }
  }
  for (int v = 0; v < base.num_items(); ++v) {
    if (instance.IsLeft(v)) continue;
    LpRow row{LpGroup::kRightLoad, false, {}, cap[v], v};
    for (int e = 0; e < base.num_customers(); ++e) {
      if (RightItem(instance, base.customers[e]) != v) continue;
      for (int x : x_of_customer[e]) row.terms.emplace_back(x, 1);
    }
    m.rows.push_back(std::move(row));
  }
  for (int x = 0; x < static_cast<int>(m.variables.size()); ++x) {
    const LpVariable& var = m.variables[x];
    if (var.is_y) continue;
    m.rows.push_back(
        {LpGroup::kLink, false, {{x, 1}, {y_var(var.item, var.price), -1}}, 0,
         x});
  }
  return m;
}

namespace {

std::string VarName(const LpVariable& v) {
  std::ostringstream os;
  if (v.is_y) {
    os << "y_" << v.item << "_" << v.price;
  } else {
    os << "x_" << v.customer << "_" << v.price;
  }
  return os.str();
}

const char* GroupName(LpGroup g) {
  switch (g) {
    case LpGroup::kChoice: return "choice";
    case LpGroup::kLeftLoad: return "left_load";
    case LpGroup::kRightLoad: return "right_load";
    case LpGroup::kLink: return "link";
  }
  return "row";
}

void WriteTerms(std::ostringstream& os,
                const std::vector<std::pair<int, std::int64_t>>& terms,
                const LpModel& m) {
  bool first = true;
  for (auto [var, coef] : terms) {
    if (coef == 0) continue;
    os << (coef < 0 ? " - " : (first ? " " : " + "));
    if (std::abs(coef) != 1) os << std::abs(coef) << " ";
    os << VarName(m.variables[var]);
    first = false;
  }
  if (first) os << " 0 " << VarName(m.variables.front());
}

}  // namespace

std::string WriteLpFormat(const LpModel& m) {
  std::ostringstream os;
  os << "\\ price-selection relaxation\nMaximize\n obj:";
  std::vector<std::pair<int, std::int64_t>> obj;
  for (size_t j = 0; j < m.objective.size(); ++j) {
    if (m.objective[j] != 0) obj.emplace_back(static_cast<int>(j), m.objective[j]);
  }
  if (obj.empty() && !m.variables.empty()) obj.emplace_back(0, 0);
  if (!m.variables.empty()) WriteTerms(os, obj, m);
  os << "\nSubject To\n";
  for (size_t i = 0; i < m.rows.size(); ++i) {
    const LpRow& r = m.rows[i];
    os << " " << GroupName(r.group) << "_" << i << ":";
    WriteTerms(os, r.terms, m);
    os << (r.equality ? " = " : " <= ") << r.rhs << "\n";
  }
  os << "End\n";
  return os.str();
}

namespace {

template <typename T>
int Sign(const T& v, double tol) {
  if constexpr (std::is_same_v<T, mpq_class>) {
    (void)tol;
    return sgn(v);
  } else {
    return v > tol ? 1 : (v < -tol ? -1 : 0);
  }
}

template <typename T>
double ToDouble(const T& v) {
  if constexpr (std::is_same_v<T, mpq_class>) {
    return v.get_d();
  } else {
    return v;
  }
}

// Dense tableau for max c.x subject to A x <= b, x >= 0, with b >= 0 so the
// slack basis is feasible from the start.
template <typename T>
class Tableau {
 public:
  Tableau(const LpModel& m, const LpOptions& opt)
      : rows_(static_cast<int>(m.rows.size())),
        vars_(static_cast<int>(m.variables.size())),
        width_(vars_ + rows_ + 1),
        tol_(opt.tolerance),
        streak_limit_(opt.degenerate_streak),
        cells_(static_cast<size_t>(rows_ + 1) * width_, T(0)),
        basis_(rows_) {
    for (int i = 0; i < rows_; ++i) {
      for (auto [j, coef] : m.rows[i].terms) at(i, j) += T(coef);
      at(i, vars_ + i) = T(1);
      at(i, width_ - 1) = T(m.rows[i].rhs);
      basis_[i] = vars_ + i;
    }
    for (int j = 0; j < vars_; ++j) at(rows_, j) = T(-m.objective[j]);
  }

  int Solve() {
    int pivots = 0, streak = 0;
    bool bland = false;
    std::vector<int> nonzero;
    while (true) {
      int enter = -1;
      for (int j = 0; j < width_ - 1; ++j) {
        if (Sign(at(rows_, j), tol_) >= 0) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (enter < 0 || at(rows_, j) < at(rows_, enter)) enter = j;
      }
      if (enter < 0) return pivots;
      int leave = -1;
      T best_ratio(0);
      for (int i = 0; i < rows_; ++i) {
        if (Sign(at(i, enter), tol_) <= 0) continue;
        T ratio = at(i, width_ - 1) / at(i, enter);
        if (leave < 0 || ratio < best_ratio ||
            (!(best_ratio < ratio) && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) {
        throw PricingError(ErrorKind::kInternal, "LP is unbounded");
      }
      if (Sign(best_ratio, tol_) == 0) {
        if (++streak >= streak_limit_) bland = true;
      } else {
        streak = 0;
      }
      Pivot(leave, enter, nonzero);
      ++pivots;
      if (pivots > 50'000'000 / std::max(1, rows_)) {
        throw PricingError(ErrorKind::kInternal, "simplex pivot limit");
      }
    }
  }

  T Value(int j) const {
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] == j) return at(i, width_ - 1);
    }
    return T(0);
  }
  T Dual(int i) const { return at(rows_, vars_ + i); }
  T Objective() const { return at(rows_, width_ - 1); }

 private:
  T& at(int i, int j) { return cells_[static_cast<size_t>(i) * width_ + j]; }
  const T& at(int i, int j) const {
    return cells_[static_cast<size_t>(i) * width_ + j];
  }

  void Pivot(int r, int c, std::vector<int>& nonzero) {
    const T inv = T(1) / at(r, c);
    nonzero.clear();
    for (int j = 0; j < width_; ++j) {
      if (Sign(at(r, j), 0.0) != 0) {
        at(r, j) *= inv;
        nonzero.push_back(j);
      }
    }
    at(r, c) = T(1);
    for (int i = 0; i <= rows_; ++i) {
      if (i == r || Sign(at(i, c), 0.0) == 0) continue;
      const T factor = at(i, c);
      for (int j : nonzero) at(i, j) -= factor * at(r, j);
      at(i, c) = T(0);
    }
    basis_[r] = c;
  }

  int rows_, vars_, width_;
  double tol_;
  int streak_limit_;
  std::vector<T> cells_;
  std::vector<int> basis_;
};

template <typename T>
LpSolution SolveWith(const LpModel& m, const LpOptions& opt) {
  Tableau<T> tableau(m, opt);
  LpSolution sol;
  sol.pivots = tableau.Solve();
  std::vector<T> x(m.variables.size());
  for (size_t j = 0; j < x.size(); ++j) x[j] = tableau.Value(static_cast<int>(j));
  // The choice rows were solved as <= 1. Topping up any y raises only the
  // right-hand sides of the load and link rows, so the repaired point stays
  // feasible with the same objective.
  for (const LpRow& r : m.rows) {
    if (!r.equality) continue;
    T sum(0);
    for (auto [j, coef] : r.terms) sum += T(coef) * x[j];
    const T gap = T(r.rhs) - sum;
    if (Sign(gap, 0.0) > 0 && !r.terms.empty()) x[r.terms.front().first] += gap;
  }
  sol.exact = std::is_same_v<T, mpq_class>;
  const T objective = tableau.Objective();
  sol.objective = ToDouble(objective);
  if constexpr (std::is_same_v<T, mpq_class>) {
    sol.exact_objective = objective.get_str();
  }
  for (const T& v : x) sol.values.push_back(ToDouble(v));
  for (int i = 0; i < static_cast<int>(m.rows.size()); ++i) {
    sol.duals.push_back(ToDouble(tableau.Dual(i)));
  }
  // Residuals, in double, against the original (equality) model.
  for (const LpRow& r : m.rows) {
    double lhs = 0;
    for (auto [j, coef] : r.terms) lhs += static_cast<double>(coef) * sol.values[j];
    const double excess = lhs - static_cast<double>(r.rhs);
    sol.primal_residual = std::max(
        sol.primal_residual, r.equality ? std::abs(excess) : std::max(0.0, excess));
  }
  for (double v : sol.values) sol.primal_residual = std::max(sol.primal_residual, -v);
  std::vector<double> reduced(m.variables.size());
  for (size_t j = 0; j < reduced.size(); ++j) {
    reduced[j] = -static_cast<double>(m.objective[j]);
  }
  for (size_t i = 0; i < m.rows.size(); ++i) {
    sol.dual_bound += sol.duals[i] * static_cast<double>(m.rows[i].rhs);
    sol.dual_residual = std::max(sol.dual_residual, -sol.duals[i]);
    for (auto [j, coef] : m.rows[i].terms) {
      reduced[j] += sol.duals[i] * static_cast<double>(coef);
    }
  }
  for (double r : reduced) sol.dual_residual = std::max(sol.dual_residual, -r);
  return sol;
}

}  // namespace

LpSolution SolveLp(const LpModel& model, const LpOptions& options) {
  if (model.variables.empty()) {
    LpSolution empty;
    empty.exact = true;
    empty.exact_objective = "0";
    empty.duals.assign(model.rows.size(), 0.0);
    return empty;
  }
  bool exact = options.arithmetic == LpArithmetic::kExact;
  if (options.arithmetic == LpArithmetic::kAuto) {
    const std::int64_t cells =
        static_cast<std::int64_t>(model.rows.size() + 1) *
        static_cast<std::int64_t>(model.variables.size() + model.rows.size() + 1);
    exact = cells <= options.exact_cell_limit;
  }
  return exact ? SolveWith<mpq_class>(model, options)
               : SolveWith<double>(model, options);
}

}  // namespace gpricing
