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

#include "run.h"

#include <cmath>
#include <utility>

#include "gpricing/error.h"
#include "gpricing/local_search.h"
#include "gpricing/lp.h"
#include "gpricing/lp_round.h"
#include "gpricing/oracle.h"
#include "gpricing/reduction.h"

namespace gpricing::cli {
namespace {

[[noreturn]] void Invalid(const std::string& message) {
  throw PricingError(ErrorKind::kInvalidInput, message);
}

LSidedInstance RequireLSided(const InstanceFile& file,
                             const std::string& algorithm) {
  if (!file.is_lsided()) {
    Invalid(algorithm + " needs an L-sided instance (a \"side\" array)");
  }
  return file.lsided();
}

SearchConfig Config(const AlgorithmSpec& spec, int threads) {
  SearchConfig config;
  config.max_evaluations = spec.iter_cap;
  config.threads = threads;
  return config;
}

RunOutput Output(Prices prices, Allocation allocation, Json metadata) {
  RunOutput out;
  out.prices = std::move(prices);
  out.allocation = std::move(allocation);
  out.metadata = std::move(metadata);
  return out;
}

Json SearchMetadata(const SearchResult& r) {
  return {{"iterations", r.steps},
          {"evaluations", r.evaluations},
          {"cap_hit", r.cap_hit}};
}

RunOutput Rounding(const LSidedInstance& inst, const AlgorithmSpec& spec,
                   bool large, int threads) {
  double scale = 0.5;
  if (large) {
    const double eps = spec.epsilon.value_or(0.2);
    if (!(eps > 0 && eps < 1)) Invalid("--epsilon must lie in (0, 1)");
    if (!IsSimple(inst.base)) {
      throw PricingError(ErrorKind::kPrecondition,
                         "lp-large needs a simple graph");
    }
    scale = 1 - eps;
  }
  const int k = spec.seeds.value_or(1);
  const LpModel model = BuildLp(inst);
  const LpSolution lp = SolveLp(model);
  const RoundingSummary s =
      RoundRepeatedly(inst, model, lp, scale, spec.seed, k, threads);
  RunOutput out;
  out.prices = s.best.prices;
  out.allocation = s.best.allocation;
  out.lp_bound = lp.objective;
  out.mean_revenue = s.mean_revenue;
  out.standard_error = s.stddev_revenue / std::sqrt(static_cast<double>(k));
  out.metadata = {{"scale", scale},
                  {"rounds", k},
                  {"lp_exact", lp.exact},
                  {"lp_pivots", lp.pivots},
                  {"mean_revenue", s.mean_revenue},
                  {"stddev_revenue", s.stddev_revenue},
                  {"discarded_items", s.best.discarded_items}};
  if (lp.exact) out.metadata["lp_exact_objective"] = lp.exact_objective;
  return out;
}

LSidedSolver InnerSolver(const AlgorithmSpec& spec, int threads) {
  if (spec.inner == "single-swap") {
    return [spec](const LSidedInstance& part) {
      const SearchResult r = SingleSwapSolve(part, std::nullopt, Config(spec, 1));
      return LiftedSolution{r.prices, r.allocation};
    };
  }
  if (spec.inner == "multi-swap") {
    return [spec](const LSidedInstance& part) {
      const SearchResult r =
          MultiSwapSolve(part, spec.c, spec.d, std::nullopt, Config(spec, 1));
      return LiftedSolution{r.prices, r.allocation};
    };
  }
  return [threads](const LSidedInstance& part) {
    const OracleResult r = ExactLSided(part, {.threads = threads});
    return LiftedSolution{r.prices, r.allocation};
  };
}

}  // namespace

void ValidateSpec(const AlgorithmSpec& spec) {
  static const char* const kNames[] = {"single-swap", "multi-swap", "lp-large",
                                       "lp-generic",  "hybrid",     "exact",
                                       "reduce4"};
  bool known = false;
  for (const char* n : kNames) known |= spec.name == n;
  if (!known) Invalid("unknown algorithm '" + spec.name + "'");
  if (spec.c < 1) Invalid("--C must be at least 1");
  if (spec.d < 0) Invalid("--d must be non-negative");
  if (spec.seeds.has_value() && *spec.seeds < 1) {
    Invalid("--seeds must be at least 1");
  }
  if (spec.iter_cap < 1) Invalid("--iter-cap must be at least 1");
  if (spec.inner != "single-swap" && spec.inner != "multi-swap" &&
      spec.inner != "exact") {
    Invalid("unknown --inner solver '" + spec.inner + "'");
  }
}

Json SpecToJson(const AlgorithmSpec& spec) {
  Json p = Json::object();
  const std::string& a = spec.name;
  if (a == "multi-swap" || (a == "reduce4" && spec.inner == "multi-swap")) {
    p["C"] = spec.c;
    p["d"] = spec.d;
  }
  if (a == "lp-large" || a == "hybrid") {
    p["epsilon"] = spec.epsilon.value_or(a == "hybrid" ? 0.01 : 0.2);
  }
  if (a == "lp-large" || a == "lp-generic" || a == "hybrid") {
    p["seed"] = spec.seed;
    p["seeds"] = spec.seeds.value_or(a == "hybrid" ? 32 : 1);
  }
  if (a == "single-swap" || a == "multi-swap" || a == "hybrid" ||
      a == "reduce4") {
    p["iter_cap"] = spec.iter_cap;
  }
  if (a == "reduce4") p["inner"] = spec.inner;
  if (spec.initial && (a == "single-swap" || a == "multi-swap")) {
    p["initial"] = *spec.initial;
  }
  return p;
}

RunOutput RunAlgorithm(const InstanceFile& file, const AlgorithmSpec& spec,
                       int threads) {
  ValidateSpec(spec);
  const std::string& a = spec.name;
  RunOutput out;
  if (a == "single-swap") {
    const SearchResult r = SingleSwapSolve(RequireLSided(file, a), spec.initial,
                                           Config(spec, threads));
    out = Output(r.prices, r.allocation, SearchMetadata(r));
  } else if (a == "multi-swap") {
    const SearchResult r = MultiSwapSolve(RequireLSided(file, a), spec.c,
                                          spec.d, spec.initial,
                                          Config(spec, threads));
    out = Output(r.prices, r.allocation, SearchMetadata(r));
    out.metadata["radius"] = SwapRadius(spec.c, spec.d);
    out.metadata["guarantee"] = MultiSwapGuarantee(spec.c, spec.d);
  } else if (a == "lp-large" || a == "lp-generic") {
    out = Rounding(RequireLSided(file, a), spec, a == "lp-large", threads);
  } else if (a == "hybrid") {
    HybridOptions options;
    options.epsilon = spec.epsilon.value_or(0.01);
    options.seed = spec.seed;
    options.rounds = spec.seeds.value_or(32);
    options.max_evaluations = spec.iter_cap;
    options.threads = threads;
    const HybridResult r = HybridSolve(RequireLSided(file, a), options);
    out.prices = r.prices;
    out.allocation = r.allocation;
    out.metadata = {{"path", HybridPathName(r.path)},
                    {"capacity", r.capacity},
                    {"guarantee", r.guarantee}};
    if (r.path == HybridPath::kMultiSwap) {
      out.metadata["d"] = r.d;
      out.metadata["cap_hit"] = r.cap_hit;
    }
    if (r.path == HybridPath::kRounding) {
      out.lp_bound = r.lp_objective;
      out.mean_revenue = r.mean_revenue;
      out.metadata["mean_revenue"] = r.mean_revenue;
    }
  } else if (a == "exact") {
    if (file.is_lsided()) {
      const OracleResult r = ExactLSided(file.lsided(), {.threads = threads});
      out = Output(r.prices, r.allocation, {{"pricings", r.pricings}});
    } else {
      const FullOracleResult r = ExactFull(file.instance, {.threads = threads});
      out = Output(r.prices, r.allocation,
                   {{"pricings", r.pricings},
                    {"full_integer_grid", r.full_integer_grid}});
    }
  } else {  // reduce4
    const ReductionResult r =
        SolveViaBipartitions(file.instance, InnerSolver(spec, threads), threads);
    out.prices = r.solution.prices;
    out.allocation = r.solution.allocation;
    out.metadata = {{"member", r.member}, {"family_size", r.family_size}};
  }
  if (out.lp_bound.has_value()) out.metadata["lp_bound"] = *out.lp_bound;
  return out;
}

}  // namespace gpricing::cli
