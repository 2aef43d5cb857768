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

// gpricing: solve, generate, verify and bench from the command line.
//
// Results go to stdout; JSON-lines logs and error objects go to stderr.
// Exit codes: 0 ok, 1 verification failure, 2 invalid flags or input,
// 3 solver precondition or search limit, 4 girth not reached, 5 internal.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gpricing/ball_cover.h"
#include "gpricing/error.h"
#include "gpricing/generators.h"
#include "gpricing/graph.h"
#include "gpricing/lp.h"
#include "gpricing/matching.h"
#include "gpricing/oracle.h"
#include "gpricing/parallel.h"
#include "gpricing/swap_analysis.h"
#include "run.h"

namespace gpricing::cli {
namespace {

using Clock = std::chrono::steady_clock;

bool g_quiet = false;

void Log(const std::string& event, Json fields = Json::object()) {
  if (g_quiet) return;
  Json line = {{"level", "info"}, {"event", event}};
  line.update(fields);
  std::cerr << line.dump() << "\n";
}

int ExitCode(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return 2;
    case ErrorKind::kPrecondition: return 3;
    case ErrorKind::kLimitExceeded: return 3;
    case ErrorKind::kGirthNotReached: return 4;
    case ErrorKind::kInternal: return 5;
  }
  return 5;
}

int ReportError(const std::string& kind, const std::string& message,
                int code) {
  Json e = {{"level", "error"},
            {"error", kind},
            {"message", message},
            {"exit_code", code}};
  std::cerr << e.dump() << "\n";
  return code;
}

double Elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Json SolutionJson(const Prices& prices, const Allocation& a) {
  return Json::parse(WriteSolution({prices, a.accepted, a.revenue}));
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
  std::string input;
  std::string start;
  AlgorithmSpec spec;
  std::string lp_out;
};

int CmdSolve(const SolveArgs& args, int threads, bool timing) {
  const auto start = Clock::now();
  const InstanceFile file = ReadInstance(ReadFile(args.input));
  Log("solve_start", {{"input", args.input}, {"algorithm", args.spec.name}});
  if (!args.lp_out.empty()) {
    if (!file.is_lsided()) {
      throw PricingError(ErrorKind::kInvalidInput,
                         "--lp-out needs an L-sided instance");
    }
    WriteFile(args.lp_out, WriteLpFormat(BuildLp(file.lsided())));
  }
  AlgorithmSpec spec = args.spec;
  if (!args.start.empty()) spec.initial = ReadSolution(ReadFile(args.start)).prices;
  const RunOutput r = RunAlgorithm(file, spec, threads);
  Json out = SolutionJson(r.prices, r.allocation);
  Json meta = {{"algorithm", args.spec.name},
               {"parameters", SpecToJson(spec)}};
  meta.update(r.metadata);
  if (timing) meta["wall_time_s"] = Elapsed(start);
  out["metadata"] = meta;
  std::cout << out.dump() << "\n";
  Log("solve_done", {{"revenue", r.allocation.revenue}});
  return 0;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateArgs {
  std::string family;
  std::string out;
  int n = 4;
  int c = 2;
  int rho = 1;
  int t = 2;
  int base_size = 0;
  int max_attempts = 200;
  std::string graph;
  std::uint64_t seed = 1;
  RandomProfile profile;
  bool general = false;
};

std::string SidecarPath(const std::string& out) {
  const std::string ext = ".json";
  if (out.size() > ext.size() &&
      out.compare(out.size() - ext.size(), ext.size(), ext) == 0) {
    return out.substr(0, out.size() - ext.size()) + ".sidecar.json";
  }
  return out + ".sidecar.json";
}

Graph ReadGraph(const std::string& path) {
  Json j;
  try {
    j = Json::parse(ReadFile(path));
  } catch (const Json::exception& e) {
    throw PricingError(ErrorKind::kInvalidInput,
                       path + ": " + std::string(e.what()));
  }
  if (!j.is_object() || !j.contains("num_vertices") || !j.contains("edges") ||
      !j["num_vertices"].is_number_integer() || !j["edges"].is_array()) {
    throw PricingError(ErrorKind::kInvalidInput,
                       path + ": expected {\"num_vertices\": int, \"edges\": "
                              "[[a, b], ...]}");
  }
  Graph g;
  g.num_vertices = j["num_vertices"].get<int>();
  for (const Json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw PricingError(ErrorKind::kInvalidInput,
                         path + ": each edge must be a pair of integers");
    }
    const int a = e[0].get<int>(), b = e[1].get<int>();
    if (a < 0 || b < 0 || a >= g.num_vertices || b >= g.num_vertices) {
      throw PricingError(ErrorKind::kInvalidInput,
                         path + ": edge endpoint out of range");
    }
    g.edges.emplace_back(a, b);
  }
  return g;
}

Json GraphJson(const Graph& g) {
  Json edges = Json::array();
  for (auto [a, b] : g.edges) edges.push_back({a, b});
  return {{"num_vertices", g.num_vertices}, {"edges", edges}};
}

Json Reference(const LSidedInstance& inst, const Prices& prices,
               const std::string& provenance) {
  Json r = SolutionJson(prices, Val(inst, prices));
  r["provenance"] = provenance;
  return r;
}

void RequirePositive(int value, const char* flag) {
  if (value < 1) {
    throw PricingError(ErrorKind::kInvalidInput,
                       std::string(flag) + " must be at least 1");
  }
}

int CmdGenerate(const GenerateArgs& args) {
  Json sidecar = {{"version", kSchemaVersion}, {"family", args.family}};
  std::string instance_text;
  if (args.family == "single-gap") {
    RequirePositive(args.n, "--n");
    RequirePositive(args.c, "--C");
    const GapInstance g = GenSingleGap(args.n, args.c);
    instance_text = WriteInstance(g.instance);
    sidecar["parameters"] = {{"n", args.n}, {"C", args.c}};
    sidecar["references"] = {
        {"local", Reference(g.instance, g.local, "construction")},
        {"optimal", Reference(g.instance, g.optimal, "construction")}};
    sidecar["expected"] = {
        {"local_value", g.local_value},
        {"optimal_value", g.optimal_value},
        {"ratio", {{"numerator", 2 * args.n - 2}, {"denominator", args.n}}},
        {"provenance", "construction; local pricing is single-swap optimal"}};
  } else if (args.family == "multi-gap") {
    RequirePositive(args.c, "--C");
    RequirePositive(args.rho, "--rho");
    RequirePositive(args.t, "--t");
    const MultiGapInstance g =
        GenMultiGap(args.c, args.rho, args.t, args.base_size,
                    {args.seed, args.max_attempts});
    instance_text = WriteInstance(g.instance);
    sidecar["parameters"] = {{"C", args.c},
                             {"rho", args.rho},
                             {"t", args.t},
                             {"base_size", g.layer_size},
                             {"seed", args.seed}};
    sidecar["base_graph"] = GraphJson(g.base);
    sidecar["base_girth"] = Girth(g.base);
    Json arcs = Json::array();
    for (auto [a, b] : g.arcs) arcs.push_back({a, b});
    sidecar["arcs"] = arcs;
    sidecar["references"] = {
        {"local", Reference(g.instance, g.local, "construction")},
        {"optimal", Reference(g.instance, g.optimal, "construction")}};
    sidecar["expected"] = {
        {"local_value", g.local_value},
        {"optimal_value", g.optimal_value},
        {"ratio_lower_bound",
         {{"numerator", (2 * args.c - 1) * (args.t - 1)},
          {"denominator", args.c * args.t}}},
        {"provenance", "construction; base girth verified by BFS"}};
  } else if (args.family == "vc-hardness") {
    if (args.graph.empty()) {
      throw PricingError(ErrorKind::kInvalidInput,
                         "vc-hardness needs --graph PATH");
    }
    const Graph g = ReadGraph(args.graph);
    const LSidedInstance inst = GenVcHardness(g);
    const VertexCover cover = MinVertexCover(g);
    instance_text = WriteInstance(inst);
    sidecar["parameters"] = {{"graph", GraphJson(g)}};
    sidecar["references"] = {
        {"optimal", Reference(inst, VcPricing(g, cover.vertices),
                              "derived from a minimum vertex cover")}};
    sidecar["expected"] = {
        {"min_vertex_cover", cover.size},
        {"optimal_value", static_cast<Money>(g.edges.size()) +
                              2 * g.num_vertices - cover.size},
        {"provenance", "derived: m + 2n - k, k by exhaustive search"}};
  } else if (args.family == "random") {
    RandomProfile prof = args.profile;
    prof.lsided = !args.general;
    prof.seed = args.seed;
    const InstanceFile f = GenRandom(prof);
    instance_text = WriteInstance(f.instance, f.side ? &*f.side : nullptr);
    sidecar["parameters"] = {{"lsided", prof.lsided},
                             {"left", prof.left},
                             {"right", prof.right},
                             {"items", prof.items},
                             {"customers", prof.customers},
                             {"capacity_min", prof.capacity_min},
                             {"capacity_max", prof.capacity_max},
                             {"budget_min", prof.budget_min},
                             {"budget_max", prof.budget_max},
                             {"unbounded_prob", prof.unbounded_prob},
                             {"singleton_prob", prof.singleton_prob},
                             {"parallel_prob", prof.parallel_prob},
                             {"seed", prof.seed}};
    sidecar["references"] = Json::object();
  } else {
    throw PricingError(ErrorKind::kInvalidInput,
                       "unknown family '" + args.family + "'");
  }
  // Round-trip through the reader so nothing invalid is ever written.
  const InstanceFile check = ReadInstance(instance_text);
  const auto problems = check.is_lsided() ? Validate(check.lsided())
                                          : Validate(check.instance);
  if (!problems.empty()) {
    throw PricingError(ErrorKind::kInternal,
                       "generated instance is invalid: " + problems.front());
  }
  WriteFile(args.out, instance_text);
  WriteFile(SidecarPath(args.out), sidecar.dump() + "\n");
  Log("generated", {{"family", args.family},
                    {"out", args.out},
                    {"sidecar", SidecarPath(args.out)},
                    {"items", check.instance.num_items()},
                    {"customers", check.instance.num_customers()}});
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string instance;
  std::string solution;
  std::string reference;
  std::string sidecar;
  bool tau_check = false;
  int cover_c = 0;  // 0: from the sidecar, else 2
  int cover_d = 1;
};

Solution SolutionFromJson(const Json& j) { return ReadSolution(j.dump()); }

int CmdVerify(const VerifyArgs& args) {
  const InstanceFile file = ReadInstance(ReadFile(args.instance));
  std::vector<std::string> violations;
  Json report = {{"instance", args.instance}};

  Json side_json;
  if (!args.sidecar.empty()) {
    try {
      side_json = Json::parse(ReadFile(args.sidecar));
    } catch (const Json::exception& e) {
      throw PricingError(ErrorKind::kInvalidInput,
                         args.sidecar + ": " + std::string(e.what()));
    }
  }
  auto from_sidecar = [&](const char* key) {
    if (!side_json.is_object() || !side_json.contains("references") ||
        !side_json["references"].contains(key)) {
      throw PricingError(ErrorKind::kInvalidInput,
                         std::string("sidecar has no '") + key +
                             "' reference");
    }
    return SolutionFromJson(side_json["references"][key]);
  };

  std::optional<Solution> local;
  if (!args.solution.empty()) {
    local = ReadSolution(ReadFile(args.solution));
  } else if (!args.sidecar.empty()) {
    local = from_sidecar("local");
  } else {
    throw PricingError(ErrorKind::kInvalidInput,
                       "verify needs --solution or --sidecar");
  }
  for (const std::string& v :
       CheckFeasible(file.instance, local->prices, local->allocation())) {
    violations.push_back("solution: " + v);
  }

  if (args.tau_check) {
    if (!file.is_lsided()) {
      throw PricingError(ErrorKind::kInvalidInput,
                         "--tau-check needs an L-sided instance");
    }
    const LSidedInstance inst = file.lsided();
    const Solution optimal = args.reference.empty()
                                 ? from_sidecar("optimal")
                                 : ReadSolution(ReadFile(args.reference));
    for (const std::string& v :
         CheckFeasible(inst.base, optimal.prices, optimal.allocation())) {
      violations.push_back("reference: " + v);
    }
    if (violations.empty()) {
      int c = args.cover_c;
      if (c == 0) {
        c = side_json.is_object() && side_json.contains("parameters") &&
                    side_json["parameters"].contains("C")
                ? side_json["parameters"]["C"].get<int>()
                : 2;
      }
      const Allocation a = local->allocation();
      const Allocation a_star = optimal.allocation();
      const Pairing pairing = BuildPairing(inst, a_star, a);
      for (const std::string& v : CheckPairing(inst, a_star, a, pairing)) {
        violations.push_back("pairing: " + v);
      }
      const Digraph h = PairingDigraph(inst, pairing);
      const CoverReport cover = VerifyCover(h, ComputeTau(h, c, args.cover_d));
      for (const std::string& v : cover.violations) {
        violations.push_back("cover: " + v);
      }
      report["tau_check"] = {{"C", c},
                             {"d", args.cover_d},
                             {"arcs", h.arcs().size()},
                             {"max_in_degree", h.max_in_degree()}};
    }
  }

  report["violations"] = violations;
  report["status"] = violations.empty() ? "OK" : "FAIL";
  if (violations.empty()) {
    std::cout << "OK\n";
  } else {
    std::cout << "FAIL\n";
    for (const std::string& v : violations) std::cout << "  " << v << "\n";
  }
  Log("verified", report);
  return violations.empty() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::string suite;
  std::optional<int> seeds;
};

struct SuiteEntry {
  std::string name;
  std::string path;
  std::optional<double> bound;  // from the suite or a sidecar
  std::optional<Prices> local;  // sidecar "local" reference
};

// A suite algorithm plus where its local search starts.
struct BenchSpec {
  AlgorithmSpec spec;
  bool start_local = false;
};

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch == '\n' ? ' ' : ch;
  }
  return out + "\"";
}

std::string Number(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

BenchSpec SpecFromJson(const Json& j) {
  BenchSpec out;
  AlgorithmSpec& spec = out.spec;
  if (j.is_string()) {
    spec.name = j.get<std::string>();
    return out;
  }
  if (!j.is_object() || !j.contains("algorithm")) {
    throw PricingError(ErrorKind::kInvalidInput,
                       "suite algorithms must be names or objects with an "
                       "\"algorithm\" field");
  }
  try {
    spec.name = j["algorithm"].get<std::string>();
    spec.c = j.value("C", spec.c);
    spec.d = j.value("d", spec.d);
    if (j.contains("epsilon")) spec.epsilon = j["epsilon"].get<double>();
    spec.seed = j.value("seed", spec.seed);
    if (j.contains("seeds")) spec.seeds = j["seeds"].get<int>();
    spec.iter_cap = j.value("iter_cap", spec.iter_cap);
    spec.inner = j.value("inner", spec.inner);
    const std::string start = j.value("start", std::string("greedy"));
    if (start != "greedy" && start != "local") {
      throw PricingError(ErrorKind::kInvalidInput,
                         "suite algorithm: start must be greedy or local");
    }
    out.start_local = start == "local";
  } catch (const Json::exception& e) {
    throw PricingError(ErrorKind::kInvalidInput,
                       "suite algorithm: " + std::string(e.what()));
  }
  return out;
}

std::string Label(const BenchSpec& bench) {
  const AlgorithmSpec& spec = bench.spec;
  std::string out = spec.name;
  if (bench.start_local) out += " start=local";
  const Json p = SpecToJson(spec);
  for (auto it = p.begin(); it != p.end(); ++it) {
    out += " " + it.key() + "=" +
           (it->is_string() ? it->get<std::string>() : it->dump());
  }
  return out;
}

int CmdBench(const BenchArgs& args, int threads, bool timing) {
  Json suite;
  try {
    suite = Json::parse(ReadFile(args.suite));
  } catch (const Json::exception& e) {
    throw PricingError(ErrorKind::kInvalidInput,
                       args.suite + ": " + std::string(e.what()));
  }
  if (!suite.is_object() || !suite.contains("instances") ||
      !suite.contains("algorithms") || !suite["instances"].is_array() ||
      !suite["algorithms"].is_array()) {
    throw PricingError(ErrorKind::kInvalidInput,
                       args.suite + ": expected {\"instances\": [...], "
                                    "\"algorithms\": [...]}");
  }
  const std::filesystem::path dir =
      std::filesystem::path(args.suite).parent_path();
  auto resolve = [&dir](const std::string& p) {
    const std::filesystem::path path(p);
    return (path.is_absolute() ? path : dir / path).string();
  };
  std::vector<SuiteEntry> entries;
  for (const Json& j : suite["instances"]) {
    SuiteEntry e;
    if (j.is_string()) {
      e.name = j.get<std::string>();
    } else if (j.is_object() && j.contains("path")) {
      e.name = j["path"].get<std::string>();
      if (j.contains("bound")) e.bound = j["bound"].get<double>();
      if (j.contains("sidecar")) {
        const Json side =
            Json::parse(ReadFile(resolve(j["sidecar"].get<std::string>())));
        if (side.contains("references") &&
            side["references"].contains("local")) {
          e.local = SolutionFromJson(side["references"]["local"]).prices;
        }
        if (side.contains("expected") &&
            side["expected"].contains("optimal_value")) {
          e.bound = side["expected"]["optimal_value"].get<double>();
        }
      }
    } else {
      throw PricingError(ErrorKind::kInvalidInput,
                         "suite instances must be paths or objects with a "
                         "\"path\" field");
    }
    e.path = resolve(e.name);
    entries.push_back(e);
  }
  std::vector<BenchSpec> specs;
  for (const Json& j : suite["algorithms"]) {
    specs.push_back(SpecFromJson(j));
    if (args.seeds) specs.back().spec.seeds = args.seeds;
  }

  // Per instance: the reference bound, preferring the suite value, then the
  // exact oracle, then the LP optimum.
  struct Bound {
    std::optional<double> value;
    std::string source;
    std::optional<InstanceFile> file;
    std::string error;
  };
  std::vector<Bound> bounds(entries.size());
  ParallelFor(static_cast<int>(entries.size()), threads, [&](int i) {
    Bound& b = bounds[i];
    try {
      b.file = ReadInstance(ReadFile(entries[i].path));
    } catch (const PricingError& e) {
      b.error = std::string(ErrorKindName(e.kind())) + ": " + e.what();
      return;
    }
    if (entries[i].bound) {
      b.value = entries[i].bound;
      b.source = "suite";
      return;
    }
    try {
      b.value = static_cast<double>(
          b.file->is_lsided()
              ? ExactLSided(b.file->lsided(), {.threads = 1}).allocation.revenue
              : ExactFull(b.file->instance, {.threads = 1}).allocation.revenue);
      b.source = "exact";
    } catch (const PricingError&) {
      if (b.file->is_lsided()) {
        b.value = SolveLp(BuildLp(b.file->lsided())).objective;
        b.source = "lp";
      }
    }
  });

  const int rows = static_cast<int>(entries.size() * specs.size());
  std::vector<std::string> lines(rows);
  ParallelFor(rows, threads, [&](int row) {
    const int i = row / static_cast<int>(specs.size());
    const BenchSpec& bench = specs[row % specs.size()];
    AlgorithmSpec spec = bench.spec;
    const Bound& b = bounds[i];
    std::string revenue, ratio, mean, se, time, error;
    const auto start = Clock::now();
    if (!b.file) {
      error = b.error;
    } else if (bench.start_local && !entries[i].local) {
      error = "invalid_input: start=local needs a sidecar with a local "
              "reference";
    } else {
      if (bench.start_local) spec.initial = entries[i].local;
      try {
        const RunOutput r = RunAlgorithm(*b.file, spec, 1);
        revenue = std::to_string(r.allocation.revenue);
        if (b.value && r.allocation.revenue > 0) {
          ratio = Number(*b.value / static_cast<double>(r.allocation.revenue));
        }
        if (r.mean_revenue) mean = Number(*r.mean_revenue);
        if (r.standard_error) se = Number(*r.standard_error);
      } catch (const PricingError& e) {
        error = std::string(ErrorKindName(e.kind())) + ": " + e.what();
      }
    }
    if (timing) time = Number(Elapsed(start));
    std::string line = CsvField(entries[i].name) + "," +
                       CsvField(Label(bench)) + "," + revenue + "," +
                       (b.value ? Number(*b.value) : "") + "," + b.source +
                       "," + ratio + "," + mean + "," + se + "," + time + "," +
                       CsvField(error);
    lines[row] = line;
  });
  std::cout << "instance,algorithm,revenue,bound,bound_source,ratio,"
               "mean_revenue,standard_error,time_s,error\n";
  for (const std::string& line : lines) std::cout << line << "\n";
  Log("bench_done", {{"rows", rows}});
  return 0;
}

}  // namespace
}  // namespace gpricing::cli

int main(int argc, char** argv) {
  using namespace gpricing;
  using namespace gpricing::cli;
  CLI::App app{"Capacitated graph pricing toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = DefaultThreads();
  bool timing = false;
  app.add_option("--threads", threads,
                 "Worker threads (default: GPRICING_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--timing", timing, "Report wall-clock times");
  app.add_flag("--quiet", g_quiet, "Suppress informational logs");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve an instance");
  s->add_option("--input", solve.input, "Instance JSON")->required();
  s->add_option("--algorithm", solve.spec.name)
      ->required()
      ->check(CLI::IsMember({"single-swap", "multi-swap", "lp-large",
                             "lp-generic", "hybrid", "exact", "reduce4"}));
  s->add_option("--C", solve.spec.c, "Multi-swap capacity bound");
  s->add_option("--d", solve.spec.d, "Multi-swap depth");
  s->add_option("--epsilon", solve.spec.epsilon);
  s->add_option("--seed", solve.spec.seed);
  s->add_option("--seeds", solve.spec.seeds, "Rounding repetitions");
  s->add_option("--iter-cap", solve.spec.iter_cap,
                "Maximum val evaluations for local search");
  s->add_option("--inner", solve.spec.inner, "reduce4 L-sided solver")
      ->check(CLI::IsMember({"single-swap", "multi-swap", "exact"}));
  s->add_option("--lp-out", solve.lp_out, "Also write the LP in LP format");
  s->add_option("--start", solve.start,
                "Solution JSON whose prices start the local search");

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Generate an instance");
  g->add_option("--family", gen.family)
      ->required()
      ->check(CLI::IsMember({"single-gap", "multi-gap", "vc-hardness",
                             "random"}));
  g->add_option("--out", gen.out, "Instance path; sidecar goes next to it")
      ->required();
  g->add_option("--n", gen.n);
  g->add_option("--C", gen.c);
  g->add_option("--rho", gen.rho);
  g->add_option("--t", gen.t);
  g->add_option("--base-size", gen.base_size, "Base graph order (0: auto)");
  g->add_option("--max-attempts", gen.max_attempts);
  g->add_option("--graph", gen.graph, "Graph JSON for vc-hardness");
  g->add_option("--seed", gen.seed);
  g->add_option("--left", gen.profile.left);
  g->add_option("--right", gen.profile.right);
  g->add_option("--items", gen.profile.items);
  g->add_option("--customers", gen.profile.customers);
  g->add_option("--capacity-min", gen.profile.capacity_min);
  g->add_option("--capacity-max", gen.profile.capacity_max);
  g->add_option("--budget-min", gen.profile.budget_min);
  g->add_option("--budget-max", gen.profile.budget_max);
  g->add_option("--unbounded-prob", gen.profile.unbounded_prob);
  g->add_option("--singleton-prob", gen.profile.singleton_prob);
  g->add_option("--parallel-prob", gen.profile.parallel_prob);
  g->add_flag("--general", gen.general, "Random general (not L-sided)");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Check a solution");
  v->add_option("--instance", ver.instance)->required();
  v->add_option("--solution", ver.solution, "Solution (the local one for "
                                            "--tau-check)");
  v->add_option("--reference", ver.reference,
                "Optimal solution for --tau-check");
  v->add_option("--sidecar", ver.sidecar,
                "Take missing solutions from a generator sidecar");
  v->add_flag("--tau-check", ver.tau_check);
  v->add_option("--cover-C", ver.cover_c);
  v->add_option("--cover-d", ver.cover_d);

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run a suite, CSV on stdout");
  b->add_option("--suite", bench.suite)->required();
  b->add_option("--seeds", bench.seeds, "Override rounding repetitions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return ReportError("invalid_flags", e.what(), 2);
  }
  try {
    if (*s) return CmdSolve(solve, threads, timing);
    if (*g) return CmdGenerate(gen);
    if (*v) return CmdVerify(ver);
    return CmdBench(bench, threads, timing);
  } catch (const PricingError& e) {
    return ReportError(ErrorKindName(e.kind()), e.what(), ExitCode(e.kind()));
  } catch (const std::exception& e) {
    return ReportError("internal", e.what(), 5);
  }
}
