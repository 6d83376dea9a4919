// Copyright 2026 The movecover Authors
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

#include "movecover/cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "CLI11.hpp"
#include "json.hpp"
#include "movecover/instance.h"
#include "movecover/line_solver.h"
#include "movecover/oracle.h"
#include "movecover/planar.h"
#include "movecover/svg.h"

namespace movecover::cli {

namespace {

using json = nlohmann::json;

class BadArgs : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kAlgos = {"line-exact",    "line-partial",   "line-general",
                                         "planar-approx", "oracle-line",    "oracle-partial",
                                         "oracle-general"};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteOutput(const std::string& path, const std::string& data, std::ostream& out) {
  if (path == "-") {
    out << data;
    if (!data.empty() && data.back() != '\n') out << '\n';
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw BadArgs("cannot write " + path);
  f << data;
  if (!data.empty() && data.back() != '\n') f << '\n';
}

Point ParseOrigin(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw BadArgs("--grid-origin expects x,y");
  try {
    size_t used = 0;
    const double x = std::stod(text.substr(0, comma), &used);
    const double y = std::stod(text.substr(comma + 1));
    if (!std::isfinite(x) || !std::isfinite(y)) throw BadArgs("--grid-origin must be finite");
    return {x, y};
  } catch (const std::logic_error&) {
    throw BadArgs("--grid-origin expects x,y");
  }
}

CoverageShape ParseShape(const std::string& name) {
  return name == "square" ? CoverageShape::kSquare : CoverageShape::kDisk;
}

struct AlgoOptions {
  std::optional<int> k;
  UflBackend backend = UflBackend::kExact;
  Point grid_origin;
};

struct AlgoResult {
  Solution solution;
  json meta;  // null unless the algorithm reports metadata
};

AlgoResult RunAlgo(const Instance& inst, const std::string& algo, const AlgoOptions& opt) {
  const bool line_algo = algo != "planar-approx";
  if (line_algo && !IsLineInstance(inst)) {
    throw BadArgs(algo + " requires every target on y = 0");
  }
  const int n = static_cast<int>(inst.targets.size());
  auto required = [&]() {
    if (!opt.k) throw BadArgs(algo + " requires --k");
    if (*opt.k < 0 || *opt.k > n) {
      throw BadArgs("--k must lie in [0, " + std::to_string(n) + "]");
    }
    return *opt.k;
  };

  AlgoResult result;
  if (algo == "line-exact") {
    result.solution = SolveLineExact(inst);
  } else if (algo == "line-partial") {
    result.solution = SolveLinePartial(inst, required());
  } else if (algo == "line-general") {
    result.solution = SolveLineGeneral(inst);
  } else if (algo == "oracle-line") {
    result.solution = OracleLine(inst);
  } else if (algo == "oracle-partial") {
    result.solution = OraclePartial(inst, required());
  } else if (algo == "oracle-general") {
    result.solution = OracleGeneral(inst);
  } else if (algo == "planar-approx") {
    PlanarOptions popt;
    popt.backend = opt.backend;
    popt.grid_origin = opt.grid_origin;
    const PlanarResult pr = SolvePlanarApprox(inst, popt);
    result.solution = pr.solution;
    result.meta = {{"algo", algo},
                   {"ufl", std::string(BackendName(opt.backend))},
                   {"tokens", pr.token_count},
                   {"guarantee_factor", pr.guarantee_factor},
                   {"required_separation", pr.required_separation},
                   {"min_station_target_distance", pr.min_station_target_distance},
                   {"distance_assumption_holds", pr.distance_assumption_holds}};
  } else {
    throw BadArgs("unknown algorithm " + algo);
  }
  return result;
}

std::string SolutionJson(const AlgoResult& r) {
  if (r.meta.is_null()) return SerializeSolution(r.solution);
  json doc = json::parse(SerializeSolution(r.solution));
  doc["meta"] = r.meta;
  return doc.dump(2);
}

std::string Fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sensor deployment with opening and moving costs", "movecover"};
  app.require_subcommand(1);

  // gen
  GeneratorParams gen_params;
  std::string gen_kind = "line", gen_shape = "disk", gen_out = "-";
  std::uint64_t gen_seed = 0;
  double min_dist = -1.0;
  auto* gen = app.add_subcommand("gen", "Write a random instance as JSON");
  gen->add_option("--kind", gen_kind, "line | planar")->check(CLI::IsMember({"line", "planar"}));
  gen->add_option("--n", gen_params.n, "Number of targets")->check(CLI::PositiveNumber);
  gen->add_option("--m", gen_params.m, "Number of stations")->check(CLI::PositiveNumber);
  gen->add_option("--r", gen_params.radius, "Sensor radius")->check(CLI::PositiveNumber);
  gen->add_option("--extent", gen_params.extent, "Coordinate range")->check(CLI::PositiveNumber);
  gen->add_option("--cost-min", gen_params.cost_range.first, "Lowest opening cost");
  gen->add_option("--cost-max", gen_params.cost_range.second, "Highest opening cost");
  gen->add_option("--min-dist", min_dist, "Minimum station-target distance");
  gen->add_option("--shape", gen_shape, "disk | square")->check(CLI::IsMember({"disk", "square"}));
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--out", gen_out, "Output path, - for stdout");

  // solve
  std::string algo, in_path, out_path = "-", svg_path, ufl_name = "exact", origin_text, shape_override;
  std::optional<int> k;
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("--algo", algo, "Algorithm")->required()->check(CLI::IsMember(kAlgos));
  solve->add_option("--in", in_path, "Instance JSON")->required();
  solve->add_option("--out", out_path, "Solution JSON path, - for stdout");
  solve->add_option("--svg", svg_path, "Also render the solution as SVG");
  solve->add_option("--k", k, "Targets to cover (partial algorithms)");
  solve->add_option("--ufl", ufl_name, "exact | greedy")->check(CLI::IsMember({"exact", "greedy"}));
  solve->add_option("--grid-origin", origin_text, "Grid phase x,y");
  solve->add_option("--shape", shape_override, "Override coverage shape")
      ->check(CLI::IsMember({"disk", "square"}));

  // validate
  std::string sol_path;
  std::optional<int> validate_k;
  auto* validate = app.add_subcommand("validate", "Check a solution; exit 0 iff feasible");
  validate->add_option("--in", in_path, "Instance JSON")->required();
  validate->add_option("--sol", sol_path, "Solution JSON")->required();
  validate->add_option("--k", validate_k, "Required coverage (default: all targets)");

  // render
  auto* render = app.add_subcommand("render", "Draw an instance and solution as SVG");
  render->add_option("--in", in_path, "Instance JSON")->required();
  render->add_option("--sol", sol_path, "Solution JSON")->required();
  render->add_option("--svg", svg_path, "Output path, - for stdout")->required();

  // bench
  std::string bench_algos, csv_path = "-";
  int bench_seeds = 10;
  std::uint64_t seed_start = 0;
  auto* bench = app.add_subcommand("bench", "Run algorithms over a seeded family, write CSV");
  bench->add_option("--kind", gen_kind, "line | planar")->check(CLI::IsMember({"line", "planar"}));
  bench->add_option("--algos", bench_algos, "Comma-separated algorithms");
  bench->add_option("--seeds", bench_seeds, "Number of seeds")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed_start, "First seed");
  bench->add_option("--n", gen_params.n, "Number of targets")->check(CLI::PositiveNumber);
  bench->add_option("--m", gen_params.m, "Number of stations")->check(CLI::PositiveNumber);
  bench->add_option("--r", gen_params.radius, "Sensor radius")->check(CLI::PositiveNumber);
  bench->add_option("--extent", gen_params.extent, "Coordinate range")->check(CLI::PositiveNumber);
  bench->add_option("--min-dist", min_dist, "Minimum station-target distance");
  bench->add_option("--shape", gen_shape, "disk | square")->check(CLI::IsMember({"disk", "square"}));
  bench->add_option("--k", k, "Targets to cover (partial algorithms)");
  bench->add_option("--ufl", ufl_name, "exact | greedy")->check(CLI::IsMember({"exact", "greedy"}));
  bench->add_option("--grid-origin", origin_text, "Grid phase x,y");
  bench->add_option("--csv", csv_path, "Output path, - for stdout");

  std::vector<std::string> argv_store;
  argv_store.push_back("movecover");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadArgs;
  }

  try {
    AlgoOptions opt;
    opt.k = k;
    opt.backend = ufl_name == "greedy" ? UflBackend::kGreedy : UflBackend::kExact;
    if (!origin_text.empty()) opt.grid_origin = ParseOrigin(origin_text);
    gen_params.kind = gen_kind == "planar" ? InstanceKind::kPlanar : InstanceKind::kLine;
    gen_params.shape = ParseShape(gen_shape);
    if (min_dist >= 0.0) gen_params.min_station_target_dist = min_dist;

    if (gen->parsed()) {
      WriteOutput(gen_out, SerializeInstance(Generate(gen_params, gen_seed)), out);
      return kOk;
    }

    if (solve->parsed()) {
      Instance inst = ParseInstance(ReadFile(in_path));
      if (!shape_override.empty()) inst.shape = ParseShape(shape_override);
      if (inst.targets.empty() || inst.stations.empty()) {
        throw BadArgs("instance needs at least one target and one station");
      }
      const AlgoResult r = RunAlgo(inst, algo, opt);
      WriteOutput(out_path, SolutionJson(r), out);
      if (!svg_path.empty()) WriteOutput(svg_path, RenderSvg(inst, r.solution), out);
      return kOk;
    }

    if (validate->parsed()) {
      const Instance inst = ParseInstance(ReadFile(in_path));
      const Solution sol = ParseSolution(ReadFile(sol_path));
      const ValidationReport report = ValidateSolution(inst, sol, validate_k);
      json doc = {{"feasible", report.feasible},
                  {"covered_count", report.covered_count},
                  {"uncovered_targets", report.uncovered_targets},
                  {"recomputed_total", report.recomputed_total},
                  {"problems", report.problems}};
      out << doc.dump(2) << '\n';
      return report.feasible ? kOk : kFailure;
    }

    if (render->parsed()) {
      const Instance inst = ParseInstance(ReadFile(in_path));
      const Solution sol = ParseSolution(ReadFile(sol_path));
      WriteOutput(svg_path, RenderSvg(inst, sol), out);
      return kOk;
    }

    if (bench->parsed()) {
      std::vector<std::string> algos;
      if (bench_algos.empty()) {
        algos = gen_params.kind == InstanceKind::kLine
                    ? std::vector<std::string>{"line-exact", "line-general"}
                    : std::vector<std::string>{"planar-approx"};
      } else {
        std::stringstream ss(bench_algos);
        for (std::string a; std::getline(ss, a, ',');) {
          if (std::find(kAlgos.begin(), kAlgos.end(), a) == kAlgos.end()) {
            throw BadArgs("unknown algorithm " + a);
          }
          algos.push_back(a);
        }
      }
      if (!opt.k) opt.k = (gen_params.n + 1) / 2;

      struct Row {
        std::uint64_t seed;
        std::string algo;
        std::string line;
      };
      std::vector<Row> rows;
      for (int s = 0; s < bench_seeds; ++s) {
        const std::uint64_t seed = seed_start + static_cast<std::uint64_t>(s);
        const Instance inst = Generate(gen_params, seed);
        std::optional<double> lb;
        bool lb_done = false;
        for (const std::string& a : algos) {
          const auto start = std::chrono::steady_clock::now();
          const AlgoResult r = RunAlgo(inst, a, opt);
          const double ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
          std::string ratio;
          if (a == "planar-approx" && static_cast<int>(inst.stations.size()) <= kDefaultUflExactLimit) {
            if (!lb_done) {
              lb = SeparatedLowerBound(inst);
              lb_done = true;
            }
            if (lb && *lb > 0.0) ratio = Fmt(r.solution.total_cost / *lb);
          }
          rows.push_back({seed, a,
                          std::to_string(seed) + "," + std::to_string(gen_params.n) + "," +
                              std::to_string(gen_params.m) + "," + Fmt(gen_params.radius) + "," + a +
                              "," + Fmt(r.solution.total_cost) + "," + Fmt(ms) + "," + ratio});
        }
      }
      std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
        return std::tie(x.seed, x.algo) < std::tie(y.seed, y.algo);
      });
      std::string csv = "seed,n,m,r,algo,cost,runtime_ms,ratio_vs_lb\n";
      for (const Row& row : rows) csv += row.line + "\n";
      WriteOutput(csv_path, csv, out);
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const BadArgs& e) {
    err << "error: " << e.what() << '\n';
    return kBadArgs;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadArgs;
  } catch (const OracleGuardError& e) {
    err << "guard: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << '\n';
    return kFailure;
  }
  return kBadArgs;
}

}  // namespace movecover::cli
