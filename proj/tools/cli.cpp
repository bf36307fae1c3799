// Copyright 2026 The Authors.
//
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

#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "teamform/teamform.hpp"

namespace teamform::cli {
namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string opt(const std::optional<double>& v) { return v ? num(*v) : std::string(); }
std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }

struct SolverRow {
  std::string kind;
  double lambda = 0.0;
  std::optional<double> beta;
  std::optional<int> tau;
  std::optional<double> coverage;
  std::optional<double> objective;
  std::optional<int> best_tau;
  std::optional<int> realized_lmax;
  std::optional<double> realized_objective;
  std::optional<double> wall_time_ms;
};

void put_row(std::ostringstream& csv, const SolverRow& r) {
  csv << r.kind << ',' << num(r.lambda) << ',' << opt(r.beta) << ',' << opt(r.tau) << ','
      << opt(r.coverage) << ',' << opt(r.objective) << ',' << opt(r.best_tau) << ','
      << opt(r.realized_lmax) << ',' << opt(r.realized_objective) << ',' << opt(r.wall_time_ms)
      << '\n';
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError(path + ": cannot open for writing");
  file << content;
  if (!file) throw InputError(path + ": write failed");
}

// The sidecar sits next to the CSV; nothing is written when the CSV goes to
// standard output.
void emit_assignment(const std::string& csv_path, const Assignment& assignment) {
  if (csv_path == "-") return;
  std::ostringstream tsv;
  write_assignment(assignment, tsv);
  emit(csv_path + ".assignment.tsv", tsv.str(), std::cout);
}

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  std::optional<double> elapsed_ms() const {
    if (!enabled_) return std::nullopt;
    const auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

std::string threshold_csv(const ThresholdResult& r, double lambda, std::optional<double> beta,
                          std::optional<double> wall_ms) {
  std::ostringstream csv;
  csv << kSolverCsvHeader << '\n';
  for (const auto& e : r.trace.entries) {
    SolverRow row{"trace", lambda, beta};
    row.tau = e.tau;
    row.coverage = e.coverage;
    row.objective = e.objective;
    put_row(csv, row);
  }
  SolverRow summary{"summary", lambda, beta};
  summary.coverage = r.coverage;
  summary.objective = r.trace.best_objective;
  summary.best_tau = r.trace.best_tau;
  summary.realized_lmax = r.realized_lmax;
  summary.realized_objective = r.realized_objective;
  summary.wall_time_ms = wall_ms;
  put_row(csv, summary);
  return csv.str();
}

SolverRow plain_row(std::string kind, const Assignment& a, double lambda, std::optional<double> beta) {
  SolverRow row{std::move(kind), lambda, beta};
  row.coverage = a.total_coverage();
  row.objective = a.objective(lambda);
  row.realized_lmax = a.max_load();
  row.realized_objective = row.objective;
  return row;
}

struct InstanceFlags {
  std::string experts;
  std::string tasks;

  void add_to(CLI::App* app) {
    app->add_option("--experts", experts, "experts file (id<TAB>skill,skill,...)")->required();
    app->add_option("--tasks", tasks, "tasks file (id<TAB>skill,skill,...)")->required();
  }
  Instance load() const { return parse_instance(experts, tasks); }
};

CoordinationGraph load_graph(const std::string& path, const Instance& instance) {
  const auto edges = parse_graph(path, instance);
  return metric_closure(instance.num_experts(), edges);
}

SearchMode search_option(const std::string& text) { return parse_search_mode(text); }

const std::vector<std::string> kSearchNames = {"linear", "exp_linear"};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Team formation solvers: balanced coverage with workload and network constraints"};
  app.name("teamform");
  app.require_subcommand(1);
  std::function<int()> action;

  // solve-balanced
  InstanceFlags bal_in;
  double bal_lambda = 0.0;
  std::string bal_search = "exp_linear";
  std::uint64_t bal_seed = 0;
  std::string bal_out;
  bool bal_fresh = false;
  bool bal_no_early_stop = false;
  bool bal_timing = false;
  auto* bal = app.add_subcommand("solve-balanced", "ThresholdGreedy on experts and tasks");
  bal_in.add_to(bal);
  bal->add_option("--lambda", bal_lambda, "balancing coefficient")->required()->check(CLI::PositiveNumber);
  bal->add_option("--search", bal_search, "threshold search")->check(CLI::IsMember(kSearchNames));
  bal->add_option("--seed", bal_seed, "accepted for uniformity; the solver is deterministic");
  bal->add_option("--out", bal_out, "CSV path or - for standard output")->required();
  bal->add_flag("--fresh", bal_fresh, "rerun greedy from scratch per threshold");
  bal->add_flag("--no-early-stop", bal_no_early_stop, "visit every threshold");
  bal->add_flag("--timing", bal_timing, "fill wall_time_ms");
  bal->callback([&] {
    action = [&] {
      const Instance instance = bal_in.load();
      ThresholdGreedyOptions options;
      options.search = search_option(bal_search);
      options.warm_start = !bal_fresh;
      options.early_stop = !bal_no_early_stop;
      const Stopwatch watch(bal_timing);
      const auto result = threshold_greedy(instance, bal_lambda, options);
      const auto wall = watch.elapsed_ms();
      emit(bal_out, threshold_csv(result, bal_lambda, std::nullopt, wall), out);
      emit_assignment(bal_out, result.assignment);
      return kExitOk;
    };
  });

  // solve-network
  InstanceFlags net_in;
  std::string net_graph;
  double net_lambda = 0.0;
  double net_radius = 0.0;
  std::string net_candidates = "R";
  int net_k = 5;
  bool net_no_early_stop = false;
  std::string net_matcher = "exact";
  std::string net_search = "exp_linear";
  std::uint64_t net_seed = 0;
  std::string net_out;
  bool net_timing = false;
  auto* net = app.add_subcommand("solve-network", "NThreshold with a coordination graph");
  net_in.add_to(net);
  net->add_option("--graph", net_graph, "graph file (a<TAB>b<TAB>weight)")->required();
  net->add_option("--lambda", net_lambda, "balancing coefficient")->required()->check(CLI::PositiveNumber);
  net->add_option("--radius", net_radius, "team radius bound")->required()->check(CLI::PositiveNumber);
  net->add_option("--candidates", net_candidates, "candidate teams: R or allr")
      ->check(CLI::IsMember({"R", "allr"}, CLI::ignore_case));
  net->add_option("--k", net_k, "radius splits for allr")->check(CLI::PositiveNumber);
  net->add_option("--matcher", net_matcher, "team matching: exact or greedy")
      ->check(CLI::IsMember({"exact", "greedy"}));
  net->add_option("--search", net_search, "threshold search")->check(CLI::IsMember(kSearchNames));
  net->add_option("--seed", net_seed, "accepted for uniformity; the solver is deterministic");
  net->add_option("--out", net_out, "CSV path or - for standard output")->required();
  net->add_flag("--no-early-stop", net_no_early_stop, "visit every threshold");
  net->add_flag("--timing", net_timing, "fill wall_time_ms");
  net->callback([&] {
    action = [&] {
      const Instance instance = net_in.load();
      const CoordinationGraph graph = load_graph(net_graph, instance);
      NThresholdConfig config;
      config.radius = net_radius;
      config.lambda = net_lambda;
      config.candidates = (net_candidates == "R" || net_candidates == "r") ? CandidateMode::kR : CandidateMode::kAllR;
      config.k = net_k;
      config.matcher = net_matcher == "exact" ? Matcher::kExact : Matcher::kGreedy;
      config.search = search_option(net_search);
      config.early_stop = !net_no_early_stop;
      const Stopwatch watch(net_timing);
      const auto result = nthreshold(instance, graph, config);
      const auto wall = watch.elapsed_ms();
      emit(net_out, threshold_csv(result, net_lambda, std::nullopt, wall), out);
      emit_assignment(net_out, result.assignment);
      return kExitOk;
    };
  });

  // lambda-sweep
  InstanceFlags sw_in;
  std::vector<double> sw_lambdas;
  std::string sw_search = "exp_linear";
  std::string sw_out;
  auto* sw = app.add_subcommand("lambda-sweep", "best threshold for a descending list of lambdas");
  sw_in.add_to(sw);
  sw->add_option("--lambdas", sw_lambdas, "descending comma list")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  sw->add_option("--search", sw_search, "threshold search")->check(CLI::IsMember(kSearchNames));
  sw->add_option("--out", sw_out, "CSV path or - for standard output")->required();
  sw->callback([&] {
    action = [&] {
      const Instance instance = sw_in.load();
      const auto report = lambda_sweep(instance, sw_lambdas, search_option(sw_search));
      std::ostringstream csv;
      csv << kSweepCsvHeader << '\n';
      for (const auto& r : report.rows) {
        csv << num(r.lambda) << ',' << r.best_tau << ',' << num(r.coverage) << ',' << r.max_load << ','
            << num(r.objective) << '\n';
      }
      emit(sw_out, csv.str(), out);
      return kExitOk;
    };
  });

  // baseline
  InstanceFlags base_in;
  std::string base_algo;
  std::optional<double> base_beta;
  std::optional<int> base_tau;
  std::optional<double> base_radius;
  std::string base_graph;
  double base_lambda = 1.0;
  std::string base_search = "exp_linear";
  std::uint64_t base_seed = 0;
  std::string base_out;
  bool base_timing = false;
  auto* base = app.add_subcommand("baseline", "comparison algorithms");
  base_in.add_to(base);
  base->add_option("--algo", base_algo, "task-greedy, no-update or greedy-individual")
      ->required()
      ->check(CLI::IsMember({"task-greedy", "no-update", "greedy-individual"}));
  base->add_option("--beta", base_beta, "gain floor; omitted means tune over the default grid")
      ->check(CLI::NonNegativeNumber);
  base->add_option("--tau", base_tau, "fixed workload for greedy-individual")->check(CLI::NonNegativeNumber);
  base->add_option("--radius", base_radius, "pairwise distance bound for greedy-individual")
      ->check(CLI::PositiveNumber);
  base->add_option("--graph", base_graph, "graph file for greedy-individual");
  base->add_option("--lambda", base_lambda, "balancing coefficient for reporting and tuning")
      ->check(CLI::PositiveNumber);
  base->add_option("--search", base_search, "threshold search")->check(CLI::IsMember(kSearchNames));
  base->add_option("--seed", base_seed, "shuffle seed for task-greedy");
  base->add_option("--out", base_out, "CSV path or - for standard output")->required();
  base->add_flag("--timing", base_timing, "fill wall_time_ms");
  base->callback([&] {
    if (base_algo == "greedy-individual" && (base_graph.empty() || !base_radius)) {
      throw CLI::ValidationError("greedy-individual requires --graph and --radius");
    }
    action = [&] {
      const Instance instance = base_in.load();
      BaselineConfig config;
      config.seed = base_seed;
      config.tau = base_tau;
      config.radius = base_radius;
      config.lambda = base_lambda;
      config.search = search_option(base_search);
      std::optional<CoordinationGraph> graph;
      if (base_algo == "greedy-individual") graph = load_graph(base_graph, instance);
      const Stopwatch watch(base_timing);
      std::ostringstream csv;
      csv << kSolverCsvHeader << '\n';
      if (graph) {
        // Each beta gets its own threshold search; the best realized objective wins.
        std::vector<double> grid(kBetaGrid.begin(), kBetaGrid.end());
        if (base_beta) grid = {*base_beta};
        std::optional<ThresholdResult> best;
        double best_beta = 0.0;
        for (double beta : grid) {
          config.beta = beta;
          ThresholdResult r = greedy_individual(instance, *graph, config);
          if (grid.size() > 1) put_row(csv, plain_row("beta", r.assignment, base_lambda, beta));
          if (!best || objective_less(best->realized_objective, r.realized_objective)) {
            best.emplace(std::move(r));
            best_beta = beta;
          }
        }
        for (const auto& e : best->trace.entries) {
          SolverRow row{"trace", base_lambda, best_beta};
          row.tau = e.tau;
          row.coverage = e.coverage;
          row.objective = e.objective;
          put_row(csv, row);
        }
        SolverRow summary = plain_row("summary", best->assignment, base_lambda, best_beta);
        summary.objective = best->trace.best_objective;
        summary.best_tau = best->trace.best_tau;
        summary.wall_time_ms = watch.elapsed_ms();
        put_row(csv, summary);
        emit(base_out, csv.str(), out);
        emit_assignment(base_out, best->assignment);
        return kExitOk;
      }
      auto solve = [&](double beta) {
        config.beta = beta;
        return base_algo == "task-greedy" ? task_greedy(instance, config) : no_update_greedy(instance, config);
      };
      std::vector<double> grid(kBetaGrid.begin(), kBetaGrid.end());
      if (base_beta) grid = {*base_beta};
      if (grid.size() > 1) {
        for (double beta : grid) put_row(csv, plain_row("beta", solve(beta), base_lambda, beta));
      }
      BetaTuning best = tune_beta(base_lambda, grid, solve);
      SolverRow summary = plain_row("summary", best.assignment, base_lambda, best.beta);
      summary.wall_time_ms = watch.elapsed_ms();
      put_row(csv, summary);
      emit(base_out, csv.str(), out);
      emit_assignment(base_out, best.assignment);
      return kExitOk;
    };
  });

  // oracle
  InstanceFlags or_in;
  double or_lambda = 1.0;
  std::optional<int> or_tau;
  int or_max_pairs = OracleLimits{}.max_pairs;
  std::string or_out;
  auto* orc = app.add_subcommand("oracle", "exhaustive optimum for tiny instances");
  or_in.add_to(orc);
  orc->add_option("--lambda", or_lambda, "balancing coefficient")->check(CLI::PositiveNumber);
  orc->add_option("--tau", or_tau, "report the best coverage under workload tau instead")
      ->check(CLI::NonNegativeNumber);
  orc->add_option("--max-pairs", or_max_pairs, "enumeration limit on experts x tasks")
      ->check(CLI::Range(1, 30));
  orc->add_option("--out", or_out, "CSV path or - for standard output")->required();
  orc->callback([&] {
    action = [&] {
      const Instance instance = or_in.load();
      OracleLimits limits;
      limits.max_pairs = or_max_pairs;
      std::ostringstream csv;
      csv << kSolverCsvHeader << '\n';
      if (or_tau) {
        SolverRow row{"summary", or_lambda};
        row.tau = *or_tau;
        row.coverage = brute_force_coverage_opt(instance, *or_tau, limits);
        put_row(csv, row);
        emit(or_out, csv.str(), out);
        return kExitOk;
      }
      const OracleSolution best = brute_force_opt(instance, or_lambda, limits);
      const Assignment a(instance, best.pairs);
      put_row(csv, plain_row("summary", a, or_lambda, std::nullopt));
      emit(or_out, csv.str(), out);
      emit_assignment(or_out, a);
      return kExitOk;
    };
  });

  // metrics
  InstanceFlags met_in;
  std::string met_graph;
  std::string met_assignment;
  std::string met_out;
  auto* met = app.add_subcommand("metrics", "team characteristics of an assignment");
  met_in.add_to(met);
  met->add_option("--graph", met_graph, "graph file")->required();
  met->add_option("--assignment", met_assignment, "assignment file (expert_id<TAB>task_id)")->required();
  met->add_option("--out", met_out, "CSV path or - for standard output")->required();
  met->callback([&] {
    action = [&] {
      const Instance instance = met_in.load();
      const CoordinationGraph graph = load_graph(met_graph, instance);
      const Assignment a = parse_assignment(met_assignment, instance);
      const TeamReport report = team_characteristics(a, instance, graph);
      std::ostringstream csv;
      csv << kMetricsCsvHeader << '\n';
      for (const auto& row : report.rows) {
        csv << "team," << instance.task_id(row.task) << ',' << row.size << ",," << num(row.radius) << ','
            << num(row.density) << ',' << opt(row.pairwise) << ",\n";
      }
      csv << "summary,," << (report.rows.empty() ? std::string() : num(report.avg_size)) << ','
          << report.max_size << ',' << (report.rows.empty() ? std::string() : num(report.avg_radius)) << ','
          << (report.rows.empty() ? std::string() : num(report.avg_density)) << ','
          << opt(report.avg_pairwise) << ',' << report.singleton_teams << '\n';
      emit(met_out, csv.str(), out);
      return kExitOk;
    };
  });

  // generate
  int gen_n = 0;
  int gen_m = 0;
  int gen_skills = 0;
  double gen_spe = 0.0;
  double gen_spt = 0.0;
  std::uint64_t gen_seed = 0;
  std::string gen_experts_out;
  std::string gen_tasks_out;
  auto* gen = app.add_subcommand("generate", "seeded synthetic instance");
  gen->add_option("--n", gen_n, "number of experts")->required()->check(CLI::PositiveNumber);
  gen->add_option("--m", gen_m, "number of tasks")->required()->check(CLI::PositiveNumber);
  gen->add_option("--skills", gen_skills, "size of the skill universe")->required()->check(CLI::PositiveNumber);
  gen->add_option("--skills-per-expert", gen_spe, "average skills per expert")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--skills-per-task", gen_spt, "average skills per task")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--experts-out", gen_experts_out, "experts file to write")->required();
  gen->add_option("--tasks-out", gen_tasks_out, "tasks file to write")->required();
  gen->callback([&] {
    action = [&] {
      const Instance instance = generate_instance(gen_n, gen_m, gen_skills, gen_spe, gen_spt, gen_seed);
      std::ostringstream experts;
      std::ostringstream tasks;
      write_instance(instance, experts, tasks);
      emit(gen_experts_out, experts.str(), out);
      emit(gen_tasks_out, tasks.str(), out);
      return kExitOk;
    };
  });

  // build-graph
  InstanceFlags bg_in;
  std::string bg_kind;
  std::string bg_pairs;
  double bg_f = 0.1;
  std::string bg_out;
  auto* bg = app.add_subcommand("build-graph", "coordination graph from skills or co-occurrence counts");
  bg_in.add_to(bg);
  bg->add_option("--kind", bg_kind, "jaccard or cooccurrence")
      ->required()
      ->check(CLI::IsMember({"jaccard", "cooccurrence"}));
  bg->add_option("--pairs", bg_pairs, "pair counts file (a<TAB>b<TAB>count) for cooccurrence");
  bg->add_option("--f", bg_f, "decay rate for cooccurrence weights")->check(CLI::NonNegativeNumber);
  bg->add_option("--out", bg_out, "graph path or - for standard output")->required();
  bg->callback([&] {
    if (bg_kind == "cooccurrence" && bg_pairs.empty()) {
      throw CLI::ValidationError("cooccurrence requires --pairs");
    }
    action = [&] {
      const Instance instance = bg_in.load();
      std::vector<Edge> edges;
      if (bg_kind == "jaccard") {
        edges = build_jaccard_graph(instance);
      } else {
        edges = build_cooccurrence_graph(parse_pair_counts(bg_pairs, instance), bg_f);
      }
      std::ostringstream text;
      write_graph(instance, edges, text);
      emit(bg_out, text.str(), out);
      return kExitOk;
    };
  });

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("teamform");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "teamform: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    err << "teamform: " << e.what() << '\n';
    return kExitSolver;
  }
}

}  // namespace teamform::cli
