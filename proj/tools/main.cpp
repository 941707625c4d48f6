// freespan: generate, solve, verify and benchmark decoupled spanner instances.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "freespan/cuts.hpp"
#include "freespan/demo.hpp"
#include "freespan/errors.hpp"
#include "freespan/exact.hpp"
#include "freespan/generators.hpp"
#include "freespan/greedy.hpp"
#include "freespan/harness.hpp"
#include "freespan/instance_io.hpp"
#include "freespan/mcf.hpp"
#include "freespan/mps.hpp"
#include "freespan/potential.hpp"
#include "json.hpp"

namespace {

using namespace freespan;
using Json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kFailure = 1, kInvalid = 2, kInfeasible = 3, kInternal = 4 };

struct Globals {
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  std::string format;
  bool mst_lift = false;
  std::string gamma_mode = "global";
  double confidence = 2.0;
  std::size_t max_attempts = 10;
  std::size_t exact_cap = kDefaultExactCap;
  bool timings = false;
  bool no_presolve = false;
  std::string output;
};

struct GenFlags {
  std::string family = "decoupled";
  std::string demands = "freeform";
  std::size_t n = 8;
  std::size_t m = 12;
  bool directed = false;
  std::int64_t max_weight = 10;
  std::int64_t max_length = 4;
  std::string alpha = "3";
  std::int64_t beta = 2;
  std::string slack = "2";
  std::size_t pairs = 0;
};

void add_generator_flags(CLI::App* cmd, GenFlags& g) {
  cmd->add_option("--n", g.n, "Node count")->capture_default_str();
  cmd->add_option("--m", g.m, "Edge count (ignored by geometric)")->capture_default_str();
  cmd->add_flag("--directed", g.directed, "Generate a directed graph");
  cmd->add_option("--demands", g.demands, "mult-edges | mult-all | additive | freeform")
      ->capture_default_str();
  cmd->add_option("--max-weight", g.max_weight, "Largest integer weight")->capture_default_str();
  cmd->add_option("--max-length", g.max_length, "Largest integer length")->capture_default_str();
  cmd->add_option("--alpha", g.alpha, "Multiplicative stretch (p/q)")->capture_default_str();
  cmd->add_option("--beta", g.beta, "Additive surplus")->capture_default_str();
  cmd->add_option("--slack", g.slack, "Freeform demands lie in [d, slack*d]")->capture_default_str();
  cmd->add_option("--pairs", g.pairs, "Freeform pair count (0 = all)")->capture_default_str();
}

GeneratorParams generator_params(const GenFlags& g, std::uint64_t seed) {
  GeneratorParams p;
  auto family = parse_graph_family(g.family);
  if (!family) throw CLI::ValidationError("family", "unknown graph family '" + g.family + "'");
  auto demands = parse_demand_family(g.demands);
  if (!demands) throw CLI::ValidationError("--demands", "unknown demand family '" + g.demands + "'");
  p.family = *family;
  p.demands = *demands;
  p.n = g.n;
  p.m = g.m;
  p.directed = g.directed;
  p.max_weight = g.max_weight;
  p.max_length = g.max_length;
  p.alpha = Rational::parse(g.alpha);
  p.beta = g.beta;
  p.slack = Rational::parse(g.slack);
  p.pairs = g.pairs;
  p.seed = seed;
  return p;
}

SolveOptions solve_options(const Globals& g) {
  SolveOptions o;
  o.mst_lift = g.mst_lift;
  auto mode = parse_gamma_mode(g.gamma_mode);
  if (!mode) throw CLI::ValidationError("--gamma-mode", "expected global, restricted or custom");
  o.gamma_mode = *mode;
  o.confidence = g.confidence;
  o.seed = g.seed;
  o.max_attempts = g.max_attempts;
  o.exact_cap = g.exact_cap;
  o.presolve = !g.no_presolve;
  return o;
}

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty() || g.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out) throw Error("cannot write " + g.output);
  out << text;
}

SpannerInstance load_valid(const std::string& path) {
  SpannerInstance inst = load_instance(path);
  require_valid(inst);
  return inst;
}

std::vector<EdgeId> load_solution_edges(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open solution file " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  std::vector<EdgeId> edges;
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError(path + ": missing edges array");
  for (const auto& e : doc["edges"]) {
    edges.push_back(e.is_object() ? e.at("index").get<EdgeId>() : e.get<EdgeId>());
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::vector<EdgeId> parse_edge_list(const std::string& list) {
  std::vector<EdgeId> edges;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) edges.push_back(std::stoul(item));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::string verdict_text(const SpannerInstance& inst, const Verdict& verdict) {
  std::ostringstream out;
  if (verdict.feasible()) {
    out << "feasible\n";
    return out.str();
  }
  out << "infeasible: " << verdict.violations.size() << " violated pair(s)\n";
  for (const auto& v : verdict.violations) {
    (void)inst;
    out << "  (" << v.source << "," << v.target << ") delta " << v.delta << " achieved "
        << (v.achieved ? v.achieved->str() : std::string("unreachable")) << "\n";
  }
  return out.str();
}

std::string solve_csv(const SpannerInstance& inst, const SolveOutcome& o, bool timings) {
  ExperimentResult r;
  MetricsRow row;
  row.algorithm = to_string(o.algorithm);
  row.n = inst.n;
  row.m = inst.edges.size();
  row.k = inst.demands.size();
  row.ok = true;
  row.outcome = o;
  r.rows.push_back(row);
  return format_csv(r, timings);
}

int run(int argc, char** argv) {
  CLI::App app{"Decoupled freeform spanner solvers, oracles and benchmarks"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Master random seed")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for batch runs")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--mst-lift", g.mst_lift, "Raise W* to w(MST) (undirected, connected-spanning families)");
  app.add_option("--gamma-mode", g.gamma_mode, "global | restricted | custom")->capture_default_str();
  app.add_option("--confidence", g.confidence, "Confidence t of the custom gamma mode")
      ->capture_default_str();
  app.add_option("--max-attempts", g.max_attempts, "Rounding attempts")->capture_default_str();
  app.add_option("--exact-cap", g.exact_cap, "Edge cap of the exact oracle")->capture_default_str();
  app.add_flag("--timings", g.timings, "Include wall-clock timings in outputs");
  app.add_flag("--no-presolve", g.no_presolve, "Solve the full flow LP without presolve");
  app.add_option("-o,--output", g.output, "Output file (default stdout)");
  app.fallthrough();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  std::string gen_name;
  GenFlags gen_flags;
  gen->add_option("family", gen_name,
                  "Graph family (decoupled, coupled, unit-length, unit-weight, basic, geometric, "
                  "anti-correlated) or a fixed instance (example5, triangle, triangle-metric, subdivision)")
      ->required();
  add_generator_flags(gen, gen_flags);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  std::string solve_path;
  std::string algorithm_name = "augmented-greedy";
  solve_cmd->add_option("instance", solve_path, "Instance file")->required();
  solve_cmd->add_option("-a,--algorithm", algorithm_name,
                        "greedy | augmented-greedy | randomized-rounding | exact")
      ->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "Validate an instance and optionally check a subgraph");
  std::string verify_path;
  std::string verify_solution;
  std::string verify_edges;
  bool verify_metric = false;
  verify->add_option("instance", verify_path, "Instance file")->required();
  verify->add_option("--solution", verify_solution, "Solution file written by solve");
  verify->add_option("--edges", verify_edges, "Comma-separated edge indices");
  verify->add_flag("--metric-pairs", verify_metric, "Also list the metric terminal pairs");

  // bench
  auto* bench = app.add_subcommand("bench", "Run a batch experiment");
  GenFlags bench_flags;
  std::string bench_family = "decoupled";
  std::size_t bench_instances = 10;
  std::size_t bench_trials = 1;
  std::vector<std::string> bench_algorithms{"augmented-greedy", "exact"};
  bool bench_no_opt = false;
  bench->add_option("--family", bench_family, "Graph family")->capture_default_str();
  add_generator_flags(bench, bench_flags);
  bench->add_option("--instances", bench_instances, "Instances to generate")->capture_default_str();
  bench->add_option("--trials", bench_trials, "Trials per instance and algorithm")->capture_default_str();
  bench->add_option("--algorithms", bench_algorithms, "Algorithms to run")->delimiter(',');
  bench->add_flag("--no-opt", bench_no_opt, "Skip the exact optimum and ratios");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Reference oracles");
  oracle->require_subcommand(1);
  auto* o_exact = oracle->add_subcommand("exact", "Exact optimum by branch and bound");
  std::string o_exact_path;
  o_exact->add_option("instance", o_exact_path)->required();
  auto* o_cuts = oracle->add_subcommand("cuts", "Ascending-cut check of a subgraph");
  std::string o_cuts_path;
  std::string o_cuts_solution;
  std::string o_cuts_edges;
  std::size_t o_cuts_samples = 32;
  o_cuts->add_option("instance", o_cuts_path)->required();
  o_cuts->add_option("--solution", o_cuts_solution, "Subgraph from a solution file (default: G)");
  o_cuts->add_option("--edges", o_cuts_edges, "Comma-separated edge indices (default: G)");
  o_cuts->add_option("--samples", o_cuts_samples, "Non-ascending cuts sampled per pair")
      ->capture_default_str();
  auto* o_demo = oracle->add_subcommand("demo", "Subdivision counterexample");
  std::int64_t demo_length = 3;
  std::int64_t demo_alpha = 2;
  o_demo->add_option("--length", demo_length)->capture_default_str();
  o_demo->add_option("--alpha", demo_alpha)->capture_default_str();
  auto* o_pot = oracle->add_subcommand("potential", "Potential monitor over augmented greedy");
  std::string o_pot_path;
  std::int64_t pot_beta = 2;
  o_pot->add_option("instance", o_pot_path)->required();
  o_pot->add_option("--beta", pot_beta)->capture_default_str();

  // export-lp
  auto* export_lp = app.add_subcommand("export-lp", "Write the flow LP in free MPS format");
  std::string export_path;
  bool export_solve = false;
  export_lp->add_option("instance", export_path)->required();
  export_lp->add_flag("--solve", export_solve, "Also solve with the bundled solver and report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  const SolveOptions options = solve_options(g);

  if (*gen) {
    SpannerInstance inst;
    if (auto named = named_instance(gen_name)) {
      inst = *named;
    } else {
      gen_flags.family = gen_name;
      inst = generate(generator_params(gen_flags, g.seed));
    }
    emit(g, format_instance(inst));
    return kOk;
  }

  if (*solve_cmd) {
    auto algorithm = parse_algorithm(algorithm_name);
    if (!algorithm) throw CLI::ValidationError("--algorithm", "unknown algorithm '" + algorithm_name + "'");
    const SpannerInstance inst = load_valid(solve_path);
    const SolveOutcome outcome = solve(inst, *algorithm, options);
    emit(g, g.format == "csv" ? solve_csv(inst, outcome, g.timings)
                              : format_solution(inst, outcome, g.timings));
    std::cerr << to_string(outcome.algorithm) << ": weight " << outcome.weight << ", "
              << outcome.edges.size() << " edges, " << (outcome.feasible ? "feasible" : "INFEASIBLE")
              << "\n";
    return outcome.feasible ? kOk : kInfeasible;
  }

  if (*verify) {
    const SpannerInstance inst = load_instance(verify_path);
    const ValidationReport report = validate(inst);
    std::ostringstream out;
    if (!report.ok()) {
      out << "invalid instance\n" << report.summary();
      emit(g, out.str());
      return kInvalid;
    }
    out << "valid instance: n=" << inst.n << " m=" << inst.edges.size() << " k=" << inst.demands.size()
        << "\n";
    if (verify_metric) {
      out << "metric pairs:";
      for (std::size_t k : reduce_to_metric_pairs(inst)) {
        out << " (" << inst.demands[k].source << "," << inst.demands[k].target << ")";
      }
      out << "\n";
    }
    int code = kOk;
    if (!verify_solution.empty() || !verify_edges.empty()) {
      auto edges = verify_solution.empty() ? parse_edge_list(verify_edges) : load_solution_edges(verify_solution);
      for (EdgeId e : edges) {
        if (e >= inst.edges.size()) throw ValidationError("edge index " + std::to_string(e) + " out of range");
      }
      const Verdict verdict = verify_feasible(inst, mask_of(inst.edges.size(), edges));
      out << "subgraph: " << edges.size() << " edges, weight " << weight_of(inst, edges) << "\n";
      out << verdict_text(inst, verdict);
      if (!verdict.feasible()) code = kInfeasible;
    }
    emit(g, out.str());
    return code;
  }

  if (*bench) {
    ExperimentConfig config;
    bench_flags.family = bench_family;
    config.generator = generator_params(bench_flags, g.seed);
    config.instances = bench_instances;
    config.trials = bench_trials;
    config.algorithms.clear();
    for (const auto& name : bench_algorithms) {
      auto a = parse_algorithm(name);
      if (!a) throw CLI::ValidationError("--algorithms", "unknown algorithm '" + name + "'");
      config.algorithms.push_back(*a);
    }
    config.with_opt = !bench_no_opt;
    config.options = options;
    config.threads = g.threads;
    const ExperimentResult result = run_experiment(config);
    emit(g, g.format == "json" ? format_json(result, g.timings) : format_csv(result, g.timings));
    for (const auto& s : result.summary) {
      std::cerr << s.algorithm << ": " << s.cells << " cells, " << s.failures << " failures, "
                << s.feasible << " feasible";
      if (s.max_ratio) std::cerr << ", mean ratio " << *s.mean_ratio << ", max ratio " << *s.max_ratio;
      std::cerr << "\n";
    }
    return kOk;
  }

  if (*o_exact) {
    const SpannerInstance inst = load_valid(o_exact_path);
    const SolveOutcome outcome = solve(inst, Algorithm::Exact, options);
    emit(g, format_solution(inst, outcome, g.timings));
    return kOk;
  }

  if (*o_cuts) {
    const SpannerInstance inst = load_valid(o_cuts_path);
    const IntegerInstance view = require_integer_lengths(inst);
    EdgeMask mask;
    if (!o_cuts_solution.empty()) mask = mask_of(inst.edges.size(), load_solution_edges(o_cuts_solution));
    if (!o_cuts_edges.empty()) mask = mask_of(inst.edges.size(), parse_edge_list(o_cuts_edges));
    if (mask.empty()) mask.assign(inst.edges.size(), true);
    const CutLemmaReport report = check_cut_lemma(view, mask, o_cuts_samples, g.seed);
    if (g.format == "json") {
      Json pairs = Json::array();
      for (const auto& p : report.pairs) {
        const Demand& d = inst.demands[p.demand];
        pairs.push_back({{"u", d.source},
                         {"v", d.target},
                         {"delta", view.deltas[p.demand]},
                         {"cuts", p.cuts},
                         {"unsatisfied", p.unsatisfied},
                         {"distance_ok", p.distance_ok},
                         {"non_ascending_sampled", p.non_ascending_sampled}});
      }
      emit(g, Json{{"pairs", pairs}, {"consistent", true}}.dump(1) + "\n");
    } else {
      std::ostringstream out;
      for (const auto& p : report.pairs) {
        const Demand& d = inst.demands[p.demand];
        out << "(" << d.source << "," << d.target << ") delta " << view.deltas[p.demand] << ": "
            << p.cuts << " ascending cuts, " << p.unsatisfied << " unsatisfied, distance "
            << (p.distance_ok ? "ok" : "violated") << ", " << p.non_ascending_sampled
            << " non-ascending samples satisfied\n";
      }
      out << "cut lemma consistent on all pairs\n";
      emit(g, out.str());
    }
    return kOk;
  }

  if (*o_demo) {
    const DemoReport report = subdivision_demo(demo_length, demo_alpha);
    emit(g, g.format == "json" ? report.json() : report.text());
    return kOk;
  }

  if (*o_pot) {
    const SpannerInstance inst = load_valid(o_pot_path);
    const AugmentedGreedyResult run = augmented_greedy(inst, {.mst_lift = g.mst_lift});
    const MonitorReport report = potential_monitor(inst, run.trace, pot_beta, false);
    emit(g, g.format == "json" ? report.json() : report.text());
    if (!report.monotone()) {
      std::cerr << "potential increased on " << report.violations << " step(s)\n";
      return kInternal;
    }
    return kOk;
  }

  if (*export_lp) {
    const SpannerInstance inst = load_valid(export_path);
    const IntegerInstance view = require_integer_lengths(inst);
    const McfModel model = build_mcf(view);
    emit(g, format_mps(model.lp));
    std::cerr << "columns " << model.lp.col_count() << ", rows " << model.lp.row_count() << " ("
              << model.coupling_rows << " coupling, " << model.conservation_rows << " conservation)\n";
    if (export_solve) {
      SimplexBackend backend;
      const FractionalSolution sol = solve_lp(model, backend, {.presolve = options.presolve});
      std::cerr << "objective " << std::setprecision(12) << sol.objective << "\n";
    }
    return kOk;
  }
  return kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const freespan::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const freespan::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const freespan::NonIntegerLength& e) {
    std::cerr << "error: NonIntegerLength: " << e.what() << "\n";
    return kInvalid;
  } catch (const freespan::TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const freespan::TooManyCuts& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const freespan::OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const freespan::InfeasibleInstance& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const freespan::UnsatisfiableDemand& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const freespan::SolverFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const freespan::LemmaViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const freespan::MonotonicityViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
