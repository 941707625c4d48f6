// Acceptance suite: one PASS/FAIL line per criterion. Usage:
//   freespan_acceptance <path-to-freespan-cli> [scratch-dir]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "freespan/cuts.hpp"
#include "freespan/demo.hpp"
#include "freespan/errors.hpp"
#include "freespan/exact.hpp"
#include "freespan/extension.hpp"
#include "freespan/generators.hpp"
#include "freespan/greedy.hpp"
#include "freespan/harness.hpp"
#include "freespan/instance_io.hpp"
#include "freespan/mcf.hpp"
#include "freespan/potential.hpp"
#include "freespan/rounding.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace freespan;
using Json = nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

std::string g_cli;
fs::path g_dir;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Runs the CLI with `args`, stdout into `out`; returns the exit status.
int cli(const std::string& args, const fs::path& out) {
  const std::string cmd = "\"" + g_cli + "\" " + args + " > \"" + out.string() + "\" 2>> \"" +
                          (g_dir / "stderr.log").string() + "\"";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

int g_failures = 0;

void report(const char* id, const char* title, Check& v) {
  std::cout << id << ' ' << (v.pass ? "PASS" : "FAIL") << "  " << title << "  [" << v.detail.str() << "]"
            << std::endl;
  if (!v.pass) ++g_failures;
}

Rational weight_in(const Json& doc) { return Rational::parse(doc.at("weight").get<std::string>()); }

std::vector<EdgeId> edges_in(const Json& doc) {
  std::vector<EdgeId> out;
  for (const auto& e : doc.at("edges")) out.push_back(e.at("index").get<EdgeId>());
  return out;
}

std::vector<SpannerInstance> random_suite() {
  std::vector<SpannerInstance> out;
  for (std::uint64_t i = 0; i < 200; ++i) {
    GeneratorParams p;
    p.family = GraphFamily::Decoupled;
    p.demands = DemandFamily::Freeform;
    p.n = 4 + i % 5;
    p.m = std::min<std::size_t>(16, p.n + 2 + i % 9);
    p.directed = i % 3 == 0;
    p.max_length = 3;
    p.seed = 5000 + i;
    out.push_back(generate(p));
  }
  return out;
}

// AC1
void example5_exactness() {
  Check v;
  const fs::path inst = g_dir / "example5.json";
  v.require(cli("gen example5 -o \"" + inst.string() + "\"", g_dir / "gen.out") == 0, "gen example5");
  const std::vector<EdgeId> want{1, 2};  // (a,c), (c,b)
  double worst = 0;
  auto run = [&](const std::string& algo, std::uint64_t seed) {
    const fs::path out = g_dir / ("ex5_" + algo + "_" + std::to_string(seed) + ".json");
    const auto t0 = Clock::now();
    const int rc = cli("--seed " + std::to_string(seed) + " solve \"" + inst.string() + "\" --algorithm " + algo +
                           " -o \"" + out.string() + "\"",
                       g_dir / "solve.out");
    worst = std::max(worst, seconds_since(t0));
    v.require(rc == 0, algo + " exit code");
    const Json doc = Json::parse(read_file(out));
    v.require(weight_in(doc) == Rational(2), algo + " weight");
    v.require(edges_in(doc) == want, algo + " edge set");
    v.require(doc.at("feasible").get<bool>(), algo + " feasible");
  };
  run("exact", 1);
  run("augmented-greedy", 1);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) run("randomized-rounding", seed);
  v.require(worst < 1.0, "runtime");
  v.detail << "weight 2 with {(a,c),(c,b)} for exact, augmented-greedy, rounding seeds 1..20; slowest CLI call "
           << worst << " s";
  report("AC1", "example5 exactness", v);
}

// AC2
void triangle() {
  Check v;
  const fs::path with = g_dir / "triangle.json";
  const fs::path without = g_dir / "triangle_metric.json";
  cli("gen triangle -o \"" + with.string() + "\"", g_dir / "gen.out");
  cli("gen triangle-metric -o \"" + without.string() + "\"", g_dir / "gen.out");
  const fs::path a = g_dir / "triangle_opt.json";
  const fs::path b = g_dir / "triangle_metric_opt.json";
  v.require(cli("oracle exact \"" + with.string() + "\" -o \"" + a.string() + "\"", a) == 0, "oracle exact");
  v.require(cli("oracle exact \"" + without.string() + "\" -o \"" + b.string() + "\"", b) == 0, "oracle exact");
  const Json da = Json::parse(read_file(a));
  const Json db = Json::parse(read_file(b));
  const SpannerInstance tri = load_instance(with);
  const std::vector<EdgeId> got = edges_in(da);
  // Expected {xy, xz}: edges (0,1) and (0,2).
  bool is_xy_xz = got.size() == 2 && tri.edges[got[0]].tail == 0 && tri.edges[got[0]].head == 1 &&
                  tri.edges[got[1]].tail == 0 && tri.edges[got[1]].head == 2;
  v.require(weight_in(da) == Rational(3, 2), "optimum 3/2");
  v.require(is_xy_xz, "edge set {xy, xz}");
  v.require(weight_in(db) == Rational(2), "optimum without non-metric edge is 2");
  v.detail << "OPT " << weight_in(da) << " with {xy,xz}; without xz OPT " << weight_in(db);
  report("AC2", "non-metric triangle", v);
}

std::vector<Rational> g_suite_opt;

// AC3
void greedy_bounds(const std::vector<SpannerInstance>& suite) {
  Check v;
  const auto t0 = Clock::now();
  std::size_t violations = 0, bound_failures = 0, intermediate_failures = 0;
  Rational worst_ratio(0);
  g_suite_opt.clear();
  for (const SpannerInstance& inst : suite) {
    const ExactResult opt = exact_optimum(inst);
    g_suite_opt.push_back(opt.weight);
    const AugmentedGreedyResult ag = augmented_greedy(inst);
    if (!verify_feasible(inst, mask_of(inst.edges.size(), ag.edges)).feasible()) ++violations;
    const Rational m(static_cast<std::int64_t>(inst.edges.size()));
    if (ag.weight > m * opt.weight) ++bound_failures;
    const Rational restricted(static_cast<std::int64_t>(ag.threshold.restricted_edges.size()));
    if (ag.weight > restricted * ag.threshold.w_star) ++intermediate_failures;
    if (!opt.weight.is_zero()) worst_ratio = std::max(worst_ratio, ag.weight / opt.weight);
  }
  const double elapsed = seconds_since(t0);
  v.require(violations == 0, "feasibility");
  v.require(bound_failures == 0, "weight <= m * OPT");
  v.require(intermediate_failures == 0, "weight <= |E[W*]| * W*");
  v.require(elapsed < 120.0, "runtime");
  v.detail << suite.size() << " instances, violations " << violations << ", m*OPT failures " << bound_failures
           << ", |E[W*]|W* failures " << intermediate_failures << ", worst ratio " << worst_ratio.to_double()
           << ", " << elapsed << " s";
  report("AC3", "AugmentedGreedy weight bounds", v);
}

// AC4
void retention() {
  Check v;
  std::size_t mismatches = 0, count = 0;
  for (std::uint64_t i = 0; i < 120; ++i) {
    GeneratorParams p;
    p.family = GraphFamily::Coupled;
    p.demands = DemandFamily::MultiplicativeEdges;
    p.alpha = Rational(i % 2 == 0 ? 3 : 5);
    p.n = 5 + i % 26;
    p.m = std::min<std::size_t>(p.n * (p.n - 1) / 2, p.n + i % (2 * p.n));
    p.max_length = 6;
    p.seed = 9000 + i;
    const SpannerInstance inst = generate(p);
    const GreedyResult plain = greedy(inst);
    const AugmentedGreedyResult augmented = augmented_greedy(inst, {.mst_lift = true});
    if (plain.edges != augmented.edges) ++mismatches;
    ++count;
  }
  v.require(mismatches == 0, "identical edge sets");
  v.detail << count << " coupled instances (alpha 3 and 5, n 5..30), mismatches " << mismatches;
  report("AC4", "coupled retention", v);
}

// AC5
void lp_bound(const std::vector<SpannerInstance>& suite) {
  Check v;
  SimplexBackend backend;
  const auto t0 = Clock::now();
  double worst_gap = -1e100;
  std::size_t not_optimal = 0;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const FractionalSolution lp = try_solve_lp(build_mcf(require_integer_lengths(suite[i])), backend);
    if (lp.status != LpStatus::Optimal) {
      ++not_optimal;
      continue;
    }
    worst_gap = std::max(worst_gap, lp.objective - g_suite_opt[i].to_double());
  }
  const SpannerInstance ex5 = example5();
  const FractionalSolution lp5 = solve_lp(build_mcf(require_integer_lengths(ex5)), backend);
  v.require(not_optimal == 0, "LP optimal");
  v.require(worst_gap <= 1e-6, "LP <= OPT");
  v.require(std::abs(lp5.objective - 2.0) <= 1e-6, "example5 LP = 2");
  v.detail << suite.size() << " exact-oracle instances, max(LP - OPT) " << worst_gap << ", non-optimal "
           << not_optimal << "; example5 LP " << lp5.objective << "; " << seconds_since(t0) << " s";
  report("AC5", "LP relaxation bound", v);
}

// AC6
void feasibility_frequency() {
  Check v;
  SimplexBackend backend;
  const std::size_t n = 6, attempts = 200;
  const double p = 1.0 / static_cast<double>(n);
  const double limit = p + 2.326 * std::sqrt(p * (1 - p) / static_cast<double>(attempts));
  std::size_t instances = 0, total_failures = 0;
  double worst_rate = 0;
  for (std::uint64_t seed = 1; instances < 20; ++seed) {
    GeneratorParams gp;
    gp.n = n;
    gp.m = 8 + seed % 5;
    gp.max_length = 2;
    gp.slack = Rational(3, 2);
    gp.directed = seed % 2 == 0;
    gp.seed = 300 + seed;
    const SpannerInstance inst = generate(gp);
    const IntegerInstance view = require_integer_lengths(inst);
    if (view.delta_bar > 6) continue;
    ++instances;
    const GammaSpec g = gamma(view, GammaMode::Global);
    const FractionalSolution lp = solve_lp(build_mcf(view), backend);
    std::size_t failures = 0;
    for (std::size_t a = 0; a < attempts; ++a) {
      if (!round(inst, lp, g, attempt_seed(seed, a)).verdict.feasible()) ++failures;
    }
    total_failures += failures;
    const double rate = static_cast<double>(failures) / static_cast<double>(attempts);
    worst_rate = std::max(worst_rate, rate);
    v.require(rate <= limit, "instance seed " + std::to_string(gp.seed));
  }
  v.detail << instances << " instances x " << attempts << " single attempts, " << total_failures
           << " infeasible in total, worst per-instance rate " << worst_rate << " (limit " << limit << ")";
  report("AC6", "rounding feasibility frequency", v);
}

// AC7
void cut_machinery() {
  Check v;
  std::mt19937_64 rng(77);
  std::size_t pairs = 0, cuts = 0, samples = 0, feasible_pairs = 0, mismatches = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    GeneratorParams gp;
    gp.n = 3 + i % 4;
    gp.m = gp.n + i % 3;
    gp.max_length = 2;
    gp.slack = Rational(3, 2);
    gp.pairs = 3;
    gp.directed = i % 2 == 1;
    gp.seed = 700 + i;
    const SpannerInstance inst = generate(gp);
    const IntegerInstance view = require_integer_lengths(inst);
    EdgeMask mask(inst.edges.size());
    for (std::size_t e = 0; e < mask.size(); ++e) mask[e] = rng() % 100 < 65;
    try {
      const CutLemmaReport r = check_cut_lemma(view, mask, 32, i);
      for (const PairCutCheck& p : r.pairs) {
        ++pairs;
        cuts += p.cuts;
        samples += p.non_ascending_sampled;
        if (p.cuts != *ascending_cut_count(inst.n, view.deltas[p.demand])) ++mismatches;
        const bool ok = verify_feasible(inst, mask, std::vector<std::size_t>{p.demand}).feasible();
        if (ok != (p.unsatisfied == 0) || ok != p.distance_ok) ++mismatches;
        if (ok) ++feasible_pairs;
      }
    } catch (const LemmaViolation& e) {
      ++mismatches;
      v.detail << e.what() << "; ";
    }
  }
  v.require(mismatches == 0, "cut identity and biconditional");
  v.detail << "100 (instance, subgraph) pairs, " << pairs << " terminal pairs (" << feasible_pairs
           << " feasible), " << cuts << " ascending cuts enumerated, " << samples
           << " non-ascending samples, mismatches " << mismatches;
  report("AC7", "ascending cut machinery", v);
}

// AC8
void extension_structure() {
  Check v;
  const SpannerInstance ex5_instance = example5();
  const IntegerInstance ex5 = require_integer_lengths(ex5_instance);
  const DeltaExtension e5 = build_extension(ex5, ex5.delta_bar);
  v.require(e5.node_count() == 12 && e5.arcs().size() == 17, "example5 counts");
  std::size_t checked = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    GeneratorParams gp;
    gp.n = 2 + i % 9;
    gp.m = gp.n + i % 7;
    gp.max_length = 1 + i % 4;
    gp.directed = i % 2 == 0;
    gp.seed = 1200 + i;
    const SpannerInstance inst = generate(gp);
    const IntegerInstance view = require_integer_lengths(inst);
    const DeltaExtension ext = build_extension(view, view.delta_bar);
    const std::size_t db = static_cast<std::size_t>(view.delta_bar);
    // Undirected edges are bi-directed first, so m counts both orientations.
    const std::size_t arcs_m = inst.directed ? inst.edges.size() : 2 * inst.edges.size();
    v.require(ext.node_count() == inst.n * (db + 1), "node count");
    v.require(ext.arcs().size() <= (inst.n + arcs_m) * db, "arc bound");
    ++checked;
  }
  v.detail << "example5: " << e5.node_count() << " nodes, " << e5.arcs().size() << " arcs; " << checked
           << " random instances within both formulas";
  report("AC8", "extension structure", v);
}

// AC9
void demo() {
  Check v;
  const fs::path a = g_dir / "demo_alpha2.txt";
  const fs::path b = g_dir / "demo_alpha3.json";
  v.require(cli("oracle demo --length 3 --alpha 2 -o \"" + a.string() + "\"", a) == 0, "demo alpha 2");
  v.require(cli("--format json oracle demo --length 3 --alpha 3 -o \"" + b.string() + "\"", b) == 0, "demo alpha 3");
  const std::string text = read_file(a);
  const Json control = Json::parse(read_file(b));
  v.require(text.find("infeasible: no s+_0->t+_2 path") != std::string::npos, "alpha 2 certificate");
  v.require(text.find("original OPT = 1") != std::string::npos, "original optimum");
  v.require(text.find("transformed LP status: infeasible") != std::string::npos, "LP infeasible");
  v.require(control.at("transformed_feasible").get<bool>(), "alpha 3 control feasible");
  v.detail << "alpha 2: no s+_0->t+_2 path, LP infeasible, original OPT 1; alpha 3: "
           << (control.at("transformed_feasible").get<bool>() ? "feasible" : "infeasible");
  report("AC9", "subdivision counterexample", v);
}

// AC10
void potential_monotonicity() {
  Check v;
  std::size_t instances = 0, steps = 0, executed = 0, violations = 0;
  std::ostringstream curve;
  for (std::uint64_t i = 0; i < 24; ++i) {
    GeneratorParams gp;
    gp.family = GraphFamily::UnitLength;
    gp.demands = DemandFamily::Additive;
    gp.beta = 2 + static_cast<std::int64_t>(i % 2);
    gp.n = 8 + (i * 32) / 23;
    gp.m = std::min<std::size_t>(gp.n * (gp.n - 1) / 2, gp.n * (2 + i % 4));
    gp.seed = 4000 + i;
    const SpannerInstance inst = generate(gp);
    const AugmentedGreedyResult run = augmented_greedy(inst);
    const MonitorReport r = potential_monitor(inst, run.trace, gp.beta, false);
    ++instances;
    steps += r.steps.size();
    executed += r.executed;
    violations += r.violations;
    if (i % 4 == 3) curve << " n=" << r.n << ":|E'|=" << r.final_edges << "/n^1.5=" << std::lround(r.n_three_halves());
  }
  v.require(violations == 0, "no increasing step");
  v.detail << instances << " instances (n 8..40, beta 2 and 3), " << executed << " executed of " << steps
           << " steps, increasing steps " << violations << ";" << curve.str();
  report("AC10", "potential monotonicity", v);
}

// AC11
void gamma_arithmetic(const std::vector<SpannerInstance>& suite) {
  Check v;
  const SpannerInstance ex5 = example5();
  const GammaSpec g5 = gamma(require_integer_lengths(ex5), GammaMode::Global);
  v.require(std::abs(g5.value - std::log(45.0)) <= 1e-12, "example5 gamma = ln 45");
  std::size_t compared = 0;
  for (const SpannerInstance& inst : suite) {
    const IntegerInstance view = require_integer_lengths(inst);
    v.require(gamma(view, GammaMode::Restricted).value <= gamma(view, GammaMode::Global).value, "restricted <= global");
    ++compared;
  }
  SpannerInstance two;
  two.n = 2;
  two.edges = {{0, 1, Rational(1), Rational(3)}};
  two.demands = {{0, 1, Rational(4)}};
  const GammaSpec g2 = gamma(require_integer_lengths(two), GammaMode::Global);
  v.require(g2.log_cuts == 0.0, "n = 2 gives C = 1");
  v.detail << "example5 gamma - ln 45 = " << g5.value - std::log(45.0) << "; restricted <= global on " << compared
           << " instances; n=2 ln C = " << g2.log_cuts;
  report("AC11", "gamma arithmetic", v);
}

// AC12
void determinism() {
  Check v;
  const fs::path inst = g_dir / "det_instance.json";
  const fs::path geo = g_dir / "det_geometric.json";
  const fs::path unit = g_dir / "det_unit.json";
  const fs::path small = g_dir / "det_small.json";
  cli("--seed 8 gen unit-weight --n 5 --m 7 --directed -o \"" + small.string() + "\"", g_dir / "gen.out");
  cli("--seed 17 gen decoupled --n 7 --m 12 -o \"" + inst.string() + "\"", g_dir / "gen.out");
  cli("--seed 3 gen geometric --n 6 --demands mult-all -o \"" + geo.string() + "\"", g_dir / "gen.out");
  cli("--seed 5 gen unit-length --n 12 --m 24 --demands additive --beta 2 -o \"" + unit.string() + "\"",
      g_dir / "gen.out");
  const std::vector<std::string> commands = {
      "--seed 17 gen decoupled --n 7 --m 12",
      "--seed 3 gen geometric --n 6 --demands mult-all",
      "gen example5",
      "solve \"" + inst.string() + "\" --algorithm greedy",
      "solve \"" + inst.string() + "\" --algorithm augmented-greedy",
      "--mst-lift solve \"" + inst.string() + "\" --algorithm augmented-greedy",
      "--seed 9 solve \"" + inst.string() + "\" --algorithm randomized-rounding",
      "--seed 9 --gamma-mode restricted solve \"" + inst.string() + "\" --algorithm randomized-rounding",
      "solve \"" + geo.string() + "\" --algorithm augmented-greedy",
      "--seed 9 solve \"" + small.string() + "\" --algorithm randomized-rounding",
      "solve \"" + inst.string() + "\" --algorithm exact",
      "--format csv solve \"" + inst.string() + "\" --algorithm augmented-greedy",
      "verify \"" + inst.string() + "\" --metric-pairs",
      "oracle exact \"" + inst.string() + "\"",
      "--seed 4 oracle cuts \"" + inst.string() + "\"",
      "oracle demo",
      "oracle potential \"" + unit.string() + "\" --beta 2",
      "export-lp \"" + inst.string() + "\"",
      "--seed 21 --threads 4 bench --n 6 --m 9 --instances 6 --trials 2 --algorithms "
      "greedy,augmented-greedy,randomized-rounding,exact",
      "--seed 21 --threads 4 --format json bench --family coupled --demands mult-edges --n 8 --m 14 --instances 4",
  };
  std::size_t identical = 0;
  for (std::size_t c = 0; c < commands.size(); ++c) {
    const fs::path a = g_dir / ("det_" + std::to_string(c) + "_a.out");
    const fs::path b = g_dir / ("det_" + std::to_string(c) + "_b.out");
    const int ra = cli(commands[c] + " -o \"" + a.string() + "\"", g_dir / "det.stdout");
    const int rb = cli(commands[c] + " -o \"" + b.string() + "\"", g_dir / "det.stdout");
    const bool same = ra == rb && read_file(a) == read_file(b) && !read_file(a).empty();
    v.require(ra == 0 && rb == 0, "exit code of: " + commands[c]);
    v.require(same, "identical output of: " + commands[c]);
    if (same) ++identical;
  }
  // Thread count must not change batch output either.
  const fs::path t1 = g_dir / "det_threads1.csv";
  const fs::path t4 = g_dir / "det_threads4.csv";
  const std::string bench = "bench --n 6 --m 9 --instances 6 --algorithms augmented-greedy,randomized-rounding";
  cli("--seed 2 --threads 1 " + bench + " -o \"" + t1.string() + "\"", g_dir / "det.stdout");
  cli("--seed 2 --threads 4 " + bench + " -o \"" + t4.string() + "\"", g_dir / "det.stdout");
  v.require(read_file(t1) == read_file(t4), "bench output independent of threads");
  v.detail << identical << "/" << commands.size() << " commands byte-identical on rerun; bench threads 1 vs 4 "
           << (read_file(t1) == read_file(t4) ? "identical" : "different");
  report("AC12", "determinism", v);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: freespan_acceptance <freespan-cli> [scratch-dir]\n";
    return 2;
  }
  g_cli = fs::absolute(argv[1]).string();
  g_dir = argc > 2 ? fs::path(argv[2]) : fs::temp_directory_path() / "freespan_acceptance";
  fs::create_directories(g_dir);
  std::ofstream(g_dir / "stderr.log", std::ios::trunc);

  const auto t0 = Clock::now();
  const std::vector<SpannerInstance> suite = random_suite();
  example5_exactness();
  triangle();
  greedy_bounds(suite);
  retention();
  lp_bound(suite);
  feasibility_frequency();
  cut_machinery();
  extension_structure();
  demo();
  potential_monotonicity();
  gamma_arithmetic(suite);
  determinism();
  std::cout << (g_failures == 0 ? "ALL PASS" : std::to_string(g_failures) + " FAILED") << " ("
            << seconds_since(t0) << " s)" << std::endl;
  return g_failures == 0 ? 0 : 1;
}
