#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freespan/exact.hpp"
#include "freespan/generators.hpp"
#include "freespan/instance.hpp"
#include "freespan/paths.hpp"
#include "freespan/rounding.hpp"

namespace freespan {

enum class Algorithm { Greedy, AugmentedGreedy, RandomizedRounding, Exact };

const char* to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct SolveOptions {
  bool mst_lift = false;
  GammaMode gamma_mode = GammaMode::Global;
  double confidence = 2.0;
  std::uint64_t seed = 1;
  std::size_t max_attempts = 10;
  std::size_t exact_cap = kDefaultExactCap;
  bool presolve = true;
};

/// A solver run plus its metrics. `feasible` always comes from a fresh exact
/// verification of `edges`, whatever the solver reported.
struct SolveOutcome {
  Algorithm algorithm = Algorithm::Greedy;
  std::vector<EdgeId> edges;
  Rational weight;
  bool feasible = false;
  Verdict verdict;
  std::optional<Rational> lightness;
  std::optional<Rational> w_star;
  std::optional<std::size_t> high_weight_count;
  std::optional<double> gamma;
  std::optional<double> lp_objective;
  std::optional<std::size_t> attempts;
  /// Mean weight over every rounding attempt, accepted or not.
  std::optional<double> mean_attempt_weight;
  std::optional<std::size_t> nodes_explored;
  double wall_ms = 0.0;
};

/// Throws ValidationError on an invalid instance.
SolveOutcome solve(const SpannerInstance& instance, Algorithm algorithm, const SolveOptions& options = {});

/// Solution document: algorithm, edges (as index and endpoints), weight,
/// feasibility, violations and metrics. Timings only when asked for.
std::string format_solution(const SpannerInstance& instance, const SolveOutcome& outcome,
                            bool include_timings = false);

/// One CSV row of a batch run.
struct MetricsRow {
  std::size_t instance = 0;
  std::uint64_t instance_seed = 0;
  std::string algorithm;
  std::size_t trial = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  bool ok = false;
  std::string error;
  std::optional<SolveOutcome> outcome;
  std::optional<Rational> opt;
  std::optional<Rational> ratio;
};

/// Fixed CSV columns, in order.
const std::vector<std::string>& metrics_columns();

struct ExperimentConfig {
  GeneratorParams generator;
  std::size_t instances = 10;
  std::vector<Algorithm> algorithms{Algorithm::AugmentedGreedy};
  std::size_t trials = 1;
  /// Compute the exact optimum when m <= options.exact_cap and report ratios.
  bool with_opt = true;
  SolveOptions options;
  std::size_t threads = 1;
};

struct AlgorithmSummary {
  std::string algorithm;
  std::size_t cells = 0;
  std::size_t failures = 0;
  std::size_t feasible = 0;
  std::optional<double> mean_ratio;
  std::optional<double> max_ratio;
  double mean_ms = 0.0;
};

struct ExperimentResult {
  std::vector<MetricsRow> rows;
  std::vector<AlgorithmSummary> summary;
};

/// Instance i uses generator seed generator.seed + i; trial t solves with
/// options.seed + t. Cells run on a worker pool; rows come back in
/// (instance, algorithm, trial) order regardless of scheduling.
ExperimentResult run_experiment(const ExperimentConfig& config);

std::string format_csv(const ExperimentResult& result, bool include_timings = false);
std::string format_json(const ExperimentResult& result, bool include_timings = false);

}  // namespace freespan
