#include "freespan/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "freespan/restricted.hpp"

namespace freespan {

const char* to_string(GammaMode mode) {
  switch (mode) {
    case GammaMode::Global: return "global";
    case GammaMode::Restricted: return "restricted";
    case GammaMode::Custom: return "custom";
  }
  return "unknown";
}

std::optional<GammaMode> parse_gamma_mode(std::string_view name) {
  if (name == "global") return GammaMode::Global;
  if (name == "restricted") return GammaMode::Restricted;
  if (name == "custom") return GammaMode::Custom;
  return std::nullopt;
}

GammaSpec gamma(const IntegerInstance& instance, GammaMode mode, double confidence) {
  const SpannerInstance& base = instance.instance();
  GammaSpec spec;
  spec.mode = mode;
  spec.pairs = base.demands.size();
  spec.confidence = mode == GammaMode::Custom ? confidence : static_cast<double>(base.n);
  if (mode == GammaMode::Custom && !(confidence > 0.0)) {
    throw std::invalid_argument("gamma confidence must be positive");
  }
  if (base.demands.empty()) return spec;

  double log_cuts = 0.0;
  for (std::size_t k = 0; k < base.demands.size(); ++k) {
    std::size_t nodes = base.n;
    if (mode != GammaMode::Global) nodes = restricted_subgraph(base, k).nodes.size();
    const double exponent = nodes >= 2 ? static_cast<double>(nodes - 2) : 0.0;
    log_cuts = std::max(log_cuts, exponent * std::log(static_cast<double>(instance.deltas[k] + 2)));
  }
  spec.log_cuts = log_cuts;
  spec.value = std::log(spec.confidence) + log_cuts + std::log(static_cast<double>(spec.pairs));
  return spec;
}

double edge_uniform(std::uint64_t seed, EdgeId e) {
  const auto edge = static_cast<std::uint64_t>(e);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(edge), static_cast<std::uint32_t>(edge >> 32)};
  std::mt19937_64 gen(seq);
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

std::uint64_t attempt_seed(std::uint64_t master, std::size_t attempt) {
  const auto a = static_cast<std::uint64_t>(attempt);
  std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32), 0x5eedu};
  std::mt19937_64 gen(seq);
  return gen();
}

RoundingRun round(const SpannerInstance& instance, const FractionalSolution& solution,
                  const GammaSpec& gamma, std::uint64_t seed) {
  RoundingRun run;
  run.seed = seed;
  for (EdgeId e = 0; e < solution.x.size(); ++e) {
    const double p = std::min(1.0, gamma.value * solution.x[e]);
    if (edge_uniform(seed, e) < p) run.edges.push_back(e);
  }
  run.weight = weight_of(instance, run.edges);
  run.verdict = verify_feasible(instance, mask_of(instance.edges.size(), run.edges));
  return run;
}

RandomizedResult solve_randomized(const SpannerInstance& instance, LpBackend& backend,
                                  const RandomizedOptions& options) {
  if (options.max_attempts == 0) throw std::invalid_argument("max_attempts must be positive");
  const IntegerInstance view = require_integer_lengths(instance);
  RandomizedResult result;
  result.gamma = gamma(view, options.gamma_mode, options.confidence);
  const McfModel model = build_mcf(view);
  const FractionalSolution lp = solve_lp(model, backend, {.presolve = options.presolve});
  result.lp_objective = lp.objective;
  result.lp_iterations = lp.iterations;

  double total = 0.0;
  for (std::size_t a = 0; a < options.max_attempts; ++a) {
    RoundingRun run = round(instance, lp, result.gamma, attempt_seed(options.seed, a));
    run.attempt = a;
    total += run.weight.to_double();
    const bool ok = run.verdict.feasible();
    result.attempts.push_back(std::move(run));
    if (ok) break;
  }
  const RoundingRun& last = result.attempts.back();
  result.edges = last.edges;
  result.weight = last.weight;
  result.verdict = last.verdict;
  result.feasible = last.verdict.feasible();
  result.mean_attempt_weight = total / static_cast<double>(result.attempts.size());
  return result;
}

RandomizedResult solve_randomized(const SpannerInstance& instance, const RandomizedOptions& options) {
  SimplexBackend backend;
  return solve_randomized(instance, backend, options);
}

}  // namespace freespan
