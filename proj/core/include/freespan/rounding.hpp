#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freespan/instance.hpp"
#include "freespan/lp.hpp"
#include "freespan/mcf.hpp"
#include "freespan/paths.hpp"
#include "freespan/rational.hpp"

namespace freespan {

enum class GammaMode { Global, Restricted, Custom };

const char* to_string(GammaMode mode);
std::optional<GammaMode> parse_gamma_mode(std::string_view name);

/// gamma = ln(t * C * |K|). Global: t = n and C = max_k (delta_k + 2)^(n - 2).
/// Restricted: t = n and n is replaced by |V_uv| inside the max. Custom: the
/// restricted C with a caller-chosen confidence t. With no demands gamma is 0.
struct GammaSpec {
  GammaMode mode = GammaMode::Global;
  double value = 0.0;
  double confidence = 0.0;
  /// ln C, kept in log space.
  double log_cuts = 0.0;
  std::size_t pairs = 0;
};

GammaSpec gamma(const IntegerInstance& instance, GammaMode mode = GammaMode::Global,
                double confidence = 2.0);

struct RoundingRun {
  std::uint64_t seed = 0;
  std::vector<EdgeId> edges;
  Rational weight;
  Verdict verdict;
  std::size_t attempt = 0;
};

/// Uniform draw in [0,1) for edge `e` under `seed`; independent of draw order.
double edge_uniform(std::uint64_t seed, EdgeId e);

/// Picks edge e iff edge_uniform(seed, e) < min(1, gamma * x_e).
RoundingRun round(const SpannerInstance& instance, const FractionalSolution& solution,
                  const GammaSpec& gamma, std::uint64_t seed);

/// Seed of attempt `attempt` derived from the master seed.
std::uint64_t attempt_seed(std::uint64_t master, std::size_t attempt);

struct RandomizedOptions {
  GammaMode gamma_mode = GammaMode::Global;
  double confidence = 2.0;
  std::uint64_t seed = 1;
  std::size_t max_attempts = 10;
  bool presolve = true;
};

struct RandomizedResult {
  std::vector<EdgeId> edges;
  Rational weight;
  bool feasible = false;
  Verdict verdict;
  GammaSpec gamma;
  double lp_objective = 0.0;
  std::size_t lp_iterations = 0;
  std::vector<RoundingRun> attempts;
  /// Mean weight over every attempt drawn.
  double mean_attempt_weight = 0.0;
};

/// Solves the flow LP once, then rounds with fresh seeds until an exactly
/// verified feasible spanner appears or max_attempts is reached; in the
/// latter case the last attempt is returned with feasible = false.
RandomizedResult solve_randomized(const SpannerInstance& instance, LpBackend& backend,
                                  const RandomizedOptions& options = {});
RandomizedResult solve_randomized(const SpannerInstance& instance,
                                  const RandomizedOptions& options = {});

}  // namespace freespan
