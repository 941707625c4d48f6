#pragma once

#include <optional>
#include <vector>

#include "freespan/instance.hpp"
#include "freespan/paths.hpp"
#include "freespan/rational.hpp"

namespace freespan {

/// One processed terminal pair of a greedy run.
struct GreedyStep {
  std::size_t demand = 0;
  NodeId source = 0;
  NodeId target = 0;
  /// Distance in the graph greedy was given; determines processing order.
  Rational reference_distance;
  /// Distance in the partial spanner when the pair was reached.
  Distance spanner_distance;
  bool executed = false;
  /// Edges newly added by this step (a subset of the chosen path).
  std::vector<EdgeId> added;
  /// The full tie-broken shortest path added when executed.
  std::vector<EdgeId> path;
};

struct GreedyResult {
  std::vector<EdgeId> edges;
  Rational weight;
  std::vector<GreedyStep> trace;
};

/// Greedy sparsification: visits pairs by (d(u,v), u, v) in the graph selected
/// by `allowed` and adds the unique tie-broken shortest path whenever the
/// current spanner misses the demand. Throws UnsatisfiableDemand if a pair
/// cannot be met inside `allowed`.
GreedyResult greedy(const SpannerInstance& instance, const EdgeMask& allowed = {});

struct WeightThresholdResult {
  /// Smallest distinct weight whose restriction is feasible.
  Rational threshold;
  /// Threshold after the optional MST lift; equals `threshold` otherwise.
  Rational w_star;
  bool mst_lifted = false;
  /// Edges with weight <= w_star, ascending.
  std::vector<EdgeId> restricted_edges;
  std::size_t probes = 0;
};

/// Binary search over the sorted distinct weights for the smallest feasible
/// weight restriction. With `mst_lift`, W* becomes max(W*, w(MST)) and the
/// restricted edge set is recomputed at the lifted value.
WeightThresholdResult weight_threshold_search(const SpannerInstance& instance, bool mst_lift = false);

struct AugmentedGreedyOptions {
  bool mst_lift = false;
};

struct AugmentedGreedyResult {
  std::vector<EdgeId> edges;
  Rational weight;
  WeightThresholdResult threshold;
  std::size_t restricted_count = 0;
  std::size_t high_weight_count = 0;
  double phase1_ms = 0.0;
  double phase2_ms = 0.0;
  std::vector<GreedyStep> trace;
};

AugmentedGreedyResult augmented_greedy(const SpannerInstance& instance,
                                       const AugmentedGreedyOptions& options = {});

}  // namespace freespan
