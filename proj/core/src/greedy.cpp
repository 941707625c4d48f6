#include "freespan/greedy.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <tuple>

#include "freespan/errors.hpp"

namespace freespan {

GreedyResult greedy(const SpannerInstance& instance, const EdgeMask& allowed) {
  const auto base = LengthGraph::of_instance(instance, allowed);

  std::map<NodeId, ShortestPathResult> trees;
  auto tree_from = [&](NodeId s) -> const ShortestPathResult& {
    auto it = trees.find(s);
    if (it == trees.end()) it = trees.emplace(s, dijkstra(base, s)).first;
    return it->second;
  };

  struct Pending {
    Rational dist;
    NodeId u;
    NodeId v;
    std::size_t demand;
  };
  std::vector<Pending> order;
  order.reserve(instance.demands.size());
  for (std::size_t k = 0; k < instance.demands.size(); ++k) {
    const Demand& d = instance.demands[k];
    const Distance& dg = tree_from(d.source).dist[d.target];
    if (!dg || *dg > d.delta) {
      throw UnsatisfiableDemand("demand " + std::to_string(k) + " (" + std::to_string(d.source) +
                                "," + std::to_string(d.target) +
                                ") cannot be met in the given graph");
    }
    order.push_back({*dg, d.source, d.target, k});
  }
  std::sort(order.begin(), order.end(), [](const Pending& a, const Pending& b) {
    return std::tie(a.dist, a.u, a.v, a.demand) < std::tie(b.dist, b.u, b.v, b.demand);
  });

  GreedyResult result;
  EdgeMask in_spanner(instance.edges.size(), false);
  std::optional<Rational> previous;
  for (const Pending& p : order) {
    if (previous && p.dist < *previous) throw LemmaViolation("greedy visited pairs out of distance order");
    previous = p.dist;
    const Demand& d = instance.demands[p.demand];

    GreedyStep step;
    step.demand = p.demand;
    step.source = p.u;
    step.target = p.v;
    step.reference_distance = p.dist;
    auto current = LengthGraph::of_instance(instance, in_spanner);
    step.spanner_distance = dijkstra(current, p.u).dist[p.v];
    if (!step.spanner_distance || *step.spanner_distance > d.delta) {
      step.executed = true;
      step.path = tree_from(p.u).path_links(p.v);
      for (EdgeId e : step.path) {
        if (!in_spanner[e]) {
          in_spanner[e] = true;
          step.added.push_back(e);
        }
      }
    }
    result.trace.push_back(std::move(step));
  }
  result.edges = edges_of(in_spanner);
  result.weight = weight_of(instance, result.edges);
  return result;
}

WeightThresholdResult weight_threshold_search(const SpannerInstance& instance, bool mst_lift) {
  if (mst_lift && instance.directed) {
    throw DirectedInstance("the MST lift applies to undirected instances only");
  }
  std::vector<Rational> weights;
  weights.reserve(instance.edges.size());
  for (const Edge& e : instance.edges) weights.push_back(e.weight);
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());

  auto restriction = [&](const Rational& bound) {
    EdgeMask mask(instance.edges.size(), false);
    for (std::size_t i = 0; i < instance.edges.size(); ++i) mask[i] = instance.edges[i].weight <= bound;
    return mask;
  };

  WeightThresholdResult result;
  if (weights.empty()) {
    if (!verify_feasible(instance, EdgeMask{}).feasible()) {
      throw InfeasibleInstance("instance without edges cannot meet its demands");
    }
    return result;
  }
  auto feasible_at = [&](std::size_t idx) {
    ++result.probes;
    return verify_feasible(instance, restriction(weights[idx])).feasible();
  };
  if (!feasible_at(weights.size() - 1)) {
    throw InfeasibleInstance("the full graph does not meet every demand");
  }
  // Invariant: weights[hi] feasible; everything below lo is infeasible.
  std::size_t lo = 0;
  std::size_t hi = weights.size() - 1;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (feasible_at(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  result.threshold = weights[hi];
  result.w_star = result.threshold;
  if (mst_lift) {
    Rational mst = minimum_spanning_tree(instance).weight;
    if (mst > result.w_star) {
      result.w_star = mst;
      result.mst_lifted = true;
    }
  }
  result.restricted_edges = edges_of(restriction(result.w_star));
  return result;
}

AugmentedGreedyResult augmented_greedy(const SpannerInstance& instance,
                                       const AugmentedGreedyOptions& options) {
  using Clock = std::chrono::steady_clock;
  AugmentedGreedyResult result;
  auto t0 = Clock::now();
  result.threshold = weight_threshold_search(instance, options.mst_lift);
  auto t1 = Clock::now();
  auto phase2 = greedy(instance, mask_of(instance.edges.size(), result.threshold.restricted_edges));
  auto t2 = Clock::now();
  result.edges = std::move(phase2.edges);
  result.weight = phase2.weight;
  result.trace = std::move(phase2.trace);
  result.restricted_count = result.threshold.restricted_edges.size();
  result.high_weight_count = instance.edges.size() - result.restricted_count;
  result.phase1_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  result.phase2_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
  return result;
}

}  // namespace freespan
