#pragma once

#include <optional>
#include <span>
#include <vector>

#include "freespan/instance.hpp"
#include "freespan/rational.hpp"

namespace freespan {

/// Exact distance; std::nullopt means unreachable.
using Distance = std::optional<Rational>;

/// Tail/head/length triple; the graph-algorithm layer is agnostic of whether
/// the links are instance edges or demand pairs.
struct Link {
  NodeId tail = 0;
  NodeId head = 0;
  Rational length;
};

/// Adjacency over a set of links with an optional membership mask. Undirected
/// links are traversable both ways.
class LengthGraph {
 public:
  struct Arc {
    NodeId to;
    std::size_t link;
  };

  LengthGraph(std::size_t n, bool directed, std::vector<Link> links, const EdgeMask& mask = {});

  /// Instance edges with their lengths, restricted to `mask` when non-empty.
  static LengthGraph of_instance(const SpannerInstance& instance, const EdgeMask& mask = {});

  std::size_t node_count() const { return out_.size(); }
  bool directed() const { return directed_; }
  const Link& link(std::size_t id) const { return links_[id]; }
  std::span<const Arc> out_arcs(NodeId v) const { return out_[v]; }
  std::span<const Arc> in_arcs(NodeId v) const { return in_[v]; }

 private:
  bool directed_;
  std::vector<Link> links_;
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;
};

enum class Traversal { Forward, Reverse };

/// Single-source exact distances plus a parent tree. Among all shortest
/// paths to a node, the tree encodes the one whose node sequence (read from
/// the source) is lexicographically smallest.
struct ShortestPathResult {
  NodeId source = 0;
  Traversal traversal = Traversal::Forward;
  std::vector<Distance> dist;
  std::vector<std::optional<std::size_t>> parent_link;
  std::vector<NodeId> parent_node;

  bool reachable(NodeId v) const { return dist[v].has_value(); }
  /// Links along the tree path source -> v, in travel order.
  std::vector<std::size_t> path_links(NodeId v) const;
  /// Node sequence source, ..., v.
  std::vector<NodeId> path_nodes(NodeId v) const;
};

ShortestPathResult dijkstra(const LengthGraph& graph, NodeId source,
                            Traversal traversal = Traversal::Forward);

/// Distance from source to target in the subgraph selected by `mask`.
Distance distance_in(const SpannerInstance& instance, const EdgeMask& mask, NodeId source,
                     NodeId target);

struct MstResult {
  Rational weight;
  std::vector<EdgeId> edges;
};

/// Kruskal with (weight, edge index) ordering. Throws DirectedInstance.
MstResult minimum_spanning_tree(const SpannerInstance& instance);

/// Indices of the metric terminal pairs: those whose demand is strictly
/// smaller than the demand-graph distance avoiding the pair itself.
std::vector<std::size_t> reduce_to_metric_pairs(const SpannerInstance& instance);

struct PairViolation {
  std::size_t demand = 0;
  NodeId source = 0;
  NodeId target = 0;
  Rational delta;
  Distance achieved;
};

struct Verdict {
  std::vector<PairViolation> violations;
  bool feasible() const { return violations.empty(); }
};

/// Checks d_H(u,v) <= delta(u,v) for every demand (or for `demand_subset`
/// when given), where H is the subgraph selected by `mask`.
Verdict verify_feasible(const SpannerInstance& instance, const EdgeMask& mask);
Verdict verify_feasible(const SpannerInstance& instance, const EdgeMask& mask,
                        std::span<const std::size_t> demand_subset);
Verdict verify_feasible(const Subgraph& subgraph);

}  // namespace freespan
