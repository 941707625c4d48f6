#include "freespan/paths.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "freespan/errors.hpp"

namespace freespan {

LengthGraph::LengthGraph(std::size_t n, bool directed, std::vector<Link> links,
                         const EdgeMask& mask)
    : directed_(directed), links_(std::move(links)), out_(n), in_(n) {
  for (std::size_t id = 0; id < links_.size(); ++id) {
    if (!mask.empty() && !mask[id]) continue;
    const Link& l = links_[id];
    out_[l.tail].push_back({l.head, id});
    in_[l.head].push_back({l.tail, id});
    if (!directed_) {
      out_[l.head].push_back({l.tail, id});
      in_[l.tail].push_back({l.head, id});
    }
  }
}

LengthGraph LengthGraph::of_instance(const SpannerInstance& instance, const EdgeMask& mask) {
  std::vector<Link> links;
  links.reserve(instance.edges.size());
  for (const Edge& e : instance.edges) links.push_back({e.tail, e.head, e.length});
  return LengthGraph(instance.n, instance.directed, std::move(links), mask);
}

std::vector<NodeId> ShortestPathResult::path_nodes(NodeId v) const {
  std::vector<NodeId> nodes;
  if (!dist[v]) return nodes;
  for (NodeId cur = v;; cur = parent_node[cur]) {
    nodes.push_back(cur);
    if (!parent_link[cur]) break;
  }
  std::reverse(nodes.begin(), nodes.end());
  return nodes;
}

std::vector<std::size_t> ShortestPathResult::path_links(NodeId v) const {
  std::vector<std::size_t> links;
  if (!dist[v]) return links;
  for (NodeId cur = v; parent_link[cur]; cur = parent_node[cur]) links.push_back(*parent_link[cur]);
  std::reverse(links.begin(), links.end());
  return links;
}

ShortestPathResult dijkstra(const LengthGraph& graph, NodeId source, Traversal traversal) {
  const std::size_t n = graph.node_count();
  ShortestPathResult result;
  result.source = source;
  result.traversal = traversal;
  result.dist.assign(n, std::nullopt);
  result.parent_link.assign(n, std::nullopt);
  result.parent_node.assign(n, source);

  auto next_arcs = [&](NodeId v) {
    return traversal == Traversal::Forward ? graph.out_arcs(v) : graph.in_arcs(v);
  };
  auto prev_arcs = [&](NodeId v) {
    return traversal == Traversal::Forward ? graph.in_arcs(v) : graph.out_arcs(v);
  };

  // Pass 1: exact distances.
  using Entry = std::pair<Rational, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::vector<bool> settled(n, false);
  std::vector<NodeId> order;
  result.dist[source] = Rational(0);
  queue.emplace(Rational(0), source);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (settled[v]) continue;
    settled[v] = true;
    order.push_back(v);
    for (const auto& arc : next_arcs(v)) {
      Rational cand = d + graph.link(arc.link).length;
      auto& slot = result.dist[arc.to];
      if (!slot || cand < *slot) {
        slot = cand;
        queue.emplace(cand, arc.to);
      }
    }
  }

  // Pass 2: parents in settle order. Lengths are positive, so every tight
  // predecessor is settled (and has its parent fixed) before v.
  std::vector<NodeId> seq_a;
  std::vector<NodeId> seq_b;
  auto sequence_into = [&](NodeId v, std::vector<NodeId>& out) {
    out.clear();
    for (NodeId cur = v;; cur = result.parent_node[cur]) {
      out.push_back(cur);
      if (!result.parent_link[cur]) break;
    }
    std::reverse(out.begin(), out.end());
  };
  for (std::size_t idx = 1; idx < order.size(); ++idx) {
    const NodeId v = order[idx];
    std::optional<std::size_t> best_link;
    NodeId best_pred = source;
    for (const auto& arc : prev_arcs(v)) {
      const NodeId u = arc.to;
      if (!result.dist[u] || *result.dist[u] + graph.link(arc.link).length != *result.dist[v]) {
        continue;
      }
      if (!best_link) {
        best_link = arc.link;
        best_pred = u;
        continue;
      }
      if (u == best_pred) {
        // Parallel links cannot occur in simple graphs; keep the lower id.
        if (arc.link < *best_link) best_link = arc.link;
        continue;
      }
      // Compare the complete candidate sequences seq(u)+[v] and seq(best)+[v].
      sequence_into(u, seq_a);
      sequence_into(best_pred, seq_b);
      seq_a.push_back(v);
      seq_b.push_back(v);
      if (std::lexicographical_compare(seq_a.begin(), seq_a.end(), seq_b.begin(), seq_b.end())) {
        best_link = arc.link;
        best_pred = u;
      }
    }
    result.parent_link[v] = best_link;
    result.parent_node[v] = best_pred;
  }
  return result;
}

Distance distance_in(const SpannerInstance& instance, const EdgeMask& mask, NodeId source,
                     NodeId target) {
  auto graph = LengthGraph::of_instance(instance, mask);
  return dijkstra(graph, source).dist[target];
}

MstResult minimum_spanning_tree(const SpannerInstance& instance) {
  if (instance.directed) throw DirectedInstance("minimum spanning tree needs an undirected instance");
  std::vector<EdgeId> order(instance.edges.size());
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return instance.edges[a].weight < instance.edges[b].weight;
  });
  std::vector<NodeId> parent(instance.n);
  std::iota(parent.begin(), parent.end(), NodeId{0});
  auto find = [&](NodeId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  MstResult result;
  for (EdgeId e : order) {
    NodeId a = find(instance.edges[e].tail);
    NodeId b = find(instance.edges[e].head);
    if (a == b) continue;
    parent[a] = b;
    result.edges.push_back(e);
    result.weight += instance.edges[e].weight;
  }
  std::sort(result.edges.begin(), result.edges.end());
  return result;
}

std::vector<std::size_t> reduce_to_metric_pairs(const SpannerInstance& instance) {
  std::vector<Link> links;
  links.reserve(instance.demands.size());
  for (const Demand& d : instance.demands) links.push_back({d.source, d.target, d.delta});
  std::vector<std::size_t> metric;
  EdgeMask mask(links.size(), true);
  for (std::size_t k = 0; k < links.size(); ++k) {
    mask[k] = false;
    LengthGraph demand_graph(instance.n, instance.directed, links, mask);
    mask[k] = true;
    const Demand& d = instance.demands[k];
    Distance around = dijkstra(demand_graph, d.source).dist[d.target];
    if (!around || *around > d.delta) metric.push_back(k);
  }
  return metric;
}

namespace {

Verdict verify_pairs(const SpannerInstance& instance, const EdgeMask& mask,
                     std::span<const std::size_t> pairs) {
  auto graph = LengthGraph::of_instance(instance, mask);
  // One Dijkstra per distinct source.
  std::map<NodeId, std::vector<std::size_t>> by_source;
  for (std::size_t k : pairs) by_source[instance.demands[k].source].push_back(k);
  Verdict verdict;
  for (const auto& [source, ks] : by_source) {
    auto sp = dijkstra(graph, source);
    for (std::size_t k : ks) {
      const Demand& d = instance.demands[k];
      const Distance& got = sp.dist[d.target];
      if (!got || *got > d.delta) {
        verdict.violations.push_back({k, d.source, d.target, d.delta, got});
      }
    }
  }
  std::sort(verdict.violations.begin(), verdict.violations.end(),
            [](const PairViolation& a, const PairViolation& b) { return a.demand < b.demand; });
  return verdict;
}

}  // namespace

Verdict verify_feasible(const SpannerInstance& instance, const EdgeMask& mask) {
  std::vector<std::size_t> all(instance.demands.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return verify_pairs(instance, mask, all);
}

Verdict verify_feasible(const SpannerInstance& instance, const EdgeMask& mask,
                        std::span<const std::size_t> demand_subset) {
  return verify_pairs(instance, mask, demand_subset);
}

Verdict verify_feasible(const Subgraph& subgraph) {
  return verify_feasible(subgraph.instance(), subgraph.mask());
}

}  // namespace freespan
