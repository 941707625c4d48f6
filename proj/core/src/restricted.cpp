#include "freespan/restricted.hpp"

#include "freespan/paths.hpp"

namespace freespan {

RestrictedSubgraph restricted_subgraph(const SpannerInstance& instance, NodeId u, NodeId v,
                                       const Rational& delta) {
  const auto graph = LengthGraph::of_instance(instance);
  const auto from_u = dijkstra(graph, u, Traversal::Forward);
  const auto to_v = dijkstra(graph, v, Traversal::Reverse);
  auto within = [&](const Distance& a, const Rational& mid, const Distance& b) {
    return a && b && *a + mid + *b <= delta;
  };
  RestrictedSubgraph result;
  for (NodeId z = 0; z < instance.n; ++z) {
    if (within(from_u.dist[z], Rational(0), to_v.dist[z])) result.nodes.push_back(z);
  }
  for (EdgeId e = 0; e < instance.edges.size(); ++e) {
    const Edge& edge = instance.edges[e];
    bool on_path = within(from_u.dist[edge.tail], edge.length, to_v.dist[edge.head]);
    if (!instance.directed) {
      on_path = on_path || within(from_u.dist[edge.head], edge.length, to_v.dist[edge.tail]);
    }
    if (on_path) result.edges.push_back(e);
  }
  return result;
}

RestrictedSubgraph restricted_subgraph(const SpannerInstance& instance, std::size_t demand) {
  const Demand& d = instance.demands.at(demand);
  return restricted_subgraph(instance, d.source, d.target, d.delta);
}

}  // namespace freespan
