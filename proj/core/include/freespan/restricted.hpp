#pragma once

#include <vector>

#include "freespan/instance.hpp"
#include "freespan/rational.hpp"

namespace freespan {

/// Nodes and edges lying on some u-v path of length at most delta.
struct RestrictedSubgraph {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;
};

/// V_uv = {z : d(u,z) + d(z,v) <= delta}; E_uv = edges (s,t) with
/// d(u,s) + l(s,t) + d(t,v) <= delta (either orientation when undirected).
/// Uses one forward and one reverse Dijkstra.
RestrictedSubgraph restricted_subgraph(const SpannerInstance& instance, NodeId u, NodeId v,
                                       const Rational& delta);
RestrictedSubgraph restricted_subgraph(const SpannerInstance& instance, std::size_t demand);

}  // namespace freespan
