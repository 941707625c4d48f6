#include "freespan/extension.hpp"

#include <stdexcept>

namespace freespan {

std::size_t DeltaExtension::edge_arc_count() const {
  std::size_t count = 0;
  for (const auto& arcs : by_edge_) count += arcs.size();
  return count;
}

std::vector<bool> DeltaExtension::reachable_from(std::size_t from) const {
  // Every arc ascends at least one layer and ids are layer-major, so heads
  // always have larger ids than tails: one ascending sweep is enough.
  std::vector<std::vector<std::size_t>> out(node_count());
  for (std::size_t a = 0; a < arcs_.size(); ++a) out[arcs_[a].tail].push_back(a);
  std::vector<bool> seen(node_count(), false);
  seen[from] = true;
  for (std::size_t v = from; v < node_count(); ++v) {
    if (!seen[v]) continue;
    for (std::size_t a : out[v]) seen[arcs_[a].head] = true;
  }
  return seen;
}

std::vector<bool> DeltaExtension::reaching(std::size_t to) const {
  std::vector<std::vector<std::size_t>> in(node_count());
  for (std::size_t a = 0; a < arcs_.size(); ++a) in[arcs_[a].head].push_back(a);
  std::vector<bool> seen(node_count(), false);
  seen[to] = true;
  for (std::size_t v = to + 1; v-- > 0;) {
    if (!seen[v]) continue;
    for (std::size_t a : in[v]) seen[arcs_[a].tail] = true;
  }
  return seen;
}

DeltaExtension build_extension(const IntegerInstance& instance, std::int64_t delta_bar,
                               const EdgeMask& mask) {
  if (delta_bar < 0) throw std::invalid_argument("delta_bar must be non-negative");
  const SpannerInstance& base = instance.instance();
  DeltaExtension ext;
  ext.n_ = base.n;
  ext.delta_bar_ = delta_bar;
  ext.directed_ = base.directed;
  ext.by_edge_.resize(base.edges.size());

  auto add_edge_arcs = [&](EdgeId e, NodeId s, NodeId t, bool reversed) {
    const std::int64_t len = instance.lengths[e];
    for (std::int64_t i = 0; i + len <= delta_bar; ++i) {
      ext.by_edge_[e].push_back(ext.arcs_.size());
      ext.arcs_.push_back({ext.node(s, i), ext.node(t, i + len), ArcKind::Edge, e, reversed});
    }
  };
  for (EdgeId e = 0; e < base.edges.size(); ++e) {
    if (!mask.empty() && !mask[e]) continue;
    const Edge& edge = base.edges[e];
    add_edge_arcs(e, edge.tail, edge.head, false);
    if (!base.directed) add_edge_arcs(e, edge.head, edge.tail, true);
  }
  for (NodeId q = 0; q < base.n; ++q) {
    for (std::int64_t i = 0; i < delta_bar; ++i) {
      ext.arcs_.push_back({ext.node(q, i), ext.node(q, i + 1), ArcKind::Self, 0, false});
    }
  }
  return ext;
}

}  // namespace freespan
