#pragma once

#include <cstdint>
#include <vector>

#include "freespan/instance.hpp"

namespace freespan {

enum class ArcKind { Edge, Self };

/// Arc of the layered extension. Edge arcs carry the originating instance
/// edge; `reversed` marks the head->tail copy of an undirected edge.
struct ExtensionArc {
  std::size_t tail = 0;
  std::size_t head = 0;
  ArcKind kind = ArcKind::Self;
  EdgeId edge = 0;
  bool reversed = false;
};

/// Layered DAG with delta_bar+1 copies of the node set. Node (q, i) has index
/// i*n + q. An edge (s,t) of integer length l yields arcs (s_i, t_{i+l}) for
/// 0 <= i <= delta_bar - l; every node has self-arcs (q_i, q_{i+1}).
class DeltaExtension {
 public:
  std::size_t base_nodes() const { return n_; }
  std::int64_t delta_bar() const { return delta_bar_; }
  std::size_t layer_count() const { return static_cast<std::size_t>(delta_bar_) + 1; }
  std::size_t node_count() const { return n_ * layer_count(); }

  std::size_t node(NodeId q, std::int64_t layer) const {
    return static_cast<std::size_t>(layer) * n_ + q;
  }
  NodeId base_of(std::size_t ext_node) const { return static_cast<NodeId>(ext_node % n_); }
  std::int64_t layer_of(std::size_t ext_node) const {
    return static_cast<std::int64_t>(ext_node / n_);
  }

  const std::vector<ExtensionArc>& arcs() const { return arcs_; }
  /// Arc indices generated by instance edge `e` (both directions if undirected).
  const std::vector<std::size_t>& arcs_of_edge(EdgeId e) const { return by_edge_[e]; }
  std::size_t edge_arc_count() const;
  std::size_t self_arc_count() const { return arcs_.size() - edge_arc_count(); }
  bool directed() const { return directed_; }

  /// Nodes reachable from `from` along arcs.
  std::vector<bool> reachable_from(std::size_t from) const;
  /// Nodes that can reach `to` along arcs.
  std::vector<bool> reaching(std::size_t to) const;
  bool reaches(std::size_t from, std::size_t to) const { return reachable_from(from)[to]; }

 private:
  friend DeltaExtension build_extension(const IntegerInstance&, std::int64_t, const EdgeMask&);

  std::size_t n_ = 0;
  std::int64_t delta_bar_ = 0;
  bool directed_ = true;
  std::vector<ExtensionArc> arcs_;
  std::vector<std::vector<std::size_t>> by_edge_;
};

/// Builds the extension of the subgraph selected by `mask` (all edges when
/// empty). Undirected instances are bi-directed. Edges longer than
/// delta_bar contribute no arcs.
DeltaExtension build_extension(const IntegerInstance& instance, std::int64_t delta_bar,
                               const EdgeMask& mask = {});

}  // namespace freespan
