#include "freespan/instance.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "freespan/errors.hpp"
#include "freespan/paths.hpp"

namespace freespan {

void SpannerInstance::canonicalize() {
  if (!directed) {
    for (Edge& e : edges) {
      if (e.tail > e.head) std::swap(e.tail, e.head);
    }
    for (Demand& d : demands) {
      if (d.source > d.target) std::swap(d.source, d.target);
    }
  }
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
  });
  std::stable_sort(demands.begin(), demands.end(), [](const Demand& a, const Demand& b) {
    return std::pair(a.source, a.target) < std::pair(b.source, b.target);
  });
}

Rational SpannerInstance::max_length() const {
  Rational best(0);
  for (const Edge& e : edges) best = std::max(best, e.length);
  return best;
}

Rational SpannerInstance::total_weight() const {
  Rational sum(0);
  for (const Edge& e : edges) sum += e.weight;
  return sum;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NodeOutOfRange: return "node-out-of-range";
    case ViolationKind::SelfLoop: return "self-loop";
    case ViolationKind::DuplicateEdge: return "duplicate-edge";
    case ViolationKind::NegativeWeight: return "negative-weight";
    case ViolationKind::NonPositiveLength: return "non-positive-length";
    case ViolationKind::NonPositiveDelta: return "non-positive-delta";
    case ViolationKind::DemandSelfPair: return "demand-self-pair";
    case ViolationKind::DuplicateDemand: return "duplicate-demand";
    case ViolationKind::LabelCount: return "label-count";
    case ViolationKind::Disconnected: return "disconnected";
    case ViolationKind::UnsatisfiableDemand: return "unsatisfiable demand";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (const auto& v : violations) out << to_string(v.kind) << ": " << v.message << '\n';
  return out.str();
}

namespace {

std::pair<NodeId, NodeId> key(bool directed, NodeId a, NodeId b) {
  if (!directed && a > b) std::swap(a, b);
  return {a, b};
}

}  // namespace

ValidationReport validate(const SpannerInstance& instance) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::string message) {
    report.violations.push_back({kind, std::move(message)});
  };
  const auto n = instance.n;
  if (n == 0) add(ViolationKind::NodeOutOfRange, "instance has no nodes");
  if (!instance.labels.empty() && instance.labels.size() != n) {
    add(ViolationKind::LabelCount, "expected " + std::to_string(n) + " labels, got " +
                                       std::to_string(instance.labels.size()));
  }

  bool structurally_sound = true;
  std::set<std::pair<NodeId, NodeId>> seen_edges;
  for (std::size_t i = 0; i < instance.edges.size(); ++i) {
    const Edge& e = instance.edges[i];
    const std::string where = "edge " + std::to_string(i);
    if (e.tail >= n || e.head >= n) {
      add(ViolationKind::NodeOutOfRange, where + " references a node outside [0, n)");
      structurally_sound = false;
      continue;
    }
    if (e.tail == e.head) {
      add(ViolationKind::SelfLoop, where + " is a self-loop at node " + std::to_string(e.tail));
      structurally_sound = false;
    }
    if (!seen_edges.insert(key(instance.directed, e.tail, e.head)).second) {
      add(ViolationKind::DuplicateEdge, where + " duplicates (" + std::to_string(e.tail) + "," +
                                            std::to_string(e.head) + ")");
      structurally_sound = false;
    }
    if (e.weight < Rational(0)) add(ViolationKind::NegativeWeight, where + " has negative weight");
    if (e.length <= Rational(0)) {
      add(ViolationKind::NonPositiveLength, where + " has non-positive length");
      structurally_sound = false;
    }
  }

  std::set<std::pair<NodeId, NodeId>> seen_pairs;
  for (std::size_t k = 0; k < instance.demands.size(); ++k) {
    const Demand& d = instance.demands[k];
    const std::string where = "demand " + std::to_string(k);
    if (d.source >= n || d.target >= n) {
      add(ViolationKind::NodeOutOfRange, where + " references a node outside [0, n)");
      structurally_sound = false;
      continue;
    }
    if (d.source == d.target) add(ViolationKind::DemandSelfPair, where + " pairs a node with itself");
    if (!seen_pairs.insert(key(instance.directed, d.source, d.target)).second) {
      add(ViolationKind::DuplicateDemand, where + " repeats a terminal pair");
    }
    if (d.delta <= Rational(0)) add(ViolationKind::NonPositiveDelta, where + " has non-positive delta");
  }
  if (!structurally_sound || n == 0) return report;

  auto graph = LengthGraph::of_instance(instance);
  if (!instance.directed) {
    auto sp = dijkstra(graph, 0);
    for (NodeId v = 0; v < n; ++v) {
      if (!sp.reachable(v)) {
        add(ViolationKind::Disconnected, "node " + std::to_string(v) + " is not connected to node 0");
        break;
      }
    }
  }
  for (std::size_t k = 0; k < instance.demands.size(); ++k) {
    const Demand& d = instance.demands[k];
    if (d.source == d.target) continue;
    Distance got = dijkstra(graph, d.source).dist[d.target];
    if (!got) {
      add(ViolationKind::UnsatisfiableDemand,
          "demand " + std::to_string(k) + ": target unreachable from source");
    } else if (*got > d.delta) {
      add(ViolationKind::UnsatisfiableDemand, "demand " + std::to_string(k) + ": delta " +
                                                  d.delta.str() + " < shortest distance " +
                                                  got->str());
    }
  }
  return report;
}

void require_valid(const SpannerInstance& instance) {
  auto report = validate(instance);
  if (!report.ok()) throw ValidationError("invalid instance:\n" + report.summary());
}

Subgraph::Subgraph(const SpannerInstance& instance, std::vector<EdgeId> edges)
    : instance_(&instance), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Rational Subgraph::weight() const { return weight_of(*instance_, edges_); }

bool Subgraph::contains(EdgeId e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

EdgeMask Subgraph::mask() const { return mask_of(instance_->edges.size(), edges_); }

Rational weight_of(const SpannerInstance& instance, const std::vector<EdgeId>& edges) {
  Rational sum(0);
  for (EdgeId e : edges) sum += instance.edges[e].weight;
  return sum;
}

EdgeMask mask_of(std::size_t edge_count, const std::vector<EdgeId>& edges) {
  EdgeMask mask(edge_count, false);
  for (EdgeId e : edges) mask[e] = true;
  return mask;
}

std::vector<EdgeId> edges_of(const EdgeMask& mask) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < mask.size(); ++e) {
    if (mask[e]) out.push_back(e);
  }
  return out;
}

IntegerInstance require_integer_lengths(const SpannerInstance& instance) {
  IntegerInstance view;
  view.base = &instance;
  view.lengths.reserve(instance.edges.size());
  for (std::size_t i = 0; i < instance.edges.size(); ++i) {
    const Rational& len = instance.edges[i].length;
    if (!len.is_integer()) {
      throw NonIntegerLength(i, "edge " + std::to_string(i) + " (" +
                                    std::to_string(instance.edges[i].tail) + "," +
                                    std::to_string(instance.edges[i].head) +
                                    ") has non-integer length " + len.str());
    }
    view.lengths.push_back(len.num());
    view.max_length = std::max(view.max_length, len.num());
  }
  const std::int64_t cap = static_cast<std::int64_t>(instance.n) * view.max_length;
  for (const Demand& d : instance.demands) {
    std::int64_t delta = d.delta.floor();
    if (cap > 0) delta = std::min(delta, cap);
    view.deltas.push_back(delta);
    view.delta_bar = std::max(view.delta_bar, delta);
  }
  return view;
}

}  // namespace freespan
