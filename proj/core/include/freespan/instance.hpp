#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "freespan/rational.hpp"

namespace freespan {

using NodeId = std::uint32_t;
using EdgeId = std::size_t;

/// Membership flags over an edge sequence. An empty mask selects everything.
using EdgeMask = std::vector<bool>;

struct Edge {
  NodeId tail = 0;
  NodeId head = 0;
  Rational weight;
  Rational length;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Demand {
  NodeId source = 0;
  NodeId target = 0;
  Rational delta;

  friend bool operator==(const Demand&, const Demand&) = default;
};

/// A decoupled freeform spanner instance: independent weights and lengths per
/// edge plus a distance bound per terminal pair. Undirected instances keep one
/// record per edge; consumers bi-direct as needed.
struct SpannerInstance {
  bool directed = false;
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<Demand> demands;
  std::vector<std::string> labels;

  /// Orients undirected edges and pairs as (min,max) and sorts edges and
  /// demands by (u,v). Edge indices refer to this order afterwards.
  void canonicalize();

  Rational max_length() const;
  Rational total_weight() const;

  friend bool operator==(const SpannerInstance&, const SpannerInstance&) = default;
};

enum class ViolationKind {
  NodeOutOfRange,
  SelfLoop,
  DuplicateEdge,
  NegativeWeight,
  NonPositiveLength,
  NonPositiveDelta,
  DemandSelfPair,
  DuplicateDemand,
  LabelCount,
  Disconnected,
  UnsatisfiableDemand,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
  std::string summary() const;
};

ValidationReport validate(const SpannerInstance& instance);

/// Throws ValidationError carrying the report summary when validation fails.
void require_valid(const SpannerInstance& instance);

/// An edge subset of an instance. Holds a reference; the instance must outlive it.
class Subgraph {
 public:
  Subgraph(const SpannerInstance& instance, std::vector<EdgeId> edges);

  const SpannerInstance& instance() const { return *instance_; }
  const std::vector<EdgeId>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  Rational weight() const;
  bool contains(EdgeId e) const;
  EdgeMask mask() const;

 private:
  const SpannerInstance* instance_;
  std::vector<EdgeId> edges_;
};

Rational weight_of(const SpannerInstance& instance, const std::vector<EdgeId>& edges);
EdgeMask mask_of(std::size_t edge_count, const std::vector<EdgeId>& edges);
std::vector<EdgeId> edges_of(const EdgeMask& mask);

/// Integer-length view used by the layered-extension machinery. Demands are
/// floored (achievable distances are integers) and capped at n * max length,
/// beyond which every demand of a connected instance is met by any path.
struct IntegerInstance {
  const SpannerInstance* base = nullptr;
  std::vector<std::int64_t> lengths;
  std::vector<std::int64_t> deltas;
  std::int64_t max_length = 0;
  std::int64_t delta_bar = 0;

  const SpannerInstance& instance() const { return *base; }
  std::size_t n() const { return base->n; }
  bool directed() const { return base->directed; }
};

/// Throws NonIntegerLength naming the first edge whose length is fractional.
IntegerInstance require_integer_lengths(const SpannerInstance& instance);
/// The view keeps a pointer to its instance, so temporaries are refused.
IntegerInstance require_integer_lengths(const SpannerInstance&& instance) = delete;

}  // namespace freespan
