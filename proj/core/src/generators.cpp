#include "freespan/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "freespan/paths.hpp"

namespace freespan {

SpannerInstance example5() {
  SpannerInstance inst;
  inst.directed = true;
  inst.n = 3;
  inst.labels = {"a", "b", "c"};
  inst.edges = {{0, 1, Rational(5), Rational(1)},
                {0, 2, Rational(1), Rational(2)},
                {2, 1, Rational(1), Rational(1)}};
  inst.demands = {{0, 1, Rational(3)}, {0, 2, Rational(2)}, {2, 1, Rational(2)}};
  inst.canonicalize();
  return inst;
}

SpannerInstance nonmetric_triangle(bool with_nonmetric_edge) {
  SpannerInstance inst;
  inst.directed = false;
  inst.n = 3;
  inst.labels = {"x", "y", "z"};
  inst.edges = {{0, 1, Rational(1), Rational(1)}, {1, 2, Rational(1), Rational(1)}};
  if (with_nonmetric_edge) inst.edges.push_back({0, 2, Rational(1, 2), Rational(3)});
  // d_G is 1, 2, 1 with or without the long edge.
  inst.demands = {{0, 1, Rational(4)}, {0, 2, Rational(8)}, {1, 2, Rational(4)}};
  inst.canonicalize();
  return inst;
}

SpannerInstance subdivision_instance() {
  SpannerInstance inst;
  inst.directed = true;
  inst.n = 2;
  inst.labels = {"s", "t"};
  inst.edges = {{0, 1, Rational(1), Rational(3)}};
  inst.demands = {{0, 1, Rational(6)}};
  return inst;
}

namespace {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

void add_edge_attributes(const GeneratorParams& p, Rng& rng, Edge& e) {
  switch (p.family) {
    case GraphFamily::Decoupled:
      e.weight = Rational(uniform(rng, 1, 2 * p.max_weight), 2);
      e.length = Rational(uniform(rng, 1, p.max_length));
      break;
    case GraphFamily::Coupled:
      e.length = Rational(uniform(rng, 1, p.max_length));
      e.weight = e.length;
      break;
    case GraphFamily::UnitLength:
      e.weight = Rational(uniform(rng, 1, p.max_weight));
      e.length = Rational(1);
      break;
    case GraphFamily::UnitWeight:
      e.weight = Rational(1);
      e.length = Rational(uniform(rng, 1, p.max_length));
      break;
    case GraphFamily::Basic:
      e.weight = Rational(1);
      e.length = Rational(1);
      break;
    case GraphFamily::AntiCorrelated:
      e.length = Rational(uniform(rng, 1, p.max_length));
      e.weight = Rational(p.max_length) / e.length;
      break;
    case GraphFamily::Geometric:
      break;
  }
}

void random_topology(const GeneratorParams& p, Rng& rng, SpannerInstance& inst) {
  const std::size_t n = p.n;
  std::vector<NodeId> perm(n);
  for (NodeId v = 0; v < n; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::set<std::pair<NodeId, NodeId>> present;
  auto key = [&](NodeId a, NodeId b) {
    if (!p.directed && a > b) std::swap(a, b);
    return std::make_pair(a, b);
  };
  for (std::size_t i = 1; i < n; ++i) {
    NodeId parent = perm[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(i) - 1))];
    NodeId child = perm[i];
    if (p.directed && uniform(rng, 0, 1)) std::swap(parent, child);
    inst.edges.push_back({parent, child, {}, {}});
    present.insert(key(parent, child));
  }
  const std::size_t max_edges = p.directed ? n * (n - 1) : n * (n - 1) / 2;
  const std::size_t target = std::clamp(p.m, n - 1, max_edges);
  std::vector<std::pair<NodeId, NodeId>> candidates;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = 0; b < n; ++b) {
      if (a == b || (!p.directed && a > b) || present.count(key(a, b))) continue;
      candidates.push_back({a, b});
    }
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  for (std::size_t i = 0; inst.edges.size() < target; ++i) {
    inst.edges.push_back({candidates[i].first, candidates[i].second, {}, {}});
  }
  for (Edge& e : inst.edges) add_edge_attributes(p, rng, e);
}

void geometric_topology(const GeneratorParams& p, Rng& rng, SpannerInstance& inst) {
  constexpr std::int64_t kScale = std::int64_t{1} << 20;
  std::vector<std::pair<std::int64_t, std::int64_t>> pts(p.n);
  for (auto& pt : pts) pt = {uniform(rng, 0, kScale), uniform(rng, 0, kScale)};
  for (NodeId a = 0; a < p.n; ++a) {
    for (NodeId b = 0; b < p.n; ++b) {
      if (a == b || (!p.directed && a > b)) continue;
      const double dx = static_cast<double>(pts[a].first - pts[b].first);
      const double dy = static_cast<double>(pts[a].second - pts[b].second);
      // Coordinates are already scaled by 2^20, so rounding keeps 20 fractional bits.
      const auto scaled = std::max<std::int64_t>(1, std::llround(std::hypot(dx, dy)));
      Rational len(scaled, kScale);
      inst.edges.push_back({a, b, len, len});
    }
  }
}

}  // namespace

SpannerInstance generate(const GeneratorParams& p) {
  if (p.n == 0) throw std::invalid_argument("n must be positive");
  if (p.max_weight < 1 || p.max_length < 1) {
    throw std::invalid_argument("max weight and max length must be at least 1");
  }
  if (p.alpha < Rational(1)) throw std::invalid_argument("alpha must be at least 1");
  if (p.beta < 0) throw std::invalid_argument("beta must be non-negative");
  if (p.slack < Rational(1)) throw std::invalid_argument("slack must be at least 1");
  Rng rng(p.seed);
  SpannerInstance inst;
  inst.directed = p.directed;
  inst.n = p.n;
  if (p.family == GraphFamily::Geometric) {
    geometric_topology(p, rng, inst);
  } else {
    random_topology(p, rng, inst);
  }
  inst.canonicalize();

  const auto graph = LengthGraph::of_instance(inst);
  std::vector<std::vector<Distance>> dist(p.n);
  for (NodeId s = 0; s < p.n; ++s) dist[s] = dijkstra(graph, s).dist;

  std::vector<std::pair<NodeId, NodeId>> pairs;
  if (p.demands == DemandFamily::MultiplicativeEdges) {
    for (const Edge& e : inst.edges) pairs.push_back({e.tail, e.head});
  } else {
    for (NodeId a = 0; a < p.n; ++a) {
      for (NodeId b = 0; b < p.n; ++b) {
        if (a == b || (!p.directed && a > b) || !dist[a][b]) continue;
        pairs.push_back({a, b});
      }
    }
  }
  if (p.demands == DemandFamily::Freeform) {
    std::shuffle(pairs.begin(), pairs.end(), rng);
    if (p.pairs > 0 && p.pairs < pairs.size()) pairs.resize(p.pairs);
  }
  const std::int64_t steps = ((p.slack - Rational(1)) * Rational(4)).floor();
  for (auto [a, b] : pairs) {
    const Rational d = *dist[a][b];
    Rational delta;
    switch (p.demands) {
      case DemandFamily::MultiplicativeEdges:
      case DemandFamily::MultiplicativeAllPairs: delta = p.alpha * d; break;
      case DemandFamily::Additive: delta = d + Rational(p.beta); break;
      case DemandFamily::Freeform:
        delta = d * (Rational(1) + Rational(uniform(rng, 0, steps), 4));
        break;
    }
    inst.demands.push_back({a, b, delta});
  }
  inst.canonicalize();
  return inst;
}

namespace {

constexpr std::pair<GraphFamily, const char*> kGraphNames[] = {
    {GraphFamily::Decoupled, "decoupled"},   {GraphFamily::Coupled, "coupled"},
    {GraphFamily::UnitLength, "unit-length"}, {GraphFamily::UnitWeight, "unit-weight"},
    {GraphFamily::Basic, "basic"},           {GraphFamily::Geometric, "geometric"},
    {GraphFamily::AntiCorrelated, "anti-correlated"},
};

constexpr std::pair<DemandFamily, const char*> kDemandNames[] = {
    {DemandFamily::MultiplicativeEdges, "mult-edges"},
    {DemandFamily::MultiplicativeAllPairs, "mult-all"},
    {DemandFamily::Additive, "additive"},
    {DemandFamily::Freeform, "freeform"},
};

}  // namespace

std::optional<GraphFamily> parse_graph_family(std::string_view name) {
  for (auto [f, s] : kGraphNames) {
    if (name == s) return f;
  }
  return std::nullopt;
}

std::optional<DemandFamily> parse_demand_family(std::string_view name) {
  for (auto [f, s] : kDemandNames) {
    if (name == s) return f;
  }
  return std::nullopt;
}

const char* to_string(GraphFamily family) {
  for (auto [f, s] : kGraphNames) {
    if (f == family) return s;
  }
  return "unknown";
}

const char* to_string(DemandFamily family) {
  for (auto [f, s] : kDemandNames) {
    if (f == family) return s;
  }
  return "unknown";
}

std::optional<SpannerInstance> named_instance(std::string_view name) {
  if (name == "example5") return example5();
  if (name == "triangle") return nonmetric_triangle(true);
  if (name == "triangle-metric") return nonmetric_triangle(false);
  if (name == "subdivision") return subdivision_instance();
  return std::nullopt;
}

}  // namespace freespan
