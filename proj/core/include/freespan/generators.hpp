#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "freespan/instance.hpp"
#include "freespan/rational.hpp"

namespace freespan {

/// Directed triangle a,b,c = 0,1,2 with K = E; optimum {(a,c),(c,b)}, weight 2.
SpannerInstance example5();

/// Undirected triangle x,y,z = 0,1,2 with unit edges xy, yz and a cheap
/// non-metric edge xz (weight 1/2, length 3); all pairs with delta = 4 d_G.
/// Without the non-metric edge the optimum rises from 3/2 to 2.
SpannerInstance nonmetric_triangle(bool with_nonmetric_edge = true);

/// Single directed edge s -> t (0 -> 1), w = 1, length 3, delta = 6.
SpannerInstance subdivision_instance();

enum class GraphFamily { Decoupled, Coupled, UnitLength, UnitWeight, Basic, Geometric, AntiCorrelated };
enum class DemandFamily { MultiplicativeEdges, MultiplicativeAllPairs, Additive, Freeform };

struct GeneratorParams {
  GraphFamily family = GraphFamily::Decoupled;
  DemandFamily demands = DemandFamily::Freeform;
  std::size_t n = 8;
  /// Edge count; clamped to [n-1, max simple edges]. Ignored by Geometric.
  std::size_t m = 12;
  bool directed = false;
  std::int64_t max_weight = 10;
  std::int64_t max_length = 4;
  /// Multiplicative stretch.
  Rational alpha{3};
  /// Additive surplus.
  std::int64_t beta = 2;
  /// Freeform demands draw delta from [d_G, slack * d_G] in quarter steps.
  Rational slack{2};
  /// Freeform pair count; 0 means every connected pair.
  std::size_t pairs = 0;
  std::uint64_t seed = 1;
};

/// Seeded random instance; the result is canonical and passes validation.
SpannerInstance generate(const GeneratorParams& params);

std::optional<GraphFamily> parse_graph_family(std::string_view name);
std::optional<DemandFamily> parse_demand_family(std::string_view name);
const char* to_string(GraphFamily family);
const char* to_string(DemandFamily family);

/// Fixed instances by name: example5, triangle, triangle-metric, subdivision.
std::optional<SpannerInstance> named_instance(std::string_view name);

}  // namespace freespan
