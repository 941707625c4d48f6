#pragma once

#include <cstdint>
#include <string>

#include "freespan/lp.hpp"
#include "freespan/rational.hpp"

namespace freespan {

/// Reproduction of the subdivision counterexample: one directed edge s -> t
/// of weight 1 and length `length`, a multiplicative `alpha` demand, the
/// unit-length subdivided graph G+, and its alpha-extension.
struct DemoReport {
  std::int64_t length = 3;
  std::int64_t alpha = 2;
  std::size_t subdivided_nodes = 0;
  std::size_t subdivided_edges = 0;
  std::size_t extension_nodes = 0;
  std::size_t extension_arcs = 0;
  /// Whether s+_0 reaches t+_alpha in the alpha-extension of G+.
  bool transformed_feasible = false;
  LpStatus transformed_lp_status = LpStatus::NumericalTrouble;
  /// Exact optimum of the original instance with delta = alpha * l.
  Rational original_opt;
  bool original_feasible = false;

  std::string text() const;
  std::string json() const;
};

DemoReport subdivision_demo(std::int64_t length = 3, std::int64_t alpha = 2);

}  // namespace freespan
