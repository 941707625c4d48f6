#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freespan/greedy.hpp"
#include "freespan/instance.hpp"

namespace freespan {

struct PotentialStep {
  std::size_t demand = 0;
  bool executed = false;
  std::int64_t c_before = 0;
  std::int64_t c_after = 0;
  std::int64_t v_before = 0;
  std::int64_t v_after = 0;

  /// Change of c(H) - 12 v(H) over the step.
  std::int64_t change() const { return (c_after - 12 * v_after) - (c_before - 12 * v_before); }
};

struct MonitorReport {
  std::size_t n = 0;
  std::int64_t beta = 0;
  std::vector<PotentialStep> steps;
  std::size_t executed = 0;
  std::size_t violations = 0;
  std::int64_t final_c = 0;
  std::size_t final_edges = 0;

  bool monotone() const { return violations == 0; }
  double n_three_halves() const;
  std::string text() const;
  std::string json() const;
};

/// Sum of squared degrees of the subgraph `mask`.
std::int64_t degree_potential(const SpannerInstance& instance, const EdgeMask& mask);
/// Sum over all ordered node pairs (x,y), x = y included, of max{0, d_G(x,y) - d_H(x,y) + beta + 3};
/// pairs unreachable in H contribute 0. Unit lengths, BFS distances.
std::int64_t distance_potential(const SpannerInstance& instance, const EdgeMask& mask, std::int64_t beta);

/// Replays a greedy trace on an undirected unit-length instance whose demands
/// are all pairs with delta = d_G + beta, recording c(H) and v(H) around each
/// step. With `strict`, throws MonotonicityViolation on the first step where
/// c - 12 v increases; otherwise counts such steps.
MonitorReport potential_monitor(const SpannerInstance& instance, const std::vector<GreedyStep>& trace,
                                std::int64_t beta, bool strict = true);

}  // namespace freespan
