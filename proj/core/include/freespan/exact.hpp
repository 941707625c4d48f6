#pragma once

#include <cstddef>
#include <vector>

#include "freespan/instance.hpp"
#include "freespan/rational.hpp"

namespace freespan {

struct ExactResult {
  Rational weight;
  std::vector<EdgeId> edges;
  std::size_t nodes_explored = 0;
};

inline constexpr std::size_t kDefaultExactCap = 22;

/// Minimum-weight feasible subgraph by branch and bound over edge subsets.
/// Edges are decided in (weight, index) order, include-branch first; a node
/// is pruned when even including every undecided edge is infeasible or when
/// it cannot beat the incumbent. Throws TooLarge when m > cap and
/// InfeasibleInstance when G itself fails.
ExactResult exact_optimum(const SpannerInstance& instance, std::size_t cap = kDefaultExactCap);

}  // namespace freespan
