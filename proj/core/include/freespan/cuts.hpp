#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "freespan/extension.hpp"
#include "freespan/instance.hpp"

namespace freespan {

/// Node labeling inducing an ascending u_0 v_delta cut: q_i lies on the sink
/// side B for i < pi(q) and on the source side A otherwise.
struct CutLabeling {
  std::size_t demand = 0;
  std::vector<std::int64_t> pi;
};

inline constexpr std::uint64_t kDefaultCutCap = 1'000'000;

/// (delta + 2)^(n - 2), or nullopt once it exceeds `cap`.
std::optional<std::uint64_t> ascending_cut_count(std::size_t n, std::int64_t delta,
                                                 std::uint64_t cap = kDefaultCutCap);

/// First extension arc crossing from A to B, if any.
std::optional<std::size_t> satisfying_arc(const DeltaExtension& extension, const CutLabeling& cut);

/// Calls `visit(labeling, witness)` for every ascending cut of demand
/// `demand` in the extension of the subgraph `mask`. Labels of the other
/// nodes run through {0..delta+1} in lexicographic order of node id. Returns
/// the number of cuts visited; `visit` may stop the walk by returning false.
/// Throws TooManyCuts above `cap`.
std::uint64_t enumerate_ascending_cuts(
    const IntegerInstance& instance, const EdgeMask& mask, std::size_t demand,
    const std::function<bool(const CutLabeling&, std::optional<std::size_t>)>& visit,
    std::uint64_t cap = kDefaultCutCap);

struct PairCutCheck {
  std::size_t demand = 0;
  std::uint64_t cuts = 0;
  std::uint64_t unsatisfied = 0;
  bool distance_ok = false;
  std::size_t non_ascending_sampled = 0;
};

struct CutLemmaReport {
  std::vector<PairCutCheck> pairs;
};

/// For each demand, checks that every ascending cut is satisfied exactly
/// when d_H(u,v) <= delta(u,v), and that `samples` random non-ascending cuts
/// are each satisfied by a self-arc. Throws LemmaViolation on any mismatch.
CutLemmaReport check_cut_lemma(const IntegerInstance& instance, const EdgeMask& mask,
                               std::size_t samples = 32, std::uint64_t seed = 1,
                               std::uint64_t cap = kDefaultCutCap);

}  // namespace freespan
