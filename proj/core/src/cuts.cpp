#include "freespan/cuts.hpp"

#include <random>

#include "freespan/errors.hpp"
#include "freespan/paths.hpp"

namespace freespan {

std::optional<std::uint64_t> ascending_cut_count(std::size_t n, std::int64_t delta, std::uint64_t cap) {
  std::uint64_t count = 1;
  const auto base = static_cast<std::uint64_t>(delta + 2);
  for (std::size_t i = 2; i < n; ++i) {
    if (count > cap / base) return std::nullopt;
    count *= base;
  }
  if (count > cap) return std::nullopt;
  return count;
}

std::optional<std::size_t> satisfying_arc(const DeltaExtension& extension, const CutLabeling& cut) {
  const auto& arcs = extension.arcs();
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const NodeId s = extension.base_of(arcs[a].tail);
    const NodeId t = extension.base_of(arcs[a].head);
    if (extension.layer_of(arcs[a].tail) >= cut.pi[s] && extension.layer_of(arcs[a].head) < cut.pi[t]) {
      return a;
    }
  }
  return std::nullopt;
}

std::uint64_t enumerate_ascending_cuts(
    const IntegerInstance& instance, const EdgeMask& mask, std::size_t demand,
    const std::function<bool(const CutLabeling&, std::optional<std::size_t>)>& visit,
    std::uint64_t cap) {
  const SpannerInstance& base = instance.instance();
  const Demand& d = base.demands.at(demand);
  const std::int64_t delta = instance.deltas[demand];
  if (!ascending_cut_count(base.n, delta, cap)) {
    throw TooManyCuts("(delta+2)^(n-2) exceeds the enumeration cap of " + std::to_string(cap));
  }
  const DeltaExtension ext = build_extension(instance, instance.delta_bar, mask);

  std::vector<NodeId> free_nodes;
  for (NodeId q = 0; q < base.n; ++q) {
    if (q != d.source && q != d.target) free_nodes.push_back(q);
  }
  CutLabeling cut;
  cut.demand = demand;
  cut.pi.assign(base.n, 0);
  cut.pi[d.target] = delta + 1;

  std::uint64_t visited = 0;
  while (true) {
    ++visited;
    if (!visit(cut, satisfying_arc(ext, cut))) break;
    // Odometer: the highest free node id turns fastest.
    std::size_t k = free_nodes.size();
    while (k > 0 && cut.pi[free_nodes[k - 1]] == delta + 1) {
      cut.pi[free_nodes[k - 1]] = 0;
      --k;
    }
    if (k == 0) break;
    ++cut.pi[free_nodes[k - 1]];
  }
  return visited;
}

namespace {

// Random u_0 v_delta cut that is not ascending, given by per-node side flags.
// Returns the witness self-arc, or nullopt if the extension lacks it.
std::optional<std::size_t> sampled_self_arc_witness(const DeltaExtension& ext, std::size_t source,
                                                    std::size_t sink, std::mt19937_64& rng) {
  const std::size_t n = ext.base_nodes();
  const std::int64_t layers = static_cast<std::int64_t>(ext.layer_count());
  std::vector<bool> in_a(ext.node_count());
  std::bernoulli_distribution coin(0.5);
  for (std::size_t x = 0; x < in_a.size(); ++x) in_a[x] = coin(rng);
  in_a[source] = true;
  in_a[sink] = false;
  // Force at least one A-below-B step on a random node so the cut is non-ascending.
  std::size_t lo = 0;
  std::size_t hi = 0;
  do {
    const auto q = static_cast<NodeId>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
    const auto i = std::uniform_int_distribution<std::int64_t>(0, layers - 2)(rng);
    lo = ext.node(q, i);
    hi = ext.node(q, i + 1);
  } while (lo == sink);
  in_a[lo] = true;
  in_a[hi] = false;

  const auto& arcs = ext.arcs();
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (arcs[a].kind == ArcKind::Self && in_a[arcs[a].tail] && !in_a[arcs[a].head]) return a;
  }
  return std::nullopt;
}

bool is_non_ascending_possible(const DeltaExtension& ext) { return ext.layer_count() >= 2; }

}  // namespace

CutLemmaReport check_cut_lemma(const IntegerInstance& instance, const EdgeMask& mask,
                               std::size_t samples, std::uint64_t seed, std::uint64_t cap) {
  const SpannerInstance& base = instance.instance();
  const DeltaExtension ext = build_extension(instance, instance.delta_bar, mask);
  const auto graph = LengthGraph::of_instance(base, mask);
  std::mt19937_64 rng(seed);
  CutLemmaReport report;
  for (std::size_t k = 0; k < base.demands.size(); ++k) {
    const Demand& d = base.demands[k];
    PairCutCheck check;
    check.demand = k;
    Distance got = dijkstra(graph, d.source).dist[d.target];
    check.distance_ok = got && *got <= d.delta;
    check.cuts = enumerate_ascending_cuts(
        instance, mask, k,
        [&](const CutLabeling&, std::optional<std::size_t> witness) {
          if (!witness) ++check.unsatisfied;
          return true;
        },
        cap);
    const auto expected = ascending_cut_count(base.n, instance.deltas[k], cap);
    if (!expected || *expected != check.cuts) {
      throw LemmaViolation("demand " + std::to_string(k) + ": enumerated " +
                           std::to_string(check.cuts) + " ascending cuts, expected (delta+2)^(n-2)");
    }
    if ((check.unsatisfied == 0) != check.distance_ok) {
      throw LemmaViolation("demand " + std::to_string(k) +
                           ": cut satisfaction disagrees with the distance check");
    }
    if (is_non_ascending_possible(ext)) {
      const std::size_t source = ext.node(d.source, 0);
      const std::size_t sink = ext.node(d.target, instance.deltas[k]);
      for (std::size_t s = 0; s < samples; ++s) {
        if (!sampled_self_arc_witness(ext, source, sink, rng)) {
          throw LemmaViolation("demand " + std::to_string(k) +
                               ": sampled non-ascending cut has no crossing self-arc");
        }
        ++check.non_ascending_sampled;
      }
    }
    report.pairs.push_back(check);
  }
  return report;
}

}  // namespace freespan
