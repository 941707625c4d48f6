#include "freespan/exact.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "freespan/errors.hpp"
#include "freespan/paths.hpp"

namespace freespan {

namespace {

class Search {
 public:
  explicit Search(const SpannerInstance& instance) : inst_(instance) {
    order_.resize(instance.edges.size());
    std::iota(order_.begin(), order_.end(), EdgeId{0});
    std::stable_sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) {
      return inst_.edges[a].weight < inst_.edges[b].weight;
    });
    chosen_.assign(order_.size(), false);
  }

  void run(std::size_t depth, const Rational& current) {
    ++explored_;
    if (best_ && current >= *best_) return;
    if (feasible(chosen_)) {
      best_ = current;
      best_set_ = chosen_;
      return;
    }
    if (depth == order_.size()) return;
    // Something undecided must still be added; the cheapest candidate is next in order.
    if (best_ && current + inst_.edges[order_[depth]].weight >= *best_) return;
    EdgeMask optimistic = chosen_;
    for (std::size_t i = depth; i < order_.size(); ++i) optimistic[order_[i]] = true;
    if (!feasible(optimistic)) return;

    const EdgeId e = order_[depth];
    chosen_[e] = true;
    run(depth + 1, current + inst_.edges[e].weight);
    chosen_[e] = false;
    run(depth + 1, current);
  }

  ExactResult result() const {
    ExactResult r;
    r.weight = *best_;
    r.edges = edges_of(best_set_);
    r.nodes_explored = explored_;
    return r;
  }

  bool feasible(const EdgeMask& mask) const { return verify_feasible(inst_, mask).feasible(); }

 private:
  const SpannerInstance& inst_;
  std::vector<EdgeId> order_;
  EdgeMask chosen_;
  std::optional<Rational> best_;
  EdgeMask best_set_;
  std::size_t explored_ = 0;
};

}  // namespace

ExactResult exact_optimum(const SpannerInstance& instance, std::size_t cap) {
  if (instance.edges.size() > cap) {
    throw TooLarge("exact search is capped at " + std::to_string(cap) + " edges, instance has " +
                   std::to_string(instance.edges.size()));
  }
  Search search(instance);
  if (!search.feasible(EdgeMask(instance.edges.size(), true))) {
    throw InfeasibleInstance("the full graph does not meet every demand");
  }
  search.run(0, Rational(0));
  return search.result();
}

}  // namespace freespan
