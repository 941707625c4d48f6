#include "freespan/potential.hpp"

#include <cmath>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "freespan/errors.hpp"
#include "json.hpp"

namespace freespan {

namespace {

constexpr std::int64_t kUnreachable = -1;

std::vector<std::vector<NodeId>> adjacency(const SpannerInstance& instance, const EdgeMask& mask) {
  std::vector<std::vector<NodeId>> adj(instance.n);
  for (EdgeId e = 0; e < instance.edges.size(); ++e) {
    if (!mask.empty() && !mask[e]) continue;
    adj[instance.edges[e].tail].push_back(instance.edges[e].head);
    adj[instance.edges[e].head].push_back(instance.edges[e].tail);
  }
  return adj;
}

std::vector<std::vector<std::int64_t>> all_pairs_bfs(const std::vector<std::vector<NodeId>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<std::int64_t>> dist(n, std::vector<std::int64_t>(n, kUnreachable));
  for (NodeId s = 0; s < n; ++s) {
    std::deque<NodeId> queue{s};
    dist[s][s] = 0;
    while (!queue.empty()) {
      NodeId x = queue.front();
      queue.pop_front();
      for (NodeId y : adj[x]) {
        if (dist[s][y] != kUnreachable) continue;
        dist[s][y] = dist[s][x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::int64_t distance_potential(const std::vector<std::vector<std::int64_t>>& dg,
                                const std::vector<std::vector<std::int64_t>>& dh, std::int64_t beta) {
  std::int64_t total = 0;
  for (std::size_t x = 0; x < dg.size(); ++x) {
    for (std::size_t y = 0; y < dg.size(); ++y) {
      if (dh[x][y] == kUnreachable) continue;
      total += std::max<std::int64_t>(0, dg[x][y] - dh[x][y] + beta + 3);
    }
  }
  return total;
}

}  // namespace

std::int64_t degree_potential(const SpannerInstance& instance, const EdgeMask& mask) {
  std::int64_t total = 0;
  for (const auto& nbrs : adjacency(instance, mask)) {
    total += static_cast<std::int64_t>(nbrs.size() * nbrs.size());
  }
  return total;
}

std::int64_t distance_potential(const SpannerInstance& instance, const EdgeMask& mask, std::int64_t beta) {
  const auto dg = all_pairs_bfs(adjacency(instance, {}));
  const auto dh = all_pairs_bfs(adjacency(instance, mask));
  return distance_potential(dg, dh, beta);
}

MonitorReport potential_monitor(const SpannerInstance& instance, const std::vector<GreedyStep>& trace,
                                std::int64_t beta, bool strict) {
  if (instance.directed) throw std::invalid_argument("the potential monitor needs an undirected instance");
  if (beta < 2) throw std::invalid_argument("beta must be an integer >= 2");
  for (const Edge& e : instance.edges) {
    if (e.length != Rational(1)) throw std::invalid_argument("the potential monitor needs unit lengths");
  }
  const auto dg = all_pairs_bfs(adjacency(instance, {}));
  const std::size_t pairs = instance.n * (instance.n - 1) / 2;
  if (instance.demands.size() != pairs) {
    throw std::invalid_argument("the potential monitor needs a demand on every node pair");
  }
  for (const Demand& d : instance.demands) {
    if (dg[d.source][d.target] == kUnreachable ||
        d.delta != Rational(dg[d.source][d.target] + beta)) {
      throw std::invalid_argument("demands must equal d_G + beta");
    }
  }

  MonitorReport report;
  report.n = instance.n;
  report.beta = beta;
  EdgeMask h(instance.edges.size(), false);
  std::int64_t c = 0;
  std::int64_t v = distance_potential(dg, all_pairs_bfs(adjacency(instance, h)), beta);
  for (const GreedyStep& step : trace) {
    PotentialStep rec;
    rec.demand = step.demand;
    rec.executed = step.executed;
    rec.c_before = c;
    rec.v_before = v;
    if (step.executed) {
      for (EdgeId e : step.added) h[e] = true;
      c = degree_potential(instance, h);
      v = distance_potential(dg, all_pairs_bfs(adjacency(instance, h)), beta);
      ++report.executed;
    }
    rec.c_after = c;
    rec.v_after = v;
    if (rec.change() > 0) {
      ++report.violations;
      if (strict) {
        throw MonotonicityViolation("c - 12v increased by " + std::to_string(rec.change()) +
                                    " on demand " + std::to_string(step.demand));
      }
    }
    report.steps.push_back(rec);
  }
  report.final_c = c;
  report.final_edges = edges_of(h).size();
  return report;
}

double MonitorReport::n_three_halves() const { return std::pow(static_cast<double>(n), 1.5); }

std::string MonitorReport::text() const {
  std::ostringstream out;
  out << "n=" << n << " beta=" << beta << " steps=" << steps.size() << " executed=" << executed
      << " violations=" << violations << "\n";
  out << "final |E'|=" << final_edges << " c(H)=" << final_c << " n^1.5=" << n_three_halves() << "\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const PotentialStep& s = steps[i];
    if (!s.executed) continue;
    out << "step " << i << " demand " << s.demand << ": c " << s.c_before << "->" << s.c_after << " v "
        << s.v_before << "->" << s.v_after << " change " << s.change() << "\n";
  }
  return out.str();
}

std::string MonitorReport::json() const {
  nlohmann::ordered_json doc;
  doc["n"] = n;
  doc["beta"] = beta;
  doc["executed"] = executed;
  doc["violations"] = violations;
  doc["final_edges"] = final_edges;
  doc["final_c"] = final_c;
  doc["n_three_halves"] = n_three_halves();
  auto steps_json = nlohmann::ordered_json::array();
  for (const PotentialStep& s : steps) {
    steps_json.push_back({{"demand", s.demand},
                          {"executed", s.executed},
                          {"c_before", s.c_before},
                          {"c_after", s.c_after},
                          {"v_before", s.v_before},
                          {"v_after", s.v_after},
                          {"change", s.change()}});
  }
  doc["steps"] = std::move(steps_json);
  return doc.dump(1) + "\n";
}

}  // namespace freespan
