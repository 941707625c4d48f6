#include "freespan/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <sstream>
#include <thread>

#include "freespan/errors.hpp"
#include "freespan/greedy.hpp"
#include "json.hpp"

namespace freespan {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::pair<Algorithm, const char*> kAlgorithmNames[] = {
    {Algorithm::Greedy, "greedy"},
    {Algorithm::AugmentedGreedy, "augmented-greedy"},
    {Algorithm::RandomizedRounding, "randomized-rounding"},
    {Algorithm::Exact, "exact"},
};

std::string number(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

template <class F>
void parallel_for(std::size_t count, std::size_t threads, F&& body) {
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) body(i);
  };
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
}

}  // namespace

const char* to_string(Algorithm algorithm) {
  for (auto [a, s] : kAlgorithmNames) {
    if (a == algorithm) return s;
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (auto [a, s] : kAlgorithmNames) {
    if (name == s) return a;
  }
  return std::nullopt;
}

SolveOutcome solve(const SpannerInstance& instance, Algorithm algorithm, const SolveOptions& options) {
  using Clock = std::chrono::steady_clock;
  require_valid(instance);
  SolveOutcome out;
  out.algorithm = algorithm;
  const auto t0 = Clock::now();
  switch (algorithm) {
    case Algorithm::Greedy: {
      auto r = greedy(instance);
      out.edges = std::move(r.edges);
      out.weight = r.weight;
      break;
    }
    case Algorithm::AugmentedGreedy: {
      auto r = augmented_greedy(instance, {.mst_lift = options.mst_lift});
      const auto& restricted = r.threshold.restricted_edges;
      if (r.weight > Rational(static_cast<std::int64_t>(restricted.size())) * r.threshold.w_star) {
        throw LemmaViolation("augmented greedy exceeded |E[W*]| * W*");
      }
      for (EdgeId e : r.edges) {
        if (!std::binary_search(restricted.begin(), restricted.end(), e)) {
          throw LemmaViolation("augmented greedy used an edge outside E[W*]");
        }
      }
      out.edges = std::move(r.edges);
      out.weight = r.weight;
      out.w_star = r.threshold.w_star;
      out.high_weight_count = r.high_weight_count;
      break;
    }
    case Algorithm::RandomizedRounding: {
      RandomizedOptions ro;
      ro.gamma_mode = options.gamma_mode;
      ro.confidence = options.confidence;
      ro.seed = options.seed;
      ro.max_attempts = options.max_attempts;
      ro.presolve = options.presolve;
      auto r = solve_randomized(instance, ro);
      out.edges = std::move(r.edges);
      out.weight = r.weight;
      out.gamma = r.gamma.value;
      out.lp_objective = r.lp_objective;
      out.attempts = r.attempts.size();
      out.mean_attempt_weight = r.mean_attempt_weight;
      break;
    }
    case Algorithm::Exact: {
      auto r = exact_optimum(instance, options.exact_cap);
      out.edges = std::move(r.edges);
      out.weight = r.weight;
      out.nodes_explored = r.nodes_explored;
      break;
    }
  }
  out.verdict = verify_feasible(instance, mask_of(instance.edges.size(), out.edges));
  out.feasible = out.verdict.feasible();
  if (!instance.directed && !instance.edges.empty()) {
    const Rational mst = minimum_spanning_tree(instance).weight;
    if (mst > Rational(0)) out.lightness = out.weight / mst;
  }
  out.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return out;
}

namespace {

Json metrics_json(const SolveOutcome& o) {
  Json m = Json::object();
  if (o.lightness) m["lightness"] = o.lightness->str();
  if (o.w_star) m["w_star"] = o.w_star->str();
  if (o.high_weight_count) m["high_weight_edges"] = *o.high_weight_count;
  if (o.gamma) m["gamma"] = *o.gamma;
  if (o.lp_objective) m["lp_objective"] = *o.lp_objective;
  if (o.attempts) m["attempts"] = *o.attempts;
  if (o.mean_attempt_weight) m["mean_attempt_weight"] = *o.mean_attempt_weight;
  if (o.nodes_explored) m["nodes_explored"] = *o.nodes_explored;
  return m;
}

}  // namespace

std::string format_solution(const SpannerInstance& instance, const SolveOutcome& outcome,
                            bool include_timings) {
  Json doc;
  doc["algorithm"] = to_string(outcome.algorithm);
  doc["feasible"] = outcome.feasible;
  doc["weight"] = outcome.weight.str();
  doc["size"] = outcome.edges.size();
  Json edges = Json::array();
  for (EdgeId e : outcome.edges) {
    const Edge& edge = instance.edges[e];
    edges.push_back({{"index", e}, {"u", edge.tail}, {"v", edge.head}});
  }
  doc["edges"] = std::move(edges);
  Json violations = Json::array();
  for (const PairViolation& v : outcome.verdict.violations) {
    violations.push_back({{"u", v.source},
                          {"v", v.target},
                          {"delta", v.delta.str()},
                          {"achieved", v.achieved ? Json(v.achieved->str()) : Json(nullptr)}});
  }
  doc["violations"] = std::move(violations);
  doc["metrics"] = metrics_json(outcome);
  if (include_timings) doc["wall_ms"] = outcome.wall_ms;
  return doc.dump(1) + "\n";
}

const std::vector<std::string>& metrics_columns() {
  static const std::vector<std::string> columns = {
      "instance", "instance_seed", "algorithm", "trial", "n", "m", "k", "status", "weight",
      "size", "feasible", "opt", "ratio", "lightness", "w_star", "high_weight", "gamma",
      "lp_objective", "attempts", "edges", "wall_ms", "error"};
  return columns;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  ExperimentResult result;
  std::vector<SpannerInstance> instances;
  std::vector<std::uint64_t> seeds;
  for (std::size_t i = 0; i < config.instances; ++i) {
    GeneratorParams p = config.generator;
    p.seed = config.generator.seed + i;
    seeds.push_back(p.seed);
    instances.push_back(generate(p));
  }

  std::vector<std::optional<Rational>> opts(instances.size());
  if (config.with_opt && config.trials > 0) {
    parallel_for(instances.size(), config.threads, [&](std::size_t i) {
      if (instances[i].edges.size() > config.options.exact_cap) return;
      try {
        opts[i] = exact_optimum(instances[i], config.options.exact_cap).weight;
      } catch (const Error&) {
      }
    });
  }

  const std::size_t per_instance = config.algorithms.size() * config.trials;
  result.rows.resize(instances.size() * per_instance);
  parallel_for(result.rows.size(), config.threads, [&](std::size_t cell) {
    const std::size_t i = cell / per_instance;
    const std::size_t a = (cell % per_instance) / config.trials;
    const std::size_t t = cell % config.trials;
    const SpannerInstance& inst = instances[i];
    MetricsRow& row = result.rows[cell];
    row.instance = i;
    row.instance_seed = seeds[i];
    row.algorithm = to_string(config.algorithms[a]);
    row.trial = t;
    row.n = inst.n;
    row.m = inst.edges.size();
    row.k = inst.demands.size();
    row.opt = opts[i];
    SolveOptions options = config.options;
    options.seed = config.options.seed + t;
    try {
      row.outcome = solve(inst, config.algorithms[a], options);
      row.ok = true;
      if (row.opt && *row.opt > Rational(0)) row.ratio = row.outcome->weight / *row.opt;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });

  for (Algorithm algorithm : config.algorithms) {
    AlgorithmSummary s;
    s.algorithm = to_string(algorithm);
    double ratio_sum = 0.0;
    std::size_t ratio_count = 0;
    double ms = 0.0;
    for (const MetricsRow& row : result.rows) {
      if (row.algorithm != s.algorithm) continue;
      ++s.cells;
      if (!row.ok) {
        ++s.failures;
        continue;
      }
      if (row.outcome->feasible) ++s.feasible;
      ms += row.outcome->wall_ms;
      if (row.ratio) {
        const double r = row.ratio->to_double();
        ratio_sum += r;
        ++ratio_count;
        s.max_ratio = std::max(s.max_ratio.value_or(r), r);
      }
    }
    if (ratio_count) s.mean_ratio = ratio_sum / static_cast<double>(ratio_count);
    if (s.cells > s.failures) s.mean_ms = ms / static_cast<double>(s.cells - s.failures);
    result.summary.push_back(s);
  }
  return result;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string edge_list(const std::vector<EdgeId>& edges) {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(edges[i]);
  }
  return out;
}

template <class T, class F>
std::string opt_str(const std::optional<T>& v, F&& f) {
  return v ? f(*v) : std::string();
}

}  // namespace

std::string format_csv(const ExperimentResult& result, bool include_timings) {
  std::ostringstream out;
  const auto& cols = metrics_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << "\n";
  auto rat = [](const Rational& r) { return r.str(); };
  auto dbl = [](double d) { return number(d); };
  auto cnt = [](std::size_t c) { return std::to_string(c); };
  for (const MetricsRow& row : result.rows) {
    std::vector<std::string> f = {std::to_string(row.instance), std::to_string(row.instance_seed),
                                  row.algorithm, std::to_string(row.trial), std::to_string(row.n),
                                  std::to_string(row.m), std::to_string(row.k), row.ok ? "ok" : "error"};
    if (row.ok) {
      const SolveOutcome& o = *row.outcome;
      f.insert(f.end(), {o.weight.str(), std::to_string(o.edges.size()), o.feasible ? "1" : "0",
                         opt_str(row.opt, rat), opt_str(row.ratio, rat), opt_str(o.lightness, rat),
                         opt_str(o.w_star, rat), opt_str(o.high_weight_count, cnt),
                         opt_str(o.gamma, dbl), opt_str(o.lp_objective, dbl), opt_str(o.attempts, cnt),
                         edge_list(o.edges), include_timings ? number(o.wall_ms) : ""});
    } else {
      f.insert(f.end(), {"", "", "", opt_str(row.opt, rat), "", "", "", "", "", "", "", "", ""});
    }
    f.push_back(csv_escape(row.error));
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
    out << "\n";
  }
  return out.str();
}

std::string format_json(const ExperimentResult& result, bool include_timings) {
  Json doc;
  Json rows = Json::array();
  for (const MetricsRow& row : result.rows) {
    Json r;
    r["instance"] = row.instance;
    r["instance_seed"] = row.instance_seed;
    r["algorithm"] = row.algorithm;
    r["trial"] = row.trial;
    r["n"] = row.n;
    r["m"] = row.m;
    r["k"] = row.k;
    r["status"] = row.ok ? "ok" : "error";
    if (row.opt) r["opt"] = row.opt->str();
    if (row.ok) {
      const SolveOutcome& o = *row.outcome;
      r["weight"] = o.weight.str();
      r["size"] = o.edges.size();
      r["feasible"] = o.feasible;
      if (row.ratio) r["ratio"] = row.ratio->str();
      r["edges"] = o.edges;
      r["metrics"] = metrics_json(o);
      if (include_timings) r["wall_ms"] = o.wall_ms;
    } else {
      r["error"] = row.error;
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  Json summary = Json::array();
  for (const AlgorithmSummary& s : result.summary) {
    Json j;
    j["algorithm"] = s.algorithm;
    j["cells"] = s.cells;
    j["failures"] = s.failures;
    j["feasible"] = s.feasible;
    j["mean_ratio"] = s.mean_ratio ? Json(*s.mean_ratio) : Json(nullptr);
    j["max_ratio"] = s.max_ratio ? Json(*s.max_ratio) : Json(nullptr);
    if (include_timings) j["mean_ms"] = s.mean_ms;
    summary.push_back(std::move(j));
  }
  doc["summary"] = std::move(summary);
  return doc.dump(1) + "\n";
}

}  // namespace freespan
