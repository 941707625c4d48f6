#include "freespan/mcf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "freespan/errors.hpp"

namespace freespan {

McfModel build_mcf(const IntegerInstance& instance, const DeltaExtension& extension) {
  const SpannerInstance& base = instance.instance();
  McfModel model;
  model.extension = extension;
  model.edge_count = base.edges.size();
  const auto& arcs = extension.arcs();

  for (std::size_t k = 0; k < base.demands.size(); ++k) {
    const Demand& d = base.demands[k];
    const std::int64_t delta = instance.deltas[k];
    if (delta > extension.delta_bar()) {
      throw std::invalid_argument("demand " + std::to_string(k) + " exceeds the extension depth");
    }
    model.commodities.push_back(
        {k, delta, extension.node(d.source, 0), extension.node(d.target, delta)});
  }

  LpProblem& lp = model.lp;
  lp.name = "mcf";
  for (std::size_t k = 0; k < model.commodities.size(); ++k) {
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      lp.add_column("f_" + std::to_string(k) + "_" + std::to_string(a), 0.0, 0.0, 1.0);
    }
  }
  for (EdgeId e = 0; e < base.edges.size(); ++e) {
    const bool usable = instance.lengths[e] <= extension.delta_bar();
    lp.add_column("x_" + std::to_string(e), base.edges[e].weight.to_double(), 0.0,
                  usable ? 1.0 : 0.0);
  }

  const int directions = base.directed ? 1 : 2;
  for (std::size_t k = 0; k < model.commodities.size(); ++k) {
    for (EdgeId e = 0; e < base.edges.size(); ++e) {
      for (int dir = 0; dir < directions; ++dir) {
        std::vector<std::pair<std::size_t, double>> entries;
        for (std::size_t a : extension.arcs_of_edge(e)) {
          if (arcs[a].reversed == (dir == 1)) entries.push_back({model.flow_var(k, a), 1.0});
        }
        entries.push_back({model.edge_var(e), -1.0});
        std::string name = "c_" + std::to_string(k) + "_" + std::to_string(e);
        if (!base.directed) name += dir == 0 ? "_f" : "_r";
        lp.add_row(std::move(name), RowSense::LessEqual, 0.0, std::move(entries));
      }
    }
  }
  model.coupling_rows = lp.row_count();

  std::vector<std::vector<std::size_t>> out(extension.node_count());
  std::vector<std::vector<std::size_t>> in(extension.node_count());
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    out[arcs[a].tail].push_back(a);
    in[arcs[a].head].push_back(a);
  }
  for (std::size_t k = 0; k < model.commodities.size(); ++k) {
    const Commodity& c = model.commodities[k];
    for (std::size_t q = 0; q < extension.node_count(); ++q) {
      std::vector<std::pair<std::size_t, double>> entries;
      for (std::size_t a : out[q]) entries.push_back({model.flow_var(k, a), 1.0});
      for (std::size_t a : in[q]) entries.push_back({model.flow_var(k, a), -1.0});
      std::sort(entries.begin(), entries.end());
      const double rhs = (q == c.source_node ? 1.0 : 0.0) - (q == c.sink_node ? 1.0 : 0.0);
      lp.add_row("n_" + std::to_string(k) + "_" + std::to_string(q), RowSense::Equal, rhs,
                 std::move(entries));
    }
  }
  model.conservation_rows = lp.row_count() - model.coupling_rows;
  return model;
}

McfModel build_mcf(const IntegerInstance& instance) {
  return build_mcf(instance, build_extension(instance, instance.delta_bar));
}

namespace {

constexpr std::size_t kDropped = static_cast<std::size_t>(-1);

// Keeps flow columns on some source-sink path of their commodity. Sets
// `infeasible` when a sink is unreachable.
LpProblem reduce(const McfModel& model, std::vector<std::size_t>& column_of, bool& infeasible) {
  const auto& arcs = model.extension.arcs();
  const LpProblem& full = model.lp;
  column_of.assign(full.col_count(), kDropped);
  infeasible = false;

  LpProblem reduced;
  reduced.name = full.name;
  for (std::size_t k = 0; k < model.commodities.size(); ++k) {
    const Commodity& c = model.commodities[k];
    auto from = model.extension.reachable_from(c.source_node);
    auto to = model.extension.reaching(c.sink_node);
    if (!from[c.sink_node]) infeasible = true;
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      if (!from[arcs[a].tail] || !to[arcs[a].head]) continue;
      std::size_t j = model.flow_var(k, a);
      column_of[j] = reduced.add_column(full.col_names[j], full.cost[j], full.lower[j], full.upper[j]);
    }
  }
  for (std::size_t j = model.flow_var_count(); j < full.col_count(); ++j) {
    column_of[j] = reduced.add_column(full.col_names[j], full.cost[j], full.lower[j], full.upper[j]);
  }
  for (std::size_t i = 0; i < full.row_count(); ++i) {
    const auto& row = full.rows[i];
    std::vector<std::pair<std::size_t, double>> entries;
    bool has_flow = false;
    for (auto [j, a] : row.entries) {
      if (column_of[j] == kDropped) continue;
      has_flow = has_flow || j < model.flow_var_count();
      entries.push_back({column_of[j], a});
    }
    // Coupling rows without flow read -x <= 0; empty conservation rows read 0 = rhs.
    if (!has_flow) {
      if (i >= model.coupling_rows && row.rhs != 0.0) infeasible = true;
      continue;
    }
    reduced.add_row(row.name, row.sense, row.rhs, std::move(entries));
  }
  return reduced;
}

}  // namespace

FractionalSolution try_solve_lp(const McfModel& model, LpBackend& backend,
                                const LpSolveOptions& options) {
  const LpProblem& full = model.lp;
  FractionalSolution sol;
  std::vector<double> values(full.col_count(), 0.0);

  if (options.presolve) {
    std::vector<std::size_t> column_of;
    bool infeasible = false;
    LpProblem reduced = reduce(model, column_of, infeasible);
    sol.solved_columns = reduced.col_count();
    sol.solved_rows = reduced.row_count();
    if (infeasible) {
      sol.status = LpStatus::Infeasible;
      sol.report = "presolve: some commodity cannot reach its sink";
    } else {
      LpSolution raw = backend.submit(reduced);
      sol.status = raw.status;
      sol.iterations = raw.iterations;
      sol.report = backend.name() + ": " + raw.report;
      for (std::size_t j = 0; j < full.col_count(); ++j) {
        if (column_of[j] != kDropped) values[j] = raw.x[column_of[j]];
      }
    }
  } else {
    sol.solved_columns = full.col_count();
    sol.solved_rows = full.row_count();
    LpSolution raw = backend.submit(full);
    sol.status = raw.status;
    sol.iterations = raw.iterations;
    sol.report = backend.name() + ": " + raw.report;
    values = raw.x;
  }

  for (std::size_t j = 0; j < full.col_count(); ++j) {
    values[j] = std::clamp(values[j], full.lower[j], full.upper[j]);
  }
  // Harris steps may leave a flow a hair above its edge variable; lift x_e so
  // coupling holds to round-off.
  for (std::size_t i = 0; i < model.coupling_rows; ++i) {
    double flow = 0.0;
    std::size_t edge_col = 0;
    for (auto [j, a] : full.rows[i].entries) {
      if (j < model.flow_var_count()) {
        flow += a * values[j];
      } else {
        edge_col = j;
      }
    }
    values[edge_col] = std::max(values[edge_col], std::min(flow, full.upper[edge_col]));
  }
  sol.flow.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(model.flow_var_count()));
  sol.x.assign(values.begin() + static_cast<std::ptrdiff_t>(model.flow_var_count()), values.end());
  sol.objective = full.objective_at(values);
  for (std::size_t i = 0; i < full.row_count(); ++i) {
    const auto& row = full.rows[i];
    double activity = 0.0;
    for (auto [j, a] : row.entries) activity += a * values[j];
    if (i < model.coupling_rows) {
      sol.coupling_violation = std::max(sol.coupling_violation, activity - row.rhs);
    } else {
      sol.conservation_residual = std::max(sol.conservation_residual, std::abs(activity - row.rhs));
    }
  }
  return sol;
}

FractionalSolution solve_lp(const McfModel& model, LpBackend& backend, const LpSolveOptions& options) {
  FractionalSolution sol = try_solve_lp(model, backend, options);
  if (sol.status != LpStatus::Optimal) {
    throw SolverFailure(std::string("LP not solved to optimality (") + to_string(sol.status) +
                        "): " + sol.report);
  }
  return sol;
}

}  // namespace freespan
