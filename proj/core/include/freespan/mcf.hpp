#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freespan/extension.hpp"
#include "freespan/instance.hpp"
#include "freespan/lp.hpp"

namespace freespan {

/// One unit of flow from source_node (u at layer 0) to sink_node (v at layer
/// delta) of the extension.
struct Commodity {
  std::size_t demand = 0;
  std::int64_t delta = 0;
  std::size_t source_node = 0;
  std::size_t sink_node = 0;
};

/// Multicommodity-flow relaxation over an extension. Column layout: flow
/// variable of commodity k on arc a at k*arcs + a, then one edge variable per
/// instance edge. Rows: all coupling rows (commodity-major; per edge, and per
/// direction when undirected), then all conservation rows (commodity-major,
/// per extension node).
struct McfModel {
  DeltaExtension extension;
  std::vector<Commodity> commodities;
  std::size_t edge_count = 0;
  std::size_t coupling_rows = 0;
  std::size_t conservation_rows = 0;
  LpProblem lp;

  std::size_t arc_count() const { return extension.arcs().size(); }
  std::size_t flow_var(std::size_t k, std::size_t arc) const { return k * arc_count() + arc; }
  std::size_t edge_var(EdgeId e) const { return commodities.size() * arc_count() + e; }
  std::size_t flow_var_count() const { return commodities.size() * arc_count(); }
};

/// Requires every demand to satisfy delta <= extension.delta_bar().
McfModel build_mcf(const IntegerInstance& instance, const DeltaExtension& extension);
/// Builds the extension at the instance's delta_bar first.
McfModel build_mcf(const IntegerInstance& instance);

struct FractionalSolution {
  LpStatus status = LpStatus::NumericalTrouble;
  double objective = 0.0;
  /// Edge values, clamped into [0,1].
  std::vector<double> x;
  /// Flow values in model column order, clamped into [0,1].
  std::vector<double> flow;
  double conservation_residual = 0.0;
  double coupling_violation = 0.0;
  std::size_t iterations = 0;
  std::size_t solved_columns = 0;
  std::size_t solved_rows = 0;
  std::string report;
};

struct LpSolveOptions {
  /// Drop arcs off every source-sink path of their commodity before solving.
  bool presolve = true;
};

/// Solves the model and maps the result back to full layout; never throws on
/// a non-optimal status.
FractionalSolution try_solve_lp(const McfModel& model, LpBackend& backend,
                                const LpSolveOptions& options = {});

/// As try_solve_lp, but throws SolverFailure unless the status is optimal.
FractionalSolution solve_lp(const McfModel& model, LpBackend& backend,
                            const LpSolveOptions& options = {});

}  // namespace freespan
