#include "freespan/demo.hpp"

#include <sstream>
#include <stdexcept>

#include "freespan/exact.hpp"
#include "freespan/extension.hpp"
#include "freespan/instance.hpp"
#include "freespan/mcf.hpp"
#include "json.hpp"

namespace freespan {

DemoReport subdivision_demo(std::int64_t length, std::int64_t alpha) {
  if (length < 1 || alpha < 1) throw std::invalid_argument("length and alpha must be positive");
  DemoReport report;
  report.length = length;
  report.alpha = alpha;

  SpannerInstance original;
  original.directed = true;
  original.n = 2;
  original.labels = {"s", "t"};
  original.edges = {{0, 1, Rational(1), Rational(length)}};
  original.demands = {{0, 1, Rational(alpha * length)}};
  const ExactResult opt = exact_optimum(original);
  report.original_opt = opt.weight;
  report.original_feasible = true;

  // G+: s+ = 0, interior nodes 1..length-1, t+ = length; only the last arc is weighted.
  SpannerInstance plus;
  plus.directed = true;
  plus.n = static_cast<std::size_t>(length) + 1;
  for (std::int64_t i = 0; i < length; ++i) {
    plus.edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(i + 1),
                          i + 1 == length ? Rational(1) : Rational(0), Rational(1)});
  }
  plus.demands = {{0, static_cast<NodeId>(length), Rational(alpha)}};
  report.subdivided_nodes = plus.n;
  report.subdivided_edges = plus.edges.size();

  IntegerInstance view = require_integer_lengths(plus);
  // The alpha-extension is the extension of G+ at depth alpha, independent of the demand cap.
  view.deltas = {alpha};
  view.delta_bar = alpha;
  const DeltaExtension ext = build_extension(view, alpha);
  report.extension_nodes = ext.node_count();
  report.extension_arcs = ext.arcs().size();
  report.transformed_feasible = ext.reaches(ext.node(0, 0), ext.node(static_cast<NodeId>(length), alpha));

  SimplexBackend backend;
  const McfModel model = build_mcf(view, ext);
  report.transformed_lp_status = try_solve_lp(model, backend, {.presolve = false}).status;
  return report;
}

std::string DemoReport::text() const {
  std::ostringstream out;
  out << "original: edge s->t, w=1, len=" << length << ", delta=" << alpha * length << "\n";
  out << "original OPT = " << original_opt << "\n";
  out << "G+: " << subdivided_nodes << " nodes, " << subdivided_edges << " unit-length arcs\n";
  out << alpha << "-extension: " << extension_nodes << " nodes, " << extension_arcs << " arcs\n";
  if (transformed_feasible) {
    out << "feasible: s+_0 reaches t+_" << alpha << "\n";
  } else {
    out << "infeasible: no s+_0->t+_" << alpha << " path\n";
  }
  out << "transformed LP status: " << to_string(transformed_lp_status) << "\n";
  return out.str();
}

std::string DemoReport::json() const {
  nlohmann::ordered_json doc;
  doc["length"] = length;
  doc["alpha"] = alpha;
  doc["original_opt"] = original_opt.str();
  doc["original_feasible"] = original_feasible;
  doc["subdivided_nodes"] = subdivided_nodes;
  doc["subdivided_edges"] = subdivided_edges;
  doc["extension_nodes"] = extension_nodes;
  doc["extension_arcs"] = extension_arcs;
  doc["transformed_feasible"] = transformed_feasible;
  doc["transformed_lp_status"] = to_string(transformed_lp_status);
  return doc.dump(1) + "\n";
}

}  // namespace freespan
