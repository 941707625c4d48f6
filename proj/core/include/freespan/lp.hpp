#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace freespan {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class RowSense { LessEqual, GreaterEqual, Equal };

/// Sparse linear program: minimize c'x subject to row constraints and
/// column bounds. Column lower bounds must be finite.
struct LpProblem {
  struct Row {
    std::string name;
    RowSense sense = RowSense::LessEqual;
    double rhs = 0.0;
    std::vector<std::pair<std::size_t, double>> entries;
  };

  std::string name = "model";
  std::vector<std::string> col_names;
  std::vector<double> cost;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<Row> rows;

  std::size_t col_count() const { return cost.size(); }
  std::size_t row_count() const { return rows.size(); }
  std::size_t nonzeros() const;

  std::size_t add_column(std::string col_name, double c, double lo, double up);
  std::size_t add_row(std::string row_name, RowSense sense, double rhs,
                      std::vector<std::pair<std::size_t, double>> entries);

  /// Largest violation of any row or bound at `x`.
  double max_violation(const std::vector<double>& x) const;
  double objective_at(const std::vector<double>& x) const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit, NumericalTrouble };

const char* to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::NumericalTrouble;
  double objective = 0.0;
  std::vector<double> x;
  std::size_t iterations = 0;
  std::string report;
};

/// Anything that can solve an LpProblem: the bundled simplex or an adapter to
/// an external solver.
class LpBackend {
 public:
  virtual ~LpBackend() = default;
  virtual std::string name() const = 0;
  virtual LpSolution submit(const LpProblem& problem) = 0;
};

struct SimplexOptions {
  double pivot_tolerance = 1e-9;
  double feasibility_tolerance = 1e-7;
  double optimality_tolerance = 1e-9;
  /// 0 picks a limit from the problem size.
  std::size_t max_iterations = 0;
  std::size_t refactor_interval = 100;
  /// Consecutive degenerate pivots before switching to Bland's rule. Bland
  /// is slow on the flow models, so it only engages on a long stall.
  std::size_t degenerate_limit = 1000;
};

/// Bounded-variable revised simplex with an explicit dense basis inverse.
/// Two phases; Dantzig pricing with a Harris ratio test, falling back to
/// Bland's rule while the objective stalls.
class SimplexBackend : public LpBackend {
 public:
  SimplexBackend() = default;
  explicit SimplexBackend(SimplexOptions options) : options_(options) {}

  std::string name() const override { return "bundled-simplex"; }
  LpSolution submit(const LpProblem& problem) override;

 private:
  SimplexOptions options_;
};

}  // namespace freespan
