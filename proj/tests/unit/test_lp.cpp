#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "freespan/errors.hpp"
#include "freespan/exact.hpp"
#include "freespan/generators.hpp"
#include "freespan/lp.hpp"
#include "freespan/mcf.hpp"
#include "freespan/mps.hpp"
#include "support/oracles.hpp"

using namespace freespan;

namespace {

// Optimum of a small bounded LP by enumerating all vertices: every choice of
// `n` tight constraints among rows and bounds, solved by Gaussian elimination.
std::optional<double> vertex_enumeration(const LpProblem& lp) {
  const std::size_t n = lp.col_count();
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  for (const auto& row : lp.rows) {
    std::vector<double> coef(n, 0.0);
    for (auto [j, v] : row.entries) coef[j] += v;
    a.push_back(coef);
    b.push_back(row.rhs);
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> unit(n, 0.0);
    unit[j] = 1.0;
    a.push_back(unit);
    b.push_back(lp.lower[j]);
    a.push_back(unit);
    b.push_back(lp.upper[j]);
  }
  const std::size_t total = a.size();
  std::optional<double> best;
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t depth, std::size_t from) {
    if (depth == n) {
      std::vector<std::vector<double>> m(n, std::vector<double>(n + 1));
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m[r][c] = a[pick[r]][c];
        m[r][n] = b[pick[r]];
      }
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c; r < n; ++r)
          if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        if (std::abs(m[piv][c]) < 1e-12) return;
        std::swap(m[c], m[piv]);
        for (std::size_t r = 0; r < n; ++r) {
          if (r == c) continue;
          const double f = m[r][c] / m[c][c];
          for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
        }
      }
      std::vector<double> x(n);
      for (std::size_t c = 0; c < n; ++c) x[c] = m[c][n] / m[c][c];
      if (lp.max_violation(x) > 1e-9) return;
      const double obj = lp.objective_at(x);
      if (!best || obj < *best) best = obj;
      return;
    }
    for (std::size_t i = from; i < total; ++i) {
      pick[depth] = i;
      choose(depth + 1, i + 1);
    }
  };
  choose(0, 0);
  return best;
}

LpProblem random_lp(std::mt19937_64& rng, std::size_t cols, std::size_t rows) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> sense(0, 2);
  LpProblem lp;
  for (std::size_t j = 0; j < cols; ++j) lp.add_column("x" + std::to_string(j), coef(rng), 0.0, 1.0 + (j % 3));
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<std::pair<std::size_t, double>> entries;
    for (std::size_t j = 0; j < cols; ++j) {
      int c = coef(rng);
      if (c != 0) entries.push_back({j, static_cast<double>(c)});
    }
    lp.add_row("r" + std::to_string(i), static_cast<RowSense>(sense(rng)), coef(rng), std::move(entries));
  }
  return lp;
}

}  // namespace

TEST(Simplex, SmallKnownProblem) {
  // min -x - y  s.t. x + 2y <= 4, 3x + y <= 6, x,y in [0, 10]; optimum at (8/5, 6/5).
  LpProblem lp;
  lp.add_column("x", -1, 0, 10);
  lp.add_column("y", -1, 0, 10);
  lp.add_row("a", RowSense::LessEqual, 4, {{0, 1}, {1, 2}});
  lp.add_row("b", RowSense::LessEqual, 6, {{0, 3}, {1, 1}});
  SimplexBackend backend;
  const LpSolution s = backend.submit(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_NEAR(s.objective, -2.8, 1e-9);
  EXPECT_NEAR(s.x[0], 1.6, 1e-9);
  EXPECT_NEAR(s.x[1], 1.2, 1e-9);
}

TEST(Simplex, DetectsInfeasibleAndUnbounded) {
  LpProblem infeasible;
  infeasible.add_column("x", 1, 0, 1);
  infeasible.add_row("r", RowSense::GreaterEqual, 2, {{0, 1}});
  SimplexBackend backend;
  EXPECT_EQ(backend.submit(infeasible).status, LpStatus::Infeasible);

  LpProblem unbounded;
  unbounded.add_column("x", -1, 0, kInfinity);
  unbounded.add_column("y", 0, 0, kInfinity);
  unbounded.add_row("r", RowSense::GreaterEqual, 1, {{0, 1}, {1, -1}});
  EXPECT_EQ(backend.submit(unbounded).status, LpStatus::Unbounded);
}

TEST(Simplex, MatchesVertexEnumeration) {
  std::mt19937_64 rng(555);
  SimplexBackend backend;
  int feasible = 0;
  for (int i = 0; i < 400; ++i) {
    const LpProblem lp = random_lp(rng, 2 + i % 3, 1 + i % 4);
    const auto want = vertex_enumeration(lp);
    const LpSolution got = backend.submit(lp);
    if (!want) {
      EXPECT_EQ(got.status, LpStatus::Infeasible) << "problem " << i;
      continue;
    }
    ++feasible;
    ASSERT_EQ(got.status, LpStatus::Optimal) << "problem " << i;
    EXPECT_NEAR(got.objective, *want, 1e-7) << "problem " << i;
    EXPECT_LE(lp.max_violation(got.x), 1e-7);
  }
  EXPECT_GT(feasible, 100);
}

TEST(Mcf, Example5Layout) {
  const SpannerInstance inst = example5();
  const McfModel model = build_mcf(require_integer_lengths(inst));
  EXPECT_EQ(model.arc_count(), 17u);
  EXPECT_EQ(model.flow_var_count(), 51u);
  EXPECT_EQ(model.lp.col_count(), 54u);
  EXPECT_EQ(model.coupling_rows, 9u);
  EXPECT_EQ(model.conservation_rows, 36u);
  EXPECT_EQ(model.lp.row_count(), 45u);
  EXPECT_EQ(model.edge_var(0), 51u);
  for (EdgeId e = 0; e < 3; ++e) EXPECT_EQ(model.lp.cost[model.edge_var(e)], inst.edges[e].weight.to_double());
}

TEST(Mcf, Example5Optimum) {
  const SpannerInstance inst = example5();
  const McfModel model = build_mcf(require_integer_lengths(inst));
  SimplexBackend backend;
  for (bool presolve : {true, false}) {
    const FractionalSolution s = solve_lp(model, backend, {.presolve = presolve});
    EXPECT_NEAR(s.objective, 2.0, 1e-9);
    EXPECT_NEAR(s.x[0], 0.0, 1e-9);
    EXPECT_NEAR(s.x[1], 1.0, 1e-9);
    EXPECT_NEAR(s.x[2], 1.0, 1e-9);
    EXPECT_LE(s.conservation_residual, 1e-9);
    EXPECT_LE(s.coupling_violation, 1e-9);
  }
}

TEST(Mcf, BridgeEdgeIsForced) {
  // Single pair whose only path uses edge 0.
  SpannerInstance inst;
  inst.n = 3;
  inst.edges = {{0, 1, Rational(3), Rational(1)}, {1, 2, Rational(1), Rational(1)}};
  inst.demands = {{0, 1, Rational(2)}};
  const McfModel model = build_mcf(require_integer_lengths(inst));
  SimplexBackend backend;
  const FractionalSolution s = solve_lp(model, backend);
  EXPECT_NEAR(s.x[0], 1.0, 1e-9);
  EXPECT_NEAR(s.objective, 3.0, 1e-9);
}

TEST(Mcf, UnreachableSinkIsInfeasible) {
  const SpannerInstance inst = subdivision_instance();
  const IntegerInstance view = require_integer_lengths(inst);
  IntegerInstance squeezed = view;
  squeezed.deltas = {2};
  squeezed.delta_bar = 2;
  const McfModel model = build_mcf(squeezed, build_extension(squeezed, 2));
  SimplexBackend backend;
  EXPECT_EQ(try_solve_lp(model, backend, {.presolve = false}).status, LpStatus::Infeasible);
  EXPECT_EQ(try_solve_lp(model, backend, {.presolve = true}).status, LpStatus::Infeasible);
  EXPECT_THROW(solve_lp(model, backend), SolverFailure);
}

TEST(Mcf, RelaxationBoundsOptAndPresolveAgrees) {
  std::mt19937_64 rng(9090);
  SimplexBackend backend;
  for (int i = 0; i < 60; ++i) {
    oracle::RandomSpec spec;
    spec.n = 3 + i % 3;
    spec.m = spec.n + i % 4;
    spec.directed = i % 2 == 0;
    spec.max_length = 2;
    spec.slack_quarters = 4;
    const SpannerInstance inst = oracle::random_instance(rng, spec);
    const McfModel model = build_mcf(require_integer_lengths(inst));
    const FractionalSolution with = solve_lp(model, backend, {.presolve = true});
    const auto opt = oracle::brute_force_optimum(inst);
    ASSERT_TRUE(opt.has_value());
    EXPECT_LE(with.objective, opt->weight.to_double() + 1e-7) << "instance " << i;
    EXPECT_LE(with.conservation_residual, 1e-7);
    EXPECT_LE(with.coupling_violation, 1e-9);
    for (double x : with.x) {
      EXPECT_GE(x, 0.0);
      EXPECT_LE(x, 1.0);
    }
    if (i % 3 == 0) {
      const FractionalSolution without = solve_lp(model, backend, {.presolve = false});
      EXPECT_NEAR(with.objective, without.objective, 1e-7) << "instance " << i;
    }
  }
}

TEST(Mps, Example5HasAllColumns) {
  const SpannerInstance inst = example5();
  const McfModel model = build_mcf(require_integer_lengths(inst));
  const std::string text = format_mps(model.lp);
  const LpProblem back = parse_mps(text);
  EXPECT_EQ(back.col_count(), 54u);
  EXPECT_EQ(back.row_count(), 45u);
  SimplexBackend backend;
  EXPECT_NEAR(backend.submit(back).objective, 2.0, 1e-9);
}

TEST(Mps, RoundTripPreservesModel) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 50; ++i) {
    LpProblem lp = random_lp(rng, 2 + i % 5, 1 + i % 4);
    if (i % 2) lp.upper[0] = kInfinity;
    if (i % 3 == 0) lp.lower[0] = lp.upper[0] = 1.0;
    const LpProblem back = parse_mps(format_mps(lp));
    EXPECT_EQ(back.col_names, lp.col_names);
    EXPECT_EQ(back.cost, lp.cost);
    EXPECT_EQ(back.lower, lp.lower);
    EXPECT_EQ(back.upper, lp.upper);
    ASSERT_EQ(back.rows.size(), lp.rows.size());
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
      EXPECT_EQ(back.rows[r].name, lp.rows[r].name);
      EXPECT_EQ(back.rows[r].sense, lp.rows[r].sense);
      EXPECT_EQ(back.rows[r].rhs, lp.rows[r].rhs);
      EXPECT_EQ(back.rows[r].entries, lp.rows[r].entries);
    }
  }
  EXPECT_THROW(parse_mps("NAME x\nCOLUMNS\n x r 1\nENDATA\n"), ParseError);
}
