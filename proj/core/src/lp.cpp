#include "freespan/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace freespan {

std::size_t LpProblem::nonzeros() const {
  std::size_t count = 0;
  for (const Row& row : rows) count += row.entries.size();
  return count;
}

std::size_t LpProblem::add_column(std::string col_name, double c, double lo, double up) {
  col_names.push_back(std::move(col_name));
  cost.push_back(c);
  lower.push_back(lo);
  upper.push_back(up);
  return cost.size() - 1;
}

std::size_t LpProblem::add_row(std::string row_name, RowSense sense, double rhs,
                               std::vector<std::pair<std::size_t, double>> entries) {
  rows.push_back({std::move(row_name), sense, rhs, std::move(entries)});
  return rows.size() - 1;
}

double LpProblem::max_violation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (std::size_t j = 0; j < col_count(); ++j) {
    worst = std::max(worst, lower[j] - x[j]);
    worst = std::max(worst, x[j] - upper[j]);
  }
  for (const Row& row : rows) {
    double activity = 0.0;
    for (auto [j, a] : row.entries) activity += a * x[j];
    double excess = activity - row.rhs;
    switch (row.sense) {
      case RowSense::LessEqual: worst = std::max(worst, excess); break;
      case RowSense::GreaterEqual: worst = std::max(worst, -excess); break;
      case RowSense::Equal: worst = std::max(worst, std::abs(excess)); break;
    }
  }
  return worst;
}

double LpProblem::objective_at(const std::vector<double>& x) const {
  double total = 0.0;
  for (std::size_t j = 0; j < col_count(); ++j) total += cost[j] * x[j];
  return total;
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
    case LpStatus::IterationLimit: return "iteration-limit";
    case LpStatus::NumericalTrouble: return "numerical-trouble";
  }
  return "unknown";
}

namespace {

struct Singular {};

class Simplex {
 public:
  Simplex(const LpProblem& problem, const SimplexOptions& options)
      : problem_(problem), opt_(options) {}

  LpSolution run();

 private:
  enum class State : std::uint8_t { Lower, Upper, Basic };
  enum class Outcome { Optimal, Unbounded, IterationLimit };

  void setup();
  Outcome iterate(const std::vector<double>& cost);
  void refactor();
  double& binv(std::size_t i, std::size_t j) { return binv_[i * m_ + j]; }

  const LpProblem& problem_;
  SimplexOptions opt_;
  std::size_t m_ = 0;
  std::size_t first_artificial_ = 0;
  std::vector<std::vector<std::pair<std::size_t, double>>> cols_;
  std::vector<double> lo_;
  std::vector<double> up_;
  std::vector<double> x_;
  std::vector<double> b_;
  std::vector<State> state_;
  std::vector<std::size_t> head_;
  std::vector<double> binv_;
  std::size_t iterations_ = 0;
  std::size_t limit_ = 0;
  std::size_t since_refactor_ = 0;
};

void Simplex::setup() {
  const std::size_t n = problem_.col_count();
  m_ = problem_.row_count();
  cols_.assign(n, {});
  for (std::size_t i = 0; i < m_; ++i) {
    for (auto [j, a] : problem_.rows[i].entries) {
      if (j >= n) throw std::invalid_argument("row entry refers to a missing column");
      if (a != 0.0) cols_[j].push_back({i, a});
    }
  }
  lo_ = problem_.lower;
  up_ = problem_.upper;
  x_.assign(n, 0.0);
  state_.assign(n, State::Lower);
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(lo_[j])) throw std::invalid_argument("column lower bounds must be finite");
    if (lo_[j] > up_[j]) throw std::invalid_argument("column bounds are inverted");
    x_[j] = lo_[j];
  }
  b_.resize(m_);
  std::vector<double> residual(m_);
  for (std::size_t i = 0; i < m_; ++i) b_[i] = residual[i] = problem_.rows[i].rhs;
  for (std::size_t j = 0; j < n; ++j) {
    for (auto [i, a] : cols_[j]) residual[i] -= a * x_[j];
  }

  // Slack per row, then artificials for rows the slack cannot absorb.
  head_.assign(m_, 0);
  std::vector<double> diag(m_, 1.0);
  for (std::size_t i = 0; i < m_; ++i) {
    const RowSense sense = problem_.rows[i].sense;
    const double coef = sense == RowSense::GreaterEqual ? -1.0 : 1.0;
    const double slack_up = sense == RowSense::Equal ? 0.0 : kInfinity;
    const std::size_t s = cols_.size();
    cols_.push_back({{i, coef}});
    lo_.push_back(0.0);
    up_.push_back(slack_up);
    const double value = residual[i] / coef;
    if (value >= 0.0 && value <= slack_up) {
      x_.push_back(value);
      state_.push_back(State::Basic);
      head_[i] = s;
      diag[i] = coef;
    } else {
      x_.push_back(0.0);
      state_.push_back(State::Lower);
    }
  }
  first_artificial_ = cols_.size();
  for (std::size_t i = 0; i < m_; ++i) {
    if (state_[n + i] == State::Basic) continue;
    const double sign = residual[i] >= 0.0 ? 1.0 : -1.0;
    head_[i] = cols_.size();
    cols_.push_back({{i, sign}});
    lo_.push_back(0.0);
    up_.push_back(kInfinity);
    x_.push_back(std::abs(residual[i]));
    state_.push_back(State::Basic);
    diag[i] = sign;
  }
  binv_.assign(m_ * m_, 0.0);
  for (std::size_t i = 0; i < m_; ++i) binv(i, i) = 1.0 / diag[i];
  limit_ = opt_.max_iterations ? opt_.max_iterations : 50 * (m_ + cols_.size()) + 10000;
}

void Simplex::refactor() {
  // Gauss-Jordan on [B | I] with partial pivoting.
  std::vector<double> mat(m_ * m_, 0.0);
  for (std::size_t r = 0; r < m_; ++r) {
    for (auto [i, a] : cols_[head_[r]]) mat[i * m_ + r] = a;
  }
  binv_.assign(m_ * m_, 0.0);
  for (std::size_t i = 0; i < m_; ++i) binv(i, i) = 1.0;
  for (std::size_t c = 0; c < m_; ++c) {
    std::size_t pivot = c;
    for (std::size_t i = c + 1; i < m_; ++i) {
      if (std::abs(mat[i * m_ + c]) > std::abs(mat[pivot * m_ + c])) pivot = i;
    }
    if (std::abs(mat[pivot * m_ + c]) < 1e-12) throw Singular{};
    if (pivot != c) {
      for (std::size_t k = 0; k < m_; ++k) {
        std::swap(mat[pivot * m_ + k], mat[c * m_ + k]);
        std::swap(binv(pivot, k), binv(c, k));
      }
    }
    const double inv = 1.0 / mat[c * m_ + c];
    for (std::size_t k = 0; k < m_; ++k) {
      mat[c * m_ + k] *= inv;
      binv(c, k) *= inv;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      const double f = mat[i * m_ + c];
      if (i == c || f == 0.0) continue;
      for (std::size_t k = 0; k < m_; ++k) {
        mat[i * m_ + k] -= f * mat[c * m_ + k];
        binv(i, k) -= f * binv(c, k);
      }
    }
  }
  // Row r of binv now maps to basis position r.
  std::vector<double> rhs = b_;
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    if (state_[j] == State::Basic || x_[j] == 0.0) continue;
    for (auto [i, a] : cols_[j]) rhs[i] -= a * x_[j];
  }
  for (std::size_t r = 0; r < m_; ++r) {
    double v = 0.0;
    for (std::size_t i = 0; i < m_; ++i) v += binv(r, i) * rhs[i];
    x_[head_[r]] = v;
  }
  since_refactor_ = 0;
}

Simplex::Outcome Simplex::iterate(const std::vector<double>& cost) {
  std::vector<double> y(m_);
  std::vector<double> alpha(m_);
  std::size_t degenerate = 0;
  while (true) {
    if (iterations_ >= limit_) return Outcome::IterationLimit;
    if (since_refactor_ >= opt_.refactor_interval) refactor();
    const bool bland = degenerate >= opt_.degenerate_limit;

    std::fill(y.begin(), y.end(), 0.0);
    for (std::size_t r = 0; r < m_; ++r) {
      const double c = cost[head_[r]];
      if (c == 0.0) continue;
      for (std::size_t i = 0; i < m_; ++i) y[i] += c * binv(r, i);
    }

    std::size_t entering = cols_.size();
    double best = 0.0;
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      if (state_[j] == State::Basic || lo_[j] == up_[j]) continue;
      double d = cost[j];
      for (auto [i, a] : cols_[j]) d -= y[i] * a;
      double score = 0.0;
      if (state_[j] == State::Lower && d < -opt_.optimality_tolerance) score = -d;
      if (state_[j] == State::Upper && d > opt_.optimality_tolerance) score = d;
      if (score == 0.0) continue;
      if (bland) {
        entering = j;
        break;
      }
      if (score > best) {
        best = score;
        entering = j;
      }
    }
    if (entering == cols_.size()) return Outcome::Optimal;

    const double dir = state_[entering] == State::Lower ? 1.0 : -1.0;
    std::fill(alpha.begin(), alpha.end(), 0.0);
    for (auto [i, a] : cols_[entering]) {
      for (std::size_t r = 0; r < m_; ++r) alpha[r] += binv(r, i) * a;
    }

    // Ratio test. rate is the change of x_B[r] per unit step.
    const double tol = opt_.feasibility_tolerance;
    auto exact_ratio = [&](std::size_t r, double rate) {
      const std::size_t j = head_[r];
      return rate < 0.0 ? (x_[j] - lo_[j]) / -rate : (up_[j] - x_[j]) / rate;
    };
    const double flip = up_[entering] - lo_[entering];
    std::size_t leave = m_;
    double step = kInfinity;
    if (bland) {
      for (std::size_t r = 0; r < m_; ++r) {
        if (std::abs(alpha[r]) <= opt_.pivot_tolerance) continue;
        const double rate = -dir * alpha[r];
        if (rate > 0.0 && !std::isfinite(up_[head_[r]])) continue;
        const double t = std::max(0.0, exact_ratio(r, rate));
        if (t < step || (t == step && leave < m_ && head_[r] < head_[leave])) {
          step = t;
          leave = r;
        }
      }
    } else {
      double bound = kInfinity;
      for (std::size_t r = 0; r < m_; ++r) {
        if (std::abs(alpha[r]) <= opt_.pivot_tolerance) continue;
        const double rate = -dir * alpha[r];
        const std::size_t j = head_[r];
        if (rate < 0.0) {
          bound = std::min(bound, (x_[j] - lo_[j] + tol) / -rate);
        } else if (std::isfinite(up_[j])) {
          bound = std::min(bound, (up_[j] - x_[j] + tol) / rate);
        }
      }
      double largest = 0.0;
      for (std::size_t r = 0; r < m_; ++r) {
        if (std::abs(alpha[r]) <= opt_.pivot_tolerance) continue;
        const double rate = -dir * alpha[r];
        if (rate > 0.0 && !std::isfinite(up_[head_[r]])) continue;
        const double t = exact_ratio(r, rate);
        if (t <= bound && std::abs(alpha[r]) > largest) {
          largest = std::abs(alpha[r]);
          leave = r;
          step = std::max(0.0, t);
        }
      }
    }

    const bool bound_flip = flip <= step;
    if (bound_flip) step = flip;
    if (!std::isfinite(step)) return Outcome::Unbounded;

    x_[entering] += dir * step;
    for (std::size_t r = 0; r < m_; ++r) {
      if (alpha[r] != 0.0) x_[head_[r]] -= dir * alpha[r] * step;
    }
    if (bound_flip) {
      state_[entering] = dir > 0 ? State::Upper : State::Lower;
      x_[entering] = dir > 0 ? up_[entering] : lo_[entering];
    } else {
      const std::size_t out = head_[leave];
      const double rate = -dir * alpha[leave];
      state_[out] = rate < 0.0 ? State::Lower : State::Upper;
      x_[out] = rate < 0.0 ? lo_[out] : up_[out];
      state_[entering] = State::Basic;
      head_[leave] = entering;
      const double pivot = alpha[leave];
      for (std::size_t k = 0; k < m_; ++k) binv(leave, k) /= pivot;
      for (std::size_t r = 0; r < m_; ++r) {
        if (r == leave || alpha[r] == 0.0) continue;
        const double f = alpha[r];
        for (std::size_t k = 0; k < m_; ++k) binv(r, k) -= f * binv(leave, k);
      }
    }
    degenerate = step < 1e-12 ? degenerate + 1 : 0;
    ++iterations_;
    ++since_refactor_;
  }
}

LpSolution Simplex::run() {
  LpSolution sol;
  std::ostringstream report;
  try {
    setup();
    std::vector<double> phase1(cols_.size(), 0.0);
    for (std::size_t j = first_artificial_; j < cols_.size(); ++j) phase1[j] = 1.0;
    if (first_artificial_ < cols_.size()) {
      if (iterate(phase1) == Outcome::IterationLimit) {
        sol.status = LpStatus::IterationLimit;
      } else {
        refactor();
        double infeasibility = 0.0;
        for (std::size_t j = first_artificial_; j < cols_.size(); ++j) infeasibility += x_[j];
        report << "phase 1: infeasibility " << infeasibility << " after " << iterations_
               << " iterations; ";
        if (infeasibility > opt_.feasibility_tolerance) sol.status = LpStatus::Infeasible;
      }
    }
    if (sol.status == LpStatus::NumericalTrouble) {
      for (std::size_t j = first_artificial_; j < cols_.size(); ++j) {
        up_[j] = 0.0;
        if (state_[j] != State::Basic) {
          state_[j] = State::Lower;
          x_[j] = 0.0;
        }
      }
      std::vector<double> phase2(cols_.size(), 0.0);
      std::copy(problem_.cost.begin(), problem_.cost.end(), phase2.begin());
      switch (iterate(phase2)) {
        case Outcome::Optimal: sol.status = LpStatus::Optimal; break;
        case Outcome::Unbounded: sol.status = LpStatus::Unbounded; break;
        case Outcome::IterationLimit: sol.status = LpStatus::IterationLimit; break;
      }
      refactor();
    }
  } catch (const Singular&) {
    sol.status = LpStatus::NumericalTrouble;
    report << "singular basis; ";
  }
  sol.iterations = iterations_;
  sol.x.assign(x_.begin(), x_.begin() + static_cast<std::ptrdiff_t>(problem_.col_count()));
  sol.objective = problem_.objective_at(sol.x);
  report << "status " << to_string(sol.status) << " after " << iterations_ << " iterations";
  sol.report = report.str();
  return sol;
}

}  // namespace

LpSolution SimplexBackend::submit(const LpProblem& problem) {
  return Simplex(problem, options_).run();
}

}  // namespace freespan
