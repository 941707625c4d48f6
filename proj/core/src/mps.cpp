#include "freespan/mps.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "freespan/errors.hpp"

namespace freespan {

namespace {

std::string number(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

double parse_number(const std::string& token, std::size_t line) {
  try {
    std::size_t used = 0;
    double v = std::stod(token, &used);
    if (used == token.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("MPS line " + std::to_string(line) + ": bad number '" + token + "'");
}

}  // namespace

std::string format_mps(const LpProblem& problem) {
  std::ostringstream out;
  out << "NAME " << problem.name << "\n";
  out << "ROWS\n N obj\n";
  for (const auto& row : problem.rows) {
    const char* tag = row.sense == RowSense::LessEqual ? "L"
                      : row.sense == RowSense::GreaterEqual ? "G"
                                                            : "E";
    out << " " << tag << " " << row.name << "\n";
  }
  std::vector<std::vector<std::pair<std::size_t, double>>> by_col(problem.col_count());
  for (std::size_t i = 0; i < problem.row_count(); ++i) {
    for (auto [j, a] : problem.rows[i].entries) by_col[j].push_back({i, a});
  }
  out << "COLUMNS\n";
  for (std::size_t j = 0; j < problem.col_count(); ++j) {
    out << " " << problem.col_names[j] << " obj " << number(problem.cost[j]) << "\n";
    for (auto [i, a] : by_col[j]) {
      out << " " << problem.col_names[j] << " " << problem.rows[i].name << " " << number(a) << "\n";
    }
  }
  out << "RHS\n";
  for (const auto& row : problem.rows) {
    if (row.rhs != 0.0) out << " rhs " << row.name << " " << number(row.rhs) << "\n";
  }
  out << "BOUNDS\n";
  for (std::size_t j = 0; j < problem.col_count(); ++j) {
    const std::string& name = problem.col_names[j];
    const double lo = problem.lower[j];
    const double up = problem.upper[j];
    if (lo == up) {
      out << " FX bnd " << name << " " << number(lo) << "\n";
      continue;
    }
    if (lo != 0.0) out << " LO bnd " << name << " " << number(lo) << "\n";
    if (std::isfinite(up)) out << " UP bnd " << name << " " << number(up) << "\n";
  }
  out << "ENDATA\n";
  return out.str();
}

void save_mps(const LpProblem& problem, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << format_mps(problem);
  if (!out) throw Error("failed writing " + path.string());
}

LpProblem parse_mps(std::string_view text) {
  LpProblem lp;
  std::unordered_map<std::string, std::size_t> rows;
  std::unordered_map<std::string, std::size_t> cols;
  std::string objective_row;
  std::string section;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("MPS line " + std::to_string(line_no) + ": " + what);
  };
  auto row_of = [&](const std::string& name) -> std::size_t {
    auto it = rows.find(name);
    if (it == rows.end()) fail("unknown row '" + name + "'");
    return it->second;
  };
  auto col_of = [&](const std::string& name) -> std::size_t {
    auto it = cols.find(name);
    if (it == cols.end()) fail("unknown column '" + name + "'");
    return it->second;
  };
  bool ended = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '*') continue;
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (line[0] != ' ' && line[0] != '\t') {
      section = tok[0];
      if (section == "NAME") lp.name = tok.size() > 1 ? tok[1] : "";
      if (section == "ENDATA") {
        ended = true;
        break;
      }
      continue;
    }
    if (section == "ROWS") {
      if (tok.size() != 2) fail("expected '<type> <name>'");
      if (tok[0] == "N") {
        if (objective_row.empty()) objective_row = tok[1];
        continue;
      }
      RowSense sense;
      if (tok[0] == "L") sense = RowSense::LessEqual;
      else if (tok[0] == "G") sense = RowSense::GreaterEqual;
      else if (tok[0] == "E") sense = RowSense::Equal;
      else fail("unknown row type '" + tok[0] + "'");
      rows[tok[1]] = lp.add_row(tok[1], sense, 0.0, {});
    } else if (section == "COLUMNS") {
      if (tok.size() != 3 && tok.size() != 5) fail("expected '<col> <row> <value> [<row> <value>]'");
      auto [it, fresh] = cols.try_emplace(tok[0], lp.col_count());
      if (fresh) lp.add_column(tok[0], 0.0, 0.0, kInfinity);
      for (std::size_t k = 1; k + 1 < tok.size(); k += 2) {
        double v = parse_number(tok[k + 1], line_no);
        if (tok[k] == objective_row) {
          lp.cost[it->second] = v;
        } else {
          lp.rows[row_of(tok[k])].entries.push_back({it->second, v});
        }
      }
    } else if (section == "RHS") {
      if (tok.size() != 3 && tok.size() != 5) fail("expected '<set> <row> <value> [<row> <value>]'");
      for (std::size_t k = 1; k + 1 < tok.size(); k += 2) {
        if (tok[k] == objective_row) continue;
        lp.rows[row_of(tok[k])].rhs = parse_number(tok[k + 1], line_no);
      }
    } else if (section == "BOUNDS") {
      if (tok.size() < 3) fail("expected '<type> <set> <col> [<value>]'");
      std::size_t j = col_of(tok[2]);
      auto value = [&] {
        if (tok.size() != 4) fail("bound '" + tok[0] + "' needs a value");
        return parse_number(tok[3], line_no);
      };
      if (tok[0] == "UP") lp.upper[j] = value();
      else if (tok[0] == "LO") lp.lower[j] = value();
      else if (tok[0] == "FX") lp.lower[j] = lp.upper[j] = value();
      else if (tok[0] == "MI") lp.lower[j] = -kInfinity;
      else if (tok[0] == "PL") lp.upper[j] = kInfinity;
      else if (tok[0] == "BV") {
        lp.lower[j] = 0.0;
        lp.upper[j] = 1.0;
      } else fail("unsupported bound type '" + tok[0] + "'");
    } else {
      fail("data outside a known section");
    }
  }
  if (!ended) throw ParseError("MPS: missing ENDATA");
  return lp;
}

}  // namespace freespan
