#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "freespan/lp.hpp"

namespace freespan {

/// Free-format MPS. Every column gets an objective entry, even a zero one, so
/// readers recover the exact column count. Names must not contain spaces.
std::string format_mps(const LpProblem& problem);
void save_mps(const LpProblem& problem, const std::filesystem::path& path);

/// Reads the subset of free MPS that format_mps writes (N/L/G/E rows, RHS,
/// UP/LO/FX/MI/PL/BV bounds). Throws ParseError.
LpProblem parse_mps(std::string_view text);

}  // namespace freespan
