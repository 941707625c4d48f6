#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "freespan/instance.hpp"

namespace freespan {

// Interchange format: one JSON document
//   {"directed": bool, "n": int,
//    "edges":   [{"u": int, "v": int, "w": "p/q", "len": "p/q"}, ...],
//    "demands": [{"u": int, "v": int, "delta": "p/q"}, ...],
//    "labels":  [string, ...]}            (optional)
// Rationals are strings; "p" means p/1. Plain JSON integers are accepted too.
// Parsed instances are canonicalized.

SpannerInstance parse_instance(std::string_view json_text);
std::string format_instance(const SpannerInstance& instance);

SpannerInstance load_instance(const std::filesystem::path& path);
void save_instance(const SpannerInstance& instance, const std::filesystem::path& path);

}  // namespace freespan
