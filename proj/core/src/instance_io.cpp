#include "freespan/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "freespan/errors.hpp"
#include "json.hpp"

namespace freespan {

namespace {

using Json = nlohmann::ordered_json;

std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

const Json& field(const Json& obj, const char* name, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(where + "." + name + ": missing field");
  return *it;
}

std::int64_t int_field(const Json& obj, const char* name, const std::string& where) {
  const Json& v = field(obj, name, where);
  if (!v.is_number_integer()) throw ParseError(where + "." + name + ": expected an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw OverflowError(where + "." + name + ": integer out of range");
  }
  return v.get<std::int64_t>();
}

NodeId node_field(const Json& obj, const char* name, const std::string& where) {
  std::int64_t v = int_field(obj, name, where);
  if (v < 0 || v > static_cast<std::int64_t>(UINT32_MAX)) {
    throw ParseError(where + "." + name + ": node id out of range");
  }
  return static_cast<NodeId>(v);
}

Rational rational_field(const Json& obj, const char* name, const std::string& where) {
  const Json& v = field(obj, name, where);
  try {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (!v.is_string()) throw ParseError("expected a \"p/q\" string");
    return Rational::parse(v.get<std::string>());
  } catch (const OverflowError& e) {
    throw OverflowError(where + "." + name + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(where + "." + name + ": " + e.what());
  }
}

}  // namespace

SpannerInstance parse_instance(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text.begin(), json_text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of(json_text, e.byte)) + ": " + e.what());
  }
  SpannerInstance inst;
  const std::string root = "$";
  const Json& directed = field(doc, "directed", root);
  if (!directed.is_boolean()) throw ParseError("$.directed: expected a boolean");
  inst.directed = directed.get<bool>();
  std::int64_t n = int_field(doc, "n", root);
  if (n <= 0) throw ParseError("$.n: must be positive");
  inst.n = static_cast<std::size_t>(n);

  const Json& edges = field(doc, "edges", root);
  if (!edges.is_array()) throw ParseError("$.edges: expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "$.edges[" + std::to_string(i) + "]";
    inst.edges.push_back({node_field(edges[i], "u", where), node_field(edges[i], "v", where),
                          rational_field(edges[i], "w", where),
                          rational_field(edges[i], "len", where)});
  }
  const Json& demands = field(doc, "demands", root);
  if (!demands.is_array()) throw ParseError("$.demands: expected an array");
  for (std::size_t i = 0; i < demands.size(); ++i) {
    const std::string where = "$.demands[" + std::to_string(i) + "]";
    inst.demands.push_back({node_field(demands[i], "u", where), node_field(demands[i], "v", where),
                            rational_field(demands[i], "delta", where)});
  }
  if (auto it = doc.find("labels"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) throw ParseError("$.labels: expected an array of strings");
    for (const auto& label : *it) {
      if (!label.is_string()) throw ParseError("$.labels: expected an array of strings");
      inst.labels.push_back(label.get<std::string>());
    }
  }
  inst.canonicalize();
  return inst;
}

std::string format_instance(const SpannerInstance& instance) {
  SpannerInstance canon = instance;
  canon.canonicalize();
  Json doc;
  doc["directed"] = canon.directed;
  doc["n"] = canon.n;
  Json edges = Json::array();
  for (const Edge& e : canon.edges) {
    edges.push_back({{"u", e.tail}, {"v", e.head}, {"w", e.weight.str()}, {"len", e.length.str()}});
  }
  doc["edges"] = std::move(edges);
  Json demands = Json::array();
  for (const Demand& d : canon.demands) {
    demands.push_back({{"u", d.source}, {"v", d.target}, {"delta", d.delta.str()}});
  }
  doc["demands"] = std::move(demands);
  if (!canon.labels.empty()) doc["labels"] = canon.labels;
  return doc.dump(1) + "\n";
}

SpannerInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open instance file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_instance(const SpannerInstance& instance, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write instance file " + path.string());
  out << format_instance(instance);
}

}  // namespace freespan
