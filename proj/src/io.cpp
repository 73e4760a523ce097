#include "gvp/io.hpp"

#include <json.hpp>

#include "gvp/error.hpp"

namespace gvp {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    fail(ErrorKind::parse, std::string("malformed JSON: ") + e.what());
  }
}

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::parse, what); }

const json& member(const json& object, const char* key) {
  if (!object.is_object()) bad("expected a JSON object");
  auto it = object.find(key);
  if (it == object.end()) bad(std::string("missing \"") + key + "\"");
  return *it;
}

int as_int(const json& value, const std::string& what) {
  if (!value.is_number_integer()) bad(what + " must be an integer");
  auto x = value.get<std::int64_t>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) bad(what + " is out of range");
  return static_cast<int>(x);
}

Rational as_rational(const json& value, const std::string& what) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return parse_rational(value.dump());
  bad(what + " must be a string such as \"3/2\" or an integer");
}

json rational_json(const Rational& value) { return to_string(value); }

Instance read_graph(const json& doc) {
  const int n = as_int(member(doc, "n"), "n");
  const json& list = member(doc, "edges");
  if (!list.is_array()) bad("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& item = list[i];
    const std::string where = "edge " + std::to_string(i);
    if (!item.is_array() || item.size() != 3) bad(where + " must be [u, v, budget]");
    edges.push_back({as_int(item[0], where + " u"), as_int(item[1], where + " v"), as_rational(item[2], where + " budget")});
  }
  return Instance(n, std::move(edges));
}

HyperInstance read_hyper(const json& doc) {
  const int n = as_int(member(doc, "n"), "n");
  const json& list = member(doc, "hyperedges");
  if (!list.is_array()) bad("\"hyperedges\" must be an array");
  std::vector<HyperEdge> hs;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& item = list[i];
    const std::string where = "hyperedge " + std::to_string(i);
    if (!item.is_array() || item.size() != 2 || !item[0].is_array()) bad(where + " must be [[v...], budget]");
    HyperEdge h;
    for (const json& v : item[0]) h.vertices.push_back(as_int(v, where + " vertex"));
    h.budget = as_rational(item[1], where + " budget");
    hs.push_back(std::move(h));
  }
  return HyperInstance(n, std::move(hs));
}

}  // namespace

AnyInstance parse_any_instance(std::string_view text) {
  json doc = parse_json(text);
  if (doc.is_object() && doc.contains("hyperedges")) {
    if (doc.contains("edges")) bad("an instance has either \"edges\" or \"hyperedges\", not both");
    return read_hyper(doc);
  }
  return read_graph(doc);
}

Instance parse_instance(std::string_view text) { return read_graph(parse_json(text)); }

HyperInstance parse_hyper_instance(std::string_view text) { return read_hyper(parse_json(text)); }

TreeDecomposition parse_decomposition(std::string_view text) {
  json doc = parse_json(text);
  const json& bags = member(doc, "bags");
  const json& parents = member(doc, "parents");
  if (!bags.is_array() || !parents.is_array()) bad("\"bags\" and \"parents\" must be arrays");
  if (bags.size() != parents.size()) bad("\"bags\" and \"parents\" differ in length");
  TreeDecomposition td;
  for (std::size_t t = 0; t < bags.size(); ++t) {
    if (!bags[t].is_array()) bad("bag " + std::to_string(t + 1) + " must be an array");
    std::vector<int> bag;
    for (const json& v : bags[t]) bag.push_back(as_int(v, "bag vertex"));
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(std::move(bag));
    td.parent.push_back(parents[t].is_null() ? -1 : as_int(parents[t], "parent"));
  }
  td.width = td.measured_width();
  return td;
}

Coloring parse_coloring(std::string_view text) {
  json doc = parse_json(text);
  Coloring coloring;
  coloring.k = as_int(member(doc, "k"), "k");
  const json& list = member(doc, "class_of");
  if (!list.is_array()) bad("\"class_of\" must be an array");
  for (const json& c : list) coloring.class_of.push_back(as_int(c, "class id"));
  return coloring;
}

Prices parse_prices(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_array()) bad("prices must be a JSON array");
  Prices prices;
  for (const json& p : doc) prices.push_back(as_rational(p, "price"));
  return prices;
}

std::string to_json(const Instance& instance) {
  json edges = json::array();
  for (const Edge& e : instance.edges()) edges.push_back({e.u, e.v, rational_json(e.budget)});
  return json{{"n", instance.vertex_count()}, {"edges", edges}}.dump();
}

std::string to_json(const HyperInstance& hyper) {
  json hs = json::array();
  for (const auto& h : hyper.hyperedges()) hs.push_back({h.vertices, rational_json(h.budget)});
  return json{{"n", hyper.vertex_count()}, {"hyperedges", hs}}.dump();
}

std::string to_json(const TreeDecomposition& td) {
  json parents = json::array();
  for (int p : td.parent) parents.push_back(p < 0 ? json(nullptr) : json(p));
  return json{{"bags", td.bags}, {"parents", parents}}.dump();
}

std::string to_json(const Coloring& coloring) {
  return json{{"k", coloring.k}, {"class_of", coloring.class_of}}.dump();
}

std::string to_json(const Solution& solution, std::optional<double> elapsed_ms) {
  json prices = json::array();
  for (const auto& p : solution.prices) prices.push_back(rational_json(p));
  json doc{{"algorithm", solution.algorithm}, {"revenue", rational_json(solution.revenue)}, {"prices", prices}};
  if (elapsed_ms) doc["elapsed_ms"] = *elapsed_ms;
  return doc.dump();
}

}  // namespace gvp
