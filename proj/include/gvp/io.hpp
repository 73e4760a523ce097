#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "gvp/instance.hpp"
#include "gvp/kpartite.hpp"
#include "gvp/treewidth.hpp"

namespace gvp {

// JSON formats:
//   graph       {"n": 3, "edges": [[0, 1, "5"], [1, 2, "7/2"]]}
//   hypergraph  {"n": 3, "hyperedges": [[[0, 1, 2], "6"]]}
//   decomposition {"bags": [[0, 1], [1, 2]], "parents": [null, 0]}
//   coloring    {"k": 2, "class_of": [0, 1, 0]}
// Budgets and prices are strings holding "p/q", an integer or a decimal; plain
// JSON integers are accepted too. Writers always emit canonical "p/q" strings.
// Every reader throws Error(parse) on malformed text.

using AnyInstance = std::variant<Instance, HyperInstance>;

AnyInstance parse_any_instance(std::string_view text);
Instance parse_instance(std::string_view text);
HyperInstance parse_hyper_instance(std::string_view text);
TreeDecomposition parse_decomposition(std::string_view text);
Coloring parse_coloring(std::string_view text);
/// A JSON array of prices.
Prices parse_prices(std::string_view text);

std::string to_json(const Instance& instance);
std::string to_json(const HyperInstance& hyper);
std::string to_json(const TreeDecomposition& td);
std::string to_json(const Coloring& coloring);
/// {"algorithm": ..., "revenue": "p/q", "prices": [...]} plus elapsed_ms when given.
std::string to_json(const Solution& solution, std::optional<double> elapsed_ms = std::nullopt);

}  // namespace gvp
