#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gvp/instance.hpp"
#include "gvp/kpartite.hpp"
#include "gvp/oracle.hpp"
#include "gvp/treewidth.hpp"

namespace gvp {

/// Names accepted by solve(): auto, oracle, dp, fptas, ptas-planar, degree2,
/// degree4, kpartite, general, lp-opt, sa.
const std::vector<std::string>& algorithm_names();
bool is_known_algorithm(std::string_view name);

struct SolveRequest {
  std::string algorithm = "auto";
  std::optional<Rational> epsilon;               // fptas / ptas-planar, default 1/10
  std::optional<std::int64_t> price_cap;         // oracle / dp / sa, default floor of the largest budget
  int r = 2;                                     // sa level
  std::optional<std::uint64_t> seed;             // kpartite randomized, general, sa sampling
  std::optional<Coloring> coloring;              // kpartite
  std::optional<TreeDecomposition> decomposition;  // dp / fptas / sa
  std::uint64_t oracle_limit = kDefaultOracleLimit;
  int max_width = 4;
};

/// Runs the named algorithm. Unknown names throw Error(invalid_argument).
/// auto: max degree <= 2 -> degree2; a decomposition of width <= max_width -> fptas;
/// max degree <= 4 -> degree4; otherwise general.
Solution solve(const Instance& instance, const SolveRequest& request);

/// Hypergraphs support auto (= fptas), oracle, dp and fptas.
Solution solve(const HyperInstance& hyper, const SolveRequest& request);

}  // namespace gvp
