#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gvp/instance.hpp"

namespace gvp {

/// Rooted tree decomposition. Node 0 is conventionally the root but any node
/// with parent -1 is accepted; exactly one such node must exist.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;  // sorted vertex ids
  std::vector<int> parent;             // -1 for the root
  std::vector<int> edge_owner;         // per instance edge, filled by assign_owners
  int width = -1;                      // declared width, max |bag| - 1

  int node_count() const noexcept { return static_cast<int>(bags.size()); }
  int root() const;
  /// max |bag| - 1 as measured from the bags.
  int measured_width() const;
  /// Depth of each node; throws if `parent` does not describe a rooted tree.
  std::vector<int> depths() const;
};

/// Owner of each edge: among nodes whose bag holds both endpoints, the one
/// nearest to the root (ties are impossible in a valid decomposition).
/// Sets edge_owner to -1 for edges no bag covers.
TreeDecomposition assign_owners(const Instance& instance, TreeDecomposition td);

struct DecompositionCheck {
  bool ok = true;
  int property = 0;     // 0 = tree structure, 1..5 = the decomposition properties
  std::string witness;  // human-readable, uses 1-based bag numbers
};

/// Checks tree shape, vertex cover, edge cover, running intersection, the
/// stored width bound and the nearest-to-root edge ownership, in that order.
DecompositionCheck validate_decomposition(const Instance& instance, const TreeDecomposition& td);

struct DecompositionOptions {
  int width_limit = 8;             // largest max_width a caller may request
  int exhaustive_vertex_limit = 12;
};

struct DecompositionSearch {
  std::optional<TreeDecomposition> decomposition;
  bool exhaustive = false;  // true when an exact search ran; a failure is then a proof
  int best_width = -1;      // smallest width the search saw
};

/// Elimination-order search: min-degree, then min-fill, then (for small graphs)
/// an exact subset dynamic program over elimination orders.
DecompositionSearch build_decomposition(const Instance& instance, int max_width,
                                        const DecompositionOptions& options = {});

/// Decomposition from an explicit elimination order (any permutation of 0..n-1).
TreeDecomposition decomposition_from_order(const Instance& instance, const std::vector<int>& order);

struct DpOptions {
  std::uint64_t table_limit = 200'000'000;  // largest bag table the DP will enumerate
};

/// Exact optimum over {0..price_cap}^n by dynamic programming on the bags.
Solution dp_solve(const Instance& instance, const TreeDecomposition& td, std::int64_t price_cap,
                  const DpOptions& options = {});

/// The same DP with hyperedges owned by the root-nearest bag that contains them.
Solution dp_solve_smp(const HyperInstance& hyper, const TreeDecomposition& td, std::int64_t price_cap,
                      const DpOptions& options = {});

/// Graph on the hypergraph's vertices joining every co-occurring pair once,
/// sorted by (u, v) with u < v. Budgets are zero.
Instance primal_graph(const HyperInstance& hyper);

/// Owners for hyperedges; -1 where no bag contains the whole hyperedge.
std::vector<int> hyperedge_owners(const HyperInstance& hyper, const TreeDecomposition& td);

struct FptasOptions {
  int max_width = 4;
  DecompositionOptions decomposition;
  DpOptions dp;
};

/// Rounding precision used by the FPTAS for a target factor 1+eps on consumers
/// of at most `arity` items: eps / (arity * (1 + eps)).
Rational fptas_precision(const Rational& epsilon, std::size_t arity);

/// Scale M = precision * L / m where L is a cheap lower bound on the optimum;
/// for integral budgets with M <= 1 it is snapped down to 1/ceil(1/M).
Rational fptas_scale(const Instance& instance, const Rational& epsilon);

/// Revenue >= OPT / (1 + eps): rounds budgets, solves the rounded instance
/// exactly on a decomposition and lifts the prices back.
Solution fptas(const Instance& instance, const Rational& epsilon, const FptasOptions& options = {});
Solution fptas(const Instance& instance, const Rational& epsilon, const TreeDecomposition& td,
               const DpOptions& dp = {});

Solution fptas_smp(const HyperInstance& hyper, const Rational& epsilon, const FptasOptions& options = {});

/// Cheap feasible revenue used as the optimum lower bound in fptas_scale:
/// the best of a uniform price on every vertex and a single priced vertex.
Rational revenue_lower_bound(const Instance& instance);

}  // namespace gvp
