#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "gvp/instance.hpp"
#include "gvp/kpartite.hpp"
#include "gvp/random.hpp"

namespace gvp {

// Topologies come back with zero budgets; attach budgets with with_budgets or
// with_random_budgets. Every generator is deterministic given its Rng state.

Instance path_graph(int n);
Instance cycle_graph(int n);  // n >= 3
Instance star_graph(int leaves);  // centre 0
Instance grid_graph(int rows, int cols);  // vertex r * cols + c
Instance complete_graph(int n);

/// Uniform random tree: vertex v > 0 hangs off a uniform earlier vertex.
Instance random_tree(int n, Rng& rng);
/// Random partial 2-tree (series-parallel): grow a 2-tree, keep each edge not on
/// the spanning tree with probability keep_num / keep_den.
Instance random_partial_2tree(int n, Rng& rng, std::uint64_t keep_num = 3, std::uint64_t keep_den = 4);
/// Erdos-Renyi style: each pair present with probability num / den.
Instance random_graph(int n, Rng& rng, std::uint64_t num, std::uint64_t den);
/// Random simple graph with maximum degree <= max_degree built from `attempts` random pair proposals.
Instance random_bounded_degree(int n, int max_degree, int attempts, Rng& rng);
/// Random simple path or cycle on a random vertex labelling.
Instance random_path(int n, Rng& rng);
Instance random_cycle(int n, Rng& rng);

/// Random k-partite graph: classes assigned round-robin then shuffled, each cross-class
/// pair present with probability num / den.
std::pair<Instance, Coloring> random_kpartite(int n, int k, Rng& rng, std::uint64_t num, std::uint64_t den);

/// A budget list of one entry is broadcast to every edge; otherwise one per edge.
Instance with_budgets(const Instance& topology, std::span<const Rational> budgets);
Instance with_random_budgets(const Instance& topology, std::int64_t lo, std::int64_t hi, Rng& rng);

HyperInstance random_hyper(int n, int hyperedges, int max_size, std::int64_t lo, std::int64_t hi, Rng& rng);

}  // namespace gvp
