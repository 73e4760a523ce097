#pragma once

#include <cstddef>
#include <vector>

#include "gvp/instance.hpp"

namespace gvp {

// Exact solvers over rational prices for graphs of maximum degree two, and the
// Euler-split 2-approximation for maximum degree four.

/// The edges must form one simple path (isolated vertices allowed, no edges is the trivial path).
Solution solve_path(const Instance& instance);
/// The edges must form one cycle; a pair of parallel edges counts as a 2-cycle.
Solution solve_cycle(const Instance& instance);
/// Any instance of maximum degree two: solved per component and summed.
Solution solve_degree2(const Instance& instance);

/// Edge indices of the two halves of the Euler split. Each half has maximum degree two.
struct EdgeSplit {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

/// Pairs odd-degree vertices in ascending order with virtual edges, walks an Euler
/// circuit per component and colours its edges alternately; virtual edges are dropped.
EdgeSplit euler_split(const Instance& instance);

/// Better of solve_degree2 on the two halves of euler_split, priced on the whole instance.
Solution solve_degree4(const Instance& instance);

}  // namespace gvp
