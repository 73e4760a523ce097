#pragma once

#include <vector>

#include "gvp/instance.hpp"
#include "gvp/treewidth.hpp"

namespace gvp {

/// parts[i] holds the vertices whose BFS depth is i mod k. BFS starts at the
/// lowest-index vertex of every component.
struct LayerPartition {
  int k = 0;
  std::vector<std::vector<int>> parts;
  std::vector<int> depth;
};

LayerPartition baker_partition(const Instance& instance, int k);

/// H_j for every part j: same vertices, only the edges with no endpoint in part j.
std::vector<Instance> layer_subinstances(const Instance& instance, const LayerPartition& partition);

struct PtasOptions {
  FptasOptions fptas;
  int width_limit = 16;  // raised ceiling for the per-layer decomposition search
};

/// k = ceil(1/eps) + 2; solves every H_j with the FPTAS at width budget 3(k-1)
/// (retrying once at twice that, capped by width_limit) and returns the best
/// prices measured on the whole instance. Vertices of the deleted part get price 0.
Solution ptas_planar(const Instance& instance, const Rational& epsilon, const PtasOptions& options = {});

int ptas_layer_count(const Rational& epsilon);

/// Vertex cover to pricing: vertex v gets a pendant n + v; every edge becomes two
/// parallel consumers with budgets n^2 and 2n^2, every vertex a consumer (v, n + v)
/// with budget 1. The input must be simple; its budgets are ignored.
Instance vc_to_gvp(const Instance& graph);

/// 2|E||V|^2 + |V| - VC.
Rational vc_reduction_opt(int vertices, std::size_t edges, int vertex_cover);

/// Minimum vertex cover size by exhaustive search (at most 24 vertices).
int min_vertex_cover(const Instance& graph);

}  // namespace gvp
