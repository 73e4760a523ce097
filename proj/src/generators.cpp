#include "gvp/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gvp/error.hpp"

namespace gvp {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::invalid_argument, what);
}

Instance from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v, Rational(0)});
  return Instance(n, std::move(edges));
}

std::vector<int> permutation(int n, Rng& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  return order;
}

}  // namespace

Instance path_graph(int n) {
  require(n >= 1, "path needs at least one vertex");
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
  return from_pairs(n, pairs);
}

Instance cycle_graph(int n) {
  require(n >= 3, "cycle needs at least three vertices");
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < n; ++v) pairs.emplace_back(v, (v + 1) % n);
  return from_pairs(n, pairs);
}

Instance star_graph(int leaves) {
  require(leaves >= 0, "negative leaf count");
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v <= leaves; ++v) pairs.emplace_back(0, v);
  return from_pairs(leaves + 1, pairs);
}

Instance grid_graph(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid needs positive dimensions");
  std::vector<std::pair<int, int>> pairs;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) pairs.emplace_back(v, v + 1);
      if (r + 1 < rows) pairs.emplace_back(v, v + cols);
    }
  }
  return from_pairs(rows * cols, pairs);
}

Instance complete_graph(int n) {
  require(n >= 1, "complete graph needs a vertex");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return from_pairs(n, pairs);
}

Instance random_tree(int n, Rng& rng) {
  require(n >= 1, "tree needs a vertex");
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v) pairs.emplace_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(v))), v);
  return from_pairs(n, pairs);
}

Instance random_partial_2tree(int n, Rng& rng, std::uint64_t keep_num, std::uint64_t keep_den) {
  require(n >= 1, "partial 2-tree needs a vertex");
  require(keep_den > 0 && keep_num <= keep_den, "bad keep probability");
  if (n == 1) return from_pairs(1, {});
  // Each new vertex joins both ends of a uniform existing 2-tree edge; the first
  // of the two attachments is a tree edge and always kept.
  std::vector<std::pair<int, int>> tree_edges{{0, 1}};
  std::vector<std::pair<int, int>> kept{{0, 1}};
  for (int v = 2; v < n; ++v) {
    auto [a, b] = tree_edges[rng.below(tree_edges.size())];
    tree_edges.emplace_back(a, v);
    tree_edges.emplace_back(b, v);
    kept.emplace_back(a, v);
    if (rng.chance(keep_num, keep_den)) kept.emplace_back(b, v);
  }
  return from_pairs(n, kept);
}

Instance random_graph(int n, Rng& rng, std::uint64_t num, std::uint64_t den) {
  require(n >= 1, "graph needs a vertex");
  require(den > 0 && num <= den, "bad edge probability");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.chance(num, den)) pairs.emplace_back(u, v);
    }
  }
  return from_pairs(n, pairs);
}

Instance random_bounded_degree(int n, int max_degree, int attempts, Rng& rng) {
  require(n >= 2, "bounded-degree graph needs two vertices");
  std::vector<int> deg(n, 0);
  std::set<std::pair<int, int>> present;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < attempts; ++i) {
    int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (deg[u] >= max_degree || deg[v] >= max_degree || present.count({u, v})) continue;
    present.emplace(u, v);
    pairs.emplace_back(u, v);
    ++deg[u];
    ++deg[v];
  }
  return from_pairs(n, pairs);
}

Instance random_path(int n, Rng& rng) {
  require(n >= 1, "path needs a vertex");
  auto order = permutation(n, rng);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(order[i], order[i + 1]);
  return from_pairs(n, pairs);
}

Instance random_cycle(int n, Rng& rng) {
  require(n >= 3, "cycle needs at least three vertices");
  auto order = permutation(n, rng);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(order[i], order[(i + 1) % n]);
  return from_pairs(n, pairs);
}

std::pair<Instance, Coloring> random_kpartite(int n, int k, Rng& rng, std::uint64_t num, std::uint64_t den) {
  require(n >= 1 && k >= 1, "k-partite graph needs vertices and classes");
  require(den > 0 && num <= den, "bad edge probability");
  Coloring coloring{k, std::vector<int>(n)};
  for (int v = 0; v < n; ++v) coloring.class_of[v] = v % k;
  rng.shuffle(coloring.class_of);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coloring.class_of[u] != coloring.class_of[v] && rng.chance(num, den)) pairs.emplace_back(u, v);
    }
  }
  return {from_pairs(n, pairs), std::move(coloring)};
}

Instance with_budgets(const Instance& topology, std::span<const Rational> budgets) {
  const std::size_t m = topology.edge_count();
  require(budgets.size() == m || budgets.size() == 1 || (m == 0 && budgets.empty()),
          "got " + std::to_string(budgets.size()) + " budgets for " + std::to_string(m) + " edges");
  std::vector<Edge> edges = topology.edges();
  for (std::size_t i = 0; i < m; ++i) edges[i].budget = budgets.size() == 1 ? budgets[0] : budgets[i];
  return Instance(topology.vertex_count(), std::move(edges));
}

Instance with_random_budgets(const Instance& topology, std::int64_t lo, std::int64_t hi, Rng& rng) {
  require(0 <= lo && lo <= hi, "bad budget range");
  std::vector<Edge> edges = topology.edges();
  for (Edge& e : edges) e.budget = Rational(static_cast<long>(rng.between(lo, hi)));
  return Instance(topology.vertex_count(), std::move(edges));
}

HyperInstance random_hyper(int n, int hyperedges, int max_size, std::int64_t lo, std::int64_t hi, Rng& rng) {
  require(n >= 1 && hyperedges >= 0 && max_size >= 1, "bad hypergraph parameters");
  require(0 <= lo && lo <= hi, "bad budget range");
  std::vector<HyperEdge> hs;
  for (int i = 0; i < hyperedges; ++i) {
    int size = static_cast<int>(rng.between(1, std::min(max_size, n)));
    auto order = permutation(n, rng);
    std::vector<int> vertices(order.begin(), order.begin() + size);
    hs.push_back({std::move(vertices), Rational(static_cast<long>(rng.between(lo, hi)))});
  }
  return HyperInstance(n, std::move(hs));
}

}  // namespace gvp
