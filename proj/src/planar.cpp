#include "gvp/planar.hpp"

#include <algorithm>
#include <set>

#include "gvp/error.hpp"

namespace gvp {

LayerPartition baker_partition(const Instance& instance, int k) {
  if (k < 3) fail(ErrorKind::invalid_argument, "layer partition needs k >= 3");
  const int n = instance.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : instance.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  LayerPartition partition{k, std::vector<std::vector<int>>(k), std::vector<int>(n, -1)};
  for (int root = 0; root < n; ++root) {
    if (partition.depth[root] != -1) continue;
    partition.depth[root] = 0;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int w : adj[v]) {
        if (partition.depth[w] == -1) {
          partition.depth[w] = partition.depth[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) partition.parts[partition.depth[v] % k].push_back(v);
  return partition;
}

std::vector<Instance> layer_subinstances(const Instance& instance, const LayerPartition& partition) {
  std::vector<int> part_of(instance.vertex_count(), -1);
  for (int j = 0; j < partition.k; ++j) {
    for (int v : partition.parts[j]) part_of[v] = j;
  }
  std::vector<Instance> out;
  for (int j = 0; j < partition.k; ++j) {
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < instance.edge_count(); ++i) {
      const Edge& e = instance.edge(i);
      if (part_of[e.u] != j && part_of[e.v] != j) kept.push_back(i);
    }
    out.push_back(instance.with_edges(kept));
  }
  return out;
}

int ptas_layer_count(const Rational& epsilon) {
  if (epsilon <= 0) fail(ErrorKind::invalid_argument, "epsilon must be positive");
  Rational inverse = 1 / epsilon;
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), inverse.get_num_mpz_t(), inverse.get_den_mpz_t());
  if (c > 1'000'000) fail(ErrorKind::invalid_argument, "epsilon too small");
  return static_cast<int>(c.get_si()) + 2;
}

Solution ptas_planar(const Instance& instance, const Rational& epsilon, const PtasOptions& options) {
  const int k = ptas_layer_count(epsilon);
  const auto layers = layer_subinstances(instance, baker_partition(instance, k));
  const int first_width = std::min(3 * (k - 1), options.width_limit);
  const int second_width = std::min(6 * (k - 1), options.width_limit);

  Solution best;
  bool have = false;
  for (int j = 0; j < k; ++j) {
    const Instance& layer = layers[j];
    std::optional<Solution> solved;
    std::string failure;
    for (int width : {first_width, second_width}) {
      FptasOptions fopts = options.fptas;
      fopts.max_width = width;
      fopts.decomposition.width_limit = std::max(fopts.decomposition.width_limit, width);
      try {
        solved = fptas(layer, epsilon, fopts);
        break;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::precondition) throw;
        failure = e.what();
      }
      if (second_width == first_width) break;
    }
    if (!solved) fail(ErrorKind::precondition, "layer subproblem " + std::to_string(j + 1) + ": " + failure);
    Solution candidate = make_solution(instance, std::move(solved->prices), "ptas-planar");
    if (!have || candidate.revenue > best.revenue) {
      best = std::move(candidate);
      have = true;
    }
  }
  return best;
}

Instance vc_to_gvp(const Instance& graph) {
  const int n = graph.vertex_count();
  if (n < 1) fail(ErrorKind::invalid_argument, "vertex cover reduction needs a vertex");
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : graph.edges()) {
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      fail(ErrorKind::invalid_argument, "vertex cover reduction needs a simple graph");
    }
  }
  const Rational square = Rational(static_cast<long>(n) * n);
  std::vector<Edge> edges;
  for (const Edge& e : graph.edges()) {
    edges.push_back({e.u, e.v, square});
    edges.push_back({e.u, e.v, 2 * square});
  }
  for (int v = 0; v < n; ++v) edges.push_back({v, n + v, Rational(1)});
  return Instance(2 * n, std::move(edges));
}

Rational vc_reduction_opt(int vertices, std::size_t edges, int vertex_cover) {
  Rational v = static_cast<long>(vertices);
  return 2 * Rational(static_cast<long>(edges)) * v * v + v - vertex_cover;
}

int min_vertex_cover(const Instance& graph) {
  const int n = graph.vertex_count();
  if (n > 24) fail(ErrorKind::limit_exceeded, "exhaustive vertex cover is limited to 24 vertices");
  int best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size >= best) continue;
    bool covers = std::all_of(graph.edges().begin(), graph.edges().end(),
                              [&](const Edge& e) { return ((mask >> e.u) & 1u) || ((mask >> e.v) & 1u); });
    if (covers) best = size;
  }
  return best;
}

}  // namespace gvp
