#include "gvp/low_degree.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gvp/error.hpp"
#include "gvp/lp.hpp"

namespace gvp {

namespace {

// A walk: edges[i] joins verts[i] and verts[i + 1]. A closed walk repeats verts[0] at the end.
struct Chain {
  std::vector<int> verts;
  std::vector<std::size_t> edges;
};

struct Piece {
  Rational value;
  std::vector<std::pair<int, Rational>> prices;
};

// LP_opt restricted to a set of edges; every edge pays at the returned optimum.
class PieceCache {
 public:
  explicit PieceCache(const Instance& instance) : instance_(instance) {}

  const Piece& get(std::vector<std::size_t> edges) {
    std::sort(edges.begin(), edges.end());
    auto it = cache_.find(edges);
    if (it != cache_.end()) return it->second;

    std::vector<int> local;
    for (auto e : edges) {
      local.push_back(instance_.edge(e).u);
      local.push_back(instance_.edge(e).v);
    }
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
    auto index = [&](int v) { return static_cast<int>(std::lower_bound(local.begin(), local.end(), v) - local.begin()); };
    std::vector<Edge> sub;
    for (auto e : edges) {
      const Edge& edge = instance_.edge(e);
      sub.push_back({index(edge.u), index(edge.v), edge.budget});
    }
    LPSolution lp = lp_opt(Instance(static_cast<int>(local.size()), std::move(sub)));
    if (lp.status != LPStatus::optimal) fail(ErrorKind::internal, "LP_opt is not optimal on a segment");
    Piece piece{lp.value, {}};
    for (std::size_t i = 0; i < local.size(); ++i) piece.prices.emplace_back(local[i], lp.assignment[i]);
    return cache_.emplace(std::move(edges), std::move(piece)).first->second;
  }

 private:
  const Instance& instance_;
  std::map<std::vector<std::size_t>, Piece> cache_;
};

// R[i][j] over edge ranges of an open chain: either the whole range pays (LP_opt),
// or some edge k is written off and the two vertex-disjoint sides are solved apart.
struct ChainResult {
  Rational value;
  std::vector<std::pair<std::size_t, std::size_t>> segments;  // paying ranges [i, j]
};

ChainResult solve_chain(const Chain& chain, PieceCache& cache) {
  const std::size_t m = chain.edges.size();
  if (m == 0) return {};
  auto range = [&](std::size_t i, std::size_t j) {
    return std::vector<std::size_t>(chain.edges.begin() + static_cast<long>(i),
                                    chain.edges.begin() + static_cast<long>(j) + 1);
  };
  // best[i][j + 1] for i <= j + 1; an empty range is worth 0. choice -1 means LP.
  std::vector<std::vector<Rational>> best(m + 1, std::vector<Rational>(m + 1));
  std::vector<std::vector<long>> choice(m + 1, std::vector<long>(m + 1, -1));
  for (std::size_t len = 1; len <= m; ++len) {
    for (std::size_t i = 0; i + len <= m; ++i) {
      const std::size_t end = i + len;  // exclusive
      Rational value = cache.get(range(i, end - 1)).value;
      long pick = -1;
      for (std::size_t k = i; k < end; ++k) {
        Rational split = best[i][k] + best[k + 1][end];
        if (split > value) {
          value = split;
          pick = static_cast<long>(k);
        }
      }
      best[i][end] = value;
      choice[i][end] = pick;
    }
  }
  ChainResult result{best[0][m], {}};
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, m}};
  while (!stack.empty()) {
    auto [i, end] = stack.back();
    stack.pop_back();
    if (i >= end) continue;
    long k = choice[i][end];
    if (k < 0) {
      result.segments.emplace_back(i, end - 1);
    } else {
      stack.emplace_back(i, static_cast<std::size_t>(k));
      stack.emplace_back(static_cast<std::size_t>(k) + 1, end);
    }
  }
  return result;
}

void apply_segments(const Chain& chain, const ChainResult& result, PieceCache& cache, Prices& prices) {
  for (auto [i, j] : result.segments) {
    std::vector<std::size_t> edges(chain.edges.begin() + static_cast<long>(i), chain.edges.begin() + static_cast<long>(j) + 1);
    for (const auto& [v, p] : cache.get(edges).prices) prices[v] = p;
  }
}

struct Component {
  std::vector<int> vertices;
  std::vector<std::size_t> edges;
};

std::vector<std::vector<std::pair<int, std::size_t>>> adjacency(const Instance& instance,
                                                                const std::vector<std::size_t>& edges) {
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(instance.vertex_count());
  for (auto e : edges) {
    const Edge& edge = instance.edge(e);
    adj[edge.u].emplace_back(edge.v, e);
    adj[edge.v].emplace_back(edge.u, e);
  }
  return adj;
}

std::vector<Component> edge_components(const Instance& instance, const std::vector<std::size_t>& edges) {
  auto adj = adjacency(instance, edges);
  std::vector<char> seen(instance.vertex_count(), 0);
  std::vector<Component> out;
  for (int s = 0; s < instance.vertex_count(); ++s) {
    if (seen[s] || adj[s].empty()) continue;
    Component comp;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.vertices.push_back(v);
      for (auto [w, e] : adj[v]) {
        if (v < w) comp.edges.push_back(e);  // once, from the smaller endpoint
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    std::sort(comp.edges.begin(), comp.edges.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Walks a component of maximum degree two starting at `start`, never reusing an edge.
Chain walk(const std::vector<std::vector<std::pair<int, std::size_t>>>& adj, int start,
           std::size_t edge_count) {
  Chain chain{{start}, {}};
  std::vector<std::size_t> used;
  int v = start;
  while (chain.edges.size() < edge_count) {
    bool moved = false;
    for (auto [w, e] : adj[v]) {
      if (std::find(used.begin(), used.end(), e) != used.end()) continue;
      used.push_back(e);
      chain.edges.push_back(e);
      chain.verts.push_back(w);
      v = w;
      moved = true;
      break;
    }
    if (!moved) break;
  }
  return chain;
}

bool is_cycle(const Component& comp) { return comp.edges.size() == comp.vertices.size(); }

// Solves one component (path or cycle) and writes its prices.
Rational solve_component(const Component& comp,
                         const std::vector<std::vector<std::pair<int, std::size_t>>>& adj, PieceCache& cache,
                         Prices& prices) {
  const std::size_t m = comp.edges.size();
  if (!is_cycle(comp)) {
    int start = comp.vertices.front();
    for (int v : comp.vertices) {
      if (adj[v].size() == 1) {
        start = v;
        break;
      }
    }
    Chain chain = walk(adj, start, m);
    ChainResult result = solve_chain(chain, cache);
    apply_segments(chain, result, cache, prices);
    return result.value;
  }

  Chain cycle = walk(adj, comp.vertices.front(), m);
  // All edges pay, or some edge e is written off and the rest is a path.
  Rational best = cache.get(cycle.edges).value;
  long dropped = -1;
  ChainResult best_path;
  Chain best_chain;
  for (std::size_t e = 0; e < m; ++e) {
    Chain rest;
    for (std::size_t step = 1; step < m; ++step) {
      std::size_t i = (e + step) % m;
      if (rest.verts.empty()) rest.verts.push_back(cycle.verts[i]);
      rest.edges.push_back(cycle.edges[i]);
      rest.verts.push_back(cycle.verts[i + 1]);
    }
    ChainResult result = solve_chain(rest, cache);
    if (result.value > best) {
      best = result.value;
      dropped = static_cast<long>(e);
      best_path = std::move(result);
      best_chain = std::move(rest);
    }
  }
  if (dropped < 0) {
    for (const auto& [v, p] : cache.get(cycle.edges).prices) prices[v] = p;
  } else {
    apply_segments(best_chain, best_path, cache, prices);
  }
  return best;
}

std::vector<std::size_t> all_edges(const Instance& instance) {
  std::vector<std::size_t> edges(instance.edge_count());
  std::iota(edges.begin(), edges.end(), std::size_t{0});
  return edges;
}

Solution solve_max_degree2(const Instance& instance, const std::string& label) {
  auto edges = all_edges(instance);
  auto adj = adjacency(instance, edges);
  PieceCache cache(instance);
  Prices prices(instance.vertex_count(), Rational(0));
  Rational total = 0;
  for (const Component& comp : edge_components(instance, edges)) total += solve_component(comp, adj, cache, prices);
  Solution solution = make_solution(instance, std::move(prices), label);
  if (solution.revenue < total) {
    fail(ErrorKind::internal, "degree-2 prices earn " + to_string(solution.revenue) + ", below the recursion value " +
                                  to_string(total));
  }
  return solution;
}

void require_degree(const Instance& instance, int limit) {
  if (instance.max_degree() > limit) {
    fail(ErrorKind::precondition, "maximum degree " + std::to_string(instance.max_degree()) + " exceeds " +
                                      std::to_string(limit));
  }
}

}  // namespace

Solution solve_path(const Instance& instance) {
  require_degree(instance, 2);
  auto comps = edge_components(instance, all_edges(instance));
  if (comps.size() > 1 || (comps.size() == 1 && is_cycle(comps[0]))) {
    fail(ErrorKind::precondition, "edges do not form a single simple path");
  }
  return solve_max_degree2(instance, "path");
}

Solution solve_cycle(const Instance& instance) {
  require_degree(instance, 2);
  auto comps = edge_components(instance, all_edges(instance));
  if (comps.size() != 1 || !is_cycle(comps[0])) fail(ErrorKind::precondition, "edges do not form a single cycle");
  return solve_max_degree2(instance, "cycle");
}

Solution solve_degree2(const Instance& instance) {
  require_degree(instance, 2);
  return solve_max_degree2(instance, "degree2");
}

EdgeSplit euler_split(const Instance& instance) {
  require_degree(instance, 4);
  if (instance.max_degree() <= 2) {
    EdgeSplit all;
    for (std::size_t i = 0; i < instance.edge_count(); ++i) all.first.push_back(i);
    return all;
  }
  const int n = instance.vertex_count();
  struct Arc {
    int u, v;
    long real;  // -1 for a virtual matching edge
  };
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < instance.edge_count(); ++i) {
    arcs.push_back({instance.edge(i).u, instance.edge(i).v, static_cast<long>(i)});
  }
  auto deg = instance.degrees();
  std::vector<int> odd;
  for (int v = 0; v < n; ++v) {
    if (deg[v] % 2 == 1) odd.push_back(v);
  }
  for (std::size_t i = 0; i + 1 < odd.size(); i += 2) arcs.push_back({odd[i], odd[i + 1], -1});

  std::vector<std::vector<std::pair<int, std::size_t>>> adj(n);
  std::vector<int> aug_deg(n, 0);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    adj[arcs[a].u].emplace_back(arcs[a].v, a);
    adj[arcs[a].v].emplace_back(arcs[a].u, a);
    ++aug_deg[arcs[a].u];
    ++aug_deg[arcs[a].v];
  }

  // Components of the augmented graph, each with its circuit start.
  std::vector<int> comp_of(n, -1);
  std::vector<int> starts;
  for (int s = 0; s < n; ++s) {
    if (comp_of[s] != -1 || adj[s].empty()) continue;
    const int id = static_cast<int>(starts.size());
    std::vector<int> stack{s}, members;
    comp_of[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (auto [w, a] : adj[v]) {
        if (comp_of[w] == -1) {
          comp_of[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    int start = members.front();
    for (int v : members) {
      if (aug_deg[v] == 2) {
        start = v;
        break;
      }
    }
    starts.push_back(start);
  }

  EdgeSplit split;
  std::vector<char> used(arcs.size(), 0);
  std::vector<std::size_t> next(n, 0);
  for (int start : starts) {
    // Hierholzer; the circuit comes out as a closed walk of arcs.
    std::vector<std::pair<int, long>> stack{{start, -1}};
    std::vector<std::size_t> circuit;
    while (!stack.empty()) {
      int v = stack.back().first;
      while (next[v] < adj[v].size() && used[adj[v][next[v]].second]) ++next[v];
      if (next[v] == adj[v].size()) {
        if (stack.back().second >= 0) circuit.push_back(static_cast<std::size_t>(stack.back().second));
        stack.pop_back();
        continue;
      }
      auto [w, a] = adj[v][next[v]];
      used[a] = 1;
      stack.emplace_back(w, static_cast<long>(a));
    }
    for (std::size_t pos = 0; pos < circuit.size(); ++pos) {
      const Arc& arc = arcs[circuit[pos]];
      if (arc.real < 0) continue;
      (pos % 2 == 0 ? split.first : split.second).push_back(static_cast<std::size_t>(arc.real));
    }
  }
  std::sort(split.first.begin(), split.first.end());
  std::sort(split.second.begin(), split.second.end());
  return split;
}

Solution solve_degree4(const Instance& instance) {
  EdgeSplit split = euler_split(instance);
  Solution a = solve_degree2(instance.with_edges(split.first));
  Solution b = solve_degree2(instance.with_edges(split.second));
  Solution first = make_solution(instance, std::move(a.prices), "degree4");
  Solution second = make_solution(instance, std::move(b.prices), "degree4");
  return second.revenue > first.revenue ? second : first;
}

}  // namespace gvp
