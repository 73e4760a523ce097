#include <algorithm>
#include <limits>
#include <queue>
#include <set>

#include "gvp/error.hpp"
#include "gvp/treewidth.hpp"

namespace gvp {

int TreeDecomposition::root() const {
  int found = -1;
  for (int t = 0; t < node_count(); ++t) {
    if (parent[t] == -1) {
      if (found != -1) fail(ErrorKind::invalid_argument, "decomposition has more than one root");
      found = t;
    }
  }
  if (found == -1 && node_count() > 0) fail(ErrorKind::invalid_argument, "decomposition has no root");
  return found;
}

int TreeDecomposition::measured_width() const {
  std::size_t largest = 0;
  for (const auto& bag : bags) largest = std::max(largest, bag.size());
  return static_cast<int>(largest) - 1;
}

std::vector<int> TreeDecomposition::depths() const {
  const int count = node_count();
  if (static_cast<int>(parent.size()) != count) {
    fail(ErrorKind::invalid_argument, "parent list length differs from bag count");
  }
  std::vector<std::vector<int>> children(count);
  for (int t = 0; t < count; ++t) {
    if (parent[t] == -1) continue;
    if (parent[t] < 0 || parent[t] >= count || parent[t] == t) {
      fail(ErrorKind::invalid_argument, "node " + std::to_string(t + 1) + " has an invalid parent");
    }
    children[parent[t]].push_back(t);
  }
  std::vector<int> depth(count, -1);
  if (count == 0) return depth;
  int r = root();
  std::queue<int> queue;
  depth[r] = 0;
  queue.push(r);
  int seen = 1;
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop();
    for (int c : children[t]) {
      depth[c] = depth[t] + 1;
      ++seen;
      queue.push(c);
    }
  }
  if (seen != count) fail(ErrorKind::invalid_argument, "parent links contain a cycle or a detached node");
  return depth;
}

namespace {

bool bag_has(const std::vector<int>& bag, int v) { return std::binary_search(bag.begin(), bag.end(), v); }

// Root-nearest node among those whose bag contains every listed vertex.
int nearest_covering_node(const TreeDecomposition& td, const std::vector<int>& depth, std::span<const int> vertices) {
  int best = -1;
  for (int t = 0; t < td.node_count(); ++t) {
    bool covers = std::all_of(vertices.begin(), vertices.end(), [&](int v) { return bag_has(td.bags[t], v); });
    if (covers && (best == -1 || depth[t] < depth[best])) best = t;
  }
  return best;
}

std::string bag_name(int t) { return "bag " + std::to_string(t + 1); }

}  // namespace

TreeDecomposition assign_owners(const Instance& instance, TreeDecomposition td) {
  auto depth = td.depths();
  td.edge_owner.assign(instance.edge_count(), -1);
  for (std::size_t i = 0; i < instance.edge_count(); ++i) {
    const Edge& e = instance.edge(i);
    int ends[2] = {e.u, e.v};
    td.edge_owner[i] = nearest_covering_node(td, depth, ends);
  }
  return td;
}

std::vector<int> hyperedge_owners(const HyperInstance& hyper, const TreeDecomposition& td) {
  auto depth = td.depths();
  std::vector<int> owners;
  owners.reserve(hyper.edge_count());
  for (const auto& h : hyper.hyperedges()) owners.push_back(nearest_covering_node(td, depth, h.vertices));
  return owners;
}

DecompositionCheck validate_decomposition(const Instance& instance, const TreeDecomposition& td) {
  const int n = instance.vertex_count();
  const int count = td.node_count();
  auto violation = [](int property, std::string witness) { return DecompositionCheck{false, property, std::move(witness)}; };

  if (count == 0) {
    if (n == 0) return {};
    return violation(0, "decomposition has no bags");
  }
  std::vector<int> depth;
  try {
    depth = td.depths();
  } catch (const Error& e) {
    return violation(0, e.what());
  }
  for (int t = 0; t < count; ++t) {
    const auto& bag = td.bags[t];
    if (!std::is_sorted(bag.begin(), bag.end()) || std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
      return violation(0, bag_name(t) + " is not a sorted set");
    }
    if (!bag.empty() && (bag.front() < 0 || bag.back() >= n)) {
      return violation(0, bag_name(t) + " names a vertex outside 0.." + std::to_string(n - 1));
    }
  }

  // 1: every vertex appears somewhere.
  std::vector<std::vector<int>> holders(n);
  for (int t = 0; t < count; ++t) {
    for (int v : td.bags[t]) holders[v].push_back(t);
  }
  for (int v = 0; v < n; ++v) {
    if (holders[v].empty()) return violation(1, "vertex " + std::to_string(v) + " is in no bag");
  }

  // 2: every edge has a bag with both endpoints.
  for (std::size_t i = 0; i < instance.edge_count(); ++i) {
    const Edge& e = instance.edge(i);
    bool covered = std::any_of(holders[e.u].begin(), holders[e.u].end(),
                               [&](int t) { return bag_has(td.bags[t], e.v); });
    if (!covered) {
      return violation(2, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is in no bag");
    }
  }

  // 3: holders of each vertex form a connected subtree, i.e. exactly one of them
  // has a parent outside the set.
  for (int v = 0; v < n; ++v) {
    std::vector<int> tops;
    for (int t : holders[v]) {
      if (td.parent[t] == -1 || !bag_has(td.bags[td.parent[t]], v)) tops.push_back(t);
    }
    if (tops.size() > 1) {
      int a = tops[0];
      int b = tops[1];
      // Walk both up to their meeting point; the first node on the way without v is the witness.
      std::vector<int> path_a{a};
      std::vector<int> path_b{b};
      int x = a;
      int y = b;
      while (x != y) {
        if (depth[x] >= depth[y]) {
          x = td.parent[x];
          path_a.push_back(x);
        } else {
          y = td.parent[y];
          path_b.push_back(y);
        }
      }
      path_a.insert(path_a.end(), path_b.rbegin() + 1, path_b.rend());
      int gap = -1;
      for (int t : path_a) {
        if (!bag_has(td.bags[t], v)) {
          gap = t;
          break;
        }
      }
      int lo = std::min(a, b);
      int hi = std::max(a, b);
      return violation(3, "vertex " + std::to_string(v) + " appears in " + bag_name(lo) + " and " + bag_name(hi) +
                              " but not in " + bag_name(gap));
    }
  }

  // 4: declared width.
  if (td.width != td.measured_width()) {
    return violation(4, "declared width " + std::to_string(td.width) + " but the largest bag gives " +
                            std::to_string(td.measured_width()));
  }

  // 5: edge ownership is the root-nearest covering bag.
  if (td.edge_owner.size() != instance.edge_count()) {
    return violation(5, "edge ownership lists " + std::to_string(td.edge_owner.size()) + " entries for " +
                            std::to_string(instance.edge_count()) + " edges");
  }
  for (std::size_t i = 0; i < instance.edge_count(); ++i) {
    const Edge& e = instance.edge(i);
    int ends[2] = {e.u, e.v};
    int expected = nearest_covering_node(td, depth, ends);
    if (td.edge_owner[i] != expected) {
      return violation(5, "edge " + std::to_string(i) + " owned by " + bag_name(td.edge_owner[i]) +
                              " but the root-nearest covering bag is " + bag_name(expected));
    }
  }
  return {};
}

namespace {

using Adjacency = std::vector<std::set<int>>;

Adjacency simple_adjacency(const Instance& instance) {
  Adjacency adj(instance.vertex_count());
  for (const Edge& e : instance.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  return adj;
}

int fill_in(const Adjacency& adj, int v) {
  int missing = 0;
  for (auto a = adj[v].begin(); a != adj[v].end(); ++a) {
    for (auto b = std::next(a); b != adj[v].end(); ++b) {
      if (!adj[*a].count(*b)) ++missing;
    }
  }
  return missing;
}

void eliminate(Adjacency& adj, int v) {
  for (int a : adj[v]) {
    adj[a].erase(v);
    for (int b : adj[v]) {
      if (a != b) adj[a].insert(b);
    }
  }
  adj[v].clear();
}

enum class Heuristic { min_degree, min_fill };

std::vector<int> greedy_order(const Instance& instance, Heuristic rule) {
  const int n = instance.vertex_count();
  Adjacency adj = simple_adjacency(instance);
  std::vector<bool> done(n, false);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    long best_score = std::numeric_limits<long>::max();
    for (int v = 0; v < n; ++v) {
      if (done[v]) continue;
      long score = rule == Heuristic::min_degree ? static_cast<long>(adj[v].size())
                                                 : static_cast<long>(fill_in(adj, v)) * (n + 1) + adj[v].size();
      if (score < best_score) {
        best_score = score;
        pick = v;
      }
    }
    done[pick] = true;
    order.push_back(pick);
    eliminate(adj, pick);
  }
  return order;
}

// Exact treewidth by the subset recurrence TW(S) = min_v max(TW(S - v), |Q(S - v, v)|),
// where Q(S, v) is the set of vertices outside S + v reachable from v through S.
std::pair<int, std::vector<int>> exact_order(const Instance& instance) {
  const int n = instance.vertex_count();
  std::vector<unsigned> nbr(n, 0);
  for (const Edge& e : instance.edges()) {
    nbr[e.u] |= 1u << e.v;
    nbr[e.v] |= 1u << e.u;
  }
  auto q_size = [&](unsigned eliminated, int v) {
    unsigned visited = 1u << v;
    unsigned frontier = 1u << v;
    unsigned outside = 0;
    while (frontier) {
      int x = __builtin_ctz(frontier);
      frontier &= frontier - 1;
      unsigned reach = nbr[x] & ~visited;
      visited |= reach;
      outside |= reach & ~eliminated;
      frontier |= reach & eliminated;
    }
    return __builtin_popcount(outside);
  };
  const unsigned full = n == 0 ? 0u : (1u << n) - 1;
  std::vector<int> tw(std::size_t{full} + 1, std::numeric_limits<int>::max());
  std::vector<signed char> last(std::size_t{full} + 1, -1);
  tw[0] = -1;
  for (unsigned s = 1; s <= full; ++s) {
    for (int v = 0; v < n; ++v) {
      if (!(s & (1u << v))) continue;
      unsigned rest = s & ~(1u << v);
      int candidate = std::max(tw[rest], q_size(rest, v));
      if (candidate < tw[s]) {
        tw[s] = candidate;
        last[s] = static_cast<signed char>(v);
      }
    }
  }
  std::vector<int> order(n);
  unsigned s = full;
  for (int i = n - 1; i >= 0; --i) {
    order[i] = last[s];
    s &= ~(1u << last[s]);
  }
  return {n == 0 ? -1 : tw[full], order};
}

}  // namespace

TreeDecomposition decomposition_from_order(const Instance& instance, const std::vector<int>& order) {
  const int n = instance.vertex_count();
  if (static_cast<int>(order.size()) != n) fail(ErrorKind::invalid_argument, "elimination order has wrong length");
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || position[order[i]] != -1) {
      fail(ErrorKind::invalid_argument, "elimination order is not a permutation");
    }
    position[order[i]] = i;
  }
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back({});
    td.parent.push_back(-1);
    td.width = -1;
    return assign_owners(instance, std::move(td));
  }
  // Node i holds the bag of order[n - 1 - i], so the last eliminated vertex is node 0.
  auto node_of = [&](int v) { return n - 1 - position[v]; };
  Adjacency adj = simple_adjacency(instance);
  td.bags.assign(n, {});
  td.parent.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::vector<int> bag(adj[v].begin(), adj[v].end());
    int next = -1;
    for (int w : bag) {
      if (next == -1 || position[w] < position[next]) next = w;
    }
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags[node_of(v)] = std::move(bag);
    if (next != -1) {
      td.parent[node_of(v)] = node_of(next);
    } else if (node_of(v) != 0) {
      td.parent[node_of(v)] = 0;  // component root; shares no vertex with node 0
    }
    eliminate(adj, v);
  }
  td.width = td.measured_width();
  return assign_owners(instance, std::move(td));
}

DecompositionSearch build_decomposition(const Instance& instance, int max_width, const DecompositionOptions& options) {
  if (max_width < 1) fail(ErrorKind::invalid_argument, "max_width must be positive");
  if (max_width > options.width_limit) {
    fail(ErrorKind::invalid_argument, "max_width " + std::to_string(max_width) + " exceeds the configured limit " +
                                          std::to_string(options.width_limit));
  }
  DecompositionSearch result;
  for (Heuristic rule : {Heuristic::min_degree, Heuristic::min_fill}) {
    TreeDecomposition td = decomposition_from_order(instance, greedy_order(instance, rule));
    if (result.best_width == -1 || td.width < result.best_width) result.best_width = td.width;
    if (td.width <= max_width) {
      result.decomposition = std::move(td);
      return result;
    }
  }
  if (instance.vertex_count() <= options.exhaustive_vertex_limit) {
    auto [width, order] = exact_order(instance);
    result.exhaustive = true;
    result.best_width = width;
    if (width <= max_width) result.decomposition = decomposition_from_order(instance, order);
  }
  return result;
}

}  // namespace gvp
