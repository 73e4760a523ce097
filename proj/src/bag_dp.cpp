#include <algorithm>
#include <limits>
#include <set>

#include "gvp/error.hpp"
#include "gvp/treewidth.hpp"

namespace gvp {

namespace {

struct Consumer {
  std::vector<int> vertices;
  std::int64_t budget;
  int owner;
};

// Per node: the bag, the domain size of every bag vertex, and the best value of
// the node's subtree for every assignment of the vertices it shares with its parent.
struct NodeState {
  std::vector<int> bag;
  std::vector<std::int64_t> radix;
  std::vector<int> shared_pos;  // positions in `bag` of the vertices shared with the parent
  std::vector<std::int64_t> proj_best;
  std::vector<std::uint64_t> proj_arg;  // full entry index realising proj_best
};

std::uint64_t checked_product(const std::vector<std::int64_t>& radix, std::uint64_t limit, int node) {
  std::uint64_t size = 1;
  for (auto r : radix) {
    if (size > limit / static_cast<std::uint64_t>(r)) {
      fail(ErrorKind::limit_exceeded, "DP table for bag " + std::to_string(node + 1) + " exceeds " +
                                          std::to_string(limit) + " entries");
    }
    size *= static_cast<std::uint64_t>(r);
  }
  return size;
}

// Exact bag DP. Entries are enumerated as mixed-radix integers over the bag
// (first vertex most significant);
// a child's contribution is looked up through its projection onto the shared
// vertices, which only ever pairs consistent assignments.
std::vector<std::int64_t> run_dp(int n, const TreeDecomposition& td, const std::vector<Consumer>& consumers,
                                 std::int64_t price_cap, const DpOptions& options, std::int64_t& best_out) {
  const int count = td.node_count();
  if (count == 0) {
    best_out = 0;
    return {};
  }
  std::vector<std::int64_t> vertex_cap(n, 0);
  std::int64_t budget_total = 0;
  for (const Consumer& c : consumers) {
    for (int v : c.vertices) vertex_cap[v] = std::max(vertex_cap[v], std::min(c.budget, price_cap));
    if (c.budget > std::numeric_limits<std::int64_t>::max() / 4 - budget_total) {
      fail(ErrorKind::limit_exceeded, "total budget too large for the DP");
    }
    budget_total += c.budget;
  }

  std::vector<std::vector<int>> children(count);
  for (int t = 0; t < count; ++t) {
    if (td.parent[t] != -1) children[td.parent[t]].push_back(t);
  }
  std::vector<std::vector<const Consumer*>> owned(count);
  for (const Consumer& c : consumers) owned[c.owner].push_back(&c);

  std::vector<int> order;  // BFS from the root
  order.reserve(count);
  order.push_back(td.root());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int c : children[order[i]]) order.push_back(c);
  }

  std::vector<NodeState> state(count);
  for (int t = 0; t < count; ++t) {
    NodeState& s = state[t];
    s.bag = td.bags[t];
    for (int v : s.bag) s.radix.push_back(vertex_cap[v] + 1);
    if (td.parent[t] != -1) {
      const auto& pbag = td.bags[td.parent[t]];
      for (int i = 0; i < static_cast<int>(s.bag.size()); ++i) {
        if (std::binary_search(pbag.begin(), pbag.end(), s.bag[i])) s.shared_pos.push_back(i);
      }
    }
  }

  // Stride of bag position i in the projection of `child` (0 when not shared).
  auto child_strides = [&](int t, int child) {
    const NodeState& cs = state[child];
    std::vector<std::uint64_t> strides(state[t].bag.size(), 0);
    std::uint64_t stride = 1;
    for (int pos : cs.shared_pos) {
      int v = cs.bag[pos];
      auto it = std::lower_bound(state[t].bag.begin(), state[t].bag.end(), v);
      strides[it - state[t].bag.begin()] = stride;
      stride *= static_cast<std::uint64_t>(cs.radix[pos]);
    }
    return strides;
  };

  std::int64_t root_best = -1;
  std::uint64_t root_arg = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int t = *it;
    NodeState& s = state[t];
    const std::size_t width = s.bag.size();
    const std::uint64_t entries = checked_product(s.radix, options.table_limit, t);

    std::vector<std::vector<std::uint64_t>> strides;
    for (int c : children[t]) strides.push_back(child_strides(t, c));

    struct LocalConsumer {
      std::vector<int> positions;
      std::int64_t budget;
    };
    std::vector<LocalConsumer> local;
    for (const Consumer* c : owned[t]) {
      LocalConsumer lc{{}, c->budget};
      for (int v : c->vertices) {
        lc.positions.push_back(static_cast<int>(std::lower_bound(s.bag.begin(), s.bag.end(), v) - s.bag.begin()));
      }
      local.push_back(std::move(lc));
    }

    std::uint64_t proj_size = 1;
    std::vector<std::uint64_t> own_stride(width, 0);
    for (int pos : s.shared_pos) {
      own_stride[pos] = proj_size;
      proj_size *= static_cast<std::uint64_t>(s.radix[pos]);
    }
    const bool is_root = td.parent[t] == -1;
    if (!is_root) {
      s.proj_best.assign(proj_size, -1);
      s.proj_arg.assign(proj_size, 0);
    }

    std::vector<std::int64_t> digit(width, 0);
    std::vector<std::uint64_t> child_index(children[t].size(), 0);
    std::uint64_t own_index = 0;
    for (std::uint64_t entry = 0; entry < entries; ++entry) {
      std::int64_t value = 0;
      for (const LocalConsumer& lc : local) {
        std::int64_t sum = 0;
        for (int pos : lc.positions) sum += digit[pos];
        if (sum <= lc.budget) value += sum;
      }
      for (std::size_t k = 0; k < children[t].size(); ++k) value += state[children[t][k]].proj_best[child_index[k]];

      if (is_root) {
        if (value > root_best) {
          root_best = value;
          root_arg = entry;
        }
      } else if (value > s.proj_best[own_index]) {
        s.proj_best[own_index] = value;
        s.proj_arg[own_index] = entry;
      }

      // Odometer step, keeping the projection indices in sync. The last bag
      // position moves fastest, so with strict comparisons ties keep the
      // lexicographically smallest bag assignment.
      for (std::size_t i = width; i-- > 0;) {
        if (++digit[i] < s.radix[i]) {
          for (std::size_t k = 0; k < child_index.size(); ++k) child_index[k] += strides[k][i];
          own_index += own_stride[i];
          break;
        }
        const auto wrapped = static_cast<std::uint64_t>(s.radix[i] - 1);
        for (std::size_t k = 0; k < child_index.size(); ++k) child_index[k] -= strides[k][i] * wrapped;
        own_index -= own_stride[i] * wrapped;
        digit[i] = 0;
      }
    }
  }

  // Top-down traceback.
  std::vector<std::int64_t> prices(n, 0);
  std::vector<std::pair<int, std::uint64_t>> stack{{td.root(), root_arg}};
  while (!stack.empty()) {
    auto [t, entry] = stack.back();
    stack.pop_back();
    const NodeState& s = state[t];
    for (std::size_t i = s.bag.size(); i-- > 0;) {
      prices[s.bag[i]] = static_cast<std::int64_t>(entry % static_cast<std::uint64_t>(s.radix[i]));
      entry /= static_cast<std::uint64_t>(s.radix[i]);
    }
    for (int c : children[t]) {
      const NodeState& cs = state[c];
      std::uint64_t idx = 0;
      std::uint64_t stride = 1;
      for (int pos : cs.shared_pos) {
        idx += static_cast<std::uint64_t>(prices[cs.bag[pos]]) * stride;
        stride *= static_cast<std::uint64_t>(cs.radix[pos]);
      }
      stack.emplace_back(c, cs.proj_arg[idx]);
    }
  }
  best_out = root_best;
  return prices;
}

Prices to_prices(const std::vector<std::int64_t>& raw) {
  Prices prices;
  prices.reserve(raw.size());
  for (auto p : raw) prices.emplace_back(static_cast<long>(p));
  return prices;
}

// Prices are integral, so a fractional budget behaves like its floor.
std::int64_t integral_budget(const Rational& budget) { return to_int64(floor_rational(budget)); }

}  // namespace

Solution dp_solve(const Instance& instance, const TreeDecomposition& td, std::int64_t price_cap,
                  const DpOptions& options) {
  if (price_cap < 0) fail(ErrorKind::invalid_argument, "price cap must be nonnegative");
  TreeDecomposition owned = assign_owners(instance, td);
  owned.width = owned.measured_width();
  if (auto check = validate_decomposition(instance, owned); !check.ok) {
    fail(ErrorKind::precondition, "invalid decomposition (property " + std::to_string(check.property) + "): " +
                                      check.witness);
  }
  std::vector<Consumer> consumers;
  consumers.reserve(instance.edge_count());
  for (std::size_t i = 0; i < instance.edge_count(); ++i) {
    const Edge& e = instance.edge(i);
    consumers.push_back({{std::min(e.u, e.v), std::max(e.u, e.v)}, integral_budget(e.budget),
                         owned.edge_owner[i]});
  }
  std::int64_t best = 0;
  auto raw = run_dp(instance.vertex_count(), owned, consumers, price_cap, options, best);
  Solution solution = make_solution(instance, to_prices(raw), "dp");
  if (solution.revenue != Rational(static_cast<long>(best))) {
    fail(ErrorKind::internal, "DP root value " + std::to_string(best) + " differs from traceback revenue " +
                                  to_string(solution.revenue));
  }
  return solution;
}

Instance primal_graph(const HyperInstance& hyper) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& h : hyper.hyperedges()) {
    for (std::size_t a = 0; a < h.vertices.size(); ++a) {
      for (std::size_t b = a + 1; b < h.vertices.size(); ++b) pairs.emplace(h.vertices[a], h.vertices[b]);
    }
  }
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v, Rational(0)});
  return Instance(hyper.vertex_count(), std::move(edges));
}

Solution dp_solve_smp(const HyperInstance& hyper, const TreeDecomposition& td, std::int64_t price_cap,
                      const DpOptions& options) {
  if (price_cap < 0) fail(ErrorKind::invalid_argument, "price cap must be nonnegative");
  Instance primal = primal_graph(hyper);
  TreeDecomposition owned = assign_owners(primal, td);
  owned.width = owned.measured_width();
  if (auto check = validate_decomposition(primal, owned); !check.ok) {
    fail(ErrorKind::precondition, "not a decomposition of the primal graph (property " +
                                      std::to_string(check.property) + "): " + check.witness);
  }
  auto owners = hyperedge_owners(hyper, owned);
  std::vector<Consumer> consumers;
  consumers.reserve(hyper.edge_count());
  for (std::size_t i = 0; i < hyper.edge_count(); ++i) {
    if (owners[i] == -1) {
      fail(ErrorKind::precondition, "hyperedge " + std::to_string(i) + " is not contained in any bag");
    }
    const HyperEdge& h = hyper.hyperedges()[i];
    consumers.push_back({h.vertices, integral_budget(h.budget), owners[i]});
  }
  std::int64_t best = 0;
  auto raw = run_dp(hyper.vertex_count(), owned, consumers, price_cap, options, best);
  Solution solution = make_solution_smp(hyper, to_prices(raw), "dp");
  if (solution.revenue != Rational(static_cast<long>(best))) {
    fail(ErrorKind::internal, "DP root value differs from traceback revenue");
  }
  return solution;
}

}  // namespace gvp
