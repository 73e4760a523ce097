#include "gvp/oracle.hpp"

#include <algorithm>

#include "gvp/error.hpp"

namespace gvp {

namespace {

struct Item {
  std::vector<int> vertices;
  std::int64_t budget;
};

// Depth-first enumeration in lexicographic order. Each item is settled at its
// largest vertex; a branch is cut when even full payment of every unsettled item
// cannot beat the incumbent strictly, which keeps the first optimum found.
class Enumerator {
 public:
  Enumerator(int n, std::vector<Item> items, std::int64_t cap) : n_(n), cap_(cap), by_last_(n) {
    suffix_.assign(n + 1, 0);
    for (auto& item : items) {
      int last = item.vertices.back();
      suffix_[last] += item.budget;
      by_last_[last].push_back(std::move(item));
    }
    for (int v = n - 1; v >= 0; --v) suffix_[v] += suffix_[v + 1];
    current_.assign(n, 0);
  }

  void run() { descend(0, 0); }

  std::int64_t best_value() const { return best_; }
  const std::vector<std::int64_t>& best_prices() const { return best_prices_; }

 private:
  void descend(int v, std::int64_t partial) {
    if (v == n_) {
      if (partial > best_) {
        best_ = partial;
        best_prices_ = current_;
      }
      return;
    }
    for (std::int64_t price = 0; price <= cap_; ++price) {
      current_[v] = price;
      std::int64_t gained = 0;
      for (const Item& item : by_last_[v]) {
        std::int64_t sum = 0;
        for (int w : item.vertices) sum += current_[w];
        if (sum <= item.budget) gained += sum;
      }
      std::int64_t next = partial + gained;
      if (best_ >= 0 && next + suffix_[v + 1] <= best_) continue;
      descend(v + 1, next);
    }
    current_[v] = 0;
  }

  int n_;
  std::int64_t cap_;
  std::vector<std::vector<Item>> by_last_;
  std::vector<std::int64_t> suffix_;
  std::vector<std::int64_t> current_;
  std::int64_t best_ = -1;
  std::vector<std::int64_t> best_prices_;
};

void check_limit(int n, std::int64_t cap, std::uint64_t limit) {
  if (cap < 0) fail(ErrorKind::invalid_argument, "price cap must be nonnegative");
  std::uint64_t states = 1;
  for (int i = 0; i < n; ++i) {
    if (states > limit / static_cast<std::uint64_t>(cap + 1)) {
      fail(ErrorKind::limit_exceeded, "oracle enumeration of (" + std::to_string(cap + 1) + ")^" + std::to_string(n) +
                                          " price vectors exceeds the limit " + std::to_string(limit));
    }
    states *= static_cast<std::uint64_t>(cap + 1);
  }
}

Prices to_prices(const std::vector<std::int64_t>& raw) {
  Prices prices;
  prices.reserve(raw.size());
  for (auto p : raw) prices.emplace_back(static_cast<long>(p));
  return prices;
}

std::vector<std::int64_t> solve_items(int n, std::vector<Item> items, std::int64_t cap, std::uint64_t limit) {
  check_limit(n, cap, limit);
  Enumerator search(n, std::move(items), cap);
  search.run();
  return search.best_prices();
}

}  // namespace

Solution brute_force_opt(const Instance& instance, std::int64_t price_cap, std::uint64_t limit) {
  std::vector<Item> items;
  items.reserve(instance.edge_count());
  for (const Edge& e : instance.edges()) {
    items.push_back({{std::min(e.u, e.v), std::max(e.u, e.v)}, to_int64(floor_rational(e.budget))});
  }
  auto best = solve_items(instance.vertex_count(), std::move(items), price_cap, limit);
  return make_solution(instance, to_prices(best), "oracle");
}

Solution brute_force_opt_smp(const HyperInstance& hyper, std::int64_t price_cap, std::uint64_t limit) {
  std::vector<Item> items;
  items.reserve(hyper.edge_count());
  for (const HyperEdge& h : hyper.hyperedges()) items.push_back({h.vertices, to_int64(floor_rational(h.budget))});
  auto best = solve_items(hyper.vertex_count(), std::move(items), price_cap, limit);
  return make_solution_smp(hyper, to_prices(best), "oracle");
}

}  // namespace gvp
