#include "gvp/kpartite.hpp"

#include <algorithm>
#include <numeric>

#include "gvp/error.hpp"
#include "gvp/random.hpp"

namespace gvp {

ColoringCheck validate_coloring(const Instance& instance, const Coloring& coloring) {
  auto bad = [](std::string why, long edge = -1) { return ColoringCheck{false, edge, std::move(why)}; };
  if (coloring.k < 1) return bad("k must be positive");
  if (static_cast<int>(coloring.class_of.size()) != instance.vertex_count()) {
    return bad("class_of has " + std::to_string(coloring.class_of.size()) + " entries for " +
               std::to_string(instance.vertex_count()) + " vertices");
  }
  for (std::size_t v = 0; v < coloring.class_of.size(); ++v) {
    if (coloring.class_of[v] < 0 || coloring.class_of[v] >= coloring.k) {
      return bad("vertex " + std::to_string(v) + " has class " + std::to_string(coloring.class_of[v]) +
                 " outside 0.." + std::to_string(coloring.k - 1));
    }
  }
  for (std::size_t i = 0; i < instance.edge_count(); ++i) {
    const Edge& e = instance.edge(i);
    if (coloring.class_of[e.u] == coloring.class_of[e.v]) {
      return bad("edge " + std::to_string(i) + " (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                     ") joins two vertices of class " + std::to_string(coloring.class_of[e.u]),
                 static_cast<long>(i));
    }
  }
  return {};
}

namespace {

// Best single price for a vertex facing the given budgets alone.
Rational best_item_price(std::vector<Rational> budgets) {
  std::sort(budgets.begin(), budgets.end(), std::greater<>());
  Rational best_price = 0;
  Rational best_value = 0;
  // Price budgets[j] sells to the j+1 largest budgets; scanning up from the cheapest
  // price and keeping strict improvements prefers the smallest price on ties.
  for (std::size_t j = budgets.size(); j-- > 0;) {
    if (j + 1 < budgets.size() && budgets[j + 1] == budgets[j]) continue;
    Rational value = budgets[j] * static_cast<long>(j + 1);
    if (value > best_value) {
      best_value = value;
      best_price = budgets[j];
    }
  }
  return best_price;
}

}  // namespace

Solution bipartite_2approx(const Instance& instance, const std::vector<int>& side_of) {
  const int n = instance.vertex_count();
  if (static_cast<int>(side_of.size()) != n) fail(ErrorKind::invalid_argument, "side_of has the wrong length");
  for (int v = 0; v < n; ++v) {
    if (side_of[v] != 0 && side_of[v] != 1) fail(ErrorKind::invalid_argument, "side_of entries must be 0 or 1");
  }
  std::vector<std::vector<Rational>> incident(n);
  for (std::size_t i = 0; i < instance.edge_count(); ++i) {
    const Edge& e = instance.edge(i);
    if (side_of[e.u] == side_of[e.v]) {
      fail(ErrorKind::precondition, "edge " + std::to_string(i) + " does not cross the bipartition");
    }
    incident[e.u].push_back(e.budget);
    incident[e.v].push_back(e.budget);
  }
  Prices item_price(n);
  for (int v = 0; v < n; ++v) item_price[v] = best_item_price(incident[v]);

  Solution best;
  for (int free_side = 0; free_side < 2; ++free_side) {
    Prices prices(n, Rational(0));
    for (int v = 0; v < n; ++v) {
      if (side_of[v] != free_side) prices[v] = item_price[v];
    }
    Solution candidate = make_solution(instance, std::move(prices), "bipartite");
    if (free_side == 0 || candidate.revenue > best.revenue) best = std::move(candidate);
  }
  return best;
}

Rational cut_probability(int k) {
  if (k < 2) fail(ErrorKind::invalid_argument, "cut probability needs k >= 2");
  if (k % 2 == 0) return ratio(k, 2L * (k - 1));
  return ratio(k + 1, 2L * k);
}

KPartiteResult kpartite_detailed(const Instance& instance, const Coloring& coloring, KPartiteMode mode,
                                 std::uint64_t seed) {
  if (auto check = validate_coloring(instance, coloring); !check.ok) {
    fail(ErrorKind::precondition, "invalid coloring: " + check.witness);
  }
  const int k = coloring.k;
  const int left_size = (k + 1) / 2;

  // Budget mass between every pair of classes.
  std::vector<std::vector<Rational>> weight(k, std::vector<Rational>(k));
  Rational total = 0;
  for (const Edge& e : instance.edges()) {
    int a = coloring.class_of[e.u];
    int b = coloring.class_of[e.v];
    weight[a][b] += e.budget;
    weight[b][a] += e.budget;
    total += e.budget;
  }

  std::vector<int> side(k, -1);
  if (mode == KPartiteMode::randomized) {
    std::vector<int> classes(k);
    std::iota(classes.begin(), classes.end(), 0);
    Rng rng(seed);
    rng.shuffle(classes);
    for (int i = 0; i < k; ++i) side[classes[i]] = i < left_size ? 0 : 1;
  } else {
    // Expected cut weight over uniform completions to the target side sizes.
    auto expected = [&](const std::vector<int>& partial) {
      int free = 0;
      int left_open = left_size;
      for (int c = 0; c < k; ++c) {
        if (partial[c] == -1) ++free;
        if (partial[c] == 0) --left_open;
      }
      const int right_open = free - left_open;
      Rational value = 0;
      for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
          if (weight[a][b] == 0) continue;
          Rational p;
          if (partial[a] != -1 && partial[b] != -1) {
            p = partial[a] != partial[b] ? 1 : 0;
          } else if (partial[a] != -1 || partial[b] != -1) {
            int placed = partial[a] != -1 ? partial[a] : partial[b];
            p = ratio(placed == 0 ? right_open : left_open, free);
          } else {
            p = ratio(2L * left_open * right_open, static_cast<long>(free) * (free - 1));
          }
          value += weight[a][b] * p;
        }
      }
      return value;
    };
    int left_used = 0;
    for (int c = 0; c < k; ++c) {
      const int remaining = k - c;
      const int left_open = left_size - left_used;
      if (left_open == 0) {
        side[c] = 1;
      } else if (left_open == remaining) {
        side[c] = 0;
      } else {
        side[c] = 0;
        Rational as_left = expected(side);
        side[c] = 1;
        Rational as_right = expected(side);
        side[c] = as_right > as_left ? 1 : 0;
      }
      if (side[c] == 0) ++left_used;
    }
  }

  std::vector<std::size_t> cut;
  Rational cut_weight = 0;
  for (std::size_t i = 0; i < instance.edge_count(); ++i) {
    const Edge& e = instance.edge(i);
    if (side[coloring.class_of[e.u]] != side[coloring.class_of[e.v]]) {
      cut.push_back(i);
      cut_weight += e.budget;
    }
  }
  std::vector<int> side_of(instance.vertex_count());
  for (int v = 0; v < instance.vertex_count(); ++v) side_of[v] = side[coloring.class_of[v]];
  Solution partial = bipartite_2approx(instance.with_edges(cut), side_of);
  Solution solution = make_solution(instance, std::move(partial.prices), "kpartite");
  return KPartiteResult{std::move(solution), std::move(side), std::move(cut_weight), std::move(total)};
}

Solution kpartite_approx(const Instance& instance, const Coloring& coloring, KPartiteMode mode, std::uint64_t seed) {
  return kpartite_detailed(instance, coloring, mode, seed).solution;
}

Solution general_graph_approx(const Instance& instance, std::uint64_t seed) {
  const int n = instance.vertex_count();
  if (n < 2) return make_solution(instance, Prices(n, Rational(0)), "general");
  Coloring coloring{n, std::vector<int>(n)};
  std::iota(coloring.class_of.begin(), coloring.class_of.end(), 0);
  Solution solution = kpartite_approx(instance, coloring, KPartiteMode::randomized, seed);
  solution.algorithm = "general";
  return solution;
}

}  // namespace gvp
