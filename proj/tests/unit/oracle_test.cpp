#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "gvp/generators.hpp"
#include "gvp/oracle.hpp"
#include "gvp/random.hpp"
#include "helpers.hpp"

using namespace gvp;
using namespace gvp::test;

TEST_CASE("oracle examples") {
  Solution edge = brute_force_opt(graph(2, {{0, 1, 5}}), 5);
  CHECK(edge.revenue == 5);
  CHECK(edge.prices == prices({0, 5}));  // lexicographically smallest optimum

  Solution path = brute_force_opt(graph(3, {{0, 1, 1}, {1, 2, 1}}), 1);
  CHECK(path.revenue == 2);
  CHECK(path.prices == prices({0, 1, 0}));

  CHECK(brute_force_opt(graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}), 1).revenue == 2);
  CHECK(brute_force_opt(graph(3, {}), 4).revenue == 0);
}

TEST_CASE("hypergraph oracle examples") {
  CHECK(brute_force_opt_smp(HyperInstance(3, {{{0, 1, 2}, Rational(6)}}), 6).revenue == 6);
  CHECK(brute_force_opt_smp(HyperInstance(3, {}), 3).revenue == 0);
  Solution s = brute_force_opt_smp(HyperInstance(3, {{{0, 1}, Rational(2)}, {{1, 2}, Rational(1)}}), 2);
  CHECK(s.revenue == 3);
  CHECK(s.prices == prices({1, 1, 0}));
}

TEST_CASE("oracle enumeration limit is an error") {
  Rng rng(1);
  Instance big = with_random_budgets(path_graph(12), 5, 5, rng);
  CHECK(error_kind([&] { brute_force_opt(big, 5, 1000); }) == ErrorKind::limit_exceeded);
  CHECK(error_kind([&] { brute_force_opt(big, -1); }) == ErrorKind::invalid_argument);
}

TEST_CASE("oracle is invariant under relabeling and edge order") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Rng rng(seed);
    const int n = 2 + static_cast<int>(rng.below(4));
    Instance inst = with_random_budgets(random_graph(n, rng, 1, 2), 1, 4, rng);
    const Rational base = brute_force_opt(inst, 4).revenue;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    std::vector<Edge> relabeled;
    for (const Edge& e : inst.edges()) relabeled.push_back({perm[e.u], perm[e.v], e.budget});
    rng.shuffle(relabeled);
    CHECK(brute_force_opt(Instance(n, relabeled), 4).revenue == base);
  }
}

TEST_CASE("oracle is monotone in the cap and flat above the largest budget") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Rng rng(100 + seed);
    Instance inst = with_random_budgets(random_graph(4, rng, 2, 3), 1, 4, rng);
    Rational previous = -1;
    for (std::int64_t cap = 0; cap <= 6; ++cap) {
      Rational value = brute_force_opt(inst, cap).revenue;
      CHECK(value >= previous);
      if (inst.edge_count() > 0 && cap > to_int64(inst.max_budget())) CHECK(value == previous);
      previous = value;
    }
  }
}
