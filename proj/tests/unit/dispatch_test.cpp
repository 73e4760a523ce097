#include <doctest.h>

#include "gvp/dispatch.hpp"
#include "gvp/generators.hpp"
#include "helpers.hpp"

using namespace gvp;
using namespace gvp::test;

namespace {

Solution run(const Instance& inst, const std::string& alg) {
  SolveRequest request;
  request.algorithm = alg;
  return solve(inst, request);
}

Instance unit(const Instance& topology) { return with_budgets(topology, std::vector<Rational>{Rational(1)}); }

}  // namespace

TEST_CASE("auto picks by degree and width") {
  CHECK(run(unit(path_graph(4)), "auto").algorithm == "degree2");
  Solution star = run(graph(4, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}}), "auto");
  CHECK(star.algorithm == "fptas");
  CHECK(star.revenue == 6);
  CHECK(run(unit(complete_graph(5)), "auto").algorithm == "fptas");  // treewidth 4
  CHECK(run(unit(complete_graph(7)), "auto").algorithm == "general");
}

TEST_CASE("every algorithm name dispatches") {
  Instance tri = graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  SolveRequest request;
  request.coloring = Coloring{3, {0, 1, 2}};
  request.r = 3;
  for (const auto& name : algorithm_names()) {
    request.algorithm = name;
    CAPTURE(name);
    Solution s = solve(tri, request);
    CHECK(evaluate_revenue(tri, s.prices) == s.revenue);
    if (name != "auto") CHECK(s.algorithm == name);
  }
  CHECK(run(tri, "lp-opt").revenue == 3);
  CHECK(run(tri, "oracle").revenue == 2);
}

TEST_CASE("dispatch errors") {
  Instance tri = graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  CHECK_FALSE(is_known_algorithm("simplex"));
  CHECK(error_kind([&] { run(tri, "simplex"); }) == ErrorKind::invalid_argument);
  CHECK(error_kind([&] { run(tri, "kpartite"); }) == ErrorKind::precondition);
  CHECK(error_kind([&] { run(unit(complete_graph(6)), "degree4"); }) == ErrorKind::precondition);
  Instance half(2, std::vector<Edge>{{0, 1, q(1, 2)}});
  CHECK(run(half, "oracle").revenue == 0);  // integral prices cannot fit under 1/2

  SolveRequest sa;
  sa.algorithm = "sa";
  sa.r = 2;
  CHECK(error_kind([&] { solve(tri, sa); }) == ErrorKind::precondition);  // triangle needs r = 3
}

TEST_CASE("hypergraph dispatch") {
  HyperInstance h(3, {{{0, 1}, Rational(2)}, {{1, 2}, Rational(1)}});
  SolveRequest request;
  for (const char* alg : {"auto", "oracle", "dp", "fptas"}) {
    request.algorithm = alg;
    CHECK(solve(h, request).revenue == 3);
  }
  request.algorithm = "degree2";
  CHECK(error_kind([&] { solve(h, request); }) == ErrorKind::precondition);
}
