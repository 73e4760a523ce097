#include <doctest.h>

#include "gvp/io.hpp"
#include "helpers.hpp"

using namespace gvp;
using namespace gvp::test;

TEST_CASE("instance JSON round-trips with canonical budgets") {
  Instance inst = parse_instance(R"({"n": 3, "edges": [[0, 1, "2/4"], [1, 2, "1.25"], [0, 2, 3]]})");
  CHECK(inst.vertex_count() == 3);
  CHECK(inst.edge(0).budget == q(1, 2));
  CHECK(inst.edge(1).budget == q(5, 4));
  CHECK(inst.edge(2).budget == 3);
  CHECK(to_json(inst) == R"({"edges":[[0,1,"1/2"],[1,2,"5/4"],[0,2,"3"]],"n":3})");
  CHECK(to_json(parse_instance(to_json(inst))) == to_json(inst));
}

TEST_CASE("hypergraph JSON") {
  HyperInstance h = parse_hyper_instance(R"({"n": 4, "hyperedges": [[[2, 0, 1], "3"], [[3], "1/2"]]})");
  CHECK(h.hyperedges()[0].vertices == std::vector<int>{0, 1, 2});
  CHECK(h.hyperedges()[1].budget == q(1, 2));
  CHECK(std::holds_alternative<HyperInstance>(parse_any_instance(to_json(h))));
  CHECK(std::holds_alternative<Instance>(parse_any_instance(R"({"n": 1, "edges": []})")));
}

TEST_CASE("malformed instance JSON is a parse error") {
  for (const char* text : {"", "{", "[]", R"({"edges": []})", R"({"n": 2})", R"({"n": 2, "edges": [[0, 1]]})",
                           R"({"n": 2, "edges": [[0, 1, 1.5]]})", R"({"n": 2, "edges": [[0, 1, "x"]]})",
                           R"({"n": "2", "edges": []})", R"({"n": 2, "edges": [], "hyperedges": []})"}) {
    CAPTURE(text);
    CHECK(error_kind([&] { parse_any_instance(text); }) == ErrorKind::parse);
  }
  CHECK(error_kind([] { parse_instance(R"({"n": 2, "edges": [[0, 5, "1"]]})"); }) == ErrorKind::invalid_argument);
  CHECK(error_kind([] { parse_instance(R"({"n": 2, "edges": [[0, 1, "-1"]]})"); }) == ErrorKind::invalid_argument);
}

TEST_CASE("decomposition, coloring and price JSON") {
  TreeDecomposition td = parse_decomposition(R"({"bags": [[1, 0], [2, 1]], "parents": [null, 0]})");
  CHECK(td.bags[0] == std::vector<int>{0, 1});
  CHECK(td.parent == std::vector<int>{-1, 0});
  CHECK(td.width == 1);
  CHECK(parse_decomposition(to_json(td)).parent == td.parent);
  CHECK(error_kind([] { parse_decomposition(R"({"bags": [[0]]})"); }) == ErrorKind::parse);

  Coloring c = parse_coloring(R"({"k": 3, "class_of": [0, 2, 1]})");
  CHECK(c.k == 3);
  CHECK(c.class_of == std::vector<int>{0, 2, 1});
  CHECK(to_json(c) == R"({"class_of":[0,2,1],"k":3})");

  CHECK(parse_prices(R"(["1/2", 0, "3"])") == std::vector<Rational>{q(1, 2), Rational(0), Rational(3)});
  CHECK(error_kind([] { parse_prices(R"({"a": 1})"); }) == ErrorKind::parse);

  Solution s{std::vector<Rational>{q(1, 2), Rational(1)}, q(3, 2), "dp"};
  CHECK(to_json(s) == R"({"algorithm":"dp","prices":["1/2","1"],"revenue":"3/2"})");
}
