#pragma once

#include <doctest.h>

#include <initializer_list>
#include <tuple>
#include <vector>

#include "gvp/error.hpp"
#include "gvp/instance.hpp"
#include "gvp/treewidth.hpp"

namespace gvp::test {

inline Rational q(long num, long den = 1) { return ratio(num, den); }

inline Instance graph(int n, std::initializer_list<std::tuple<int, int, long>> edges) {
  std::vector<Edge> out;
  for (auto [u, v, b] : edges) out.push_back({u, v, Rational(b)});
  return Instance(n, std::move(out));
}

inline Prices prices(std::initializer_list<long> values) {
  Prices out;
  for (long v : values) out.emplace_back(v);
  return out;
}

inline TreeDecomposition decomposition(std::vector<std::vector<int>> bags, std::vector<int> parent) {
  TreeDecomposition td;
  td.bags = std::move(bags);
  td.parent = std::move(parent);
  td.width = td.measured_width();
  return td;
}

template <class F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::internal;
}

}  // namespace gvp::test
