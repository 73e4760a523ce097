#include <doctest.h>

#include <functional>
#include <optional>

#include "gvp/generators.hpp"
#include "gvp/lp.hpp"
#include "gvp/oracle.hpp"
#include "gvp/random.hpp"
#include "helpers.hpp"

using namespace gvp;
using namespace gvp::test;

namespace {

LinearConstraint row(std::vector<Rational> c, Relation rel, Rational rhs) { return {std::move(c), rel, std::move(rhs)}; }

void check_solution(const LPProgram& program, const LPSolution& s) {
  REQUIRE(s.status == LPStatus::optimal);
  CHECK(s.value == s.dual_value);
  auto cert = verify_certificate(program, s);
  CHECK_MESSAGE(cert.ok, cert.reason);
  Rational value = 0;
  for (std::size_t j = 0; j < program.variable_count(); ++j) value += program.objective[j] * s.assignment[j];
  CHECK(value == s.value);
}

// Solves A x = b exactly; empty when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Best objective over the vertices of a bounded polytope {x : rows, 0 <= x <= upper}.
std::optional<Rational> vertex_enumeration(const LPProgram& p, const Rational& upper) {
  const std::size_t n = p.variable_count();
  std::vector<std::pair<std::vector<Rational>, Rational>> planes;  // a x = b candidates
  for (const auto& c : p.constraints) planes.emplace_back(c.coefficients, c.rhs);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> unit(n, Rational(0));
    unit[j] = 1;
    planes.emplace_back(unit, Rational(0));
    planes.emplace_back(unit, upper);
  }
  auto feasible = [&](const std::vector<Rational>& x) {
    for (std::size_t j = 0; j < n; ++j) {
      if (x[j] < 0 || x[j] > upper) return false;
    }
    for (const auto& c : p.constraints) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += c.coefficients[j] * x[j];
      if (c.relation == Relation::less_equal && lhs > c.rhs) return false;
      if (c.relation == Relation::greater_equal && lhs < c.rhs) return false;
      if (c.relation == Relation::equal && lhs != c.rhs) return false;
    }
    return true;
  };
  std::optional<Rational> best;
  const std::size_t k = planes.size();
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t depth, std::size_t from) {
    if (depth == n) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (auto i : pick) {
        a.push_back(planes[i].first);
        b.push_back(planes[i].second);
      }
      auto x = solve_square(a, b);
      if (!x || !feasible(*x)) return;
      Rational v = 0;
      for (std::size_t j = 0; j < n; ++j) v += p.objective[j] * (*x)[j];
      if (!best || v > *best) best = v;
      return;
    }
    for (std::size_t i = from; i < k; ++i) {
      pick[depth] = i;
      choose(depth + 1, i + 1);
    }
  };
  choose(0, 0);
  return best;
}

}  // namespace

TEST_CASE("solve_lp examples") {
  LPProgram one{{Rational(1)}, {row({Rational(1)}, Relation::less_equal, 3)}, {}};
  LPSolution a = solve_lp(one);
  check_solution(one, a);
  CHECK(a.value == 3);

  LPProgram face{{Rational(1), Rational(1)}, {row({Rational(1), Rational(1)}, Relation::less_equal, 1)}, {}};
  LPSolution b = solve_lp(face);
  check_solution(face, b);
  CHECK(b.value == 1);

  LPProgram path{{Rational(1), Rational(2), Rational(1)},
                 {row({Rational(1), Rational(1), Rational(0)}, Relation::less_equal, 1),
                  row({Rational(0), Rational(1), Rational(1)}, Relation::less_equal, 1)},
                 {}};
  LPSolution c = solve_lp(path);
  check_solution(path, c);
  CHECK(c.value == 2);
}

TEST_CASE("solve_lp reports infeasible and unbounded programs") {
  LPProgram unbounded{{Rational(1)}, {}, {}};
  CHECK(solve_lp(unbounded).status == LPStatus::unbounded);
  LPProgram infeasible{{Rational(1)},
                       {row({Rational(1)}, Relation::greater_equal, 2), row({Rational(1)}, Relation::less_equal, 1)},
                       {}};
  CHECK(solve_lp(infeasible).status == LPStatus::infeasible);
  CHECK(std::string(to_string(LPStatus::infeasible)) == "infeasible");
}

TEST_CASE("solve_lp handles equalities, >= rows and variable bounds") {
  // max -x + y  s.t. x + y = 4, x >= 1 (row), 0 <= y <= 2 (bound), 1/2 <= x
  LPProgram p{{Rational(-1), Rational(1)},
              {row({Rational(1), Rational(1)}, Relation::equal, 4), row({Rational(1), Rational(0)}, Relation::greater_equal, 1)},
              {{q(1, 2), std::nullopt}, {Rational(0), Rational(2)}}};
  LPSolution s = solve_lp(p);
  check_solution(p, s);
  CHECK(s.value == 0);
  CHECK(s.assignment[0] == 2);
  CHECK(s.assignment[1] == 2);
}

TEST_CASE("Bland's rule terminates on a cycling example") {
  LPProgram beale{{q(3, 4), Rational(-150), q(1, 50), Rational(-6)},
                  {row({q(1, 4), Rational(-60), q(-1, 25), Rational(9)}, Relation::less_equal, 0),
                   row({q(1, 2), Rational(-90), q(-1, 50), Rational(3)}, Relation::less_equal, 0),
                   row({Rational(0), Rational(0), Rational(1), Rational(0)}, Relation::less_equal, 1)},
                  {}};
  LPSolution s = solve_lp(beale);
  check_solution(beale, s);
  CHECK(s.value == q(1, 20));
}

TEST_CASE("solve_lp rejects malformed programs") {
  LPProgram short_row{{Rational(1), Rational(1)}, {row({Rational(1)}, Relation::less_equal, 1)}, {}};
  CHECK(error_kind([&] { solve_lp(short_row); }) == ErrorKind::invalid_argument);
  LPProgram negative_lower{{Rational(1)}, {}, {{Rational(-1), Rational(1)}}};
  CHECK(error_kind([&] { solve_lp(negative_lower); }) == ErrorKind::invalid_argument);
}

TEST_CASE("solve_lp matches vertex enumeration on random bounded programs") {
  Rng rng(17);
  int compared = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng.below(3);
    const std::size_t m = 1 + rng.below(3);
    LPProgram p;
    for (std::size_t j = 0; j < n; ++j) p.objective.emplace_back(rng.between(-3, 4));
    for (std::size_t i = 0; i < m; ++i) {
      LinearConstraint c;
      for (std::size_t j = 0; j < n; ++j) c.coefficients.emplace_back(rng.between(-3, 3));
      c.relation = static_cast<Relation>(rng.below(3));
      c.rhs = rng.between(-2, 6);
      p.constraints.push_back(c);
    }
    const Rational upper = 5;
    p.bounds.assign(n, VariableBound{Rational(0), upper});
    auto expected = vertex_enumeration(p, upper);
    LPSolution s = solve_lp(p);
    CAPTURE(trial);
    if (!expected) {
      CHECK(s.status == LPStatus::infeasible);
    } else {
      ++compared;
      check_solution(p, s);
      CHECK(s.value == *expected);
    }
  }
  CHECK(compared > 30);
}

TEST_CASE("lp_opt examples") {
  CHECK(lp_opt(graph(2, {{0, 1, 7}})).value == 7);
  LPSolution tri = lp_opt(graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}));
  CHECK(tri.value == 3);
  CHECK(tri.assignment == std::vector<Rational>{q(1, 2), q(1, 2), q(1, 2)});
  CHECK(lp_opt(graph(4, {{0, 1, 3}, {1, 2, 1}, {2, 3, 3}})).value == 7);
}

TEST_CASE("lp_opt bounds every all-paying integral assignment") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Rng rng(50 + seed);
    Instance inst = with_random_budgets(random_graph(4, rng, 1, 2), 0, 3, rng);
    LPProgram program = lp_opt_program(inst);
    LPSolution lp = solve_lp(program);
    check_solution(program, lp);
    Rational best = -1;
    std::vector<long> p(4, 0);
    for (int code = 0; code < 256; ++code) {
      int c = code;
      for (auto& x : p) {
        x = c % 4;
        c /= 4;
      }
      bool all_pay = true;
      for (const Edge& e : inst.edges()) {
        if (Rational(p[e.u] + p[e.v]) > e.budget) all_pay = false;
      }
      if (!all_pay) continue;
      Prices pr(p.begin(), p.end());
      best = std::max(best, evaluate_revenue(inst, pr));
    }
    CHECK(lp.value >= best);
  }
}

TEST_CASE("LpAuditScope sees every optimal solve") {
  int seen = 0;
  {
    LpAuditScope scope([&](const LPProgram&, const LPSolution& s) {
      ++seen;
      CHECK(s.status == LPStatus::optimal);
    });
    lp_opt(graph(2, {{0, 1, 1}}));
    lp_opt(graph(3, {{0, 1, 1}, {1, 2, 1}}));
  }
  lp_opt(graph(2, {{0, 1, 1}}));
  CHECK(seen == 2);
}
