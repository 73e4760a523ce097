#include <algorithm>
#include <functional>

#include "gvp/error.hpp"
#include "gvp/treewidth.hpp"

namespace gvp {

namespace {

// max_j b_j * j over budgets sorted in decreasing order: the revenue of one price
// charged to the j richest consumers of a group.
Rational best_single_price(std::vector<Rational> budgets) {
  std::sort(budgets.begin(), budgets.end(), std::greater<>());
  Rational best = 0;
  for (std::size_t j = 0; j < budgets.size(); ++j) {
    best = std::max(best, Rational(budgets[j] * static_cast<long>(j + 1)));
  }
  return best;
}

Rational smp_lower_bound(const HyperInstance& hyper) {
  std::vector<std::vector<Rational>> incident(hyper.vertex_count());
  for (const auto& h : hyper.hyperedges()) {
    for (int v : h.vertices) incident[v].push_back(h.budget);
  }
  Rational best = 0;
  for (auto& budgets : incident) best = std::max(best, best_single_price(std::move(budgets)));
  return best;
}

Rational snapped_scale(Rational scale, bool integral_budgets) {
  if (integral_budgets && scale <= 1) {
    Rational inverse = 1 / scale;
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), inverse.get_num_mpz_t(), inverse.get_den_mpz_t());
    scale = Rational(mpz_class(1), q);
  }
  return scale;
}

TreeDecomposition require_decomposition(const Instance& graph, const FptasOptions& options) {
  auto search = build_decomposition(graph, options.max_width, options.decomposition);
  if (!search.decomposition) {
    fail(ErrorKind::precondition, "no tree decomposition of width <= " + std::to_string(options.max_width) +
                                      (search.exhaustive ? " exists (treewidth is " : " found (best width ") +
                                      std::to_string(search.best_width) + ")");
  }
  return *search.decomposition;
}

}  // namespace

Rational fptas_precision(const Rational& epsilon, std::size_t arity) {
  if (epsilon <= 0) fail(ErrorKind::invalid_argument, "epsilon must be positive");
  return epsilon / (Rational(static_cast<long>(std::max<std::size_t>(arity, 1))) * (1 + epsilon));
}

Rational revenue_lower_bound(const Instance& instance) {
  std::vector<Rational> all;
  std::vector<std::vector<Rational>> incident(instance.vertex_count());
  for (const Edge& e : instance.edges()) {
    all.push_back(e.budget);
    incident[e.u].push_back(e.budget);
    incident[e.v].push_back(e.budget);
  }
  Rational best = best_single_price(std::move(all));  // every vertex priced at half the threshold
  for (auto& budgets : incident) best = std::max(best, best_single_price(std::move(budgets)));
  return best;
}

Rational fptas_scale(const Instance& instance, const Rational& epsilon) {
  Rational lower = revenue_lower_bound(instance);
  if (lower == 0) return Rational(1);
  Rational scale = fptas_precision(epsilon, 2) * lower / Rational(static_cast<long>(instance.edge_count()));
  return snapped_scale(scale, instance.has_integral_budgets());
}

Solution fptas(const Instance& instance, const Rational& epsilon, const TreeDecomposition& td, const DpOptions& dp) {
  Rational scale = fptas_scale(instance, epsilon);
  if (instance.max_budget() == 0) {
    return make_solution(instance, Prices(instance.vertex_count(), Rational(0)), "fptas");
  }
  RoundingResult rounding = round_budgets_at_scale(instance, scale);
  Solution rounded = dp_solve(rounding.rounded, td, rounding.price_cap, dp);
  return make_solution(instance, lift_prices(rounded, scale), "fptas");
}

Solution fptas(const Instance& instance, const Rational& epsilon, const FptasOptions& options) {
  if (epsilon <= 0) fail(ErrorKind::invalid_argument, "epsilon must be positive");
  if (instance.max_budget() == 0) {
    return make_solution(instance, Prices(instance.vertex_count(), Rational(0)), "fptas");
  }
  return fptas(instance, epsilon, require_decomposition(instance, options), options.dp);
}

Solution fptas_smp(const HyperInstance& hyper, const Rational& epsilon, const FptasOptions& options) {
  Rational precision = fptas_precision(epsilon, hyper.max_arity());
  Rational lower = smp_lower_bound(hyper);
  if (lower == 0) return make_solution_smp(hyper, Prices(hyper.vertex_count(), Rational(0)), "fptas");
  Rational scale = snapped_scale(precision * lower / Rational(static_cast<long>(hyper.edge_count())),
                                 hyper.has_integral_budgets());

  std::vector<HyperEdge> rounded;
  std::int64_t cap = 0;
  for (const auto& h : hyper.hyperedges()) {
    Rational b = floor_rational(h.budget / scale);
    cap = std::max(cap, to_int64(b));
    rounded.push_back({h.vertices, b});
  }
  HyperInstance rounded_hyper(hyper.vertex_count(), std::move(rounded));
  TreeDecomposition td = require_decomposition(primal_graph(hyper), options);
  Solution solution = dp_solve_smp(rounded_hyper, td, cap, options.dp);
  return make_solution_smp(hyper, lift_prices(solution, scale), "fptas");
}

}  // namespace gvp
