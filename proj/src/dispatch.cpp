#include "gvp/dispatch.hpp"

#include <algorithm>

#include "gvp/error.hpp"
#include "gvp/low_degree.hpp"
#include "gvp/lp.hpp"
#include "gvp/planar.hpp"
#include "gvp/sherali_adams.hpp"

namespace gvp {

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"auto",    "oracle",  "dp",       "fptas",   "ptas-planar", "degree2",
                                              "degree4", "kpartite", "general", "lp-opt", "sa"};
  return names;
}

bool is_known_algorithm(std::string_view name) {
  const auto& names = algorithm_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

// Integral prices above floor(max budget) never sell.
std::int64_t cap_for(const Rational& max_budget, const SolveRequest& request) {
  if (request.price_cap) {
    if (*request.price_cap < 0) fail(ErrorKind::invalid_argument, "price cap must be nonnegative");
    return *request.price_cap;
  }
  return to_int64(floor_rational(max_budget));
}

Rational epsilon_for(const SolveRequest& request) {
  Rational eps = request.epsilon.value_or(ratio(1, 10));
  if (eps <= 0) fail(ErrorKind::invalid_argument, "epsilon must be positive");
  return eps;
}

TreeDecomposition decomposition_for(const Instance& graph, const SolveRequest& request, int max_width) {
  if (request.decomposition) return *request.decomposition;
  DecompositionOptions options;
  options.width_limit = std::max(options.width_limit, max_width);
  if (max_width < 1) fail(ErrorKind::precondition, "decomposition width budget must be at least 1");
  auto search = build_decomposition(graph, max_width, options);
  if (!search.decomposition) {
    fail(ErrorKind::precondition, "no tree decomposition of width <= " + std::to_string(max_width) +
                                      (search.exhaustive ? " exists" : " found"));
  }
  return *search.decomposition;
}

Solution relabel(Solution solution, const std::string& label) {
  solution.algorithm = label;
  return solution;
}

}  // namespace

Solution solve(const Instance& instance, const SolveRequest& request) {
  const std::string& alg = request.algorithm;
  if (!is_known_algorithm(alg)) fail(ErrorKind::invalid_argument, "unknown algorithm '" + alg + "'");

  if (alg == "auto") {
    if (instance.max_degree() <= 2) return solve_degree2(instance);
    DecompositionOptions options;
    options.width_limit = std::max(options.width_limit, request.max_width);
    if (auto search = build_decomposition(instance, request.max_width, options); search.decomposition) {
      return fptas(instance, epsilon_for(request), *search.decomposition);
    }
    if (instance.max_degree() <= 4) return solve_degree4(instance);
    return general_graph_approx(instance, request.seed.value_or(0));
  }
  if (alg == "oracle") {
    return brute_force_opt(instance, cap_for(instance.max_budget(), request),
                           request.oracle_limit);
  }
  if (alg == "dp") {
    const auto cap = cap_for(instance.max_budget(), request);
    return dp_solve(instance, decomposition_for(instance, request, request.max_width), cap);
  }
  if (alg == "fptas") {
    return fptas(instance, epsilon_for(request), decomposition_for(instance, request, request.max_width));
  }
  if (alg == "ptas-planar") return ptas_planar(instance, epsilon_for(request));
  if (alg == "degree2") return solve_degree2(instance);
  if (alg == "degree4") return solve_degree4(instance);
  if (alg == "kpartite") {
    if (!request.coloring) fail(ErrorKind::precondition, "kpartite needs a coloring");
    auto mode = request.seed ? KPartiteMode::randomized : KPartiteMode::derandomized;
    return kpartite_approx(instance, *request.coloring, mode, request.seed.value_or(0));
  }
  if (alg == "general") return general_graph_approx(instance, request.seed.value_or(0));
  if (alg == "lp-opt") {
    LPSolution lp = lp_opt(instance);
    if (lp.status != LPStatus::optimal) fail(ErrorKind::internal, "LP_opt did not reach an optimum");
    return make_solution(instance, std::move(lp.assignment), "lp-opt");
  }
  // sa
  const auto cap = cap_for(instance.max_budget(), request);
  TreeDecomposition td = decomposition_for(instance, request, request.r - 1);
  LPRModel model = build_lp_r(instance, request.r, cap);
  LPSolution lp = solve_lp(model.program);
  if (lp.status != LPStatus::optimal) fail(ErrorKind::internal, "relaxation did not reach an optimum");
  Solution rounded = request.seed ? sa_round(instance, td, model, lp.assignment, *request.seed)
                                  : sa_round_deterministic(instance, td, model, lp.assignment);
  return relabel(std::move(rounded), "sa");
}

Solution solve(const HyperInstance& hyper, const SolveRequest& request) {
  const std::string& alg = request.algorithm;
  if (!is_known_algorithm(alg)) fail(ErrorKind::invalid_argument, "unknown algorithm '" + alg + "'");
  if (alg == "oracle") {
    return brute_force_opt_smp(hyper, cap_for(hyper.max_budget(), request),
                               request.oracle_limit);
  }
  if (alg == "dp") {
    const auto cap = cap_for(hyper.max_budget(), request);
    return dp_solve_smp(hyper, decomposition_for(primal_graph(hyper), request, request.max_width), cap);
  }
  if (alg == "auto" || alg == "fptas") {
    FptasOptions options;
    options.max_width = request.max_width;
    options.decomposition.width_limit = std::max(options.decomposition.width_limit, request.max_width);
    return fptas_smp(hyper, epsilon_for(request), options);
  }
  fail(ErrorKind::precondition, "algorithm '" + alg + "' does not accept hypergraph instances");
}

}  // namespace gvp
