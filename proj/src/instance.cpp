#include "gvp/instance.hpp"

#include <algorithm>

#include "gvp/error.hpp"

namespace gvp {

Instance::Instance(int vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) fail(ErrorKind::invalid_argument, "negative vertex count");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
      fail(ErrorKind::invalid_argument, "edge " + std::to_string(i) + " has an endpoint outside 0.." +
                                            std::to_string(n_ - 1));
    }
    if (e.u == e.v) fail(ErrorKind::invalid_argument, "edge " + std::to_string(i) + " is a self-loop");
    if (e.budget < 0) fail(ErrorKind::invalid_argument, "edge " + std::to_string(i) + " has a negative budget");
  }
}

std::vector<int> Instance::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

int Instance::max_degree() const {
  auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

Rational Instance::max_budget() const {
  Rational best = 0;
  for (const Edge& e : edges_) best = std::max(best, e.budget);
  return best;
}

bool Instance::has_integral_budgets() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return is_integer(e.budget); });
}

Instance Instance::with_edges(std::span<const std::size_t> indices) const {
  std::vector<Edge> picked;
  picked.reserve(indices.size());
  for (auto i : indices) picked.push_back(edges_.at(i));
  return Instance(n_, std::move(picked));
}

HyperInstance::HyperInstance(int vertex_count, std::vector<HyperEdge> hyperedges)
    : n_(vertex_count), hyperedges_(std::move(hyperedges)) {
  if (n_ < 0) fail(ErrorKind::invalid_argument, "negative vertex count");
  for (std::size_t i = 0; i < hyperedges_.size(); ++i) {
    auto& h = hyperedges_[i];
    std::sort(h.vertices.begin(), h.vertices.end());
    h.vertices.erase(std::unique(h.vertices.begin(), h.vertices.end()), h.vertices.end());
    if (h.vertices.empty()) fail(ErrorKind::invalid_argument, "hyperedge " + std::to_string(i) + " is empty");
    if (h.vertices.front() < 0 || h.vertices.back() >= n_) {
      fail(ErrorKind::invalid_argument, "hyperedge " + std::to_string(i) + " has a vertex out of range");
    }
    if (h.budget < 0) fail(ErrorKind::invalid_argument, "hyperedge " + std::to_string(i) + " has a negative budget");
  }
}

Rational HyperInstance::max_budget() const {
  Rational best = 0;
  for (const auto& h : hyperedges_) best = std::max(best, h.budget);
  return best;
}

bool HyperInstance::has_integral_budgets() const {
  return std::all_of(hyperedges_.begin(), hyperedges_.end(), [](const HyperEdge& h) { return is_integer(h.budget); });
}

std::size_t HyperInstance::max_arity() const {
  std::size_t best = 0;
  for (const auto& h : hyperedges_) best = std::max(best, h.vertices.size());
  return best;
}

HyperInstance as_hyper(const Instance& instance) {
  std::vector<HyperEdge> hs;
  hs.reserve(instance.edge_count());
  for (const Edge& e : instance.edges()) hs.push_back({{e.u, e.v}, e.budget});
  return HyperInstance(instance.vertex_count(), std::move(hs));
}

namespace {

void check_prices(int n, std::span<const Rational> prices) {
  if (static_cast<int>(prices.size()) != n) {
    fail(ErrorKind::invalid_argument, "price vector has length " + std::to_string(prices.size()) + ", expected " +
                                          std::to_string(n));
  }
  for (std::size_t v = 0; v < prices.size(); ++v) {
    if (prices[v] < 0) fail(ErrorKind::invalid_argument, "negative price on vertex " + std::to_string(v));
  }
}

}  // namespace

Rational evaluate_revenue(const Instance& instance, std::span<const Rational> prices) {
  check_prices(instance.vertex_count(), prices);
  Rational total = 0;
  Rational sum;
  for (const Edge& e : instance.edges()) {
    sum = prices[e.u] + prices[e.v];
    if (sum <= e.budget) total += sum;
  }
  return total;
}

Rational evaluate_revenue_smp(const HyperInstance& hyper, std::span<const Rational> prices) {
  check_prices(hyper.vertex_count(), prices);
  Rational total = 0;
  for (const auto& h : hyper.hyperedges()) {
    Rational sum = 0;
    for (int v : h.vertices) sum += prices[v];
    if (sum <= h.budget) total += sum;
  }
  return total;
}

Solution make_solution(const Instance& instance, Prices prices, std::string algorithm) {
  Rational revenue = evaluate_revenue(instance, prices);
  return Solution{std::move(prices), std::move(revenue), std::move(algorithm)};
}

Solution make_solution_smp(const HyperInstance& hyper, Prices prices, std::string algorithm) {
  Rational revenue = evaluate_revenue_smp(hyper, prices);
  return Solution{std::move(prices), std::move(revenue), std::move(algorithm)};
}

RoundingResult round_budgets_at_scale(const Instance& instance, const Rational& scale) {
  if (scale <= 0) fail(ErrorKind::invalid_argument, "rounding scale must be positive");
  std::vector<Edge> rounded;
  rounded.reserve(instance.edge_count());
  std::int64_t cap = 0;
  for (const Edge& e : instance.edges()) {
    Rational b = floor_rational(e.budget / scale);
    cap = std::max(cap, to_int64(b));
    rounded.push_back({e.u, e.v, b});
  }
  return RoundingResult{Instance(instance.vertex_count(), std::move(rounded)), scale, cap, false};
}

RoundingResult round_budgets(const Instance& instance, const Rational& epsilon) {
  if (epsilon <= 0 || epsilon > 1) fail(ErrorKind::invalid_argument, "epsilon must lie in (0, 1]");
  Rational bmax = instance.max_budget();
  if (bmax == 0) return RoundingResult{instance, Rational(1), 0, true};
  Rational scale = epsilon * bmax / Rational(static_cast<long>(instance.edge_count()));
  return round_budgets_at_scale(instance, scale);
}

Prices lift_prices(const Solution& rounded_solution, const Rational& scale) {
  Prices lifted;
  lifted.reserve(rounded_solution.prices.size());
  for (const Rational& p : rounded_solution.prices) lifted.push_back(scale * p);
  return lifted;
}

}  // namespace gvp
