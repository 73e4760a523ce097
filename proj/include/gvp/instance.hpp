#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gvp/rational.hpp"

namespace gvp {

/// A consumer that wants both endpoints and pays their price sum if it fits the budget.
struct Edge {
  int u = 0;
  int v = 0;
  Rational budget;
};

/// A consumer that wants a whole vertex set.
struct HyperEdge {
  std::vector<int> vertices;  // sorted, distinct
  Rational budget;
};

using Prices = std::vector<Rational>;

/// Graph vertex pricing instance. Vertices are 0..n-1; edges keep input order and
/// parallel edges stay distinct entries.
class Instance {
 public:
  Instance() = default;
  /// Throws Error(invalid_argument) on self-loops, out-of-range ids or negative budgets.
  Instance(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  /// Degree counting parallel edges.
  std::vector<int> degrees() const;
  int max_degree() const;
  Rational max_budget() const;
  bool has_integral_budgets() const;

  /// Same vertex set, only the edges whose indices are listed (in that order).
  Instance with_edges(std::span<const std::size_t> indices) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

class HyperInstance {
 public:
  HyperInstance() = default;
  /// Vertex lists are sorted and deduplicated; empty sets are rejected.
  HyperInstance(int vertex_count, std::vector<HyperEdge> hyperedges);

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return hyperedges_.size(); }
  const std::vector<HyperEdge>& hyperedges() const noexcept { return hyperedges_; }
  Rational max_budget() const;
  bool has_integral_budgets() const;
  std::size_t max_arity() const;

 private:
  int n_ = 0;
  std::vector<HyperEdge> hyperedges_;
};

/// Every consumer in a 2-uniform hypergraph, same order and budgets.
HyperInstance as_hyper(const Instance& instance);

struct Solution {
  Prices prices;
  Rational revenue;
  std::string algorithm;
};

Rational evaluate_revenue(const Instance& instance, std::span<const Rational> prices);
Rational evaluate_revenue_smp(const HyperInstance& hyper, std::span<const Rational> prices);

/// Evaluates `prices` on `instance` and packages the result.
Solution make_solution(const Instance& instance, Prices prices, std::string algorithm);
Solution make_solution_smp(const HyperInstance& hyper, Prices prices, std::string algorithm);

struct RoundingResult {
  Instance rounded;
  Rational scale;           // M
  std::int64_t price_cap;   // P, the largest rounded budget
  bool degenerate = false;  // every budget was zero
};

/// Budget rounding: M = eps * B_max / m and B'_e = floor(B_e / M).
/// An instance without a positive budget comes back unchanged with M = 1, P = 0, degenerate.
RoundingResult round_budgets(const Instance& instance, const Rational& epsilon);

/// B'_e = floor(B_e / scale) for an explicit positive scale.
RoundingResult round_budgets_at_scale(const Instance& instance, const Rational& scale);

/// p(v) = M * p'(v).
Prices lift_prices(const Solution& rounded_solution, const Rational& scale);

}  // namespace gvp
