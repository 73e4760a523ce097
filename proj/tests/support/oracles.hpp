#pragma once

#include <span>
#include <string>
#include <vector>

#include "gvp/instance.hpp"
#include "gvp/sherali_adams.hpp"

namespace gvp::testing {

// Best revenue over real prices, by brute force over paying edge sets: for every
// subset S of edges solve the LP that makes every edge of S pay, keep the best. Small m only.
Rational fractional_opt_subsets(const Instance& instance);

// Best revenue over real prices for integral budgets. Optimal vertex prices are
// half-integral, so this is the integral oracle on doubled budgets, halved.
Rational fractional_opt_half_integral(const Instance& instance);

// Share of balanced bipartitions of k classes (left side ceil(k/2)) that separate
// classes 0 and 1, by counting subsets.
Rational cut_probability_by_count(int k);

// Empty when every y(S, .) marginalizes onto y(S - v, .); otherwise a description.
std::string marginal_violation(const LPRModel& model, std::span<const Rational> y);

// All labelled simple graphs on n vertices, in bitmask order of the pair list.
std::vector<Instance> labelled_graphs(int n);

}  // namespace gvp::testing
