#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gvp/lp.hpp"
#include "gvp/treewidth.hpp"

namespace gvp {

/// y(S, alpha): a sorted vertex set of size <= r with one price in 0..P per vertex.
struct AssignmentKey {
  std::vector<int> set;
  std::vector<std::int64_t> alpha;
};

struct SaOptions {
  std::size_t variable_limit = 4000;
};

/// Level-r relaxation. Columns of one set S are contiguous; alpha is read as a
/// mixed-radix number with the first vertex least significant.
struct LPRModel {
  int r = 0;
  std::int64_t price_cap = 0;
  int vertex_count = 0;
  std::map<std::vector<int>, std::size_t> set_offset;
  LPProgram program;

  std::size_t column(const AssignmentKey& key) const;
  std::size_t column(const std::vector<int>& set, std::span<const std::int64_t> alpha) const;
  std::size_t block_size(std::size_t set_size) const;
  AssignmentKey key_of(std::size_t column) const;
};

/// y(empty) = 1, Sum_i y(S + t, alpha + (t -> i)) = y(S, alpha) for every |S| < r
/// and t outside S, 0 <= y <= 1. The objective pays alpha(u) + alpha(v) on every
/// edge whose budget it fits.
LPRModel build_lp_r(const Instance& instance, int r, std::int64_t price_cap, const SaOptions& options = {});

/// Base relaxation with x(v, i) and, for each distinct edge pair, z(u, v, i, j).
struct BaseLPModel {
  int vertex_count = 0;
  std::int64_t price_cap = 0;
  std::vector<std::pair<int, int>> pairs;  // z blocks in this order
  LPProgram program;

  std::size_t x_column(int v, std::int64_t i) const;
  std::size_t z_column(std::size_t pair, std::int64_t i, std::int64_t j) const;
};

BaseLPModel build_base_lp(const Instance& instance, std::int64_t price_cap, const SaOptions& options = {});

/// Integral solution of the model: y(S, alpha) = 1 iff alpha agrees with the prices.
std::vector<Rational> point_assignment(const LPRModel& model, std::span<const std::int64_t> prices);

/// Top-down sampling: the root bag from y(V_root, .), then each child's new vertices
/// conditioned on the vertices it shares with its parent. Every bag must have at most r vertices.
Solution sa_round(const Instance& instance, const TreeDecomposition& td, const LPRModel& model,
                  std::span<const Rational> y, std::uint64_t seed);
/// Same walk, always taking the first assignment (in column order) with positive mass.
Solution sa_round_deterministic(const Instance& instance, const TreeDecomposition& td, const LPRModel& model,
                                std::span<const Rational> y);

struct GapRow {
  int r = 0;
  Rational lp_value;
  Rational integral_opt;
  std::optional<Rational> gap;  // absent when the integral optimum is 0
};

std::vector<GapRow> gap_report(const Instance& instance, const std::vector<int>& r_values, std::int64_t price_cap,
                               const SaOptions& options = {});

}  // namespace gvp
