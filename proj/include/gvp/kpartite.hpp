#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gvp/instance.hpp"

namespace gvp {

struct Coloring {
  int k = 0;
  std::vector<int> class_of;
};

struct ColoringCheck {
  bool ok = true;
  long edge = -1;  // first monochromatic edge, if any
  std::string witness;
};

/// Checks dimensions, class ids and that no edge is monochromatic.
ColoringCheck validate_coloring(const Instance& instance, const Coloring& coloring);

/// side_of[v] is 0 (left) or 1 (right); every edge must cross. Each side in turn is
/// priced 0 while every vertex of the other side takes the incident budget p that
/// maximises p * #{incident e : B_e >= p} (smallest on ties). The better side wins.
Solution bipartite_2approx(const Instance& instance, const std::vector<int>& side_of);

/// Probability that a balanced bipartition of k classes separates two fixed classes:
/// k / (2(k-1)) for even k, (k+1) / (2k) for odd k.
Rational cut_probability(int k);

enum class KPartiteMode { randomized, derandomized };

struct KPartiteResult {
  Solution solution;
  std::vector<int> class_side;  // 0 = left, 1 = right, per class
  Rational cut_weight;          // total budget of edges crossing the bipartition
  Rational total_weight;
};

/// Splits the classes into sides of sizes ceil(k/2) and floor(k/2), keeps the cut
/// edges and runs bipartite_2approx on them. Randomized mode shuffles the classes
/// with the seed; derandomized mode places classes in order, each on the side with
/// the larger conditional expected cut weight (ties go left).
KPartiteResult kpartite_detailed(const Instance& instance, const Coloring& coloring, KPartiteMode mode,
                                 std::uint64_t seed = 0);
Solution kpartite_approx(const Instance& instance, const Coloring& coloring, KPartiteMode mode,
                         std::uint64_t seed = 0);

/// Every vertex is its own class, randomized mode.
Solution general_graph_approx(const Instance& instance, std::uint64_t seed);

}  // namespace gvp
