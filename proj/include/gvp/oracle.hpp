#pragma once

#include <cstdint>

#include "gvp/instance.hpp"

namespace gvp {

inline constexpr std::uint64_t kDefaultOracleLimit = 100'000'000;

/// Exact optimum over every integer price vector in {0..price_cap}^n.
/// Ties go to the lexicographically smallest vector.
/// Throws Error(limit_exceeded) when (price_cap + 1)^n exceeds `limit`.
Solution brute_force_opt(const Instance& instance, std::int64_t price_cap,
                         std::uint64_t limit = kDefaultOracleLimit);

Solution brute_force_opt_smp(const HyperInstance& hyper, std::int64_t price_cap,
                             std::uint64_t limit = kDefaultOracleLimit);

}  // namespace gvp
