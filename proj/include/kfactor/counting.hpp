#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kfactor/factor_table.hpp"
#include "kfactor/prime_table.hpp"

namespace kfactor {

/// Number of n <= x whose factor count equals k: N_k(x) in big-omega mode,
/// pi_k(x) in little-omega mode. The table must cover x.
std::uint64_t count_exact_sieve(const FactorCountTable& table, std::uint64_t x,
                                int k, CountMode mode);

/// One histogram pass: entry [k-1] equals count_exact_sieve(x, k, mode)
/// for k = 1..k_max.
std::vector<std::uint64_t> counts_by_k(const FactorCountTable& table,
                                       std::uint64_t x, int k_max,
                                       CountMode mode);

/// N_k(x) by depth-first enumeration of non-decreasing prime tuples
/// q_1 <= ... <= q_k with product <= x; the last factor is counted in one
/// step as pi(x / prod) - rank(q_{k-1}) + 1. Big-omega counts only.
/// Needs primes up to x / 2^(k-1); throws ResourceError naming that limit
/// when the table is too small.
std::uint64_t count_exact_recursive(const PrimeTable& primes, std::uint64_t x,
                                    int k);

/// Required prime-table limit for count_exact_recursive(x, k).
std::uint64_t recursive_prime_limit(std::uint64_t x, int k);

/// Counts of one k along an increasing x grid.
struct CountSeries {
  CountMode mode = CountMode::kBigOmega;
  int k = 1;
  std::vector<std::uint64_t> x_values;
  std::vector<std::uint64_t> counts;
};

/// Evaluates N_k over a grid with the recursive engine (big-omega only).
CountSeries count_series(const PrimeTable& primes,
                         std::span<const std::uint64_t> x_values, int k);

}  // namespace kfactor
