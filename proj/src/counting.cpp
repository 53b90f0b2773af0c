#include "kfactor/counting.hpp"

#include <algorithm>

#include "kfactor/errors.hpp"

namespace kfactor {

namespace {

void check_count_args(std::uint64_t x, int k) {
  if (k <= 0) throw DomainError("k must be positive");
  if (x < 1) throw DomainError("x must be >= 1");
}

// 2^k > x, so no n <= x has k prime factors.
bool vanishes(std::uint64_t x, int k) {
  return k >= 64 || (x >> k) == 0;
}

// prod * q^e <= bound without overflow.
bool power_fits(std::uint64_t prod, std::uint64_t q, int e,
                std::uint64_t bound) {
  std::uint64_t acc = prod;
  for (int i = 0; i < e; ++i) {
    if (acc > bound / q) return false;
    acc *= q;
  }
  return true;
}

struct TupleCounter {
  const PrimeTable& primes;
  std::uint64_t x;
  int k;
  std::uint64_t total = 0;

  // Chooses q_depth (0-based index idx into the prime list, non-decreasing),
  // with prod the product of the factors already fixed.
  void descend(std::size_t first_idx, std::uint64_t prod, int depth) {
    const auto plist = primes.primes();
    for (std::size_t idx = first_idx; idx < plist.size(); ++idx) {
      const std::uint64_t q = plist[idx];
      // All k - depth + 1 remaining slots hold primes >= q.
      if (!power_fits(prod, q, k - depth + 1, x)) break;
      if (depth == k - 1) {
        // q_{k-1} = q; q_k ranges over primes in [q, x / (prod * q)].
        total += primes.pi(x / (prod * q)) - idx;
      } else {
        descend(idx, prod * q, depth + 1);
      }
    }
  }
};

}  // namespace

std::uint64_t recursive_prime_limit(std::uint64_t x, int k) {
  if (k >= 64) return 0;
  return x >> (k - 1);
}

std::uint64_t count_exact_sieve(const FactorCountTable& table, std::uint64_t x,
                                int k, CountMode mode) {
  check_count_args(x, k);
  if (x > table.limit())
    throw ResourceError("x beyond factor table limit", x);
  if (k > 255) return 0;
  const auto values = mode == CountMode::kBigOmega
                          ? table.big_omega_values()
                          : table.little_omega_values();
  const auto target = static_cast<std::uint8_t>(k);
  std::uint64_t count = 0;
  for (std::uint64_t n = 2; n <= x; ++n)
    if (values[n] == target) ++count;
  return count;
}

std::vector<std::uint64_t> counts_by_k(const FactorCountTable& table,
                                       std::uint64_t x, int k_max,
                                       CountMode mode) {
  check_count_args(x, k_max);
  if (x > table.limit())
    throw ResourceError("x beyond factor table limit", x);
  const auto values = mode == CountMode::kBigOmega
                          ? table.big_omega_values()
                          : table.little_omega_values();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(k_max), 0);
  for (std::uint64_t n = 2; n <= x; ++n) {
    const std::uint8_t v = values[n];
    if (v >= 1 && v <= k_max) ++counts[v - 1];
  }
  return counts;
}

std::uint64_t count_exact_recursive(const PrimeTable& primes, std::uint64_t x,
                                    int k) {
  check_count_args(x, k);
  if (vanishes(x, k)) return 0;
  const std::uint64_t needed = recursive_prime_limit(x, k);
  if (needed > primes.limit())
    throw ResourceError("prime table too small for recursive count, need limit " +
                            std::to_string(needed),
                        needed);
  if (k == 1) return primes.pi(x);
  TupleCounter counter{primes, x, k};
  counter.descend(0, 1, 1);
  return counter.total;
}

CountSeries count_series(const PrimeTable& primes,
                         std::span<const std::uint64_t> x_values, int k) {
  CountSeries series;
  series.mode = CountMode::kBigOmega;
  series.k = k;
  series.x_values.assign(x_values.begin(), x_values.end());
  series.counts.reserve(x_values.size());
  for (const std::uint64_t x : x_values)
    series.counts.push_back(count_exact_recursive(primes, x, k));
  return series;
}

}  // namespace kfactor
