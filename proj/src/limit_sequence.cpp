#include "kfactor/limit_sequence.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "kfactor/counting.hpp"
#include "kfactor/errors.hpp"

namespace kfactor {

// p_n <= n(ln n + ln ln n) for n >= 6.
std::uint64_t nth_prime_upper_bound(int n) {
  if (n < 6) return 13;
  const double dn = static_cast<double>(n);
  return static_cast<std::uint64_t>(dn * (std::log(dn) + std::log(std::log(dn)))) + 2;
}

std::optional<LimitSequenceEntry> find_stable_value(const PrimeTable& primes,
                                                    int n, int k_cap) {
  if (n < 1) throw DomainError("prime index must be >= 1");
  if (k_cap < 1) throw DomainError("k cap must be >= 1");
  const std::uint64_t p = primes.prime_at(static_cast<std::size_t>(n));

  std::vector<std::uint64_t> values;  // values[k-1] = N_k(p * 2^(k-1))
  auto value_at = [&](int k) -> std::optional<std::uint64_t> {
    while (static_cast<int>(values.size()) < k) {
      const int kk = static_cast<int>(values.size()) + 1;
      if (kk - 1 >= 64 ||
          p > (std::numeric_limits<std::uint64_t>::max() >> (kk - 1)))
        return std::nullopt;  // p * 2^(k-1) would overflow
      const std::uint64_t x = p << (kk - 1);
      values.push_back(count_exact_recursive(primes, x, kk));
    }
    return values[static_cast<std::size_t>(k) - 1];
  };

  for (int k0 = 1; k0 + 2 <= k_cap; ++k0) {
    const auto v0 = value_at(k0);
    const auto v1 = value_at(k0 + 1);
    const auto v2 = value_at(k0 + 2);
    if (!v0 || !v1 || !v2) return std::nullopt;
    if (*v0 != *v1 || *v1 != *v2) continue;
    if (k0 + 5 <= k_cap) {
      const auto confirm = value_at(k0 + 5);
      if (!confirm) return std::nullopt;
      if (*confirm != *v0) continue;  // slow joiner; keep scanning
    } else {
      return std::nullopt;  // no room left for the confirmation step
    }
    // Walk back to the first k of the run equal to the stable value.
    int start = k0;
    while (start > 1 && values[static_cast<std::size_t>(start) - 2] == *v0)
      --start;
    return LimitSequenceEntry{n, p, *v0, start};
  }
  return std::nullopt;
}

std::vector<LimitSequenceEntry> limit_sequence(int n_max, int k_cap) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  const PrimeTable primes = PrimeTable::build(nth_prime_upper_bound(n_max));
  std::vector<LimitSequenceEntry> entries;
  entries.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    auto entry = find_stable_value(primes, n, k_cap);
    if (!entry)
      throw ConvergenceError("limit sequence did not stabilize for n = " +
                             std::to_string(n));
    entries.push_back(*entry);
  }
  return entries;
}

}  // namespace kfactor
