#include "kfactor/factor_table.hpp"

#include <algorithm>

#include "kfactor/errors.hpp"
#include "kfactor/prime_table.hpp"

namespace kfactor {

FactorCountTable::FactorCountTable(std::uint64_t limit,
                                   std::vector<std::uint8_t> big_omega,
                                   std::vector<std::uint8_t> little_omega)
    : limit_(limit), big_(std::move(big_omega)), little_(std::move(little_omega)) {
  if (limit < 2) throw DomainError("factor table limit must be >= 2");
  if (big_.size() != limit + 1 || little_.size() != limit + 1)
    throw DomainError("factor table arrays must have limit+1 entries");
}

FactorCountTable FactorCountTable::build(std::uint64_t limit,
                                         std::size_t segment_size) {
  if (limit < 2) throw DomainError("factor table limit must be >= 2");
  if (segment_size == 0) throw DomainError("segment size must be positive");

  std::vector<std::uint8_t> big;
  std::vector<std::uint8_t> little;
  try {
    big.assign(limit + 1, 0);
    little.assign(limit + 1, 0);
  } catch (const std::bad_alloc&) {
    throw ResourceError("factor table allocation failed", limit);
  }

  const auto bits = detail::sieve_odd_composites(limit);
  std::vector<std::uint32_t> primes;
  primes.push_back(2);
  for (std::uint64_t n = 3; n <= limit; n += 2)
    if (detail::is_prime_from_bits(bits, n))
      primes.push_back(static_cast<std::uint32_t>(n));

  // Each n receives one increment of big_omega per prime-power divisor and
  // one increment of little_omega per prime divisor.
  for (std::uint64_t lo = 2; lo <= limit; lo += segment_size) {
    const std::uint64_t hi = std::min(limit, lo + segment_size - 1);
    for (const std::uint32_t p : primes) {
      if (p > hi) break;
      const std::uint64_t first = std::max<std::uint64_t>(p, ((lo + p - 1) / p) * p);
      for (std::uint64_t m = first; m <= hi; m += p) {
        ++big[m];
        ++little[m];
      }
      for (std::uint64_t q = static_cast<std::uint64_t>(p) * p; q <= hi;
           q *= p) {
        const std::uint64_t start =
            std::max<std::uint64_t>(q, ((lo + q - 1) / q) * q);
        for (std::uint64_t m = start; m <= hi; m += q) ++big[m];
        if (q > hi / p) break;  // next power would overflow past hi
      }
    }
  }
  return FactorCountTable(limit, std::move(big), std::move(little));
}

std::uint8_t FactorCountTable::big_omega(std::uint64_t n) const {
  if (n == 0 || n > limit_) throw DomainError("n outside factor table range");
  return big_[n];
}

std::uint8_t FactorCountTable::little_omega(std::uint64_t n) const {
  if (n == 0 || n > limit_) throw DomainError("n outside factor table range");
  return little_[n];
}

}  // namespace kfactor
