#include "kfactor/prime_table.hpp"

#include <algorithm>
#include <limits>

#include "kfactor/errors.hpp"

namespace kfactor {

namespace detail {

std::vector<std::uint64_t> sieve_odd_composites(std::uint64_t limit) {
  const std::uint64_t odd_count = limit / 2 + 1;  // odd numbers 1,3,...,<=limit
  std::vector<std::uint64_t> bits((odd_count + 63) / 64, 0);
  for (std::uint64_t p = 3; p * p <= limit; p += 2) {
    const std::uint64_t i = (p - 1) / 2;
    if (bits[i >> 6] & (std::uint64_t{1} << (i & 63))) continue;
    for (std::uint64_t m = p * p; m <= limit; m += 2 * p) {
      const std::uint64_t j = (m - 1) / 2;
      bits[j >> 6] |= std::uint64_t{1} << (j & 63);
    }
  }
  return bits;
}

}  // namespace detail

PrimeTable PrimeTable::build(std::uint64_t limit) {
  if (limit < 1) throw DomainError("prime table limit must be >= 1");
  if (limit > std::numeric_limits<std::uint32_t>::max())
    throw DomainError("prime table limit must fit in 32 bits");

  std::vector<std::uint32_t> primes;
  if (limit >= 2) {
    const auto bits = detail::sieve_odd_composites(limit);
    primes.push_back(2);
    for (std::uint64_t n = 3; n <= limit; n += 2) {
      const std::uint64_t i = (n - 1) / 2;
      if ((bits[i >> 6] & (std::uint64_t{1} << (i & 63))) == 0)
        primes.push_back(static_cast<std::uint32_t>(n));
    }
  }
  return PrimeTable(limit, std::move(primes));
}

std::uint32_t PrimeTable::prime_at(std::size_t rank) const {
  if (rank == 0 || rank > primes_.size())
    throw DomainError("prime rank out of range");
  return primes_[rank - 1];
}

std::uint64_t PrimeTable::pi(std::uint64_t x) const {
  if (x > limit_)
    throw ResourceError("pi(x) beyond prime table limit", x);
  const auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
  return static_cast<std::uint64_t>(it - primes_.begin());
}

}  // namespace kfactor
