#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace kfactor {

/// Sorted primes up to a limit with rank lookup. pi(x) is the number of
/// primes <= x; prime_at(n) is the nth prime (1-based), so pi(prime_at(n)) == n.
/// Immutable after build; safe for concurrent reads.
class PrimeTable {
 public:
  static PrimeTable build(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }

  /// pi(limit), the total number of stored primes.
  std::size_t count() const noexcept { return primes_.size(); }

  /// 1-based rank; throws DomainError when rank is 0 or beyond count().
  std::uint32_t prime_at(std::size_t rank) const;

  /// Number of primes <= x. Throws ResourceError when x exceeds limit().
  std::uint64_t pi(std::uint64_t x) const;

  std::span<const std::uint32_t> primes() const noexcept { return primes_; }

 private:
  PrimeTable(std::uint64_t limit, std::vector<std::uint32_t> primes)
      : limit_(limit), primes_(std::move(primes)) {}

  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> primes_;
};

namespace detail {

/// Odd-only Eratosthenes bitmap; bit i represents the odd number 2i+1.
/// A set bit marks a composite.
std::vector<std::uint64_t> sieve_odd_composites(std::uint64_t limit);

inline bool is_prime_from_bits(const std::vector<std::uint64_t>& bits,
                               std::uint64_t n) {
  if (n < 2) return false;
  if (n == 2) return true;
  if (n % 2 == 0) return false;
  const std::uint64_t i = (n - 1) / 2;
  return (bits[i >> 6] & (std::uint64_t{1} << (i & 63))) == 0;
}

}  // namespace detail

}  // namespace kfactor
