#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace kfactor {

enum class CountMode { kBigOmega, kLittleOmega };

/// Per-n prime-factor counts up to a limit: big_omega(n) counts prime factors
/// with multiplicity, little_omega(n) counts distinct primes. big_omega(1) ==
/// little_omega(1) == 0. Construction sieves prime powers segment by segment;
/// the result does not depend on the segment size. Immutable after build.
class FactorCountTable {
 public:
  static constexpr std::size_t kDefaultSegmentSize = std::size_t{1} << 20;

  static FactorCountTable build(std::uint64_t limit,
                                std::size_t segment_size = kDefaultSegmentSize);

  /// Assembles a table from raw arrays (cache loading); both arrays must have
  /// limit+1 entries.
  FactorCountTable(std::uint64_t limit, std::vector<std::uint8_t> big_omega,
                   std::vector<std::uint8_t> little_omega);

  std::uint64_t limit() const noexcept { return limit_; }

  std::uint8_t big_omega(std::uint64_t n) const;
  std::uint8_t little_omega(std::uint64_t n) const;

  std::span<const std::uint8_t> big_omega_values() const noexcept {
    return big_;
  }
  std::span<const std::uint8_t> little_omega_values() const noexcept {
    return little_;
  }

 private:
  std::uint64_t limit_ = 0;
  std::vector<std::uint8_t> big_;     // index n, 0..limit
  std::vector<std::uint8_t> little_;  // index n, 0..limit
};

}  // namespace kfactor
