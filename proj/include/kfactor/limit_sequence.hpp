#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kfactor/prime_table.hpp"

namespace kfactor {

/// Stabilized value of N_k(p_n * 2^(k-1)) as k grows, with the smallest k
/// from which the value holds.
struct LimitSequenceEntry {
  int n = 0;                      // prime index, 1-based
  std::uint64_t prime = 0;        // p_n
  std::uint64_t stable_value = 0;
  int stabilization_k = 0;
};

/// Upper bound for the nth prime; a PrimeTable built to this limit holds
/// p_1..p_n.
std::uint64_t nth_prime_upper_bound(int n);

/// Scans k = 1..k_cap for the plateau of N_k(p_n * 2^(k-1)). Stabilization is
/// declared once the value repeats for 3 consecutive k and is confirmed 5
/// steps after the first repeat. Returns nullopt when no plateau is confirmed
/// within k_cap (or before p_n * 2^(k-1) leaves the 64-bit range).
std::optional<LimitSequenceEntry> find_stable_value(const PrimeTable& primes,
                                                    int n, int k_cap);

/// Entries for n = 1..n_max; throws ConvergenceError naming the first n that
/// fails to stabilize within k_cap.
std::vector<LimitSequenceEntry> limit_sequence(int n_max, int k_cap);

}  // namespace kfactor
