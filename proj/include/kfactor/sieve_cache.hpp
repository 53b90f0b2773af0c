#pragma once

#include <cstdint>
#include <filesystem>

#include "kfactor/factor_table.hpp"

namespace kfactor {

/// KFL1 cache file layout, all integers little-endian:
///   bytes 0..3   magic "KFL1"
///   byte  4      format version (1)
///   bytes 5..12  limit, u64
///   then big_omega array, limit+1 bytes
///   then little_omega array, limit+1 bytes
///   trailing u64: sum of all preceding bytes mod 2^64
inline constexpr char kSieveCacheMagic[4] = {'K', 'F', 'L', '1'};
inline constexpr std::uint8_t kSieveCacheVersion = 1;

/// Total file size for a given limit.
constexpr std::uint64_t sieve_cache_file_size(std::uint64_t limit) {
  return 4 + 1 + 8 + 2 * (limit + 1) + 8;
}

/// Writes the table; returns the checksum. Throws IoError on failure.
std::uint64_t write_sieve_cache(const FactorCountTable& table,
                                const std::filesystem::path& path);

/// Loads and validates a cache file. Throws IoError for unreadable files and
/// for wrong magic, version, size, or checksum.
FactorCountTable load_sieve_cache(const std::filesystem::path& path);

/// Checksum of an existing valid cache file (validates while reading).
std::uint64_t sieve_cache_checksum(const std::filesystem::path& path);

}  // namespace kfactor
