#include "kfactor/sieve_cache.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <numeric>
#include <vector>

#include "kfactor/errors.hpp"

namespace kfactor {

namespace {

void put_u64_le(std::uint64_t v, std::uint8_t out[8]) {
  for (int i = 0; i < 8; ++i) out[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

std::uint64_t get_u64_le(const std::uint8_t in[8]) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(in[i]) << (8 * i);
  return v;
}

std::uint64_t byte_sum(const std::uint8_t* data, std::size_t size,
                       std::uint64_t seed = 0) {
  std::uint64_t sum = seed;
  for (std::size_t i = 0; i < size; ++i) sum += data[i];
  return sum;
}

std::array<std::uint8_t, 13> make_header(std::uint64_t limit) {
  std::array<std::uint8_t, 13> header{};
  std::memcpy(header.data(), kSieveCacheMagic, 4);
  header[4] = kSieveCacheVersion;
  put_u64_le(limit, header.data() + 5);
  return header;
}

}  // namespace

std::uint64_t write_sieve_cache(const FactorCountTable& table,
                                const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open cache file for writing: " + path.string());

  const auto header = make_header(table.limit());
  std::uint64_t sum = byte_sum(header.data(), header.size());
  out.write(reinterpret_cast<const char*>(header.data()),
            static_cast<std::streamsize>(header.size()));

  const auto big = table.big_omega_values();
  const auto little = table.little_omega_values();
  out.write(reinterpret_cast<const char*>(big.data()),
            static_cast<std::streamsize>(big.size()));
  sum = byte_sum(big.data(), big.size(), sum);
  out.write(reinterpret_cast<const char*>(little.data()),
            static_cast<std::streamsize>(little.size()));
  sum = byte_sum(little.data(), little.size(), sum);

  std::uint8_t tail[8];
  put_u64_le(sum, tail);
  out.write(reinterpret_cast<const char*>(tail), 8);
  out.flush();
  if (!out) throw IoError("cache write failed: " + path.string());
  return sum;
}

namespace {

struct LoadedCache {
  std::uint64_t limit = 0;
  std::vector<std::uint8_t> big;
  std::vector<std::uint8_t> little;
  std::uint64_t checksum = 0;
};

LoadedCache read_and_validate(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open cache file: " + path.string());

  std::array<std::uint8_t, 13> header{};
  in.read(reinterpret_cast<char*>(header.data()),
          static_cast<std::streamsize>(header.size()));
  if (!in) throw IoError("cache file truncated header: " + path.string());
  if (std::memcmp(header.data(), kSieveCacheMagic, 4) != 0)
    throw IoError("cache file has wrong magic: " + path.string());
  if (header[4] != kSieveCacheVersion)
    throw IoError("cache file has unsupported version: " + path.string());

  const std::uint64_t limit = get_u64_le(header.data() + 5);
  std::error_code ec;
  const std::uint64_t actual_size = std::filesystem::file_size(path, ec);
  if (ec || actual_size != sieve_cache_file_size(limit))
    throw IoError("cache file size mismatch: " + path.string());

  LoadedCache cache;
  cache.limit = limit;
  cache.big.resize(limit + 1);
  cache.little.resize(limit + 1);
  in.read(reinterpret_cast<char*>(cache.big.data()),
          static_cast<std::streamsize>(cache.big.size()));
  in.read(reinterpret_cast<char*>(cache.little.data()),
          static_cast<std::streamsize>(cache.little.size()));
  std::uint8_t tail[8];
  in.read(reinterpret_cast<char*>(tail), 8);
  if (!in) throw IoError("cache file truncated: " + path.string());

  std::uint64_t sum = byte_sum(header.data(), header.size());
  sum = byte_sum(cache.big.data(), cache.big.size(), sum);
  sum = byte_sum(cache.little.data(), cache.little.size(), sum);
  if (sum != get_u64_le(tail))
    throw IoError("cache file checksum mismatch: " + path.string());
  cache.checksum = sum;
  return cache;
}

}  // namespace

FactorCountTable load_sieve_cache(const std::filesystem::path& path) {
  auto cache = read_and_validate(path);
  return FactorCountTable(cache.limit, std::move(cache.big),
                          std::move(cache.little));
}

std::uint64_t sieve_cache_checksum(const std::filesystem::path& path) {
  return read_and_validate(path).checksum;
}

}  // namespace kfactor
