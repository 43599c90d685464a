#pragma once

#include <cstdint>
#include <random>

namespace tvg {

inline constexpr const char* kGeneratorId = "mt19937_64/splitmix64";

/// Seeds are mixed with splitmix64 before reaching the engine, so nearby seeds
/// and (seed, stream) pairs give unrelated streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ stream));
}

/// Uniform integer in [lo, hi].  std::uniform_int_distribution is not
/// specified bit-for-bit across standard libraries, so rejection sampling is
/// done here to keep outputs identical everywhere.
inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span + 1) % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return lo + static_cast<std::int64_t>(x % span);
}

}  // namespace tvg
