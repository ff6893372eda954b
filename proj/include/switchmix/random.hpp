#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace switchmix {

/// All randomness in the library flows through this engine. Its output
/// sequence is fixed by the standard, so trajectories are portable.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). Uses rejection on the raw 64-bit output
/// instead of std::uniform_int_distribution, whose algorithm is
/// implementation-defined.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Stream-splitting rule: replica r of a run seeded with s uses the engine
/// seeded with splitmix64(s ^ splitmix64(r)). Replica streams are therefore
/// a pure function of (s, r).
inline std::uint64_t replica_seed(std::uint64_t seed, std::uint64_t replica) {
  return splitmix64(seed ^ splitmix64(replica));
}

}  // namespace switchmix
