#pragma once

#include <cmath>
#include <cstdint>

namespace consensus {

namespace detail {

/// SplitMix64 finalizer; a well-mixed 64-bit permutation.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Counter-based SplitMix64 stream. Output i is a pure function of
/// (key, i), so streams derived from the same key are reproducible and
/// independent streams can be consumed in any order.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() { return detail::mix64(key_ + (++counter_) * 0x9e3779b97f4a7c15ull); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). Lemire reduction; bias below 2^-64 for the
  /// small ranges used here is further removed by one rejection round.
  std::uint64_t next_below(std::uint64_t n) {
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      const std::uint64_t threshold = (0 - n) % n;
      while (lo < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Derives the key of an independent substream from a master seed and a
/// stream index (e.g. a trial number).
inline std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t index) {
  return detail::mix64(master_seed ^ detail::mix64(index + 0x853c49e6748fea9bull));
}

/// Binomial(m, p) draw by geometric skipping: expected work O(m*p + 1),
/// exact in distribution.
inline std::uint64_t binomial_draw(SplitMix64& rng, std::uint64_t m, double p) {
  if (p <= 0.0 || m == 0) return 0;
  if (p >= 1.0) return m;
  const double log_q = std::log1p(-p);
  std::uint64_t count = 0;
  double position = 0.0;
  while (true) {
    const double u = 1.0 - rng.next_double();  // in (0, 1]
    position += std::floor(std::log(u) / log_q) + 1.0;
    if (position > static_cast<double>(m)) return count;
    ++count;
  }
}

}  // namespace consensus
