#pragma once

#include <cstdint>

namespace invlim {

/* splitmix64. Every random draw in the library flows through one of these,
   seeded explicitly, so whole runs replay bit-for-bit from a single seed. */
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /* uniform in [0, n); n == 0 yields 0 */
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    /* rejection sampling keeps the draw unbiased and platform-independent */
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % n;
  }

  /* uniform in [lo, hi], inclusive; requires lo <= hi */
  std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  /* derived stream; deterministic function of current state and `stream` */
  SplitMix64 split(std::uint64_t stream) {
    return SplitMix64(next() ^ (0x632be59bd9b4e019ull * (stream | 1)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace invlim
