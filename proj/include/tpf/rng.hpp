#pragma once
#include <cstdint>

namespace tpf {

// All randomness in the library flows through this generator, seeded by a
// single 64-bit value, so every run is reproducible bit-for-bit across
// platforms.  Algorithm: splitmix64; range reduction by 128-bit multiply-shift
// (no floating point, no modulo bias in the usual sense of rejection loops --
// the multiply-shift map is the documented, fixed behaviour).
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform value in [0, m), m >= 1
  uint64_t below(uint64_t m) {
    return (uint64_t)(((unsigned __int128)next() * m) >> 64);
  }

  // uniform value in [lo, hi] inclusive
  int range(int lo, int hi) { return lo + (int)below((uint64_t)(hi - lo + 1)); }

  // true with probability num/den (integer arithmetic only)
  bool chance(uint64_t num, uint64_t den) { return below(den) < num; }
};

// Derive an independent stream from a seed and a stream index; used when one
// user-level seed has to drive several independent choices deterministically.
inline uint64_t derive_seed(uint64_t seed, uint64_t stream) {
  SplitMix64 g(seed ^ (0xD1B54A32D192ED03ull * (stream + 1)));
  return g.next();
}

}  // namespace tpf
