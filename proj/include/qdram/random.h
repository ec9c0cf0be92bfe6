#pragma once

#include <cstdint>
#include <random>

namespace qdram {

// Root seed for a reproducible run.
struct RngSeed {
  std::uint64_t value = 0;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic pseudo-random stream. Uniform doubles are built directly
// from the top 53 bits of the generator output, so sequences are bit-exact
// across platforms and standard libraries.
class RngStream {
 public:
  explicit RngStream(RngSeed seed) : gen_(seed.value) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1).
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Uniform angle in [0, 2*pi).
  double uniform_angle() { return uniform01() * 6.283185307179586476925287; }

 private:
  std::mt19937_64 gen_;
};

// Substream rule: substream(seed, i) is seeded with
// splitmix64(splitmix64(seed) + 1 + i). Workers indexed by repetition get
// streams that do not depend on how repetitions are scheduled, so totals
// are reproducible for any worker count.
inline RngStream substream(RngSeed root, std::uint64_t index) {
  return RngStream(RngSeed{splitmix64(splitmix64(root.value) + 1 + index)});
}

}  // namespace qdram
