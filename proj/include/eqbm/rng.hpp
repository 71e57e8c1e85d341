#pragma once

#include <cstdint>

namespace eqbm {

// Counter-based splittable generator. A stream is a SplitMix64 walk whose
// initial state mixes a root seed with a stream tag, so per-shot streams can
// be consumed from any thread and reproduce identically at any thread count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(mix(seed + 0x9e3779b97f4a7c15ull)) {}

  static Rng stream(std::uint64_t root, std::uint64_t tag) {
    return Rng(mix(root ^ 0xbf58476d1ce4e5b9ull) + mix(tag * 0x94d049bb133111ebull + 1));
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // uniform in [0, 1)
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform integer in [0, n)
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace eqbm
