#pragma once

#include <cstdint>

namespace hetvenet {

// splitmix64. Chosen over std::mt19937_64 distributions because the standard
// leaves distribution algorithms implementation-defined; this generator plus
// the helpers below give bit-identical streams on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  // Unbiased uniform in [0, bound) via rejection; bound > 0.
  uint64_t next_below(uint64_t bound);

  // Uniform integer in [lo, hi], inclusive; lo <= hi.
  int uniform_int(int lo, int hi);

 private:
  uint64_t state_;
};

// Stateless finalizer, also splitmix64's output stage.
uint64_t mix64(uint64_t x);

// Decorrelated child seed for stream (a, b) under a base seed.
uint64_t derive_seed(uint64_t base, uint64_t a, uint64_t b);

}  // namespace hetvenet
