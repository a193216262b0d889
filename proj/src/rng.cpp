#include "hetvenet/rng.hpp"

#include "hetvenet/error.hpp"

namespace hetvenet {

uint64_t SplitMix64::next_below(uint64_t bound) {
  if (bound == 0) throw_invalid("next_below: bound must be positive");
  // Rejection sampling over the largest multiple of bound below 2^64 keeps
  // the result unbiased without 128-bit arithmetic.
  uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

int SplitMix64::uniform_int(int lo, int hi) {
  if (lo > hi) throw_invalid("uniform_int: empty range");
  uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
  return static_cast<int>(lo + static_cast<int64_t>(next_below(span)));
}

uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

uint64_t derive_seed(uint64_t base, uint64_t a, uint64_t b) {
  // Feistel-ish chaining of the finalizer; cheap, and distinct (a, b) pairs
  // land in decorrelated streams.
  uint64_t h = mix64(base ^ 0x6A09E667F3BCC909ull);
  h = mix64(h ^ a);
  h = mix64(h ^ b);
  return h;
}

}  // namespace hetvenet
