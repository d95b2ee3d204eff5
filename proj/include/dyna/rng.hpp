#pragma once

#include <cmath>
#include <cstdint>

namespace dyna {

// Counter-based random source. Every draw is a pure integer hash of
// (seed, counter), so streams replay identically on any platform and can
// be split into independent substreams without sharing state.
class Rng {
 public:
  Rng() = default;
  explicit Rng(std::uint64_t seed, std::uint64_t counter = 0)
      : seed_(seed), counter_(counter) {}

  // splitmix64 finalizer.
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  static std::uint64_t hash2(std::uint64_t a, std::uint64_t b) {
    return mix(mix(a) ^ (b + 0x9E3779B97F4A7C15ull));
  }

  std::uint64_t next_u64() { return hash2(seed_, counter_++); }

  // [0, 1)
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Inclusive on both ends. Bias-free via 128-bit multiply.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t x = next_u64();
    const std::uint64_t r = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * span) >> 64);
    return lo + static_cast<std::int64_t>(r);
  }

  // Box-Muller; consumes two draws. u1 is kept in (0, 1] so log() is finite.
  double normal() {
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  // Independent substream identified by `stream`.
  Rng fork(std::uint64_t stream) const {
    return Rng(hash2(seed_, hash2(0xD1B54A32D192ED03ull, stream)));
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }
  void set_counter(std::uint64_t c) { counter_ = c; }

 private:
  std::uint64_t seed_ = 0;
  std::uint64_t counter_ = 0;
};

// Order-independent seed derivation for indexed work items.
inline std::uint64_t stable_hash(std::uint64_t master_seed, std::uint64_t index) {
  return Rng::hash2(master_seed, index);
}

}  // namespace dyna
