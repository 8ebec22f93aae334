#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace cobeh {

/// SplitMix64 generator. The whole stream is fixed by the 64-bit seed:
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// Bounded draws use rejection sampling on the raw 64-bit output, so results
/// never depend on a standard library's distribution implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Independent stream for trial `index` of a run seeded with `seed`.
  static Rng derive(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next();
  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi);
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den);

  template <class T>
  const T& pick(std::span<const T> items) {
    return items[below(items.size())];
  }

 private:
  std::uint64_t state_;
};

}  // namespace cobeh
