#include "cobeh/core/random.hpp"

namespace cobeh {

Rng Rng::derive(std::uint64_t seed, std::uint64_t index) {
  Rng mixer(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
  return Rng(mixer.next());
}

std::uint64_t Rng::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % n;
  }
}

std::size_t Rng::between(std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(below(hi - lo + 1));
}

bool Rng::chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

}  // namespace cobeh
