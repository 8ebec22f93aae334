#include "cobeh/core/bitrel.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "cobeh/core/error.hpp"

namespace cobeh {

BitRel::BitRel(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

BitRel BitRel::full(std::size_t n) {
  BitRel r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t w = 0; w < r.words_; ++w) {
      const std::size_t lo = w * 64;
      const std::size_t width = std::min<std::size_t>(64, n - lo);
      r.bits_[i * r.words_ + w] = width == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
    }
  }
  return r;
}

BitRel BitRel::identity(std::size_t n) {
  BitRel r(n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  return r;
}

void BitRel::set(std::size_t i, std::size_t j, bool value) {
  auto& word = bits_[i * words_ + (j >> 6)];
  const std::uint64_t bit = std::uint64_t{1} << (j & 63);
  word = value ? (word | bit) : (word & ~bit);
}

std::size_t BitRel::count() const {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitRel::is_subset_of(const BitRel& other) const {
  if (n_ != other.n_) return false;
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    if ((bits_[k] & ~other.bits_[k]) != 0) return false;
  }
  return true;
}

bool BitRel::is_equivalence() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!contains(i, i)) return false;
    for (std::size_t j = 0; j < n_; ++j) {
      if (!contains(i, j)) continue;
      if (!contains(j, i)) return false;
      for (std::size_t k = 0; k < n_; ++k) {
        if (contains(j, k) && !contains(i, k)) return false;
      }
    }
  }
  return true;
}

BitRel& BitRel::operator&=(const BitRel& other) {
  if (n_ != other.n_) throw DimensionMismatch("relation sizes differ");
  for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] &= other.bits_[k];
  return *this;
}

BitRel& BitRel::operator|=(const BitRel& other) {
  if (n_ != other.n_) throw DimensionMismatch("relation sizes differ");
  for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] |= other.bits_[k];
  return *this;
}

std::vector<std::vector<std::size_t>> BitRel::classes() const {
  std::vector<std::size_t> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!contains(i, j)) continue;
      const auto a = root(i), b = root(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const auto r = root(i);
    if (slot[r] == n_) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

BitRel rel_pullback(const BitRel& r, std::span<const std::size_t> f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] >= r.size()) {
      throw MalformedInput("function maps " + std::to_string(i) + " to " + std::to_string(f[i]) +
                           ", outside a carrier of size " + std::to_string(r.size()));
    }
  }
  BitRel out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (r.contains(f[i], f[j])) out.set(i, j);
    }
  }
  return out;
}

}  // namespace cobeh
