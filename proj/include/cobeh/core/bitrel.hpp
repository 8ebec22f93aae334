#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cobeh {

/// Binary relation on {0, ..., n-1} stored as an n x n bit matrix.
class BitRel {
 public:
  BitRel() = default;
  explicit BitRel(std::size_t n);

  static BitRel empty(std::size_t n) { return BitRel(n); }
  static BitRel full(std::size_t n);
  static BitRel identity(std::size_t n);

  std::size_t size() const { return n_; }

  bool contains(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + (j >> 6)] >> (j & 63)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value = true);

  std::size_t count() const;
  bool is_subset_of(const BitRel& other) const;
  bool is_equivalence() const;

  BitRel& operator&=(const BitRel& other);
  BitRel& operator|=(const BitRel& other);
  friend BitRel operator&(BitRel a, const BitRel& b) { return a &= b; }
  friend BitRel operator|(BitRel a, const BitRel& b) { return a |= b; }
  friend bool operator==(const BitRel& a, const BitRel& b) = default;

  /// Classes of the least equivalence relation containing this relation,
  /// each sorted, ordered by their smallest member.
  std::vector<std::vector<std::size_t>> classes() const;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Reindexing along f : C -> D: (i, j) is in the result iff (f(i), f(j)) is
/// in r. Throws MalformedInput when f leaves the carrier of r.
BitRel rel_pullback(const BitRel& r, std::span<const std::size_t> f);

}  // namespace cobeh
