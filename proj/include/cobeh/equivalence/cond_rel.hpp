#pragma once

#include <cstddef>
#include <vector>

#include "cobeh/core/bitrel.hpp"

namespace cobeh {

/// Set of triples (k, x, x') in K x X x X: a relation on K x X whose related
/// pairs always share their condition. Stored as one BitRel per condition.
class CondRel {
 public:
  CondRel() = default;
  CondRel(std::size_t conditions, std::size_t states);

  static CondRel full(std::size_t conditions, std::size_t states);
  static CondRel identity(std::size_t conditions, std::size_t states);

  std::size_t conditions() const { return slices_.size(); }
  std::size_t states() const { return states_; }

  bool contains(std::size_t k, std::size_t x, std::size_t y) const {
    return slices_[k].contains(x, y);
  }
  void set(std::size_t k, std::size_t x, std::size_t y, bool value = true) {
    slices_[k].set(x, y, value);
  }
  const BitRel& slice(std::size_t k) const { return slices_[k]; }
  BitRel& slice(std::size_t k) { return slices_[k]; }

  std::size_t count() const;
  bool is_subset_of(const CondRel& other) const;

  CondRel& operator&=(const CondRel& other);
  friend CondRel operator&(CondRel a, const CondRel& b) { return a &= b; }
  friend bool operator==(const CondRel&, const CondRel&) = default;

  /// The same triples as a relation on the flattened carrier K x X, with
  /// (k, x) at index k * |X| + x.
  BitRel flatten() const;

 private:
  std::size_t states_ = 0;
  std::vector<BitRel> slices_;
};

}  // namespace cobeh
