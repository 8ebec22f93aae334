#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cobeh/core/rational.hpp"

namespace cobeh {

/// Subspace of Q^n held as its reduced row-echelon basis. Leading entries
/// are 1, so two subspaces are equal iff their bases are identical.
class Subspace {
 public:
  Subspace() = default;

  /// Canonical basis of span(vectors). Throws DimensionMismatch when a vector
  /// does not have `dim` entries.
  static Subspace echelonize(std::span<const QVector> vectors, std::size_t dim);
  static Subspace zero(std::size_t dim);
  static Subspace full(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<QVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Exact membership by elimination against the basis.
  bool contains(const QVector& v) const;

  /// { y | <b, y> = 0 for every basis row b }.
  Subspace orthogonal_complement() const;
  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<QVector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace cobeh
