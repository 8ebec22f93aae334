#include "cobeh/core/subspace.hpp"

#include <string>
#include <utility>

#include "cobeh/core/error.hpp"

namespace cobeh {

Subspace Subspace::echelonize(std::span<const QVector> vectors, std::size_t dim) {
  std::vector<QVector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != dim) {
      throw DimensionMismatch("vector of dimension " + std::to_string(v.size()) +
                              " in a subspace of Q^" + std::to_string(dim));
    }
    if (!is_zero(v)) rows.push_back(v);
  }

  Subspace s;
  s.dim_ = dim;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational lead = rows[rank][col];
    for (auto& x : rows[rank]) x /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = col; c < dim; ++c) {
        if (!rows[rank][c].is_zero()) rows[r][c] -= factor * rows[rank][c];
      }
    }
    s.pivots_.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  s.basis_ = std::move(rows);
  return s;
}

Subspace Subspace::zero(std::size_t dim) {
  Subspace s;
  s.dim_ = dim;
  return s;
}

Subspace Subspace::full(std::size_t dim) {
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < dim; ++i) rows.push_back(unit_vector(dim, i));
  return echelonize(rows, dim);
}

bool Subspace::contains(const QVector& v) const {
  if (v.size() != dim_) {
    throw DimensionMismatch("vector of dimension " + std::to_string(v.size()) +
                            " tested against a subspace of Q^" + std::to_string(dim_));
  }
  QVector residue = v;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Rational factor = residue[pivots_[r]];
    if (factor.is_zero()) continue;
    for (std::size_t c = pivots_[r]; c < dim_; ++c) {
      if (!basis_[r][c].is_zero()) residue[c] -= factor * basis_[r][c];
    }
  }
  return is_zero(residue);
}

Subspace Subspace::orthogonal_complement() const {
  std::vector<bool> is_pivot(dim_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<QVector> kernel;
  for (std::size_t free = 0; free < dim_; ++free) {
    if (is_pivot[free]) continue;
    QVector y(dim_);
    y[free] = 1;
    for (std::size_t r = 0; r < basis_.size(); ++r) y[pivots_[r]] = -basis_[r][free];
    kernel.push_back(std::move(y));
  }
  return echelonize(kernel, dim_);
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.dim_ != dim_) throw DimensionMismatch("subspaces live in different ambient spaces");
  std::vector<QVector> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return echelonize(rows, dim_);
}

Subspace Subspace::intersect(const Subspace& other) const {
  return orthogonal_complement().sum(other.orthogonal_complement()).orthogonal_complement();
}

}  // namespace cobeh
