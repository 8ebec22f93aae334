#pragma once

#include <cstddef>
#include <optional>

#include "cobeh/core/rational.hpp"
#include "cobeh/core/subspace.hpp"
#include "cobeh/equivalence/nda_equiv.hpp"
#include "cobeh/systems/systems.hpp"

namespace cobeh {

struct UnobservableSubspace {
  Subspace space;
  /// Number of distinct subspaces in the chain W_1 = ker(o) ⊇ W_2 ⊇ ...
  /// up to and including the stable one; at most max(|X|, 1).
  std::size_t iterations = 0;
};

/// Largest subspace W ⊆ ker(o) with W M_a ⊆ W for every action. Computed on
/// annihilators: W_i^⊥ grows by M_a-images of its basis (column action).
UnobservableSubspace lwa_unobservable_subspace(const Lwa& l);

/// (p M_{w1} ... M_{wn}) . o
Rational lwa_trace(const Lwa& l, const QVector& p, const Word& w);

/// p - q in the unobservable subspace.
bool lwa_equiv(const Lwa& l, const QVector& p, const QVector& q);

/// Compares traces on every word of length <= maxlen in shortlex order;
/// the witness is the first word on which they differ.
PairVerdict lwa_trace_oracle(const Lwa& l, const QVector& p, const QVector& q, std::size_t maxlen);

}  // namespace cobeh
