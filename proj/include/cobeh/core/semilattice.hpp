#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cobeh/core/carrier.hpp"

namespace cobeh {

using LatticeElem = std::uint64_t;

/// Finite join-semilattice with bottom.
///
/// Two representations share one interface:
///  - table: elements are indices into a labelled carrier and join is an
///    explicit operation table; the laws are verified exhaustively when the
///    lattice is built.
///  - powerset: elements are bitmasks over at most 64 labelled atoms, join is
///    union and bottom is the empty set.
class Semilattice {
 public:
  enum class Kind { table, powerset };

  Semilattice() = default;

  /// Throws MalformedInput listing every violated law.
  static Semilattice table(Carrier elements,
                           std::vector<std::vector<std::size_t>> join,
                           std::size_t bottom);
  /// One diagnostic per violated law (shape, range, idempotence,
  /// commutativity, associativity, unit), naming a witnessing element.
  static std::vector<std::string> diagnose(
      const Carrier& elements, const std::vector<std::vector<std::size_t>>& join,
      std::size_t bottom);

  /// The two-element lattice {0 < 1} as a table.
  static Semilattice boolean();
  /// Subsets of `atoms` under union. Throws CapExceeded above 64 atoms.
  static Semilattice powerset(Carrier atoms);

  Kind kind() const { return kind_; }
  /// Table elements, or the atoms of a powerset lattice.
  const Carrier& labels() const { return labels_; }
  const std::vector<std::vector<std::size_t>>& join_table() const { return join_; }

  LatticeElem bottom() const { return bottom_; }
  LatticeElem join(LatticeElem a, LatticeElem b) const;
  bool contains(LatticeElem e) const;
  /// Number of elements; only meaningful for tables and powersets of up to
  /// 63 atoms.
  std::size_t element_count() const;

  std::string format(LatticeElem e) const;
  /// Throws MalformedInput for unknown labels.
  LatticeElem parse(std::string_view text) const;

  friend bool operator==(const Semilattice& a, const Semilattice& b) = default;

 private:
  Kind kind_ = Kind::table;
  Carrier labels_;
  std::vector<std::vector<std::size_t>> join_;
  LatticeElem bottom_ = 0;
};

}  // namespace cobeh
