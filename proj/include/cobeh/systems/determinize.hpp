#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cobeh/core/semilattice.hpp"
#include "cobeh/core/subset.hpp"
#include "cobeh/systems/systems.hpp"

namespace cobeh {

/// Reachable part of a subset construction. States are subsets of the base
/// carrier, listed in ascending mask order; outputs are 0/1 for NDA
/// acceptance or lattice elements for Moore machines.
struct DeterminizedMachine {
  Carrier base_states;
  Carrier alphabet;
  std::vector<Mask> subset_states;
  std::vector<std::size_t> trans;  // index * |A| + action -> index
  std::vector<LatticeElem> out;

  std::size_t size() const { return subset_states.size(); }
  std::size_t target(std::size_t index, std::size_t action) const {
    return trans[index * alphabet.size() + action];
  }
  std::optional<std::size_t> find(Mask m) const;
  /// Throws MalformedInput when m is not a state of the machine.
  std::size_t index_of(Mask m) const;
  std::string label(std::size_t index) const {
    return format_subset(base_states, subset_states[index]);
  }
};

/// Subset construction from the given initial subsets. out(U) = 1 iff U
/// contains an accepting state. Throws MalformedInput for masks outside P(X).
DeterminizedMachine forward_determinize(const Nda& n, const std::vector<Mask>& initials);

/// Generalized determinization of an LTS with outputs: o'(U) is the join of
/// o(x) over x in U (bottom for the empty set), and U -a-> U_a.
DeterminizedMachine moore_determinize(const OutputLts& m, const std::vector<Mask>& initials);

}  // namespace cobeh
