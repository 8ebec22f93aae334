#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cobeh/core/bitrel.hpp"
#include "cobeh/systems/determinize.hpp"
#include "cobeh/systems/systems.hpp"

namespace cobeh {

using Word = std::vector<std::size_t>;

/// Behavioural equivalence on the states of a determinized machine.
struct SubsetEquivalence {
  DeterminizedMachine machine;
  BitRel relation;
  std::size_t iterations = 0;

  bool related(Mask u, Mask v) const {
    return relation.contains(machine.index_of(u), machine.index_of(v));
  }
  /// Classes as machine-state indices, ordered by smallest member.
  std::vector<std::vector<std::size_t>> classes() const { return relation.classes(); }
};

/// One bisimulation step on a deterministic machine with outputs:
/// (i, j) survives iff out(i) = out(j) and R(i_a, j_a) for every action.
BitRel machine_step(const DeterminizedMachine& d, const BitRel& r);

/// Greatest fixpoint of machine_step from the full relation.
SubsetEquivalence machine_bisimilarity(DeterminizedMachine d);

/// Language equivalence on the subsets reachable from `initials`.
SubsetEquivalence nda_language_equiv(const Nda& n, const std::vector<Mask>& initials);

struct PairVerdict {
  bool equivalent = true;
  /// Shortest distinguishing word (shortlex least among the shortest).
  std::optional<Word> witness;
};

/// Breadth-first search over pairs of subsets, straight from the transition
/// list; independent of the fixpoint engine.
PairVerdict nda_pair_oracle(const Nda& n, Mask u, Mask v);

/// Letters concatenated when every label is one character, otherwise joined
/// with '.'; the empty word is "ε".
std::string format_word(const Carrier& alphabet, const Word& w);
/// Inverse of format_word; also accepts "" for the empty word. Throws
/// MalformedInput for unknown letters.
Word parse_word(const Carrier& alphabet, const std::string& text);

}  // namespace cobeh
