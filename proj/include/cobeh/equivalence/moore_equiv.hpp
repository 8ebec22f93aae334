#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cobeh/core/semilattice.hpp"
#include "cobeh/equivalence/nda_equiv.hpp"
#include "cobeh/systems/systems.hpp"

namespace cobeh {

enum class MooreSemantics { trace, failure, ready };

std::string to_string(MooreSemantics s);
/// Throws MalformedInput for names other than trace, failure, ready.
MooreSemantics parse_semantics(const std::string& name);

/// Largest alphabet for failure and ready outputs (2^|A| lattice atoms).
inline constexpr std::size_t kMaxRefusalAlphabet = 6;

/// { a | delta(x, a) nonempty } as a mask over the alphabet.
Mask enabled_actions(const Lts& l, std::size_t x);

/// Lattice of sets of action sets: atoms are all subsets of A labelled
/// "{a,b}", join is union. Throws CapExceeded above kMaxRefusalAlphabet.
Semilattice action_set_lattice(const Carrier& alphabet);

/// { Z ⊆ A | Z ∩ enabled(x) = ∅ } as an element of action_set_lattice.
LatticeElem refusal_output(const Lts& l, std::size_t x);
/// { enabled(x) }
LatticeElem ready_output(const Lts& l, std::size_t x);

/// The LTS equipped with the outputs of a semantics: constant 1 in the
/// Boolean lattice for trace, refusals for failure, ready sets for ready.
OutputLts with_semantics(const Lts& l, MooreSemantics s);

/// Bisimilarity of the generalized determinization from `initials`.
SubsetEquivalence moore_equiv(const OutputLts& m, const std::vector<Mask>& initials);

}  // namespace cobeh
