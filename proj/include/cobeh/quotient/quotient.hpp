#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cobeh/core/bitrel.hpp"
#include "cobeh/core/subset.hpp"
#include "cobeh/systems/systems.hpp"

namespace cobeh {

/// Reverse-image automaton on the full powerset: trans(U, a) is the set of
/// states with an a-successor in U, and `datum` is the set of accepting
/// states (the image of termination).
struct BackwardDfa {
  Carrier base_states;
  Carrier alphabet;
  std::vector<Mask> trans;  // mask * |A| + action
  Mask datum = 0;

  Mask target(Mask u, std::size_t a) const { return trans[u * alphabet.size() + a]; }
  bool accepting(Mask u) const { return (u & datum) != 0; }
};

/// Throws CapExceeded above `cap` states.
BackwardDfa backward_determinize(const Nda& n, std::size_t cap = kDefaultPowersetCap);

inline constexpr std::size_t kEqualizerCap = 6;

/// { W | for all U eq V: U meets W implies V meets W }, in ascending mask
/// order. `eq` must be an equivalence on all 2^|X| masks.
std::vector<Mask> equalizer_subset(const Nda& n, const BitRel& eq);

/// Backward dynamics restricted to the equalizer carrier.
struct EqualizerAutomaton {
  Carrier base_states;
  Carrier alphabet;
  std::vector<Mask> carrier;
  std::vector<std::size_t> beta;  // index * |A| + action -> index
  std::size_t datum = 0;          // index of the accepting-states subset

  std::size_t size() const { return carrier.size(); }
  std::size_t target(std::size_t i, std::size_t a) const { return beta[i * alphabet.size() + a]; }
  std::optional<std::size_t> find(Mask m) const;
  /// x kappa W iff x in W.
  bool kappa(std::size_t x, std::size_t index) const { return has_member(carrier[index], x); }
  /// |kappa|(U) = { W | W meets U }.
  std::vector<Mask> kappa_image(Mask u) const;
  std::string label(std::size_t index) const { return format_subset(base_states, carrier[index]); }
};

/// Throws MalformedInput naming the escaping transition when the carrier is
/// not closed under the backward dynamics or misses the accepting datum.
EqualizerAutomaton build_equalizer_automaton(const Nda& n, const BitRel& eq);

/// States that can be dropped while still respecting eq: those not
/// reachable from the datum under beta, and the empty set.
std::vector<Mask> redundant_states(const EqualizerAutomaton& e);

struct HomomorphismCheck {
  bool holds = true;
  /// First pair (state, one-step element) on which the two composites
  /// differ, rendered with labels.
  std::optional<std::string> witness;
};

/// Compares F̄(kappa) ∘ alpha with beta ∘ kappa as relations from X to
/// A x C + 1, where C is the equalizer carrier.
HomomorphismCheck verify_homomorphism_rel(const Nda& n, const EqualizerAutomaton& e);

}  // namespace cobeh
