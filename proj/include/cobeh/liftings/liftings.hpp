#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "cobeh/core/bitrel.hpp"
#include "cobeh/core/rational.hpp"
#include "cobeh/core/subset.hpp"
#include "cobeh/core/subspace.hpp"
#include "cobeh/equivalence/cond_rel.hpp"
#include "cobeh/systems/determinize.hpp"
#include "cobeh/systems/systems.hpp"

namespace cobeh {

/// Element of F Y = A x Y + 1: either act(a, y) or the termination marker.
template <class Payload>
struct FElem {
  bool term = false;
  std::size_t action = 0;
  Payload payload{};

  static FElem terminal() { return FElem{true, 0, Payload{}}; }
  static FElem act(std::size_t a, Payload p) { return FElem{false, a, std::move(p)}; }

  friend auto operator<=>(const FElem&, const FElem&) = default;
};

/// Extensional predicate over a finite, indexed carrier.
using Predicate = std::vector<bool>;

// --- Powerset distributive laws (nondeterministic automata) ---------------

using NdaFElem = FElem<std::size_t>;
using NdaFSet = std::set<NdaFElem>;

/// (a, U) |-> {a} x U, termination |-> {termination}.
NdaFSet theta_nda(const FElem<Mask>& e);

/// Element of (P X)^A x 2.
struct GValueNda {
  std::vector<Mask> per_action;
  bool term = false;
  friend bool operator==(const GValueNda&, const GValueNda&) = default;
};

/// gamma(U)(a) = { x | (a, x) in U }, flag set iff termination is in U.
GValueNda gamma_nda(const NdaFSet& u, std::size_t num_actions);

// --- Multiset distributive laws (weighted automata) -----------------------

/// Finitely supported Q-valued map on A x X + 1; zero weights are absent.
using LwaFMap = std::map<NdaFElem, Rational>;

/// termination |-> delta_termination, (a, tau) |-> ((a, x) |-> tau(x)).
LwaFMap theta_lwa(const FElem<QVector>& e);

/// Element of (Q^X)^A x Q.
struct GValueLwa {
  std::vector<QVector> per_action;
  Rational out;
  friend bool operator==(const GValueLwa&, const GValueLwa&) = default;
};

/// gamma(p)(a)(x) = p(a, x), output = p(termination).
GValueLwa gamma_lwa(const LwaFMap& p, std::size_t num_actions, std::size_t num_states);

// --- Writer-comonad law (conditional transition systems) ------------------

/// gamma(k, U) = {k} x U as (condition, state) pairs.
std::set<std::pair<std::size_t, std::size_t>> gamma_cts(std::size_t k, Mask u);

// --- Derived modalities -----------------------------------------------------

struct NdaModality {
  enum class Kind { action, termination };
  Kind kind = Kind::termination;
  std::size_t action = 0;

  static NdaModality on(std::size_t a) { return {Kind::action, a}; }
  static NdaModality terminates() { return {Kind::termination, 0}; }
};

/// Over the states of a determinized NDA: for an action, { U | U_a in pred };
/// for termination, { U | U accepting }. Throws MalformedInput for an
/// unknown action or a predicate of the wrong size.
Predicate mod_nda(const NdaModality& kind, const Predicate& pred, const DeterminizedMachine& d);

struct MooreModality {
  enum class Kind { action, output };
  Kind kind = Kind::output;
  std::size_t action = 0;
  LatticeElem value = 0;

  static MooreModality on(std::size_t a) { return {Kind::action, a, 0}; }
  static MooreModality outputs(LatticeElem s) { return {Kind::output, 0, s}; }
};

/// Over the states of a determinized Moore machine: { U | U_a in pred } or
/// { U | o'(U) = s }.
Predicate mod_moore(const MooreModality& kind, const Predicate& pred,
                    const DeterminizedMachine& d);

/// Box over K x X (index k * |X| + x):
/// { (k, x) | every k-successor x' of x has (k, x') in pred }.
Predicate mod_cts_box(const Cts& c, const Predicate& pred);

struct LwaModality {
  enum class Kind { action, output };
  Kind kind = Kind::output;
  std::size_t action = 0;
  Rational value;

  static LwaModality on(std::size_t a) { return {Kind::action, a, Rational{}}; }
  static LwaModality outputs(Rational s) { return {Kind::output, 0, std::move(s)}; }
};

using Region = std::function<bool(const QVector&)>;

/// Action kind: region(p M_a). Output kind: p . o == value (region unused).
bool mod_lwa(const LwaModality& kind, const Region& region, const QVector& p, const Lwa& l);

// --- Relation liftings ------------------------------------------------------

/// (termination in u <=> termination in v) and, for every action a,
/// { x | (a,x) in u } R { x | (a,x) in v }. R is indexed by subset masks.
bool rel_lift_nda(const BitRel& r, const NdaFSet& u, const NdaFSet& v, std::size_t num_actions);

/// Relations on Q^X are difference subspaces: p R p' iff p - p' in w. Equal
/// output weights and, for every action, gamma(u)(a) - gamma(v)(a) in w.
bool rel_lift_lwa(const Subspace& w, const LwaFMap& u, const LwaFMap& v,
                  std::size_t num_actions, std::size_t num_states);

/// Two-sided transfer at a fixed condition:
/// every x in u has some x' in v with (k,x,x') in R, and vice versa.
bool rel_lift_cts(const CondRel& r, std::size_t k, Mask u, Mask v);

}  // namespace cobeh
