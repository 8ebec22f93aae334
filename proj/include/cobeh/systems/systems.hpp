#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cobeh/core/carrier.hpp"
#include "cobeh/core/rational.hpp"
#include "cobeh/core/semilattice.hpp"
#include "cobeh/core/subset.hpp"

namespace cobeh {

/// Labelled edge from -a-> to, by index.
struct Transition {
  std::size_t from = 0;
  std::size_t action = 0;
  std::size_t to = 0;
  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Nondeterministic automaton X -> P(A x X + 1): the transitions carry the
/// A x X part and `accepting` lists the states whose image contains the
/// termination element.
struct Nda {
  Carrier states;
  Carrier alphabet;
  std::vector<Transition> transitions;
  std::vector<std::size_t> accepting;
  friend bool operator==(const Nda&, const Nda&) = default;
};

/// Linear weighted automaton over Q: output vector o with o(x) the weight of
/// termination at x, and one |X| x |X| matrix per action with
/// M_a(x, x') the weight of x -a-> x'.
struct Lwa {
  Carrier states;
  Carrier alphabet;
  QVector output;
  std::vector<QMatrix> matrices;
  friend bool operator==(const Lwa&, const Lwa&) = default;
};

struct CondTransition {
  std::size_t condition = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  friend bool operator==(const CondTransition&, const CondTransition&) = default;
};

/// Conditional transition system K x X -> P(X).
struct Cts {
  Carrier conditions;
  Carrier states;
  std::vector<CondTransition> transitions;
  friend bool operator==(const Cts&, const Cts&) = default;
};

/// Plain labelled transition system X -> (P X)^A.
struct Lts {
  Carrier states;
  Carrier alphabet;
  std::vector<Transition> transitions;
  friend bool operator==(const Lts&, const Lts&) = default;
};

/// LTS with a semilattice-valued output per state.
struct OutputLts {
  Lts lts;
  Semilattice lattice;
  std::vector<LatticeElem> outputs;
  friend bool operator==(const OutputLts&, const OutputLts&) = default;
};

/// Successor masks of a validated NDA, LTS or CTS. `succ[row * width + col]`
/// where (row, col) is (state, action) for NDA/LTS and (condition, state)
/// for CTS.
struct SuccTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Mask> succ;
  Mask at(std::size_t row, std::size_t col) const { return succ[row * cols + col]; }
};

/// All tabulate functions validate first and throw MalformedInput with the
/// joined diagnostics, or CapExceeded beyond 64 states.
SuccTable tabulate(const Nda& n);
SuccTable tabulate(const Lts& l);
/// rows = conditions, cols = states.
SuccTable tabulate(const Cts& c);
Mask accepting_mask(const Nda& n);

/// Forward image of a subset: { x' | exists x in u, x -a-> x' }.
Mask post(const SuccTable& t, Mask u, std::size_t action);

/// Row-vector step p M_a. Throws DimensionMismatch or MalformedInput for an
/// unknown action.
QVector lwa_step(const Lwa& l, const QVector& p, std::size_t action);
/// Inner product p . o.
Rational lwa_output(const Lwa& l, const QVector& p);

/// Per-family invariant check. Empty iff well formed; otherwise one
/// human-readable line per problem, naming the offending labels.
std::vector<std::string> validate(const Nda& n);
std::vector<std::string> validate(const Lwa& l);
std::vector<std::string> validate(const Cts& c);
std::vector<std::string> validate(const Lts& l);
std::vector<std::string> validate(const OutputLts& m);

/// Throws MalformedInput when `diagnostics` is non-empty.
void require_valid(const std::vector<std::string>& diagnostics, const std::string& what);

}  // namespace cobeh
