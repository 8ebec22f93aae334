#pragma once

#include "cobeh/systems/systems.hpp"

namespace fixtures {

// x -a-> z, y -a-> z, y -b-> z, z accepting.
inline cobeh::Nda worked_example() {
  cobeh::Nda n{cobeh::Carrier({"x", "y", "z"}), cobeh::Carrier({"a", "b"}), {}, {2}};
  n.transitions = {{0, 0, 2}, {1, 0, 2}, {1, 1, 2}};
  return n;
}

// Under k1 both x and y step to z; under k2 only x does.
inline cobeh::Cts two_condition_cts() {
  cobeh::Cts c{cobeh::Carrier({"k1", "k2"}), cobeh::Carrier({"x", "y", "z"}), {}};
  c.transitions = {{0, 0, 2}, {0, 1, 2}, {1, 0, 2}};
  return c;
}

// x -a-> y and x -a-> z with weight 1/2 each; y and z loop with weight 1
// and output 1; x outputs 0.
inline cobeh::Lwa splitting_lwa() {
  using cobeh::Rational;
  cobeh::Lwa l{cobeh::Carrier({"x", "y", "z"}), cobeh::Carrier({"a"}), {0, 1, 1}, {}};
  l.matrices = {{{0, Rational(1, 2), Rational(1, 2)}, {0, 1, 0}, {0, 0, 1}}};
  return l;
}

// p0 = a.(b + c) and q0 = a.b + a.c
inline cobeh::Lts branching_lts() {
  cobeh::Lts l{cobeh::Carrier({"p0", "p1", "p2", "p3", "q0", "q1", "q2", "q3", "q4"}),
               cobeh::Carrier({"a", "b", "c"}),
               {}};
  l.transitions = {{0, 0, 1}, {1, 1, 2}, {1, 2, 3}, {4, 0, 5}, {4, 0, 6}, {5, 1, 7}, {6, 2, 8}};
  return l;
}

}  // namespace fixtures
