#pragma once

#include <cstddef>
#include <vector>

#include "cobeh/equivalence/cond_rel.hpp"
#include "cobeh/systems/systems.hpp"

namespace cobeh {

/// Quotient of a CTS by the least equivalence on K x X containing a
/// conditional bisimulation. Quotient states are the classes, labelled
/// "k|{x,y}"; a class of condition k has no successors under other
/// conditions.
struct CtsQuotient {
  Cts quotient;
  std::vector<std::size_t> class_of;  // k * |X| + x -> quotient state
  std::vector<std::size_t> class_condition;
};

/// Throws MalformedInput with a violating triple when r is not contained in
/// cts_step(r).
CtsQuotient cts_quotient(const Cts& c, const CondRel& r);

}  // namespace cobeh
