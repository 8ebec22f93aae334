#include "cobeh/systems/systems.hpp"

#include <string>

#include "cobeh/core/error.hpp"

namespace cobeh {
namespace {

void require_mask_width(std::size_t n) {
  if (n > kMaxMaskWidth) {
    throw CapExceeded(std::to_string(n) + " states exceed the 64-state subset limit");
  }
}

SuccTable edge_table(const Carrier& states, const Carrier& alphabet,
                     const std::vector<Transition>& edges) {
  require_mask_width(states.size());
  SuccTable t{states.size(), alphabet.size(), std::vector<Mask>(states.size() * alphabet.size(), 0)};
  for (const auto& e : edges) t.succ[e.from * t.cols + e.action] |= singleton(e.to);
  return t;
}

}  // namespace

SuccTable tabulate(const Nda& n) {
  require_valid(validate(n), "NDA");
  return edge_table(n.states, n.alphabet, n.transitions);
}

SuccTable tabulate(const Lts& l) {
  require_valid(validate(l), "LTS");
  return edge_table(l.states, l.alphabet, l.transitions);
}

SuccTable tabulate(const Cts& c) {
  require_valid(validate(c), "CTS");
  require_mask_width(c.states.size());
  SuccTable t{c.conditions.size(), c.states.size(),
              std::vector<Mask>(c.conditions.size() * c.states.size(), 0)};
  for (const auto& e : c.transitions) t.succ[e.condition * t.cols + e.from] |= singleton(e.to);
  return t;
}

Mask accepting_mask(const Nda& n) {
  require_valid(validate(n), "NDA");
  require_mask_width(n.states.size());
  Mask m = 0;
  for (auto x : n.accepting) m |= singleton(x);
  return m;
}

Mask post(const SuccTable& t, Mask u, std::size_t action) {
  Mask out = 0;
  for (Mask rest = u; rest != 0; rest &= rest - 1) {
    out |= t.at(static_cast<std::size_t>(std::countr_zero(rest)), action);
  }
  return out;
}

QVector lwa_step(const Lwa& l, const QVector& p, std::size_t action) {
  if (action >= l.matrices.size()) {
    throw MalformedInput("unknown action index " + std::to_string(action));
  }
  if (p.size() != l.states.size()) {
    throw DimensionMismatch("vector of dimension " + std::to_string(p.size()) + " for " +
                            std::to_string(l.states.size()) + " states");
  }
  return row_times(p, l.matrices[action]);
}

Rational lwa_output(const Lwa& l, const QVector& p) {
  if (p.size() != l.states.size()) {
    throw DimensionMismatch("vector of dimension " + std::to_string(p.size()) + " for " +
                            std::to_string(l.states.size()) + " states");
  }
  return dot(p, l.output);
}

}  // namespace cobeh
