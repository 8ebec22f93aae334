#include "cobeh/equivalence/moore_equiv.hpp"

#include "cobeh/core/error.hpp"

namespace cobeh {

std::string to_string(MooreSemantics s) {
  switch (s) {
    case MooreSemantics::trace: return "trace";
    case MooreSemantics::failure: return "failure";
    case MooreSemantics::ready: return "ready";
  }
  return "?";
}

MooreSemantics parse_semantics(const std::string& name) {
  if (name == "trace") return MooreSemantics::trace;
  if (name == "failure") return MooreSemantics::failure;
  if (name == "ready") return MooreSemantics::ready;
  throw MalformedInput("unknown semantics '" + name + "' (expected trace, failure or ready)");
}

Mask enabled_actions(const Lts& l, std::size_t x) {
  if (x >= l.states.size()) throw MalformedInput("state index out of range");
  Mask out = 0;
  for (const auto& t : l.transitions) {
    if (t.from == x) out |= singleton(t.action);
  }
  return out;
}

Semilattice action_set_lattice(const Carrier& alphabet) {
  if (alphabet.size() > kMaxRefusalAlphabet) {
    throw CapExceeded("failure and ready outputs need at most " +
                      std::to_string(kMaxRefusalAlphabet) + " actions, got " +
                      std::to_string(alphabet.size()));
  }
  std::vector<std::string> atoms;
  for (Mask z = 0; z < (Mask{1} << alphabet.size()); ++z) atoms.push_back(format_subset(alphabet, z));
  return Semilattice::powerset(Carrier(std::move(atoms)));
}

LatticeElem refusal_output(const Lts& l, std::size_t x) {
  const Mask enabled = enabled_actions(l, x);
  LatticeElem out = 0;
  for (Mask z = 0; z < (Mask{1} << l.alphabet.size()); ++z) {
    if ((z & enabled) == 0) out |= LatticeElem{1} << z;
  }
  return out;
}

LatticeElem ready_output(const Lts& l, std::size_t x) {
  return LatticeElem{1} << enabled_actions(l, x);
}

OutputLts with_semantics(const Lts& l, MooreSemantics s) {
  require_valid(validate(l), "transition system");
  OutputLts m{l, Semilattice::boolean(), {}};
  if (s == MooreSemantics::trace) {
    m.outputs.assign(l.states.size(), 1);
    return m;
  }
  m.lattice = action_set_lattice(l.alphabet);
  for (std::size_t x = 0; x < l.states.size(); ++x) {
    m.outputs.push_back(s == MooreSemantics::failure ? refusal_output(l, x) : ready_output(l, x));
  }
  return m;
}

SubsetEquivalence moore_equiv(const OutputLts& m, const std::vector<Mask>& initials) {
  return machine_bisimilarity(moore_determinize(m, initials));
}

}  // namespace cobeh
