#include <string>
#include <vector>

#include "cobeh/core/error.hpp"
#include "cobeh/systems/systems.hpp"

namespace cobeh {
namespace {

void check_index(std::vector<std::string>& out, std::size_t value, const Carrier& c,
                 const std::string& what, const std::string& where) {
  if (value >= c.size()) {
    out.push_back(where + ": " + what + " index " + std::to_string(value) +
                  " is out of range (" + std::to_string(c.size()) + " declared)");
  }
}

std::string edge_name(const Carrier& states, const Carrier& alphabet, const Transition& t) {
  auto label = [](const Carrier& c, std::size_t i) {
    return i < c.size() ? c.name(i) : "#" + std::to_string(i);
  };
  return "transition " + label(states, t.from) + " -" + label(alphabet, t.action) + "-> " +
         label(states, t.to);
}

void check_edges(std::vector<std::string>& out, const Carrier& states, const Carrier& alphabet,
                 const std::vector<Transition>& edges) {
  for (const auto& t : edges) {
    const auto where = edge_name(states, alphabet, t);
    check_index(out, t.from, states, "source", where);
    check_index(out, t.action, alphabet, "action", where);
    check_index(out, t.to, states, "successor", where);
  }
}

}  // namespace

std::vector<std::string> validate(const Nda& n) {
  std::vector<std::string> out;
  check_edges(out, n.states, n.alphabet, n.transitions);
  for (auto x : n.accepting) check_index(out, x, n.states, "accepting state", "accepting set");
  return out;
}

std::vector<std::string> validate(const Lts& l) {
  std::vector<std::string> out;
  check_edges(out, l.states, l.alphabet, l.transitions);
  return out;
}

std::vector<std::string> validate(const Lwa& l) {
  std::vector<std::string> out;
  const std::size_t n = l.states.size();
  if (l.output.size() != n) {
    out.push_back("output vector has " + std::to_string(l.output.size()) + " entries for " +
                  std::to_string(n) + " states");
  }
  if (l.matrices.size() != l.alphabet.size()) {
    out.push_back(std::to_string(l.matrices.size()) + " matrices for " +
                  std::to_string(l.alphabet.size()) + " actions");
  }
  for (std::size_t a = 0; a < l.matrices.size(); ++a) {
    const std::string name = a < l.alphabet.size() ? l.alphabet.name(a) : "#" + std::to_string(a);
    const auto& m = l.matrices[a];
    bool square = m.size() == n;
    for (const auto& row : m) square = square && row.size() == n;
    if (!square) out.push_back("matrix for action " + name + " is not " + std::to_string(n) + "x" +
                               std::to_string(n));
  }
  return out;
}

std::vector<std::string> validate(const Cts& c) {
  std::vector<std::string> out;
  for (const auto& t : c.transitions) {
    auto label = [](const Carrier& car, std::size_t i) {
      return i < car.size() ? car.name(i) : "#" + std::to_string(i);
    };
    const std::string where = "transition " + label(c.states, t.from) + " -[" +
                              label(c.conditions, t.condition) + "]-> " + label(c.states, t.to);
    check_index(out, t.condition, c.conditions, "condition", where);
    check_index(out, t.from, c.states, "source", where);
    check_index(out, t.to, c.states, "successor", where);
  }
  return out;
}

std::vector<std::string> validate(const OutputLts& m) {
  auto out = validate(m.lts);
  if (m.lattice.kind() == Semilattice::Kind::table) {
    for (auto& d : Semilattice::diagnose(m.lattice.labels(), m.lattice.join_table(),
                                         m.lattice.bottom())) {
      out.push_back("lattice: " + d);
    }
  }
  if (m.outputs.size() != m.lts.states.size()) {
    out.push_back(std::to_string(m.outputs.size()) + " outputs for " +
                  std::to_string(m.lts.states.size()) + " states");
  }
  for (std::size_t x = 0; x < m.outputs.size(); ++x) {
    if (!m.lattice.contains(m.outputs[x])) {
      const std::string name = x < m.lts.states.size() ? m.lts.states.name(x) : "#" + std::to_string(x);
      out.push_back("output of state " + name + " is not an element of the lattice");
    }
  }
  return out;
}

void require_valid(const std::vector<std::string>& diagnostics, const std::string& what) {
  if (diagnostics.empty()) return;
  std::string msg = "invalid " + what + ":";
  for (const auto& d : diagnostics) msg += "\n  " + d;
  throw MalformedInput(msg);
}

}  // namespace cobeh
