#include "cobeh/quotient/quotient.hpp"

#include <algorithm>
#include <deque>

#include "cobeh/core/error.hpp"

namespace cobeh {

BackwardDfa backward_determinize(const Nda& n, std::size_t cap) {
  const SuccTable t = tabulate(n);
  const std::size_t nx = n.states.size();
  const std::size_t m = n.alphabet.size();
  require_powerset_cap(nx, cap);
  BackwardDfa b{n.states, n.alphabet, std::vector<Mask>((std::size_t{1} << nx) * m, 0),
                accepting_mask(n)};
  for (Mask u = 0; u < (Mask{1} << nx); ++u) {
    for (std::size_t a = 0; a < m; ++a) {
      Mask pre = 0;
      for (std::size_t x = 0; x < nx; ++x) {
        if ((t.at(x, a) & u) != 0) pre |= singleton(x);
      }
      b.trans[u * m + a] = pre;
    }
  }
  return b;
}

std::vector<Mask> equalizer_subset(const Nda& n, const BitRel& eq) {
  require_valid(validate(n), "automaton");
  const std::size_t nx = n.states.size();
  require_powerset_cap(nx, kEqualizerCap);
  const std::size_t size = std::size_t{1} << nx;
  if (eq.size() != size) {
    throw MalformedInput("equivalence must range over all " + std::to_string(size) + " subsets");
  }
  if (!eq.is_equivalence()) throw MalformedInput("relation is not an equivalence");
  std::vector<Mask> out;
  for (Mask w = 0; w < size; ++w) {
    bool ok = true;
    for (Mask u = 0; ok && u < size; ++u) {
      if ((u & w) == 0) continue;
      for (Mask v = 0; ok && v < size; ++v) ok = !eq.contains(u, v) || (v & w) != 0;
    }
    if (ok) out.push_back(w);
  }
  return out;
}

std::optional<std::size_t> EqualizerAutomaton::find(Mask m) const {
  const auto it = std::lower_bound(carrier.begin(), carrier.end(), m);
  if (it == carrier.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - carrier.begin());
}

std::vector<Mask> EqualizerAutomaton::kappa_image(Mask u) const {
  std::vector<Mask> out;
  for (Mask w : carrier) {
    if ((w & u) != 0) out.push_back(w);
  }
  return out;
}

EqualizerAutomaton build_equalizer_automaton(const Nda& n, const BitRel& eq) {
  const BackwardDfa b = backward_determinize(n, kEqualizerCap);
  EqualizerAutomaton e{n.states, n.alphabet, equalizer_subset(n, eq), {}, 0};
  const auto datum = e.find(b.datum);
  if (!datum) {
    throw MalformedInput("equalizer carrier does not contain the accepting set " +
                         format_subset(n.states, b.datum));
  }
  e.datum = *datum;
  for (Mask w : e.carrier) {
    for (std::size_t a = 0; a < n.alphabet.size(); ++a) {
      const Mask to = b.target(w, a);
      const auto idx = e.find(to);
      if (!idx) {
        throw MalformedInput("equalizer carrier is not closed: " + format_subset(n.states, w) +
                             " -" + n.alphabet.name(a) + "-> " + format_subset(n.states, to));
      }
      e.beta.push_back(*idx);
    }
  }
  return e;
}

std::vector<Mask> redundant_states(const EqualizerAutomaton& e) {
  std::vector<bool> seen(e.size(), false);
  std::deque<std::size_t> queue{e.datum};
  seen[e.datum] = true;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < e.alphabet.size(); ++a) {
      const std::size_t j = e.target(i, a);
      if (!seen[j]) {
        seen[j] = true;
        queue.push_back(j);
      }
    }
  }
  std::vector<Mask> out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!seen[i] || e.carrier[i] == 0) out.push_back(e.carrier[i]);
  }
  return out;
}

HomomorphismCheck verify_homomorphism_rel(const Nda& n, const EqualizerAutomaton& e) {
  const SuccTable t = tabulate(n);
  const Mask acc = accepting_mask(n);
  const std::size_t m = n.alphabet.size();
  for (std::size_t x = 0; x < n.states.size(); ++x) {
    // Termination component.
    const bool lhs_term = has_member(acc, x);
    const bool rhs_term = e.kappa(x, e.datum);
    if (lhs_term != rhs_term) {
      return {false, "state " + n.states.name(x) + " and termination: F(kappa).alpha gives " +
                         std::to_string(lhs_term) + ", beta.kappa gives " + std::to_string(rhs_term)};
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t a = 0; a < m; ++a) {
        const bool lhs = (t.at(x, a) & e.carrier[i]) != 0;
        const bool rhs = e.kappa(x, e.target(i, a));
        if (lhs != rhs) {
          return {false, "state " + n.states.name(x) + " and (" + n.alphabet.name(a) + ", " +
                             e.label(i) + "): F(kappa).alpha gives " + std::to_string(lhs) +
                             ", beta.kappa gives " + std::to_string(rhs)};
        }
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace cobeh
