#include "cobeh/systems/determinize.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

#include "cobeh/core/error.hpp"

namespace cobeh {
namespace {

template <class Post, class Out>
DeterminizedMachine explore(const Carrier& states, const Carrier& alphabet,
                            const std::vector<Mask>& initials, Post&& post_fn, Out&& out_fn) {
  const std::size_t n = states.size();
  const std::size_t m = alphabet.size();
  std::vector<Mask> seeds = initials;
  for (auto u : seeds) {
    if (!mask_in_range(u, n)) {
      throw MalformedInput("subset mask " + std::to_string(u) + " is outside P(X) for " +
                           std::to_string(n) + " states");
    }
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  std::unordered_map<Mask, std::vector<Mask>> succ;
  std::deque<Mask> queue(seeds.begin(), seeds.end());
  for (auto u : seeds) succ.emplace(u, std::vector<Mask>{});
  while (!queue.empty()) {
    const Mask u = queue.front();
    queue.pop_front();
    std::vector<Mask> row(m);
    for (std::size_t a = 0; a < m; ++a) {
      row[a] = post_fn(u, a);
      if (succ.emplace(row[a], std::vector<Mask>{}).second) queue.push_back(row[a]);
    }
    succ[u] = std::move(row);
  }

  DeterminizedMachine d;
  d.base_states = states;
  d.alphabet = alphabet;
  d.subset_states.reserve(succ.size());
  for (const auto& [u, row] : succ) d.subset_states.push_back(u);
  std::sort(d.subset_states.begin(), d.subset_states.end());
  d.trans.resize(d.subset_states.size() * m);
  d.out.resize(d.subset_states.size());
  for (std::size_t i = 0; i < d.subset_states.size(); ++i) {
    const Mask u = d.subset_states[i];
    const auto& row = succ[u];
    for (std::size_t a = 0; a < m; ++a) d.trans[i * m + a] = d.index_of(row[a]);
    d.out[i] = out_fn(u);
  }
  return d;
}

}  // namespace

std::optional<std::size_t> DeterminizedMachine::find(Mask m) const {
  auto it = std::lower_bound(subset_states.begin(), subset_states.end(), m);
  if (it == subset_states.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - subset_states.begin());
}

std::size_t DeterminizedMachine::index_of(Mask m) const {
  if (auto i = find(m)) return *i;
  throw MalformedInput("subset " + format_subset(base_states, m) + " is not a state of the machine");
}

DeterminizedMachine forward_determinize(const Nda& n, const std::vector<Mask>& initials) {
  const SuccTable table = tabulate(n);
  const Mask accepting = accepting_mask(n);
  return explore(
      n.states, n.alphabet, initials, [&](Mask u, std::size_t a) { return post(table, u, a); },
      [&](Mask u) { return LatticeElem{(u & accepting) != 0 ? 1U : 0U}; });
}

DeterminizedMachine moore_determinize(const OutputLts& m, const std::vector<Mask>& initials) {
  require_valid(validate(m), "output LTS");
  const SuccTable table = tabulate(m.lts);
  return explore(
      m.lts.states, m.lts.alphabet, initials,
      [&](Mask u, std::size_t a) { return post(table, u, a); },
      [&](Mask u) {
        LatticeElem acc = m.lattice.bottom();
        for (auto x : members(u)) acc = m.lattice.join(acc, m.outputs[x]);
        return acc;
      });
}

}  // namespace cobeh
