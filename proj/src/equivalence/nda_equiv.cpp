#include "cobeh/equivalence/nda_equiv.hpp"

#include <deque>
#include <map>
#include <utility>

#include "cobeh/core/error.hpp"
#include "cobeh/core/gfp.hpp"

namespace cobeh {

BitRel machine_step(const DeterminizedMachine& d, const BitRel& r) {
  const std::size_t n = d.size();
  BitRel out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (d.out[i] != d.out[j]) continue;
      bool ok = true;
      for (std::size_t a = 0; ok && a < d.alphabet.size(); ++a) {
        ok = r.contains(d.target(i, a), d.target(j, a));
      }
      if (ok) out.set(i, j);
    }
  }
  return out;
}

SubsetEquivalence machine_bisimilarity(DeterminizedMachine d) {
  const std::size_t n = d.size();
  auto result = gfp([&d](const BitRel& r) { return machine_step(d, r); }, BitRel::full(n));
  return {std::move(d), std::move(result.relation), result.iterations};
}

SubsetEquivalence nda_language_equiv(const Nda& n, const std::vector<Mask>& initials) {
  return machine_bisimilarity(forward_determinize(n, initials));
}

PairVerdict nda_pair_oracle(const Nda& n, Mask u, Mask v) {
  require_valid(validate(n), "automaton");
  const std::size_t nx = n.states.size();
  if (!mask_in_range(u, nx) || !mask_in_range(v, nx)) {
    throw MalformedInput("subset out of range for " + std::to_string(nx) + " states");
  }
  Mask accepting = 0;
  for (auto x : n.accepting) accepting |= singleton(x);
  auto step = [&n](Mask from, std::size_t a) {
    Mask to = 0;
    for (const auto& t : n.transitions) {
      if (t.action == a && has_member(from, t.from)) to |= singleton(t.to);
    }
    return to;
  };

  using Pair = std::pair<Mask, Mask>;
  std::map<Pair, std::pair<Pair, std::size_t>> parent;
  std::deque<Pair> queue{{u, v}};
  parent.emplace(Pair{u, v}, std::make_pair(Pair{u, v}, std::size_t{0}));
  while (!queue.empty()) {
    const Pair cur = queue.front();
    queue.pop_front();
    if (((cur.first & accepting) != 0) != ((cur.second & accepting) != 0)) {
      Word w;
      for (Pair p = cur; p != Pair{u, v};) {
        const auto& [prev, a] = parent.at(p);
        w.push_back(a);
        p = prev;
      }
      return {false, Word(w.rbegin(), w.rend())};
    }
    for (std::size_t a = 0; a < n.alphabet.size(); ++a) {
      const Pair next{step(cur.first, a), step(cur.second, a)};
      if (parent.emplace(next, std::make_pair(cur, a)).second) queue.push_back(next);
    }
  }
  return {true, std::nullopt};
}

namespace {

bool single_char_labels(const Carrier& alphabet) {
  for (const auto& name : alphabet.names()) {
    if (name.size() != 1) return false;
  }
  return true;
}

}  // namespace

std::string format_word(const Carrier& alphabet, const Word& w) {
  if (w.empty()) return "ε";
  const bool compact = single_char_labels(alphabet);
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !compact) s += '.';
    s += alphabet.name(w[i]);
  }
  return s;
}

Word parse_word(const Carrier& alphabet, const std::string& text) {
  Word w;
  if (text.empty() || text == "ε") return w;
  if (single_char_labels(alphabet)) {
    for (char ch : text) w.push_back(alphabet.at(std::string(1, ch)));
    return w;
  }
  std::size_t start = 0;
  for (;;) {
    const std::size_t dot = text.find('.', start);
    w.push_back(alphabet.at(text.substr(start, dot - start)));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return w;
}

}  // namespace cobeh
