#include "cobeh/logic/logic.hpp"

#include "cobeh/core/error.hpp"
#include "cobeh/equivalence/lwa_equiv.hpp"
#include "cobeh/systems/determinize.hpp"

namespace cobeh {

bool eval_word_nda(const Nda& n, Mask u, const Word& w) {
  const SuccTable t = tabulate(n);
  if (!mask_in_range(u, n.states.size())) throw MalformedInput("subset out of range");
  for (auto a : w) {
    if (a >= n.alphabet.size()) throw MalformedInput("unknown action index " + std::to_string(a));
    u = post(t, u, a);
  }
  return (u & accepting_mask(n)) != 0;
}

Predicate eval_cts(const Cts& c, const CtsFormula& f) {
  const std::size_t size = c.conditions.size() * c.states.size();
  switch (f.op()) {
    case CtsFormula::Op::tt:
      return Predicate(size, true);
    case CtsFormula::Op::neg: {
      Predicate p = eval_cts(c, *f.left());
      p.flip();
      return p;
    }
    case CtsFormula::Op::conj: {
      Predicate p = eval_cts(c, *f.left());
      const Predicate q = eval_cts(c, *f.right());
      for (std::size_t i = 0; i < size; ++i) p[i] = p[i] && q[i];
      return p;
    }
    case CtsFormula::Op::box:
      return mod_cts_box(c, eval_cts(c, *f.left()));
  }
  return {};
}

std::vector<Word> words_upto(std::size_t m, std::size_t maxlen) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= maxlen && m > 0; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t a = 0; a < m; ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

Theory<bool> theory_word(const Nda& n, Mask u, std::size_t maxlen) {
  const DeterminizedMachine d = forward_determinize(n, {u});
  Theory<bool> out;
  for (auto& w : words_upto(n.alphabet.size(), maxlen)) {
    std::size_t i = d.index_of(u);
    for (auto a : w) i = d.target(i, a);
    out.emplace_back(std::move(w), d.out[i] != 0);
  }
  return out;
}

Theory<Rational> theory_word(const Lwa& l, const QVector& p, std::size_t maxlen) {
  Theory<Rational> out;
  for (auto& w : words_upto(l.alphabet.size(), maxlen)) {
    Rational v = lwa_trace(l, p, w);
    out.emplace_back(std::move(w), std::move(v));
  }
  return out;
}

Theory<LatticeElem> theory_word(const OutputLts& m, Mask u, std::size_t maxlen) {
  const DeterminizedMachine d = moore_determinize(m, {u});
  Theory<LatticeElem> out;
  for (auto& w : words_upto(m.lts.alphabet.size(), maxlen)) {
    std::size_t i = d.index_of(u);
    for (auto a : w) i = d.target(i, a);
    out.emplace_back(std::move(w), d.out[i]);
  }
  return out;
}

}  // namespace cobeh
