#include "cobeh/equivalence/lwa_equiv.hpp"

#include <algorithm>
#include <stdexcept>

#include "cobeh/core/error.hpp"

namespace cobeh {

UnobservableSubspace lwa_unobservable_subspace(const Lwa& l) {
  require_valid(validate(l), "weighted automaton");
  const std::size_t n = l.states.size();
  const std::vector<QVector> seed{l.output};
  Subspace annihilator = Subspace::echelonize(seed, n);
  std::size_t iterations = 1;
  for (;;) {
    std::vector<QVector> gens = annihilator.basis();
    for (const auto& m : l.matrices) {
      for (const auto& c : annihilator.basis()) gens.push_back(times_column(m, c));
    }
    Subspace next = Subspace::echelonize(gens, n);
    if (next.rank() == annihilator.rank()) break;
    annihilator = std::move(next);
    ++iterations;
  }
  if (iterations > std::max<std::size_t>(n, 1)) {
    throw std::logic_error("observability chain exceeded the state count");
  }
  return {annihilator.orthogonal_complement(), iterations};
}

Rational lwa_trace(const Lwa& l, const QVector& p, const Word& w) {
  QVector cur = p;
  for (auto a : w) cur = lwa_step(l, cur, a);
  return lwa_output(l, cur);
}

bool lwa_equiv(const Lwa& l, const QVector& p, const QVector& q) {
  if (p.size() != l.states.size() || q.size() != l.states.size()) {
    throw DimensionMismatch("vector dimension does not match the state count");
  }
  return lwa_unobservable_subspace(l).space.contains(sub(p, q));
}

PairVerdict lwa_trace_oracle(const Lwa& l, const QVector& p, const QVector& q, std::size_t maxlen) {
  // Level-by-level expansion keeps the current vectors, so each word costs
  // one step per side.
  struct Node {
    Word word;
    QVector left;
    QVector right;
  };
  std::vector<Node> level{{{}, p, q}};
  for (std::size_t len = 0;; ++len) {
    for (const auto& node : level) {
      if (lwa_output(l, node.left) != lwa_output(l, node.right)) return {false, node.word};
    }
    if (len == maxlen) break;
    std::vector<Node> next;
    for (const auto& node : level) {
      for (std::size_t a = 0; a < l.alphabet.size(); ++a) {
        Word w = node.word;
        w.push_back(a);
        next.push_back({std::move(w), lwa_step(l, node.left, a), lwa_step(l, node.right, a)});
      }
    }
    level = std::move(next);
  }
  return {true, std::nullopt};
}

}  // namespace cobeh
