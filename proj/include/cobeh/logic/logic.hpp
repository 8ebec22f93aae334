#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cobeh/core/rational.hpp"
#include "cobeh/core/semilattice.hpp"
#include "cobeh/liftings/liftings.hpp"
#include "cobeh/logic/formula.hpp"
#include "cobeh/systems/systems.hpp"

namespace cobeh {

/// U_w is accepting.
bool eval_word_nda(const Nda& n, Mask u, const Word& w);

/// Satisfaction set over K x X, indexed k * |X| + x.
Predicate eval_cts(const Cts& c, const CtsFormula& f);

/// All words of length <= maxlen over m letters in shortlex order.
std::vector<Word> words_upto(std::size_t m, std::size_t maxlen);

template <class Obs>
using Theory = std::vector<std::pair<Word, Obs>>;

Theory<bool> theory_word(const Nda& n, Mask u, std::size_t maxlen);
Theory<Rational> theory_word(const Lwa& l, const QVector& p, std::size_t maxlen);
/// Observation o'(U_w) of the generalized determinization.
Theory<LatticeElem> theory_word(const OutputLts& m, Mask u, std::size_t maxlen);

}  // namespace cobeh
