#pragma once

#include <cstddef>

#include "cobeh/core/random.hpp"
#include "cobeh/core/rational.hpp"
#include "cobeh/systems/systems.hpp"

namespace cobeh {

/// Random instances for oracle runs. Sizes are drawn uniformly from
/// [1, max]; every possible edge is present with probability 1/2 (1/3 for
/// CTS, which keeps some states bisimilar).
Nda random_nda(Rng& rng, std::size_t max_states = 5, std::size_t max_actions = 2);
/// Weights from {0, ±1, ±1/2, 2}. With probability 1/2 the last state
/// copies the first state's row and output, so equivalences are not rare.
Lwa random_lwa(Rng& rng, std::size_t max_states = 4, std::size_t max_actions = 2);
Cts random_cts(Rng& rng, std::size_t max_conditions = 3, std::size_t max_states = 6);
Lts random_lts(Rng& rng, std::size_t max_states = 4, std::size_t max_actions = 2);

Rational random_weight(Rng& rng);

}  // namespace cobeh
