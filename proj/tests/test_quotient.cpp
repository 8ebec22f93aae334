#include <doctest.h>

#include "cobeh/core/error.hpp"
#include "cobeh/core/random.hpp"
#include "cobeh/equivalence/cts_equiv.hpp"
#include "cobeh/equivalence/nda_equiv.hpp"
#include "cobeh/io/generators.hpp"
#include "cobeh/quotient/cts_quotient.hpp"
#include "cobeh/quotient/quotient.hpp"
#include "fixtures.hpp"

using namespace cobeh;

namespace {

BitRel language(const Nda& n) { return nda_language_equiv(n, all_masks(n.states.size())).relation; }

}  // namespace

TEST_CASE("backward determinization") {
  const BackwardDfa b = backward_determinize(fixtures::worked_example());
  CHECK(b.datum == 0b100);
  CHECK(b.target(0b100, 0) == 0b011);
  CHECK(b.target(0b100, 1) == 0b010);
  CHECK(b.target(0b011, 0) == 0);
  CHECK(b.accepting(0b110));
  CHECK_FALSE(b.accepting(0b011));
}

TEST_CASE("equalizer automaton of the worked example") {
  const Nda n = fixtures::worked_example();
  const EqualizerAutomaton e = build_equalizer_automaton(n, language(n));
  CHECK(e.carrier == std::vector<Mask>{0b000, 0b010, 0b011, 0b100, 0b110, 0b111});
  CHECK(e.label(e.datum) == "{z}");
  CHECK(e.carrier[e.target(e.datum, 0)] == 0b011);
  CHECK(e.kappa(0, *e.find(0b011)));
  CHECK_FALSE(e.kappa(0, *e.find(0b010)));
  CHECK(redundant_states(e) == std::vector<Mask>{0b000, 0b110, 0b111});
  CHECK(verify_homomorphism_rel(n, e).holds);
}

TEST_CASE("equalizer extremes") {
  const Nda n = fixtures::worked_example();
  // The identity keeps every subset.
  const EqualizerAutomaton full = build_equalizer_automaton(n, BitRel::identity(8));
  CHECK(full.size() == 8);
  CHECK(verify_homomorphism_rel(n, full).holds);
  // Relating everything leaves only the empty set: any W meeting some U
  // fails to meet the empty set, which is related to U.
  CHECK(equalizer_subset(n, BitRel::full(8)) == std::vector<Mask>{0});
  CHECK_THROWS_AS(equalizer_subset(n, BitRel::identity(4)), MalformedInput);
}

TEST_CASE("equalizer without accepting states") {
  Nda n = fixtures::worked_example();
  n.accepting.clear();
  const EqualizerAutomaton e = build_equalizer_automaton(n, language(n));
  CHECK(e.carrier == std::vector<Mask>{0});
  CHECK(verify_homomorphism_rel(n, e).holds);
}

TEST_CASE("a relation that is not a congruence is rejected") {
  const Nda n = fixtures::worked_example();
  // Relating {x} with {y} ignores the b-transition of y.
  BitRel r = BitRel::identity(8);
  r.set(0b001, 0b010);
  r.set(0b010, 0b001);
  CHECK_THROWS_AS(build_equalizer_automaton(n, r), MalformedInput);
  Nda big{Carrier::numbered("s", 7), Carrier({"a"}), {}, {}};
  CHECK_THROWS_AS(build_equalizer_automaton(big, BitRel::identity(128)), CapExceeded);
}

TEST_CASE("homomorphism holds on random automata") {
  for (std::uint64_t t = 0; t < 40; ++t) {
    Rng rng = Rng::derive(5, t);
    const Nda n = random_nda(rng, 4, 2);
    const EqualizerAutomaton e = build_equalizer_automaton(n, language(n));
    const auto check = verify_homomorphism_rel(n, e);
    CHECK_MESSAGE(check.holds, check.witness.value_or(""));
  }
}

TEST_CASE("CTS quotient") {
  const Cts c = fixtures::two_condition_cts();
  const CtsQuotient q = cts_quotient(c, cts_conditional_bisim(c).relation);
  // k1: {x,y}, {z}; k2: {x}, {y,z}
  CHECK(q.quotient.states.size() == 4);
  CHECK(q.class_of[0] == q.class_of[1]);
  CHECK(q.class_of[4] == q.class_of[5]);
  CHECK(q.quotient.states.name(q.class_of[0]) == "k1|{x,y}");
  const ConditionalBisimilarity again = cts_conditional_bisim(q.quotient);
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t s = 0; s < 4; ++s) {
      for (std::size_t t = 0; t < 4; ++t) {
        if (s != t && q.class_condition[s] == k && q.class_condition[t] == k) {
          CHECK_FALSE(again.relation.contains(k, s, t));
        }
      }
    }
  }

  CondRel bogus = CondRel::identity(2, 3);
  bogus.set(1, 0, 1);
  bogus.set(1, 1, 0);
  CHECK_THROWS_AS(cts_quotient(c, bogus), MalformedInput);
}
