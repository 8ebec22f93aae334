#include <doctest.h>

#include "cobeh/core/error.hpp"
#include "cobeh/equivalence/moore_equiv.hpp"
#include "cobeh/logic/adequacy.hpp"
#include "cobeh/logic/formula.hpp"
#include "cobeh/logic/logic.hpp"
#include "fixtures.hpp"

using namespace cobeh;

TEST_CASE("word formulas") {
  const Carrier ab({"a", "b"});
  CHECK(render_word_formula(ab, {0, 1}) == "[a][b]↓");
  CHECK(render_word_formula(ab, {}) == "↓");
  CHECK(parse_word_formula(ab, "[b][a]↓") == Word{1, 0});
  CHECK(parse_word_formula(ab, "ab") == Word{0, 1});
  CHECK_THROWS_AS(parse_word_formula(ab, "[c]↓"), MalformedInput);

  const Nda n = fixtures::worked_example();
  CHECK(eval_word_nda(n, 0b010, {1}));
  CHECK_FALSE(eval_word_nda(n, 0b001, {1}));
  CHECK(words_upto(2, 3).size() == 15);
  CHECK(words_upto(2, 2)[3] == Word{0, 0});

  const Theory<bool> th = theory_word(n, 0b011, 2);
  REQUIRE(th.size() == 7);
  CHECK(th[1] == std::pair<Word, bool>{{0}, true});
  CHECK(th[2] == std::pair<Word, bool>{{1}, true});
  CHECK_FALSE(th[0].second);
}

TEST_CASE("CTS formulas") {
  const auto f = parse_cts_formula("□(tt ∧ ¬□¬tt)");
  CHECK(f->render() == "□(tt ∧ ¬□¬tt)");
  CHECK(f->modal_depth() == 2);
  CHECK(parse_cts_formula("<>tt")->render() == "¬□¬tt");
  CHECK(parse_cts_formula("[](!tt & tt)")->render() == "□(¬tt ∧ tt)");
  CHECK_THROWS_AS(parse_cts_formula("□"), MalformedInput);
  CHECK_THROWS_AS(parse_cts_formula("(tt ∧ tt"), MalformedInput);

  const Cts c = fixtures::two_condition_cts();
  // Deadlock: □¬tt. Holds at z everywhere and at y under k2.
  const Predicate dead = eval_cts(c, *CtsFormula::box(CtsFormula::neg(CtsFormula::tt())));
  CHECK(dead == Predicate{false, false, true, false, true, true});
}

TEST_CASE("distinguishing formulas are genuine") {
  const Cts c = fixtures::two_condition_cts();
  CHECK(cts_distinguishing_formula(c, 0, 0, 1) == nullptr);
  const auto f = cts_distinguishing_formula(c, 1, 0, 1);
  REQUIRE(f);
  const Predicate sat = eval_cts(c, *f);
  CHECK(sat[3]);
  CHECK_FALSE(sat[4]);
}

TEST_CASE("logical relation grows finer with depth") {
  const Cts c = fixtures::two_condition_cts();
  const BitRel d0 = cts_logical_relation(c, 0);
  const BitRel d1 = cts_logical_relation(c, 1);
  CHECK(d0.contains(3, 4));
  CHECK_FALSE(d1.contains(3, 4));
  CHECK_FALSE(d0.contains(0, 3));  // different conditions are never related
  CHECK(d1.is_subset_of(d0));
}

TEST_CASE("adequacy reports") {
  const EquivReport nda = check_adequacy_nda(fixtures::worked_example(), all_masks(3));
  CHECK(nda.adequate);
  CHECK(nda.expressive);
  CHECK(nda.counterexamples.empty());
  CHECK(nda.behavioural_classes().size() == 6);

  const Lwa l = fixtures::splitting_lwa();
  const EquivReport lwa = check_adequacy_lwa(l, default_lwa_points(l));
  CHECK(lwa.adequate);
  CHECK(lwa.expressive);
  CHECK(lwa.depth_saturated);
  CHECK(lwa.labels.size() == 4);

  const EquivReport cts = check_adequacy_cts(fixtures::two_condition_cts());
  CHECK(cts.adequate);
  CHECK(cts.expressive);
  CHECK(cts.depth_saturated);

  const OutputLts m = with_semantics(fixtures::branching_lts(), MooreSemantics::failure);
  const EquivReport moore = check_adequacy_moore(m, {singleton(0), singleton(4)});
  CHECK(moore.adequate);
  CHECK(moore.expressive);
}
