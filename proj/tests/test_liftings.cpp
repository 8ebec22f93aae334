#include <doctest.h>

#include "cobeh/core/error.hpp"
#include "cobeh/equivalence/cond_rel.hpp"
#include "cobeh/liftings/laws.hpp"
#include "cobeh/liftings/liftings.hpp"
#include "cobeh/systems/determinize.hpp"
#include "fixtures.hpp"

using namespace cobeh;

TEST_CASE("theta and gamma for the powerset") {
  const NdaFSet t = theta_nda(FElem<Mask>::act(1, 0b101));
  CHECK(t == NdaFSet{NdaFElem::act(1, 0), NdaFElem::act(1, 2)});
  CHECK(theta_nda(FElem<Mask>::terminal()) == NdaFSet{NdaFElem::terminal()});
  CHECK(theta_nda(FElem<Mask>::act(0, 0)).empty());

  const GValueNda g = gamma_nda({NdaFElem::act(0, 1), NdaFElem::act(1, 0), NdaFElem::act(1, 2)}, 2);
  CHECK(g.per_action == std::vector<Mask>{0b010, 0b101});
  CHECK_FALSE(g.term);
  CHECK(gamma_nda({NdaFElem::terminal()}, 2).term);
}

TEST_CASE("theta and gamma for weights") {
  const LwaFMap t = theta_lwa(FElem<QVector>::act(0, {Rational(1, 2), 0, 3}));
  CHECK(t.size() == 2);
  CHECK(t.at(NdaFElem::act(0, 0)) == Rational(1, 2));
  CHECK(t.at(NdaFElem::act(0, 2)) == Rational(3));
  const GValueLwa g = gamma_lwa(t, 2, 3);
  CHECK(g.per_action[0] == QVector{Rational(1, 2), 0, 3});
  CHECK(is_zero(g.per_action[1]));
  CHECK(g.out == Rational(0));
}

TEST_CASE("relation liftings") {
  // Relate {x} and {y} only (plus the diagonal) on masks over three states.
  BitRel r = BitRel::identity(8);
  r.set(0b001, 0b010);
  r.set(0b010, 0b001);
  const NdaFSet u{NdaFElem::act(0, 0), NdaFElem::terminal()};
  const NdaFSet v{NdaFElem::act(0, 1), NdaFElem::terminal()};
  CHECK(rel_lift_nda(r, u, v, 1));
  CHECK_FALSE(rel_lift_nda(r, u, {NdaFElem::act(0, 1)}, 1));
  CHECK_FALSE(rel_lift_nda(r, u, {NdaFElem::act(0, 2), NdaFElem::terminal()}, 1));

  const Subspace w = Subspace::echelonize(std::vector<QVector>{{0, 1, -1}}, 3);
  const LwaFMap p{{NdaFElem::act(0, 1), Rational(1)}};
  const LwaFMap q{{NdaFElem::act(0, 2), Rational(1)}};
  CHECK(rel_lift_lwa(w, p, q, 1, 3));
  CHECK_FALSE(rel_lift_lwa(w, p, {{NdaFElem::act(0, 0), Rational(1)}}, 1, 3));
  CHECK_FALSE(rel_lift_lwa(w, p, {{NdaFElem::act(0, 1), Rational(1)}, {NdaFElem::terminal(), Rational(1)}}, 1, 3));
  CHECK_THROWS_AS(rel_lift_lwa(Subspace::zero(2), p, q, 1, 3), DimensionMismatch);

  CondRel cr = CondRel::identity(1, 3);
  cr.set(0, 0, 1);
  cr.set(0, 1, 0);
  CHECK(rel_lift_cts(cr, 0, 0b001, 0b011));
  CHECK_FALSE(rel_lift_cts(cr, 0, 0b001, 0b110));
  CHECK(rel_lift_cts(cr, 0, 0, 0));
  CHECK_FALSE(rel_lift_cts(cr, 0, 0, 0b001));
}

TEST_CASE("derived modalities") {
  const Cts c = fixtures::two_condition_cts();
  // pred = { (k, z) } for both conditions
  Predicate pred(6, false);
  pred[2] = pred[5] = true;
  const Predicate box = mod_cts_box(c, pred);
  CHECK(box == Predicate{true, true, true, true, true, true});
  Predicate none(6, false);
  CHECK(mod_cts_box(c, none) == Predicate{false, false, true, false, true, true});

  const DeterminizedMachine d = forward_determinize(fixtures::worked_example(), {0b001, 0b010});
  Predicate accepting(d.size(), false);
  accepting[d.index_of(0b100)] = true;
  const Predicate after_b = mod_nda(NdaModality::on(1), accepting, d);
  CHECK(after_b[d.index_of(0b010)]);
  CHECK_FALSE(after_b[d.index_of(0b001)]);
  CHECK(mod_nda(NdaModality::terminates(), accepting, d) == accepting);

  const Lwa l = fixtures::splitting_lwa();
  const Region pays_one = [&](const QVector& v) { return lwa_output(l, v) == Rational(1); };
  CHECK(mod_lwa(LwaModality::on(0), pays_one, unit_vector(3, 0), l));
  CHECK(mod_lwa(LwaModality::outputs(Rational(0)), pays_one, unit_vector(3, 0), l));
  CHECK_FALSE(mod_lwa(LwaModality::outputs(Rational(1)), pays_one, unit_vector(3, 0), l));
}

TEST_CASE("law checker is deterministic and reports counterexamples") {
  for (Family f : {Family::nda, Family::lwa, Family::cts, Family::moore}) {
    const LawReport a = check_lifting_laws(f, 10, 99);
    const LawReport b = check_lifting_laws(f, 10, 99);
    CHECK(a.all_passed());
    REQUIRE(a.laws.size() == b.laws.size());
    for (const auto& [law, mutation] : law_mutations(f)) {
      CHECK(a.find(law) != nullptr);
      CHECK(mutation != Mutation::none);
    }
  }
  const LawReport broken = check_lifting_laws(Family::nda, 10, 99, Mutation::theta_drops_term);
  const LawResult* unit = broken.find("kleisli_unit");
  REQUIRE(unit != nullptr);
  CHECK(unit->failed_trials == 10);
  CHECK(unit->failures.size() == 3);
  CHECK(parse_family("cts") == Family::cts);
  CHECK_THROWS_AS(parse_family("dfa"), MalformedInput);
}
