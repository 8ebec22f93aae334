#include <doctest.h>

#include "cobeh/core/error.hpp"
#include "cobeh/systems/determinize.hpp"
#include "cobeh/systems/systems.hpp"
#include "fixtures.hpp"

using namespace cobeh;

TEST_CASE("validation names the offending parts") {
  Nda n = fixtures::worked_example();
  CHECK(validate(n).empty());
  n.transitions.push_back({0, 5, 1});
  n.accepting.push_back(9);
  const auto diags = validate(n);
  REQUIRE(diags.size() == 2);
  CHECK(diags[0].find("action index 5") != std::string::npos);
  CHECK(diags[1].find("accepting") != std::string::npos);
  CHECK_THROWS_AS(require_valid(diags, "automaton"), MalformedInput);

  Lwa l = fixtures::splitting_lwa();
  CHECK(validate(l).empty());
  l.matrices[0].pop_back();
  CHECK_FALSE(validate(l).empty());

  Cts c = fixtures::two_condition_cts();
  c.transitions.push_back({2, 0, 0});
  CHECK_FALSE(validate(c).empty());
}

TEST_CASE("successor tables and weighted steps") {
  const Nda n = fixtures::worked_example();
  const SuccTable t = tabulate(n);
  CHECK(post(t, 0b011, 0) == 0b100);
  CHECK(post(t, 0b001, 1) == 0);
  CHECK(accepting_mask(n) == 0b100);

  const Lwa l = fixtures::splitting_lwa();
  const QVector next = lwa_step(l, unit_vector(3, 0), 0);
  CHECK(format_vector(next) == "[0, 1/2, 1/2]");
  CHECK(lwa_output(l, next) == Rational(1));
  CHECK_THROWS_AS(lwa_step(l, QVector{1, 0}, 0), DimensionMismatch);
}

TEST_CASE("forward determinization of the worked example") {
  const Nda n = fixtures::worked_example();
  const DeterminizedMachine d = forward_determinize(n, {0b001, 0b010});
  // {x}, {y}, {z} and the empty set are reachable, in mask order.
  CHECK(d.subset_states == std::vector<Mask>{0b000, 0b001, 0b010, 0b100});
  const std::size_t x = d.index_of(0b001);
  CHECK(d.subset_states[d.target(x, 0)] == 0b100);
  CHECK(d.subset_states[d.target(x, 1)] == 0);
  CHECK(d.out[d.index_of(0b100)] == 1);
  CHECK(d.out[x] == 0);
  CHECK(d.label(x) == "{x}");
  CHECK_THROWS_AS(d.index_of(0b011), MalformedInput);
  CHECK_THROWS_AS(forward_determinize(n, {0b1000}), MalformedInput);
}

TEST_CASE("generalized determinization joins outputs") {
  OutputLts m{fixtures::branching_lts(), Semilattice::powerset(Carrier({"u", "v"})), {}};
  m.outputs.assign(9, 0);
  m.outputs[5] = 0b01;
  m.outputs[6] = 0b10;
  const DeterminizedMachine d = moore_determinize(m, {singleton(4)});
  const std::size_t after_a = d.target(d.index_of(singleton(4)), 0);
  CHECK(d.subset_states[after_a] == (singleton(5) | singleton(6)));
  CHECK(d.out[after_a] == 0b11);
  CHECK(d.out[d.index_of(0)] == 0);
}
