#include <doctest.h>

#include "cobeh/core/error.hpp"
#include "cobeh/core/random.hpp"
#include "cobeh/io/generators.hpp"
#include "cobeh/io/json_io.hpp"
#include "fixtures.hpp"

using namespace cobeh;
using Json = nlohmann::ordered_json;

namespace {

SystemFile round_trip(const SystemFile& s) { return load_system(Json::parse(save_system(s).dump())); }

void expect_malformed(const char* text) {
  CHECK_THROWS_AS(load_system(Json::parse(text)), MalformedInput);
}

}  // namespace

TEST_CASE("round trip for every family") {
  for (std::uint64_t t = 0; t < 25; ++t) {
    Rng rng = Rng::derive(123, t);
    const SystemFile n = random_nda(rng);
    const SystemFile l = random_lwa(rng);
    const SystemFile c = random_cts(rng);
    CHECK(round_trip(n) == n);
    CHECK(round_trip(l) == l);
    CHECK(round_trip(c) == c);
    for (auto sem : {MooreSemantics::trace, MooreSemantics::failure, MooreSemantics::ready}) {
      const Lts lts = random_lts(rng);
      const SystemFile m = MooreSystem{with_semantics(lts, sem), sem};
      CHECK(round_trip(m) == m);
    }
  }
}

TEST_CASE("explicit Moore lattices round trip") {
  OutputLts table{fixtures::branching_lts(),
                  Semilattice::table(Carrier({"lo", "mid", "hi"}), {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}}, 0),
                  std::vector<LatticeElem>(9, 1)};
  table.outputs[3] = 2;
  const SystemFile a = MooreSystem{table, std::nullopt};
  CHECK(round_trip(a) == a);

  OutputLts sets{fixtures::branching_lts(), Semilattice::powerset(Carrier({"u", "v"})), std::vector<LatticeElem>(9, 0)};
  sets.outputs[1] = 0b11;
  const SystemFile b = MooreSystem{sets, std::nullopt};
  CHECK(round_trip(b) == b);
  CHECK(save_system(b)["outputs"]["p1"] == Json::array({"u", "v"}));
}

TEST_CASE("documents are read as written") {
  const auto s = load_system(Json::parse(R"({
    "kind": "lwa", "states": ["x", "y"], "alphabet": ["a"],
    "output": {"y": "3/6"},
    "matrices": {"a": [["0", 1], ["-1/2", "0"]]}
  })"));
  const Lwa& l = std::get<Lwa>(s);
  CHECK(l.output == QVector{0, Rational(1, 2)});
  CHECK(l.matrices[0][1][0] == Rational(-1, 2));
  CHECK(family_of(s) == Family::lwa);
  CHECK(save_system(s)["output"]["y"] == "1/2");
}

TEST_CASE("malformed documents are rejected") {
  expect_malformed(R"({"states": ["x"], "alphabet": [], "transitions": []})");
  expect_malformed(R"({"kind": "dfa"})");
  expect_malformed(R"({"kind": "nda", "states": ["x", "x"], "alphabet": ["a"], "transitions": []})");
  expect_malformed(R"({"kind": "nda", "states": ["x"], "alphabet": ["a"],
                       "transitions": [{"from": "x", "action": "b", "to": "x"}]})");
  expect_malformed(R"({"kind": "nda", "states": ["x"], "alphabet": ["a"], "transitions": [], "accepting": ["q"]})");
  expect_malformed(R"({"kind": "lwa", "states": ["x"], "alphabet": ["a"], "matrices": {"a": [["1/0"]]}})");
  expect_malformed(R"({"kind": "lwa", "states": ["x"], "alphabet": ["a"], "matrices": {"a": [[1, 2]]}})");
  expect_malformed(R"({"kind": "lwa", "states": ["x"], "alphabet": ["a"], "matrices": {"a": [[0.5]]}})");
  expect_malformed(R"({"kind": "cts", "conditions": ["k"], "states": ["x"],
                       "transitions": [{"cond": "j", "from": "x", "to": "x"}]})");
  expect_malformed(R"({"kind": "moore", "states": ["x"], "alphabet": ["a"], "transitions": [],
                       "semantics": "bisimulation"})");
  expect_malformed(R"({"kind": "moore", "states": ["x"], "alphabet": ["a"], "transitions": [],
                       "lattice": "boolean", "outputs": {}})");
  expect_malformed(R"({"kind": "moore", "states": ["x"], "alphabet": ["a"], "transitions": [],
                       "lattice": {"elements": ["0", "1"], "join": [["0", "0"], ["0", "1"]], "bottom": "0"},
                       "outputs": {"x": "1"}})");
  CHECK_THROWS_AS(load_system_file("/nonexistent/system.json"), MalformedInput);
}
