#include <doctest.h>

#include "cobeh/core/bitrel.hpp"
#include "cobeh/core/error.hpp"
#include "cobeh/core/gfp.hpp"
#include "cobeh/core/random.hpp"
#include "cobeh/core/rational.hpp"
#include "cobeh/core/semilattice.hpp"
#include "cobeh/core/subset.hpp"
#include "cobeh/core/subspace.hpp"

using namespace cobeh;

TEST_CASE("rationals stay in lowest terms") {
  CHECK(Rational::parse("2/4").str() == "1/2");
  CHECK(Rational::parse(" -6/3 ").str() == "-2");
  CHECK(Rational::parse("3/-9").str() == "-1/3");
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK((Rational(2, 3) * Rational(-3, 4)).str() == "-1/2");
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), MalformedInput);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), MalformedInput);
  CHECK_THROWS_AS(Rational::parse("abc"), MalformedInput);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rationals do not overflow") {
  Rational big = 1;
  for (int i = 0; i < 80; ++i) big *= Rational(3);
  CHECK(big.str().size() == 39);  // 3^80 has 39 digits
  CHECK((big / big).str() == "1");
}

TEST_CASE("vectors parse and print") {
  const QVector v = parse_vector("[1/2, 0, -3]");
  REQUIRE(v.size() == 3);
  CHECK(v[0] == Rational(1, 2));
  CHECK(format_vector(v) == "[1/2, 0, -3]");
  CHECK(parse_vector("[]").empty());
  CHECK_THROWS_AS(parse_vector("1, 2"), MalformedInput);
  CHECK_THROWS_AS(add(QVector{1}, QVector{1, 2}), DimensionMismatch);
  CHECK(row_times(QVector{1, 2}, QMatrix{{1, 0}, {1, 1}}) == QVector{3, 2});
  CHECK(times_column(QMatrix{{1, 0}, {1, 1}}, QVector{1, 2}) == QVector{1, 3});
}

TEST_CASE("subspaces are canonical") {
  const Subspace a = Subspace::echelonize(std::vector<QVector>{{2, 4, 0}, {1, 2, 0}}, 3);
  const Subspace b = Subspace::echelonize(std::vector<QVector>{{-1, -2, 0}}, 3);
  CHECK(a == b);
  CHECK(a.rank() == 1);
  CHECK(a.contains({3, 6, 0}));
  CHECK_FALSE(a.contains({1, 0, 0}));

  const Subspace perp = a.orthogonal_complement();
  CHECK(perp.rank() == 2);
  for (const auto& v : perp.basis()) CHECK(dot(v, QVector{1, 2, 0}) == Rational(0));
  CHECK(perp.orthogonal_complement() == a);

  const Subspace xy = Subspace::echelonize(std::vector<QVector>{{1, 0, 0}, {0, 1, 0}}, 3);
  const Subspace yz = Subspace::echelonize(std::vector<QVector>{{0, 1, 0}, {0, 0, 1}}, 3);
  CHECK(xy.intersect(yz) == Subspace::echelonize(std::vector<QVector>{{0, 1, 0}}, 3));
  CHECK(xy.sum(yz) == Subspace::full(3));
  CHECK(Subspace::zero(3).orthogonal_complement() == Subspace::full(3));
  CHECK_THROWS_AS(Subspace::echelonize(std::vector<QVector>{{1, 2}}, 3), DimensionMismatch);
}

TEST_CASE("subsets use member labels") {
  const Carrier c({"x", "y", "z"});
  CHECK(format_subset(c, 0b011) == "{x,y}");
  CHECK(format_subset(c, 0) == "{}");
  CHECK(parse_subset(c, "{z, x}") == 0b101);
  CHECK(parse_subset(c, "∅") == 0);
  CHECK(parse_subset(c, "{}") == 0);
  CHECK_THROWS_AS(parse_subset(c, "{w}"), MalformedInput);
  CHECK_THROWS_AS(Carrier({"x", "x"}), MalformedInput);
  CHECK_THROWS_AS(require_powerset_cap(13), CapExceeded);
  CHECK(all_masks(3).size() == 8);
  CHECK(members(0b1010) == std::vector<std::size_t>{1, 3});
}

TEST_CASE("bit relations") {
  BitRel r = BitRel::identity(5);
  r.set(0, 3);
  r.set(3, 4);
  CHECK_FALSE(r.is_equivalence());
  CHECK(r.classes() == std::vector<std::vector<std::size_t>>{{0, 3, 4}, {1}, {2}});
  CHECK(BitRel::full(4).is_equivalence());
  CHECK(BitRel::identity(4).is_subset_of(BitRel::full(4)));
  CHECK(BitRel::full(70).count() == 4900);
  const std::vector<std::size_t> f{1, 1, 0};
  const BitRel pulled = rel_pullback(BitRel::identity(2), f);
  CHECK(pulled.contains(0, 1));
  CHECK_FALSE(pulled.contains(0, 2));
}

TEST_CASE("semilattice tables are checked") {
  const Carrier three({"0", "m", "1"});
  const auto ok = Semilattice::table(three, {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}}, 0);
  CHECK(ok.join(1, 2) == 2);
  CHECK(ok.format(1) == "m");
  CHECK(ok.parse("1") == 2);

  const auto bad = Semilattice::diagnose(three, {{0, 1, 2}, {2, 1, 2}, {2, 2, 2}}, 0);
  CHECK_FALSE(bad.empty());
  CHECK_THROWS_AS(Semilattice::table(three, {{0, 1, 2}, {2, 1, 2}, {2, 2, 2}}, 0), MalformedInput);
  CHECK_THROWS_AS(Semilattice::table(three, {{1, 1, 2}, {1, 1, 2}, {2, 2, 2}}, 0), MalformedInput);

  const auto ps = Semilattice::powerset(Carrier({"a", "b"}));
  CHECK(ps.join(0b01, 0b10) == 0b11);
  CHECK(ps.format(0b11) == "{a,b}");
  CHECK(ps.parse("{b}") == 0b10);
  CHECK(ps.bottom() == 0);
}

struct SetRel {
  std::vector<bool> bits;
  SetRel operator&(const SetRel& o) const {
    SetRel r = *this;
    for (std::size_t i = 0; i < bits.size(); ++i) r.bits[i] = bits[i] && o.bits[i];
    return r;
  }
  bool operator==(const SetRel&) const = default;
  bool is_subset_of(const SetRel& o) const {
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] && !o.bits[i]) return false;
    }
    return true;
  }
};

TEST_CASE("gfp iterates downward and rejects non-monotone steps") {
  // Keep i while i + 1 is kept (the last element never is).
  auto step = [](const SetRel& r) {
    SetRel out{std::vector<bool>(r.bits.size(), false)};
    for (std::size_t i = 0; i + 1 < r.bits.size(); ++i) out.bits[i] = r.bits[i + 1];
    return out;
  };
  const auto res = gfp(step, SetRel{std::vector<bool>(4, true)});
  CHECK(res.relation.bits == std::vector<bool>(4, false));
  CHECK(res.iterations == 5);

  int calls = 0;
  auto flip = [&calls](const SetRel& r) {
    SetRel out = r;
    if (++calls == 2) std::fill(out.bits.begin(), out.bits.end(), true);
    else out.bits[calls % out.bits.size()] = false;
    return out;
  };
  CHECK_THROWS_AS(gfp(flip, SetRel{std::vector<bool>(3, true)}), std::logic_error);
}

TEST_CASE("SplitMix64 stream") {
  Rng r(0);
  CHECK(r.next() == 0xE220A8397B1DCDAFULL);
  CHECK(r.next() == 0x6E789E6AA1B965F4ULL);
  Rng a = Rng::derive(5, 3);
  Rng b = Rng::derive(5, 3);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  Rng c(9);
  for (int i = 0; i < 200; ++i) {
    const auto v = c.between(2, 4);
    CHECK(v >= 2);
    CHECK(v <= 4);
  }
}
