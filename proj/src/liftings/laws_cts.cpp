#include <bit>
#include <set>
#include <string>
#include <utility>

#include "cobeh/equivalence/cond_rel.hpp"
#include "cobeh/liftings/liftings.hpp"
#include "laws_internal.hpp"

namespace cobeh::detail {
namespace {

using Pairs = std::set<std::pair<std::size_t, std::size_t>>;

struct Shape {
  std::size_t nk = 1;
  std::size_t nx = 1;
};

Shape random_shape(Rng& rng) { return {rng.between(1, 3), rng.between(1, 4)}; }

std::string shape_str(const Shape& s) {
  return "|K|=" + std::to_string(s.nk) + " |X|=" + std::to_string(s.nx) + " ";
}


Pairs gamma_x(std::size_t k, Mask u, Mutation mu) {
  if (mu == Mutation::gamma_drops_max && u != 0) u &= ~singleton(63 - std::countl_zero(u));
  return gamma_cts(k, u);
}

// The same law at carrier K x X: gamma(k, V) = {k} x V.
std::set<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> gamma_wx(std::size_t k, Pairs v,
                                                                                  Mutation mu) {
  if (mu == Mutation::gamma_drops_max && !v.empty()) v.erase(std::prev(v.end()));
  std::set<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> out;
  for (const auto& e : v) out.emplace(k, e);
  return out;
}

// Box at the level of K x P X: (k, U) is in box(pred) iff {k} x U is inside
// pred (pred indexed k * |X| + x).
bool box_mem(const Predicate& pred, std::size_t nx, std::size_t k, Mask u, Mutation mu) {
  if (mu == Mutation::box_as_diamond) {
    for (auto x : members(u)) {
      if (pred[k * nx + x]) return true;
    }
    return false;
  }
  for (auto x : members(u)) {
    if (!pred[k * nx + x]) return false;
  }
  return mu != Mutation::box_singleton_only || cardinality(u) <= 1;
}

bool rel_lift_x(const CondRel& r, std::size_t k, Mask u, Mask v, Mutation mu) {
  if (mu == Mutation::lifting_counts_support) {
    return cardinality(u) == cardinality(v) && rel_lift_cts(r, k, u, v);
  }
  if (mu == Mutation::lifting_one_sided) {
    for (auto x : members(u)) {
      bool matched = false;
      for (auto y : members(v)) matched = matched || r.contains(k, x, y);
      if (!matched) return false;
    }
    return true;
  }
  return rel_lift_cts(r, k, u, v);
}

Predicate random_pred(Rng& rng, std::size_t size) {
  Predicate p(size);
  for (std::size_t i = 0; i < size; ++i) p[i] = rng.chance(1, 2);
  return p;
}

CondRel random_condrel(Rng& rng, std::size_t nk, std::size_t nx) {
  CondRel r(nk, nx);
  for (std::size_t k = 0; k < nk; ++k) {
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t y = 0; y < nx; ++y) r.set(k, x, y, rng.chance(1, 2));
    }
  }
  return r;
}

// A coKleisli map f : K x X -> Y, stored as f[k * |X| + x].
std::vector<std::size_t> random_cokleisli(Rng& rng, const Shape& s, std::size_t ny) {
  std::vector<std::size_t> f(s.nk * s.nx);
  for (auto& y : f) y = rng.below(ny);
  return f;
}

Mask image(const std::vector<std::size_t>& f, std::size_t nx, std::size_t k, Mask u) {
  Mask out = 0;
  for (auto x : members(u)) out |= singleton(f[k * nx + x]);
  return out;
}

std::optional<std::string> counit(Rng& rng, Mutation mu) {
  const Shape s = random_shape(rng);
  for (std::size_t k = 0; k < s.nk; ++k) {
    for (Mask u = 0; u < (Mask{1} << s.nx); ++u) {
      Mask projected = 0;
      for (const auto& [kk, x] : gamma_x(k, u, mu)) {
        if (kk != k) return shape_str(s) + "gamma changed the condition";
        projected |= singleton(x);
      }
      if (projected != u) {
        return shape_str(s) + "at (k" + std::to_string(k) + "," + mask_str(u) +
               "): P eps . gamma = " + mask_str(projected) + " but eps = " + mask_str(u);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> comultiplication(Rng& rng, Mutation mu) {
  const Shape s = random_shape(rng);
  for (std::size_t k = 0; k < s.nk; ++k) {
    for (Mask u = 0; u < (Mask{1} << s.nx); ++u) {
      std::set<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> lhs;
      for (const auto& [kk, x] : gamma_x(k, u, mu)) lhs.emplace(kk, std::make_pair(kk, x));
      const auto rhs = gamma_wx(k, gamma_x(k, u, mu), mu);
      if (lhs != rhs) {
        return shape_str(s) + "at (k" + std::to_string(k) + "," + mask_str(u) + "): P delta . gamma has " +
               std::to_string(lhs.size()) + " elements, gamma . W gamma . delta has " +
               std::to_string(rhs.size());
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> box_naturality(Rng& rng, Mutation mu) {
  const Shape s = random_shape(rng);
  const std::size_t ny = rng.between(1, 4);
  const auto f = random_cokleisli(rng, s, ny);
  const Predicate v = random_pred(rng, s.nk * ny);
  Predicate pulled(s.nk * s.nx);
  for (std::size_t k = 0; k < s.nk; ++k) {
    for (std::size_t x = 0; x < s.nx; ++x) pulled[k * s.nx + x] = v[k * ny + f[k * s.nx + x]];
  }
  for (std::size_t k = 0; k < s.nk; ++k) {
    for (Mask u = 0; u < (Mask{1} << s.nx); ++u) {
      const bool lhs = box_mem(pulled, s.nx, k, u, mu);
      const bool rhs = box_mem(v, ny, k, image(f, s.nx, k, u), mu);
      if (lhs != rhs) {
        return shape_str(s) + "|Y|=" + std::to_string(ny) + " at (k" + std::to_string(k) + "," +
               mask_str(u) + "): box(f^-1 V) = " + std::to_string(lhs) + " but (F f)^-1 box(V) = " +
               std::to_string(rhs);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> box_meets(Rng& rng, Mutation mu) {
  const Shape s = random_shape(rng);
  const Predicate p1 = random_pred(rng, s.nk * s.nx);
  const Predicate p2 = random_pred(rng, s.nk * s.nx);
  Predicate both(p1.size());
  for (std::size_t i = 0; i < both.size(); ++i) both[i] = p1[i] && p2[i];
  for (std::size_t k = 0; k < s.nk; ++k) {
    for (Mask u = 0; u < (Mask{1} << s.nx); ++u) {
      const bool lhs = box_mem(both, s.nx, k, u, mu);
      const bool rhs = box_mem(p1, s.nx, k, u, mu) && box_mem(p2, s.nx, k, u, mu);
      if (lhs != rhs) {
        return shape_str(s) + "at (k" + std::to_string(k) + "," + mask_str(u) +
               "): box of the meet = " + std::to_string(lhs) + " but meet of the boxes = " +
               std::to_string(rhs);
      }
    }
  }
  return std::nullopt;
}

Cts random_cts(Rng& rng, const Shape& s) {
  Cts c{Carrier::numbered("k", s.nk), Carrier::numbered("x", s.nx), {}};
  for (std::size_t k = 0; k < s.nk; ++k) {
    for (std::size_t x = 0; x < s.nx; ++x) {
      for (std::size_t y = 0; y < s.nx; ++y) {
        if (rng.chance(1, 2)) c.transitions.push_back({k, x, y});
      }
    }
  }
  return c;
}

std::optional<std::string> derived_box(Rng& rng, Mutation mu) {
  const Shape s = random_shape(rng);
  const Cts c = random_cts(rng, s);
  const Predicate pred = random_pred(rng, s.nk * s.nx);
  const Predicate shipped = mod_cts_box(c, pred);
  std::vector<Mask> succ(s.nk * s.nx, 0);
  for (const auto& t : c.transitions) succ[t.condition * s.nx + t.from] |= singleton(t.to);
  for (std::size_t k = 0; k < s.nk; ++k) {
    for (std::size_t x = 0; x < s.nx; ++x) {
      const bool recipe = box_mem(pred, s.nx, k, succ[k * s.nx + x], mu);
      if (recipe != shipped[k * s.nx + x]) {
        return shape_str(s) + "at (k" + std::to_string(k) + ",x" + std::to_string(x) +
               "): recipe gives " + std::to_string(recipe) + ", derived form gives " +
               std::to_string(shipped[k * s.nx + x]);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> relation_naturality(Rng& rng, Mutation mu) {
  const Shape s = random_shape(rng);
  const std::size_t ny = rng.between(1, 4);
  const auto f = random_cokleisli(rng, s, ny);
  const CondRel r = random_condrel(rng, s.nk, ny);
  CondRel pulled(s.nk, s.nx);
  for (std::size_t k = 0; k < s.nk; ++k) {
    for (std::size_t x = 0; x < s.nx; ++x) {
      for (std::size_t y = 0; y < s.nx; ++y) {
        pulled.set(k, x, y, r.contains(k, f[k * s.nx + x], f[k * s.nx + y]));
      }
    }
  }
  for (std::size_t k = 0; k < s.nk; ++k) {
    for (Mask u = 0; u < (Mask{1} << s.nx); ++u) {
      for (Mask v = 0; v < (Mask{1} << s.nx); ++v) {
        const bool lhs = rel_lift_x(pulled, k, u, v, mu);
        const bool rhs = rel_lift_x(r, k, image(f, s.nx, k, u), image(f, s.nx, k, v), mu);
        if (lhs != rhs) {
          return shape_str(s) + "|Y|=" + std::to_string(ny) + " at k" + std::to_string(k) + ", " +
                 mask_str(u) + ", " + mask_str(v) + ": lifting of the pullback = " +
                 std::to_string(lhs) + " but pullback of the lifting = " + std::to_string(rhs);
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> relation_equality(Rng& rng, Mutation mu) {
  const Shape s = random_shape(rng);
  const CondRel id = CondRel::identity(s.nk, s.nx);
  for (std::size_t k = 0; k < s.nk; ++k) {
    for (Mask u = 0; u < (Mask{1} << s.nx); ++u) {
      for (Mask v = 0; v < (Mask{1} << s.nx); ++v) {
        if (rel_lift_x(id, k, u, v, mu) != (u == v)) {
          return shape_str(s) + "at k" + std::to_string(k) + ", " + mask_str(u) + ", " + mask_str(v) +
                 ": lifted equality disagrees with equality";
        }
      }
    }
  }
  return std::nullopt;
}

// Classic Egli-Milner lifting of the k-slice, phrased through relational
// images: U ⊆ R^-1[V] and V ⊆ R[U].
std::optional<std::string> egli_milner(Rng& rng, Mutation mu) {
  const Shape s = random_shape(rng);
  const CondRel r = random_condrel(rng, s.nk, s.nx);
  for (std::size_t k = 0; k < s.nk; ++k) {
    std::vector<Mask> fwd(s.nx, 0);
    std::vector<Mask> bwd(s.nx, 0);
    for (std::size_t x = 0; x < s.nx; ++x) {
      for (std::size_t y = 0; y < s.nx; ++y) {
        if (r.contains(k, x, y)) {
          fwd[x] |= singleton(y);
          bwd[y] |= singleton(x);
        }
      }
    }
    for (Mask u = 0; u < (Mask{1} << s.nx); ++u) {
      for (Mask v = 0; v < (Mask{1} << s.nx); ++v) {
        Mask pre_v = 0;
        Mask post_u = 0;
        for (std::size_t y : members(v)) pre_v |= bwd[y];
        for (std::size_t x : members(u)) post_u |= fwd[x];
        const bool classic = (u & ~pre_v) == 0 && (v & ~post_u) == 0;
        if (rel_lift_x(r, k, u, v, mu) != classic) {
          return shape_str(s) + "at k" + std::to_string(k) + ", " + mask_str(u) + ", " + mask_str(v) +
                 ": conditional lifting disagrees with the Egli-Milner lifting of the slice";
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<LawSpec> cts_laws(Mutation m) {
  auto bind = [m](auto fn) { return [m, fn](Rng& rng) { return fn(rng, m); }; };
  return {{"cokleisli_counit", bind(counit)},
          {"cokleisli_comultiplication", bind(comultiplication)},
          {"box_lifting_naturality", bind(box_naturality)},
          {"box_meet_preservation", bind(box_meets)},
          {"derived_box_agreement", bind(derived_box)},
          {"relation_lifting_naturality", bind(relation_naturality)},
          {"relation_lifting_equality", bind(relation_equality)},
          {"egli_milner_agreement", bind(egli_milner)}};
}

}  // namespace cobeh::detail
