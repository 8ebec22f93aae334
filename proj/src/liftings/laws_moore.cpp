#include <string>

#include "cobeh/liftings/liftings.hpp"
#include "cobeh/systems/determinize.hpp"
#include "laws_internal.hpp"

namespace cobeh::detail {
namespace {

// Outputs range over subsets of two atoms, joined by union.
constexpr std::size_t kAtoms = 2;

struct Shape {
  std::size_t nx = 1;
  std::size_t m = 1;
};

Shape random_shape(Rng& rng) { return {rng.between(1, 4), rng.between(1, 2)}; }

std::string shape_str(const Shape& s) {
  return "|X|=" + std::to_string(s.nx) + " |A|=" + std::to_string(s.m) + " ";
}

// Element (s, p) of S x (P X)^A.
struct GElem {
  LatticeElem out = 0;
  std::vector<Mask> succ;
};

std::string gelem_str(const GElem& g) {
  std::string s = "(out " + mask_str(g.out);
  for (std::size_t a = 0; a < g.succ.size(); ++a) s += ", a" + std::to_string(a) + "->" + mask_str(g.succ[a]);
  return s + ")";
}

bool lambda_mem(const MooreModality& mod, const Predicate& pred, const GElem& g, std::size_t nx,
                Mutation mu) {
  if (mod.kind == MooreModality::Kind::output) return g.out == mod.value;
  if (mu == Mutation::lambda_any_action) {
    for (Mask u : g.succ) {
      if (pred[u]) return true;
    }
    return false;
  }
  const Mask target = g.succ[mod.action];
  return pred[target] || (mu == Mutation::lambda_adds_full && target == full_mask(nx));
}

std::vector<MooreModality> modalities(const Shape& s) {
  std::vector<MooreModality> out;
  for (std::size_t a = 0; a < s.m; ++a) out.push_back(MooreModality::on(a));
  for (LatticeElem v = 0; v < (LatticeElem{1} << kAtoms); ++v) out.push_back(MooreModality::outputs(v));
  return out;
}

std::string mod_str(const MooreModality& mod) {
  return mod.kind == MooreModality::Kind::output ? "out=" + mask_str(mod.value)
                                                 : "a" + std::to_string(mod.action);
}

// Visits every element of S x (P X)^A.
template <class Fn>
std::optional<std::string> for_each_gelem(const Shape& s, Fn&& fn) {
  GElem g{0, std::vector<Mask>(s.m, 0)};
  const Mask limit = Mask{1} << s.nx;
  for (LatticeElem out = 0; out < (LatticeElem{1} << kAtoms); ++out) {
    g.out = out;
    std::fill(g.succ.begin(), g.succ.end(), 0);
    for (;;) {
      if (auto failure = fn(g)) return failure;
      std::size_t i = 0;
      while (i < s.m && ++g.succ[i] == limit) g.succ[i++] = 0;
      if (i == s.m) break;
    }
  }
  return std::nullopt;
}

Predicate random_pred(Rng& rng, std::size_t size) {
  Predicate p(size);
  for (std::size_t i = 0; i < size; ++i) p[i] = rng.chance(1, 2);
  return p;
}

std::optional<std::string> naturality(Rng& rng, Mutation mu) {
  // Along the algebra map |f| : P X -> P Y of a Kleisli map f : X -> P Y.
  const Shape sx = random_shape(rng);
  const std::size_t ny = rng.between(1, 4);
  std::vector<Mask> f(sx.nx);
  for (auto& fx : f) fx = random_mask(rng, ny);
  auto ext = [&](Mask u) {
    Mask out = 0;
    for (auto x : members(u)) out |= f[x];
    return out;
  };
  const Predicate v = random_pred(rng, std::size_t{1} << ny);
  Predicate pulled(std::size_t{1} << sx.nx);
  for (Mask u = 0; u < pulled.size(); ++u) pulled[u] = v[ext(u)];
  return for_each_gelem(sx, [&](const GElem& g) -> std::optional<std::string> {
    GElem pushed{g.out, {}};
    for (Mask u : g.succ) pushed.succ.push_back(ext(u));
    for (const auto& mod : modalities(sx)) {
      const bool lhs = lambda_mem(mod, pulled, g, sx.nx, mu);
      const bool rhs = lambda_mem(mod, v, pushed, ny, mu);
      if (lhs != rhs) {
        return shape_str(sx) + "|Y|=" + std::to_string(ny) + " modality " + mod_str(mod) + " at " +
               gelem_str(g) + ": lambda(f^-1 V) = " + std::to_string(lhs) +
               " but (G f)^-1 lambda(V) = " + std::to_string(rhs);
      }
    }
    return std::nullopt;
  });
}

std::optional<std::string> meets(Rng& rng, Mutation mu) {
  const Shape s = random_shape(rng);
  const std::size_t size = std::size_t{1} << s.nx;
  const Predicate p1 = random_pred(rng, size);
  const Predicate p2 = random_pred(rng, size);
  Predicate both(size);
  for (std::size_t i = 0; i < size; ++i) both[i] = p1[i] && p2[i];
  return for_each_gelem(s, [&](const GElem& g) -> std::optional<std::string> {
    for (const auto& mod : modalities(s)) {
      const bool lhs = lambda_mem(mod, both, g, s.nx, mu);
      const bool rhs = lambda_mem(mod, p1, g, s.nx, mu) && lambda_mem(mod, p2, g, s.nx, mu);
      if (lhs != rhs) {
        return shape_str(s) + "modality " + mod_str(mod) + " at " + gelem_str(g) +
               ": lambda of the meet = " + std::to_string(lhs) + " but meet of the lambdas = " +
               std::to_string(rhs);
      }
    }
    return std::nullopt;
  });
}

std::optional<std::string> derived_modality(Rng& rng, Mutation mu) {
  const Shape s = random_shape(rng);
  OutputLts m{Lts{Carrier::numbered("x", s.nx), Carrier::numbered("a", s.m), {}},
              Semilattice::powerset(Carrier::numbered("o", kAtoms)),
              {}};
  for (std::size_t x = 0; x < s.nx; ++x) {
    for (std::size_t a = 0; a < s.m; ++a) {
      for (std::size_t y = 0; y < s.nx; ++y) {
        if (rng.chance(1, 2)) m.lts.transitions.push_back({x, a, y});
      }
    }
    m.outputs.push_back(rng.below(LatticeElem{1} << kAtoms));
  }
  const DeterminizedMachine d = moore_determinize(m, all_masks(s.nx));
  const Predicate pred = random_pred(rng, d.size());
  for (const auto& mod : modalities(s)) {
    const Predicate shipped = mod_moore(mod, pred, d);
    for (std::size_t i = 0; i < d.size(); ++i) {
      const Mask u = d.subset_states[i];
      GElem g{0, std::vector<Mask>(s.m, 0)};
      for (auto x : members(u)) g.out |= m.outputs[x];
      for (const auto& t : m.lts.transitions) {
        if (has_member(u, t.from)) g.succ[t.action] |= singleton(t.to);
      }
      const bool recipe = lambda_mem(mod, pred, g, s.nx, mu);
      if (recipe != shipped[i]) {
        return shape_str(s) + "modality " + mod_str(mod) + " at U=" + mask_str(u) +
               ": recipe gives " + std::to_string(recipe) + ", derived form gives " +
               std::to_string(shipped[i]);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<LawSpec> moore_laws(Mutation m) {
  auto bind = [m](auto fn) { return [m, fn](Rng& rng) { return fn(rng, m); }; };
  return {{"predicate_lifting_naturality", bind(naturality)},
          {"predicate_lifting_meets", bind(meets)},
          {"derived_modality_agreement", bind(derived_modality)}};
}

}  // namespace cobeh::detail
