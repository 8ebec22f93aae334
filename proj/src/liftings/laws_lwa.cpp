#include <map>
#include <string>
#include <utility>

#include "cobeh/core/subspace.hpp"
#include "cobeh/liftings/liftings.hpp"
#include "laws_internal.hpp"

namespace cobeh::detail {
namespace {

using WeightedFamily = std::map<QVector, Rational>;  // finitely supported M(M X)
using MFMap = std::map<FElem<QVector>, Rational>;     // finitely supported M(F M X)

struct Shape {
  std::size_t nx = 1;
  std::size_t m = 1;
};

Shape random_shape(Rng& rng) { return {rng.between(1, 4), rng.between(1, 2)}; }

std::string shape_str(const Shape& s) {
  return "|X|=" + std::to_string(s.nx) + " |A|=" + std::to_string(s.m) + " ";
}

Rational random_weight(Rng& rng) {
  static const Rational pool[] = {Rational(0), Rational(1), Rational(-1),
                                  Rational(1, 2), Rational(-1, 2), Rational(2)};
  return pool[rng.below(6)];
}

QVector random_vec(Rng& rng, std::size_t n) {
  QVector v(n);
  for (auto& x : v) x = random_weight(rng);
  return v;
}

QVector ones(std::size_t n) { return QVector(n, Rational(1)); }

QMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  QMatrix f(rows);
  for (auto& row : f) row = random_vec(rng, cols);
  return f;
}

void accumulate(LwaFMap& into, const NdaFElem& e, const Rational& w) {
  if (w.is_zero()) return;
  Rational& slot = into[e];
  slot += w;
  if (slot.is_zero()) into.erase(e);
}

void accumulate(LwaFMap& into, const LwaFMap& part, const Rational& scale) {
  for (const auto& [e, w] : part) accumulate(into, e, w * scale);
}

std::string fmap_str(const LwaFMap& p) {
  std::string s = "{";
  bool first = true;
  for (const auto& [e, w] : p) {
    if (!first) s += ", ";
    s += (e.term ? std::string("term")
                 : "(a" + std::to_string(e.action) + ",x" + std::to_string(e.payload) + ")") +
         ":" + w.str();
    first = false;
  }
  return s + "}";
}

std::string gvalue_str(const GValueLwa& g) {
  std::string s = "(";
  for (std::size_t a = 0; a < g.per_action.size(); ++a) {
    s += "a" + std::to_string(a) + "->" + format_vector(g.per_action[a]) + " ";
  }
  return s + "out " + g.out.str() + ")";
}

LwaFMap random_fmap(Rng& rng, const Shape& s, bool allow_ones) {
  LwaFMap p;
  accumulate(p, NdaFElem::terminal(), random_weight(rng));
  for (std::size_t a = 0; a < s.m; ++a) {
    const bool use_ones = allow_ones && rng.chance(1, 3);
    for (std::size_t x = 0; x < s.nx; ++x) {
      accumulate(p, NdaFElem::act(a, x), use_ones ? Rational(1) : random_weight(rng));
    }
  }
  return p;
}

LwaFMap theta_x(const FElem<QVector>& e, Mutation mu) {
  if (mu == Mutation::theta_drops_term && e.term) return {};
  if (mu == Mutation::theta_keeps_min && !e.term) {
    for (std::size_t x = 0; x < e.payload.size(); ++x) {
      if (!e.payload[x].is_zero()) return {{NdaFElem::act(e.action, x), e.payload[x]}};
    }
    return {};
  }
  return theta_lwa(e);
}

MFMap theta_mx(const FElem<WeightedFamily>& e, Mutation mu) {
  MFMap out;
  if (e.term) {
    if (mu != Mutation::theta_drops_term) out.emplace(FElem<QVector>::terminal(), Rational(1));
    return out;
  }
  for (const auto& [v, w] : e.payload) {
    if (w.is_zero()) continue;
    out.emplace(FElem<QVector>::act(e.action, v), w);
    if (mu == Mutation::theta_keeps_min) break;
  }
  return out;
}

GValueLwa gamma_x(const LwaFMap& p, const Shape& s, Mutation mu) {
  GValueLwa g = gamma_lwa(p, s.m, s.nx);
  if (mu == Mutation::gamma_swap_on_odd && s.m >= 2 && p.size() % 2 == 1) {
    std::swap(g.per_action[0], g.per_action[1]);
  }
  return g;
}

// gamma one level up followed by G mu.
GValueLwa gamma_mx_then_mu(const MFMap& p, const Shape& s, Mutation mu) {
  GValueLwa g{std::vector<QVector>(s.m, zero_vector(s.nx)), Rational{}};
  for (const auto& [e, w] : p) {
    if (e.term) {
      g.out += w;
    } else {
      g.per_action[e.action] = add(g.per_action[e.action], scale(w, e.payload));
    }
  }
  if (mu == Mutation::gamma_swap_on_odd && s.m >= 2 && p.size() % 2 == 1) {
    std::swap(g.per_action[0], g.per_action[1]);
  }
  return g;
}

// |F f| for a linear Kleisli map f given by an |X| x |Y| matrix.
LwaFMap lift_kleisli(const QMatrix& f, const LwaFMap& p, Mutation mu) {
  LwaFMap out;
  for (const auto& [e, w] : p) {
    const FElem<QVector> image =
        e.term ? FElem<QVector>::terminal() : FElem<QVector>::act(e.action, f[e.payload]);
    accumulate(out, theta_x(image, mu), w);
  }
  return out;
}

struct LwaRegion {
  Subspace space;
  bool operator()(const QVector& v) const { return space.contains(v); }
};

LwaRegion random_region(Rng& rng, std::size_t n) {
  std::vector<QVector> gens;
  const std::size_t k = rng.below(n + 1);
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_vec(rng, n));
  return {Subspace::echelonize(gens, n)};
}

bool lambda_mem(const LwaModality& mod, const LwaRegion& region, const LwaFMap& p,
                const Shape& s, Mutation mu) {
  const GValueLwa g = gamma_x(p, s, mu);
  if (mod.kind == LwaModality::Kind::output) return g.out == mod.value;
  const QVector& target = g.per_action[mod.action];
  if (region(target)) return true;
  if (mu == Mutation::sigma_adds_point && is_zero(target)) return true;
  return mu == Mutation::lambda_adds_full && target == ones(s.nx);
}

bool rel_lift_x(const Subspace& w, const LwaFMap& u, const LwaFMap& v, const Shape& s,
                Mutation mu) {
  switch (mu) {
    case Mutation::lifting_counts_support:
      return u.size() == v.size() && rel_lift_lwa(w, u, v, s.m, s.nx);
    case Mutation::lifting_exists: {
      const GValueLwa gu = gamma_lwa(u, s.m, s.nx);
      const GValueLwa gv = gamma_lwa(v, s.m, s.nx);
      if (gu.out != gv.out) return false;
      for (std::size_t a = 0; a < s.m; ++a) {
        if (w.contains(sub(gu.per_action[a], gv.per_action[a]))) return true;
      }
      return false;
    }
    case Mutation::lifting_ignores_term: {
      const GValueLwa gu = gamma_lwa(u, s.m, s.nx);
      const GValueLwa gv = gamma_lwa(v, s.m, s.nx);
      for (std::size_t a = 0; a < s.m; ++a) {
        if (!w.contains(sub(gu.per_action[a], gv.per_action[a]))) return false;
      }
      return true;
    }
    default:
      return rel_lift_lwa(w, u, v, s.m, s.nx);
  }
}

QVector random_member(Rng& rng, const Subspace& w) {
  QVector v = zero_vector(w.dim());
  for (const auto& b : w.basis()) v = add(v, scale(random_weight(rng), b));
  return v;
}

// A second argument that is related to `u` with probability about one half:
// per action the difference is drawn from one of the given subspaces, or is
// arbitrary.
LwaFMap partner(Rng& rng, const LwaFMap& u, const Shape& s, const std::vector<Subspace>& pool) {
  LwaFMap v = u;
  if (rng.chance(1, 4)) accumulate(v, NdaFElem::terminal(), random_weight(rng));
  for (std::size_t a = 0; a < s.m; ++a) {
    const std::size_t pick = rng.below(pool.size() + 1);
    const QVector d = pick < pool.size() ? random_member(rng, pool[pick]) : random_vec(rng, s.nx);
    for (std::size_t x = 0; x < s.nx; ++x) accumulate(v, NdaFElem::act(a, x), d[x]);
  }
  return v;
}

std::optional<std::string> kleisli_unit(Rng& rng, Mutation mu) {
  const Shape s = random_shape(rng);
  if (theta_x(FElem<QVector>::terminal(), mu) != LwaFMap{{NdaFElem::terminal(), Rational(1)}}) {
    return shape_str(s) + "theta(term) is not the unit at term";
  }
  for (std::size_t a = 0; a < s.m; ++a) {
    for (std::size_t x = 0; x < s.nx; ++x) {
      const LwaFMap got = theta_x(FElem<QVector>::act(a, unit_vector(s.nx, x)), mu);
      if (got != LwaFMap{{NdaFElem::act(a, x), Rational(1)}}) {
        return shape_str(s) + "theta(a" + std::to_string(a) + ", e_x" + std::to_string(x) +
               ") = " + fmap_str(got);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> kleisli_multiplication(Rng& rng, Mutation mu) {
  const Shape s = random_shape(rng);
  WeightedFamily family;
  const std::size_t k = rng.between(1, 3);
  for (std::size_t i = 0; i < k; ++i) {
    const Rational w = random_weight(rng);
    if (!w.is_zero()) family[random_vec(rng, s.nx)] += w;
  }
  const std::size_t a = rng.below(s.m);
  for (const auto& e : {FElem<WeightedFamily>::terminal(), FElem<WeightedFamily>::act(a, family)}) {
    QVector joined = zero_vector(s.nx);
    for (const auto& [v, w] : e.payload) joined = add(joined, scale(w, v));
    const LwaFMap lhs =
        theta_x(e.term ? FElem<QVector>::terminal() : FElem<QVector>::act(a, joined), mu);
    LwaFMap rhs;
    for (const auto& [mid, w] : theta_mx(e, mu)) accumulate(rhs, theta_x(mid, mu), w);
    if (lhs != rhs) {
      return shape_str(s) + (e.term ? std::string("term") : "family of " + std::to_string(family.size()) + " vectors") +
             ": theta.F mu = " + fmap_str(lhs) + " but mu.M theta.theta = " + fmap_str(rhs);
    }
  }
  return std::nullopt;
}

std::optional<std::string> gamma_theta_mu(Rng& rng, Mutation mu) {
  const Shape s = random_shape(rng);
  MFMap input;
  const Rational tw = random_weight(rng);
  if (!tw.is_zero()) input.emplace(FElem<QVector>::terminal(), tw);
  const std::size_t k = rng.between(0, 4);
  for (std::size_t i = 0; i < k; ++i) {
    const Rational w = random_weight(rng);
    if (!w.is_zero()) input[FElem<QVector>::act(rng.below(s.m), random_vec(rng, s.nx))] += w;
  }
  std::erase_if(input, [](const auto& kv) { return kv.second.is_zero(); });
  LwaFMap flat;
  for (const auto& [e, w] : input) accumulate(flat, theta_x(e, mu), w);
  const GValueLwa lhs = gamma_x(flat, s, mu);
  const GValueLwa rhs = gamma_mx_then_mu(input, s, mu);
  if (!(lhs == rhs)) {
    return shape_str(s) + "input with " + std::to_string(input.size()) +
           " support elements: gamma.mu.M theta = " + gvalue_str(lhs) + " but G mu.gamma = " +
           gvalue_str(rhs);
  }
  return std::nullopt;
}

std::optional<std::string> sigma_naturality(Rng& rng, Mutation mu) {
  // sigma^a on Y^A x Q along a function g : X -> Y of finite sets.
  const std::size_t nx = rng.between(1, 4);
  const std::size_t ny = rng.between(1, 4);
  const std::size_t m = rng.between(1, 2);
  std::vector<std::size_t> g(nx);
  for (auto& gx : g) gx = rng.below(ny);
  const Mask v = random_mask(rng, ny);
  Mask pre = 0;
  for (std::size_t x = 0; x < nx; ++x) {
    if (has_member(v, g[x])) pre |= singleton(x);
  }
  auto sigma = [&](Mask pred, std::size_t point) {
    return has_member(pred, point) || (mu == Mutation::sigma_adds_point && point == 0);
  };
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t x = 0; x < nx; ++x) {
      if (sigma(pre, x) != sigma(v, g[x])) {
        return "|X|=" + std::to_string(nx) + " |Y|=" + std::to_string(ny) + " V=" + mask_str(v) +
               " component a" + std::to_string(a) + " = x" + std::to_string(x) +
               ": sigma(g^-1 V) and (G g)^-1 sigma(V) disagree";
      }
    }
  }
  return std::nullopt;
}

std::vector<LwaModality> modalities(Rng& rng, const Shape& s, const LwaFMap& u) {
  std::vector<LwaModality> out;
  for (std::size_t a = 0; a < s.m; ++a) out.push_back(LwaModality::on(a));
  const auto it = u.find(NdaFElem::terminal());
  out.push_back(LwaModality::outputs(it == u.end() ? Rational(0) : it->second));
  out.push_back(LwaModality::outputs(random_weight(rng)));
  return out;
}

std::string mod_str(const LwaModality& mod) {
  return mod.kind == LwaModality::Kind::output ? "out=" + mod.value.str()
                                               : "a" + std::to_string(mod.action);
}

std::optional<std::string> predicate_naturality(Rng& rng, Mutation mu) {
  const Shape sx = random_shape(rng);
  const Shape sy{rng.between(1, 4), sx.m};
  const QMatrix f = random_matrix(rng, sx.nx, sy.nx);
  const LwaRegion region = random_region(rng, sy.nx);
  for (int sample = 0; sample < 8; ++sample) {
    const LwaFMap u = random_fmap(rng, sx, true);
    const LwaFMap image = lift_kleisli(f, u, mu);
    for (const auto& mod : modalities(rng, sx, u)) {
      // lambda(|f|^-1 V) is lambda with the region precomposed with |f|.
      const GValueLwa g = gamma_x(u, sx, mu);
      bool lhs = false;
      if (mod.kind == LwaModality::Kind::output) {
        lhs = g.out == mod.value;
      } else {
        const QVector& target = g.per_action[mod.action];
        lhs = region(row_times(target, f)) ||
              (mu == Mutation::sigma_adds_point && is_zero(target)) ||
              (mu == Mutation::lambda_adds_full && target == ones(sx.nx));
      }
      const bool rhs = lambda_mem(mod, region, image, sy, mu);
      if (lhs != rhs) {
        return shape_str(sx) + "|Y|=" + std::to_string(sy.nx) + " modality " + mod_str(mod) +
               " at " + fmap_str(u) + ": lambda(f^-1 V) = " + std::to_string(lhs) +
               " but (F f)^-1 lambda(V) = " + std::to_string(rhs);
      }
    }
  }
  return std::nullopt;
}

Lwa random_lwa(Rng& rng, const Shape& s) {
  Lwa l{Carrier::numbered("x", s.nx), Carrier::numbered("a", s.m), random_vec(rng, s.nx), {}};
  for (std::size_t a = 0; a < s.m; ++a) l.matrices.push_back(random_matrix(rng, s.nx, s.nx));
  return l;
}

std::optional<std::string> derived_modality(Rng& rng, Mutation mu) {
  const Shape s = random_shape(rng);
  Lwa l = random_lwa(rng, s);
  // Sometimes make e_0 step onto the all-ones vector so that boundary
  // payloads are exercised.
  if (rng.chance(1, 3)) l.matrices[rng.below(s.m)][0] = ones(s.nx);
  const LwaRegion region = random_region(rng, s.nx);
  for (int sample = 0; sample < 6; ++sample) {
    const QVector p = sample == 0 ? unit_vector(s.nx, 0) : random_vec(rng, s.nx);
    LwaFMap image;
    for (std::size_t x = 0; x < s.nx; ++x) {
      LwaFMap alpha_x;
      accumulate(alpha_x, NdaFElem::terminal(), l.output[x]);
      for (std::size_t a = 0; a < s.m; ++a) {
        for (std::size_t y = 0; y < s.nx; ++y) {
          accumulate(alpha_x, NdaFElem::act(a, y), l.matrices[a][x][y]);
        }
      }
      accumulate(image, alpha_x, p[x]);
    }
    std::vector<LwaModality> mods;
    for (std::size_t a = 0; a < s.m; ++a) mods.push_back(LwaModality::on(a));
    mods.push_back(LwaModality::outputs(lwa_output(l, p)));
    mods.push_back(LwaModality::outputs(random_weight(rng)));
    for (const auto& mod : mods) {
      const bool recipe = lambda_mem(mod, region, image, s, mu);
      const bool shipped = mod_lwa(mod, region, p, l);
      if (recipe != shipped) {
        return shape_str(s) + "modality " + mod_str(mod) + " at p=" + format_vector(p) +
               ": recipe gives " + std::to_string(recipe) + ", derived form gives " +
               std::to_string(shipped);
      }
    }
  }
  return std::nullopt;
}

// { d in Q^X | d F in w } = (span{ F c | c in w^perp })^perp
Subspace pullback(const QMatrix& f, const Subspace& w, std::size_t nx) {
  std::vector<QVector> gens;
  const Subspace annihilator = w.orthogonal_complement();
  for (const auto& c : annihilator.basis()) gens.push_back(times_column(f, c));
  return Subspace::echelonize(gens, nx).orthogonal_complement();
}

std::optional<std::string> relation_naturality(Rng& rng, Mutation mu) {
  const Shape sx = random_shape(rng);
  const Shape sy{rng.between(1, 4), sx.m};
  const QMatrix f = random_matrix(rng, sx.nx, sy.nx);
  const Subspace w = random_region(rng, sy.nx).space;
  const Subspace pulled = pullback(f, w, sx.nx);
  for (int sample = 0; sample < 8; ++sample) {
    const LwaFMap u = random_fmap(rng, sx, false);
    const LwaFMap v = partner(rng, u, sx, {pulled});
    const bool lhs = rel_lift_x(pulled, u, v, sx, mu);
    const bool rhs = rel_lift_x(w, lift_kleisli(f, u, Mutation::none), lift_kleisli(f, v, Mutation::none), sy, mu);
    if (lhs != rhs) {
      return shape_str(sx) + "|Y|=" + std::to_string(sy.nx) + " pair " + fmap_str(u) + ", " +
             fmap_str(v) + ": lifting of the pullback = " + std::to_string(lhs) +
             " but pullback of the lifting = " + std::to_string(rhs);
    }
  }
  return std::nullopt;
}

std::optional<std::string> relation_intersection(Rng& rng, Mutation mu) {
  const Shape s = random_shape(rng);
  const Subspace w1 = random_region(rng, s.nx).space;
  const Subspace w2 = random_region(rng, s.nx).space;
  const Subspace both = w1.intersect(w2);
  for (int sample = 0; sample < 8; ++sample) {
    const LwaFMap u = random_fmap(rng, s, false);
    LwaFMap v = u;
    if (sample % 2 == 0) {
      v = partner(rng, u, s, {w1, w2, both});
    } else {
      // Action differences alternate between W1 and W2.
      for (std::size_t a = 0; a < s.m; ++a) {
        const QVector d = random_member(rng, a % 2 == 0 ? w1 : w2);
        for (std::size_t x = 0; x < s.nx; ++x) accumulate(v, NdaFElem::act(a, x), d[x]);
      }
    }
    const bool lhs = rel_lift_x(both, u, v, s, mu);
    const bool rhs = rel_lift_x(w1, u, v, s, mu) && rel_lift_x(w2, u, v, s, mu);
    if (lhs != rhs) {
      return shape_str(s) + "pair " + fmap_str(u) + ", " + fmap_str(v) +
             ": lifting of W1 & W2 = " + std::to_string(lhs) + " but the meet of the liftings = " +
             std::to_string(rhs);
    }
  }
  return std::nullopt;
}

std::optional<std::string> relation_equality(Rng& rng, Mutation mu) {
  const Shape s = random_shape(rng);
  const Subspace zero = Subspace::zero(s.nx);
  for (int sample = 0; sample < 8; ++sample) {
    const LwaFMap u = random_fmap(rng, s, false);
    LwaFMap v = u;
    if (rng.chance(1, 2)) {
      const std::size_t i = rng.below(1 + s.m * s.nx);
      const NdaFElem e = i == 0 ? NdaFElem::terminal() : NdaFElem::act((i - 1) / s.nx, (i - 1) % s.nx);
      accumulate(v, e, Rational(1));
    }
    if (rel_lift_x(zero, u, v, s, mu) != (u == v)) {
      return shape_str(s) + "pair " + fmap_str(u) + ", " + fmap_str(v) +
             ": lifted equality disagrees with equality";
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<LawSpec> lwa_laws(Mutation m) {
  auto bind = [m](auto fn) { return [m, fn](Rng& rng) { return fn(rng, m); }; };
  return {{"kleisli_unit", bind(kleisli_unit)},
          {"kleisli_multiplication", bind(kleisli_multiplication)},
          {"gamma_theta_mu_compatibility", bind(gamma_theta_mu)},
          {"sigma_naturality", bind(sigma_naturality)},
          {"predicate_lifting_naturality", bind(predicate_naturality)},
          {"derived_modality_agreement", bind(derived_modality)},
          {"relation_lifting_naturality", bind(relation_naturality)},
          {"relation_lifting_intersection", bind(relation_intersection)},
          {"relation_lifting_equality", bind(relation_equality)}};
}

}  // namespace cobeh::detail
