#include <bit>
#include <set>
#include <string>
#include <utility>

#include "cobeh/liftings/liftings.hpp"
#include "cobeh/systems/determinize.hpp"
#include "laws_internal.hpp"

namespace cobeh::detail {
namespace {

// Elements of F X are indexed 0 = termination, 1 + a * |X| + x = (a, x);
// a subset of F X is a mask over those indices.
struct Shape {
  std::size_t nx = 1;
  std::size_t m = 1;
  std::size_t width() const { return 1 + m * nx; }
};

Shape random_shape(Rng& rng) { return {rng.between(1, 4), rng.between(1, 2)}; }

NdaFSet to_fset(Mask u, const Shape& s) {
  NdaFSet out;
  for (auto i : members(u)) {
    if (i == 0) {
      out.insert(NdaFElem::terminal());
    } else {
      out.insert(NdaFElem::act((i - 1) / s.nx, (i - 1) % s.nx));
    }
  }
  return out;
}

std::string fset_str(const NdaFSet& u) {
  std::string s = "{";
  bool first = true;
  for (const auto& e : u) {
    if (!first) s += ',';
    s += e.term ? std::string("term")
                : "(a" + std::to_string(e.action) + ",x" + std::to_string(e.payload) + ")";
    first = false;
  }
  return s + "}";
}

std::string gvalue_str(const GValueNda& g) {
  std::string s = "(";
  for (std::size_t a = 0; a < g.per_action.size(); ++a) {
    s += "a" + std::to_string(a) + "->" + mask_str(g.per_action[a]) + " ";
  }
  return s + (g.term ? "term)" : "no-term)");
}

NdaFSet theta_x(const FElem<Mask>& e, Mutation mu) {
  if (mu == Mutation::theta_drops_term && e.term) return {};
  if (mu == Mutation::theta_keeps_min && !e.term && e.payload != 0) {
    return {NdaFElem::act(e.action, static_cast<std::size_t>(std::countr_zero(e.payload)))};
  }
  return theta_nda(e);
}

// The same law one level up, at the carrier P X.
std::set<FElem<Mask>> theta_px(const FElem<std::set<Mask>>& e, Mutation mu) {
  std::set<FElem<Mask>> out;
  if (e.term) {
    if (mu != Mutation::theta_drops_term) out.insert(FElem<Mask>::terminal());
    return out;
  }
  if (mu == Mutation::theta_keeps_min && !e.payload.empty()) {
    out.insert(FElem<Mask>::act(e.action, *e.payload.begin()));
    return out;
  }
  for (Mask u : e.payload) out.insert(FElem<Mask>::act(e.action, u));
  return out;
}

GValueNda gamma_x(const NdaFSet& u, std::size_t m, Mutation mu) {
  GValueNda g = gamma_nda(u, m);
  if (mu == Mutation::gamma_swap_on_odd && m >= 2 && u.size() % 2 == 1) {
    std::swap(g.per_action[0], g.per_action[1]);
  }
  return g;
}

struct GValuePX {
  std::vector<std::set<Mask>> per_action;
  bool term = false;
};

GValuePX gamma_px(const std::set<FElem<Mask>>& u, std::size_t m, Mutation mu) {
  GValuePX g{std::vector<std::set<Mask>>(m), false};
  for (const auto& e : u) {
    if (e.term) {
      g.term = true;
    } else {
      g.per_action[e.action].insert(e.payload);
    }
  }
  if (mu == Mutation::gamma_swap_on_odd && m >= 2 && u.size() % 2 == 1) {
    std::swap(g.per_action[0], g.per_action[1]);
  }
  return g;
}

Mask kleisli_ext(const std::vector<Mask>& f, Mask u) {
  Mask out = 0;
  for (auto x : members(u)) out |= f[x];
  return out;
}

// |F f| for a Kleisli map f : X -> P Y, i.e. union of theta(F f (e)).
NdaFSet lift_kleisli(const std::vector<Mask>& f, const NdaFSet& u, Mutation mu) {
  NdaFSet out;
  for (const auto& e : u) {
    const auto part = theta_x(e.term ? FElem<Mask>::terminal() : FElem<Mask>::act(e.action, f[e.payload]), mu);
    out.insert(part.begin(), part.end());
  }
  return out;
}

// lambda^a / lambda^term through the recipe gamma^{-1} . sigma.
bool lambda_mem(const NdaModality& mod, const Predicate& pred, const NdaFSet& u,
                const Shape& s, Mutation mu) {
  const GValueNda g = gamma_x(u, s.m, mu);
  if (mod.kind == NdaModality::Kind::termination) return g.term;
  const Mask target = g.per_action[mod.action];
  if (pred[target]) return true;
  if (mu == Mutation::sigma_adds_point && target == 0) return true;
  return mu == Mutation::lambda_adds_full && target == full_mask(s.nx);
}

bool rel_lift_x(const BitRel& r, const NdaFSet& u, const NdaFSet& v, const Shape& s,
                Mutation mu) {
  switch (mu) {
    case Mutation::lifting_counts_support:
      return u.size() == v.size() && rel_lift_nda(r, u, v, s.m);
    case Mutation::lifting_exists: {
      const GValueNda gu = gamma_nda(u, s.m);
      const GValueNda gv = gamma_nda(v, s.m);
      if (gu.term != gv.term) return false;
      for (std::size_t a = 0; a < s.m; ++a) {
        if (r.contains(gu.per_action[a], gv.per_action[a])) return true;
      }
      return false;
    }
    case Mutation::lifting_ignores_term: {
      const GValueNda gu = gamma_nda(u, s.m);
      const GValueNda gv = gamma_nda(v, s.m);
      for (std::size_t a = 0; a < s.m; ++a) {
        if (!r.contains(gu.per_action[a], gv.per_action[a])) return false;
      }
      return true;
    }
    default:
      return rel_lift_nda(r, u, v, s.m);
  }
}

std::vector<NdaModality> modalities(const Shape& s) {
  std::vector<NdaModality> out{NdaModality::terminates()};
  for (std::size_t a = 0; a < s.m; ++a) out.push_back(NdaModality::on(a));
  return out;
}

std::string mod_str(const NdaModality& mod) {
  return mod.kind == NdaModality::Kind::termination ? "term" : "a" + std::to_string(mod.action);
}

std::vector<Mask> random_kleisli(Rng& rng, std::size_t nx, std::size_t ny) {
  std::vector<Mask> f(nx);
  for (auto& fx : f) fx = random_mask(rng, ny);
  return f;
}

Predicate random_pred(Rng& rng, std::size_t size) {
  Predicate p(size);
  for (std::size_t i = 0; i < size; ++i) p[i] = rng.chance(1, 2);
  return p;
}

BitRel random_rel(Rng& rng, std::size_t size) {
  BitRel r(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) r.set(i, j, rng.chance(1, 2));
  }
  return r;
}

std::string shape_str(const Shape& s) {
  return "|X|=" + std::to_string(s.nx) + " |A|=" + std::to_string(s.m) + " ";
}

std::optional<std::string> kleisli_unit(Rng& rng, Mutation mu) {
  const Shape s = random_shape(rng);
  for (std::size_t i = 0; i < s.width(); ++i) {
    const NdaFSet expected = to_fset(singleton(i), s);
    const NdaFElem e = *expected.begin();
    const NdaFSet got =
        theta_x(e.term ? FElem<Mask>::terminal() : FElem<Mask>::act(e.action, singleton(e.payload)), mu);
    if (got != expected) {
      return shape_str(s) + "theta(F eta " + fset_str(expected) + ") = " + fset_str(got);
    }
  }
  return std::nullopt;
}

std::optional<std::string> kleisli_multiplication(Rng& rng, Mutation mu) {
  const Shape s = random_shape(rng);
  std::set<Mask> family;
  for (Mask u = 0; u < (Mask{1} << s.nx); ++u) {
    if (rng.chance(1, 2)) family.insert(u);
  }
  const std::size_t a = rng.below(s.m);
  for (const auto& e : {FElem<std::set<Mask>>::terminal(), FElem<std::set<Mask>>::act(a, family)}) {
    Mask joined = 0;
    for (Mask u : e.payload) joined |= u;
    const NdaFSet lhs = theta_x(e.term ? FElem<Mask>::terminal() : FElem<Mask>::act(a, joined), mu);
    NdaFSet rhs;
    for (const auto& mid : theta_px(e, mu)) {
      const auto part = theta_x(mid, mu);
      rhs.insert(part.begin(), part.end());
    }
    if (lhs != rhs) {
      std::string fam = "{";
      for (Mask u : family) fam += mask_str(u);
      fam += "}";
      return shape_str(s) + "element " + (e.term ? std::string("term") : "(a" + std::to_string(a) + "," + fam + ")") +
             ": theta.F mu = " + fset_str(lhs) + " but mu.P theta.theta = " + fset_str(rhs);
    }
  }
  return std::nullopt;
}

std::optional<std::string> gamma_theta_mu(Rng& rng, Mutation mu) {
  const Shape s = random_shape(rng);
  std::set<FElem<Mask>> input;
  if (rng.chance(1, 2)) input.insert(FElem<Mask>::terminal());
  for (std::size_t a = 0; a < s.m; ++a) {
    for (Mask u = 0; u < (Mask{1} << s.nx); ++u) {
      if (rng.chance(1, 3)) input.insert(FElem<Mask>::act(a, u));
    }
  }
  NdaFSet flat;
  for (const auto& e : input) {
    const auto part = theta_x(e, mu);
    flat.insert(part.begin(), part.end());
  }
  const GValueNda lhs = gamma_x(flat, s.m, mu);
  const GValuePX mid = gamma_px(input, s.m, mu);
  GValueNda rhs{std::vector<Mask>(s.m, 0), mid.term};
  for (std::size_t a = 0; a < s.m; ++a) {
    for (Mask u : mid.per_action[a]) rhs.per_action[a] |= u;
  }
  if (!(lhs == rhs)) {
    return shape_str(s) + "input of " + std::to_string(input.size()) +
           " elements: gamma.mu.P theta = " + gvalue_str(lhs) + " but G mu.gamma = " + gvalue_str(rhs);
  }
  return std::nullopt;
}

std::optional<std::string> sigma_naturality(Rng& rng, Mutation mu) {
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
  // Elements of X^A x 2 with the flag fixed: sigma^term is independent of
  // the action components and natural trivially.
  std::vector<std::size_t> p(m, 0);
  for (;;) {
    for (std::size_t a = 0; a < m; ++a) {
      const bool lhs = sigma(pre, p[a]);
      const bool rhs = sigma(v, g[p[a]]);
      if (lhs != rhs) {
        return "|X|=" + std::to_string(nx) + " |Y|=" + std::to_string(ny) + " V=" + mask_str(v) +
               " point x" + std::to_string(p[a]) + " -> y" + std::to_string(g[p[a]]) +
               ": sigma(g^-1 V) = " + std::to_string(lhs) + " but (G g)^-1 sigma(V) = " +
               std::to_string(rhs);
      }
    }
    std::size_t i = 0;
    while (i < m && ++p[i] == nx) p[i++] = 0;
    if (i == m) break;
  }
  return std::nullopt;
}

std::optional<std::string> predicate_naturality(Rng& rng, Mutation mu) {
  const Shape sx = random_shape(rng);
  const Shape sy{rng.between(1, 4), sx.m};
  const auto f = random_kleisli(rng, sx.nx, sy.nx);
  const Predicate v = random_pred(rng, std::size_t{1} << sy.nx);
  Predicate pulled(std::size_t{1} << sx.nx);
  for (Mask u = 0; u < pulled.size(); ++u) pulled[u] = v[kleisli_ext(f, u)];
  for (Mask bits = 0; bits < (Mask{1} << sx.width()); ++bits) {
    const NdaFSet u = to_fset(bits, sx);
    const NdaFSet image = lift_kleisli(f, u, mu);
    for (const auto& mod : modalities(sx)) {
      const bool lhs = lambda_mem(mod, pulled, u, sx, mu);
      const bool rhs = lambda_mem(mod, v, image, sy, mu);
      if (lhs != rhs) {
        return shape_str(sx) + "|Y|=" + std::to_string(sy.nx) + " modality " + mod_str(mod) +
               " at " + fset_str(u) + ": lambda(f^-1 V) = " + std::to_string(lhs) +
               " but (F f)^-1 lambda(V) = " + std::to_string(rhs);
      }
    }
  }
  return std::nullopt;
}

Nda random_nda(Rng& rng, const Shape& s) {
  Nda n{Carrier::numbered("x", s.nx), Carrier::numbered("a", s.m), {}, {}};
  for (std::size_t x = 0; x < s.nx; ++x) {
    for (std::size_t a = 0; a < s.m; ++a) {
      for (std::size_t y = 0; y < s.nx; ++y) {
        if (rng.chance(1, 2)) n.transitions.push_back({x, a, y});
      }
    }
    if (rng.chance(1, 2)) n.accepting.push_back(x);
  }
  return n;
}

std::optional<std::string> derived_modality(Rng& rng, Mutation mu) {
  const Shape s = random_shape(rng);
  const Nda n = random_nda(rng, s);
  const DeterminizedMachine d = forward_determinize(n, all_masks(s.nx));
  const SuccTable t = tabulate(n);
  const Mask acc = accepting_mask(n);
  const Predicate pred = random_pred(rng, d.size());
  for (const auto& mod : modalities(s)) {
    const Predicate shipped = mod_nda(mod, pred, d);
    for (std::size_t i = 0; i < d.size(); ++i) {
      const Mask u = d.subset_states[i];
      NdaFSet image;
      for (auto x : members(u)) {
        if (has_member(acc, x)) image.insert(NdaFElem::terminal());
        for (std::size_t a = 0; a < s.m; ++a) {
          for (auto y : members(t.at(x, a))) image.insert(NdaFElem::act(a, y));
        }
      }
      const bool recipe = lambda_mem(mod, pred, image, s, mu);
      if (recipe != shipped[i]) {
        return shape_str(s) + "modality " + mod_str(mod) + " at U=" + mask_str(u) +
               ": recipe gives " + std::to_string(recipe) + ", derived form gives " +
               std::to_string(shipped[i]);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> relation_naturality(Rng& rng, Mutation mu) {
  const Shape sx = random_shape(rng);
  const Shape sy{rng.between(1, 4), sx.m};
  const auto f = random_kleisli(rng, sx.nx, sy.nx);
  const BitRel r = random_rel(rng, std::size_t{1} << sy.nx);
  BitRel pulled(std::size_t{1} << sx.nx);
  for (Mask u = 0; u < pulled.size(); ++u) {
    for (Mask v = 0; v < pulled.size(); ++v) {
      pulled.set(u, v, r.contains(kleisli_ext(f, u), kleisli_ext(f, v)));
    }
  }
  const std::size_t count = std::size_t{1} << sx.width();
  std::vector<NdaFSet> sets(count);
  std::vector<NdaFSet> images(count);
  for (Mask bits = 0; bits < count; ++bits) {
    sets[bits] = to_fset(bits, sx);
    images[bits] = lift_kleisli(f, sets[bits], Mutation::none);
  }
  for (Mask i = 0; i < count; ++i) {
    for (Mask j = 0; j < count; ++j) {
      const bool lhs = rel_lift_x(pulled, sets[i], sets[j], sx, mu);
      const bool rhs = rel_lift_x(r, images[i], images[j], sy, mu);
      if (lhs != rhs) {
        return shape_str(sx) + "|Y|=" + std::to_string(sy.nx) + " pair " + fset_str(sets[i]) + ", " +
               fset_str(sets[j]) + ": lifting of the pullback = " + std::to_string(lhs) +
               " but pullback of the lifting = " + std::to_string(rhs);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> relation_intersection(Rng& rng, Mutation mu) {
  const Shape s = random_shape(rng);
  const std::size_t size = std::size_t{1} << s.nx;
  const BitRel r1 = random_rel(rng, size);
  const BitRel r2 = random_rel(rng, size);
  const BitRel both = r1 & r2;
  const std::size_t count = std::size_t{1} << s.width();
  std::vector<NdaFSet> sets(count);
  for (Mask bits = 0; bits < count; ++bits) sets[bits] = to_fset(bits, s);
  for (Mask i = 0; i < count; ++i) {
    for (Mask j = 0; j < count; ++j) {
      const bool lhs = rel_lift_x(both, sets[i], sets[j], s, mu);
      const bool rhs = rel_lift_x(r1, sets[i], sets[j], s, mu) && rel_lift_x(r2, sets[i], sets[j], s, mu);
      if (lhs != rhs) {
        return shape_str(s) + "pair " + fset_str(sets[i]) + ", " + fset_str(sets[j]) +
               ": lifting of R1 & R2 = " + std::to_string(lhs) + " but the meet of the liftings = " +
               std::to_string(rhs);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> relation_equality(Rng& rng, Mutation mu) {
  const Shape s = random_shape(rng);
  const BitRel id = BitRel::identity(std::size_t{1} << s.nx);
  const std::size_t count = std::size_t{1} << s.width();
  std::vector<NdaFSet> sets(count);
  for (Mask bits = 0; bits < count; ++bits) sets[bits] = to_fset(bits, s);
  for (Mask i = 0; i < count; ++i) {
    for (Mask j = 0; j < count; ++j) {
      if (rel_lift_x(id, sets[i], sets[j], s, mu) != (i == j)) {
        return shape_str(s) + "pair " + fset_str(sets[i]) + ", " + fset_str(sets[j]) +
               ": lifted equality disagrees with equality";
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<LawSpec> nda_laws(Mutation m) {
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
