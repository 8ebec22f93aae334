#include "cobeh/logic/adequacy.hpp"

#include <deque>
#include <functional>
#include <stdexcept>

#include "cobeh/core/error.hpp"
#include "cobeh/equivalence/cts_equiv.hpp"
#include "cobeh/equivalence/lwa_equiv.hpp"
#include "cobeh/equivalence/moore_equiv.hpp"
#include "cobeh/equivalence/nda_equiv.hpp"
#include "cobeh/logic/formula.hpp"
#include "cobeh/logic/logic.hpp"

namespace cobeh {

std::optional<Word> separating_word(const DeterminizedMachine& d, std::size_t i, std::size_t j) {
  const std::size_t n = d.size();
  std::vector<std::pair<std::size_t, std::size_t>> parent(n * n, {n * n, 0});
  std::vector<bool> seen(n * n, false);
  std::deque<std::size_t> queue{i * n + j};
  seen[i * n + j] = true;
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    const std::size_t p = cur / n;
    const std::size_t q = cur % n;
    if (d.out[p] != d.out[q]) {
      Word w;
      for (std::size_t c = cur; c != i * n + j; c = parent[c].first) w.push_back(parent[c].second);
      return Word(w.rbegin(), w.rend());
    }
    for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
      const std::size_t next = d.target(p, a) * n + d.target(q, a);
      if (!seen[next]) {
        seen[next] = true;
        parent[next] = {cur, a};
        queue.push_back(next);
      }
    }
  }
  return std::nullopt;
}

namespace {

std::vector<std::vector<std::string>> label_classes(const BitRel& r,
                                                    const std::vector<std::string>& labels) {
  std::vector<std::vector<std::string>> out;
  for (const auto& cls : r.classes()) {
    std::vector<std::string> names;
    for (auto i : cls) names.push_back(labels[i]);
    out.push_back(std::move(names));
  }
  return out;
}

// Fills verdicts and counterexamples once both relations are known.
// `separate(i, j)` renders a formula separating i from j.
void compare(EquivReport& r, const std::function<std::string(std::size_t, std::size_t)>& separate) {
  const std::size_t n = r.labels.size();
  r.adequate = r.behavioural.is_subset_of(r.logical);
  r.expressive = r.logical.is_subset_of(r.behavioural);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool beh = r.behavioural.contains(i, j);
      const bool log = r.logical.contains(i, j);
      if (beh && !log) {
        r.counterexamples.push_back({r.labels[i], r.labels[j], separate(i, j)});
      } else if (log && !beh) {
        r.counterexamples.push_back(
            {r.labels[i], r.labels[j], "behaviourally distinct but no formula separates them"});
      }
    }
  }
}

EquivReport machine_report(const SubsetEquivalence& beh,
                           const std::function<std::string(const Word&, std::size_t)>& render) {
  const DeterminizedMachine& d = beh.machine;
  EquivReport r;
  for (std::size_t i = 0; i < d.size(); ++i) r.labels.push_back(d.label(i));
  r.behavioural = beh.relation;
  r.logical = BitRel(d.size());
  std::vector<std::optional<Word>> witness(d.size() * d.size());
  std::size_t longest = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    r.logical.set(i, i);
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      auto w = separating_word(d, i, j);
      if (!w) {
        r.logical.set(i, j);
        r.logical.set(j, i);
      } else {
        longest = std::max(longest, w->size());
        witness[i * d.size() + j] = std::move(w);
      }
    }
  }
  r.depth = longest;
  compare(r, [&](std::size_t i, std::size_t j) {
    const Word& w = *witness[i * d.size() + j];
    std::size_t end = i;
    for (auto a : w) end = d.target(end, a);
    return render(w, end);
  });
  return r;
}

}  // namespace

std::vector<std::vector<std::string>> EquivReport::behavioural_classes() const {
  return label_classes(behavioural, labels);
}

std::vector<std::vector<std::string>> EquivReport::logical_classes() const {
  return label_classes(logical, labels);
}

EquivReport check_adequacy_nda(const Nda& n, const std::vector<Mask>& initials) {
  const SubsetEquivalence beh = nda_language_equiv(n, initials);
  return machine_report(beh, [&](const Word& w, std::size_t end) {
    const std::string f = render_word_formula(n.alphabet, w);
    return beh.machine.out[end] != 0 ? f : "¬" + f;
  });
}

EquivReport check_adequacy_moore(const OutputLts& m, const std::vector<Mask>& initials) {
  const SubsetEquivalence beh = moore_equiv(m, initials);
  return machine_report(beh, [&](const Word& w, std::size_t end) {
    std::string f;
    for (auto a : w) f += "[" + m.lts.alphabet.name(a) + "]";
    return f + "↓" + m.lattice.format(beh.machine.out[end]);
  });
}

std::vector<QVector> default_lwa_points(const Lwa& l) {
  const std::size_t n = l.states.size();
  std::vector<QVector> out{zero_vector(n)};
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector(n, i));
  return out;
}

EquivReport check_adequacy_lwa(const Lwa& l, const std::vector<QVector>& points) {
  const std::size_t n = l.states.size();
  const UnobservableSubspace w = lwa_unobservable_subspace(l);
  EquivReport r;
  for (const auto& p : points) {
    if (p.size() != n) throw DimensionMismatch("point has the wrong dimension");
    r.labels.push_back(format_vector(p));
  }
  const std::size_t k = points.size();
  r.behavioural = BitRel(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (w.space.contains(sub(points[i], points[j]))) r.behavioural.set(i, j);
    }
  }

  // traces[i][word index] for every word of length <= n + 1, shortlex.
  const std::vector<Word> words = words_upto(l.alphabet.size(), n + 1);
  std::vector<std::vector<Rational>> traces(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<QVector> vecs;
    vecs.reserve(words.size());
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
      if (words[wi].empty()) {
        vecs.push_back(points[i]);
      } else {
        // The prefix of a shortlex word precedes it, at index (wi - 1) / m.
        const std::size_t prefix = (wi - 1) / l.alphabet.size();
        vecs.push_back(lwa_step(l, vecs[prefix], words[wi].back()));
      }
      traces[i].push_back(lwa_output(l, vecs.back()));
    }
  }
  auto first_difference = [&](std::size_t i, std::size_t j, std::size_t maxlen) -> std::optional<std::size_t> {
    for (std::size_t wi = 0; wi < words.size() && words[wi].size() <= maxlen; ++wi) {
      if (traces[i][wi] != traces[j][wi]) return wi;
    }
    return std::nullopt;
  };
  r.depth = n;
  r.logical = BitRel(k);
  BitRel extended(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!first_difference(i, j, n)) r.logical.set(i, j);
      if (!first_difference(i, j, n + 1)) extended.set(i, j);
    }
  }
  r.depth_saturated = extended == r.logical;
  compare(r, [&](std::size_t i, std::size_t j) {
    const std::size_t wi = *first_difference(i, j, n);
    return render_word_formula(l.alphabet, words[wi]) + " with traces " + traces[i][wi].str() +
           " and " + traces[j][wi].str();
  });
  return r;
}

namespace {

inline constexpr std::size_t kMaxAtoms = 20;

// Partition of K x X induced by formulas of box depth <= i, as atom ids.
using Atoms = std::vector<std::size_t>;

// Refines the partition by every predicate box(U), U ranging over all unions
// of current atoms.
Atoms refine_by_boxes(const Atoms& atoms, const std::vector<Mask>& succ) {
  std::size_t count = 0;
  for (auto a : atoms) count = std::max(count, a + 1);
  if (count > kMaxAtoms) {
    throw CapExceeded("formula enumeration needs 2^" + std::to_string(count) + " unions");
  }
  std::vector<Mask> atom_mask(count, 0);
  for (std::size_t e = 0; e < atoms.size(); ++e) atom_mask[atoms[e]] |= singleton(e);

  Atoms current = atoms;
  for (Mask sel = 0; sel < (Mask{1} << count); ++sel) {
    Mask u = 0;
    for (auto a : members(sel)) u |= atom_mask[a];
    // Split every block by membership in box(U).
    std::vector<std::pair<std::size_t, bool>> keys(current.size());
    for (std::size_t e = 0; e < current.size(); ++e) keys[e] = {current[e], (succ[e] & ~u) == 0};
    std::vector<std::pair<std::size_t, bool>> seen;
    for (std::size_t e = 0; e < current.size(); ++e) {
      std::size_t id = 0;
      while (id < seen.size() && seen[id] != keys[e]) ++id;
      if (id == seen.size()) seen.push_back(keys[e]);
      current[e] = id;
    }
  }
  return current;
}

BitRel same_condition_relation(const Atoms& atoms, std::size_t nk, std::size_t nx) {
  BitRel r(nk * nx);
  for (std::size_t k = 0; k < nk; ++k) {
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t y = 0; y < nx; ++y) {
        if (atoms[k * nx + x] == atoms[k * nx + y]) r.set(k * nx + x, k * nx + y);
      }
    }
  }
  return r;
}

struct Stratification {
  std::size_t nk = 0;
  std::size_t nx = 0;
  std::vector<Mask> succ;
  std::vector<Atoms> levels;

  Stratification(const Cts& c) : nk(c.conditions.size()), nx(c.states.size()), succ(nk * nx, 0) {
    require_valid(validate(c), "conditional transition system");
    if (nk * nx > kMaxMaskWidth) throw CapExceeded("K x X exceeds 64 points");
    for (const auto& t : c.transitions) {
      succ[t.condition * nx + t.from] |= singleton(t.condition * nx + t.to);
    }
    levels.push_back(Atoms(nk * nx, 0));
  }

  void extend_to(std::size_t depth) {
    while (levels.size() <= depth) levels.push_back(refine_by_boxes(levels.back(), succ));
  }

  void extend_until_stable() {
    for (;;) {
      extend_to(levels.size());
      if (levels[levels.size() - 1] == levels[levels.size() - 2]) return;
    }
  }

  // Hennessy-Milner style witness: true at e, false at f, built from the
  // first level that separates them. Requires that some level does.
  CtsFormula::Ptr distinguish(std::size_t e, std::size_t f) const {
    std::size_t level = 1;
    while (levels[level][e] == levels[level][f]) ++level;
    const Atoms& prev = levels[level - 1];
    auto attempt = [&](std::size_t from, std::size_t other) -> CtsFormula::Ptr {
      for (auto s : members(succ[from])) {
        bool apart = true;
        for (auto t : members(succ[other])) apart = apart && prev[s] != prev[t];
        if (!apart) continue;
        CtsFormula::Ptr body = CtsFormula::tt();
        bool first = true;
        for (auto t : members(succ[other])) {
          auto part = distinguish(s, t);
          body = first ? part : CtsFormula::conj(body, part);
          first = false;
        }
        return CtsFormula::diamond(body);
      }
      return nullptr;
    };
    if (auto f1 = attempt(e, f)) return f1;
    if (auto f2 = attempt(f, e)) return CtsFormula::neg(f2);
    throw std::logic_error("levels separate two points without a modal witness");
  }
};

CtsFormula::Ptr checked_witness(const Cts& c, const Stratification& s, std::size_t e, std::size_t f) {
  auto formula = s.distinguish(e, f);
  const Predicate sat = eval_cts(c, *formula);
  if (!sat[e] || sat[f]) throw std::logic_error("witness formula does not separate the points");
  return formula;
}

}  // namespace

CtsFormula::Ptr cts_distinguishing_formula(const Cts& c, std::size_t k, std::size_t x, std::size_t y) {
  Stratification s(c);
  if (k >= s.nk || x >= s.nx || y >= s.nx) throw MalformedInput("index out of range");
  s.extend_until_stable();
  const std::size_t e = k * s.nx + x;
  const std::size_t f = k * s.nx + y;
  if (s.levels.back()[e] == s.levels.back()[f]) return nullptr;
  return checked_witness(c, s, e, f);
}

BitRel cts_logical_relation(const Cts& c, std::size_t depth) {
  Stratification s(c);
  s.extend_to(depth);
  return same_condition_relation(s.levels[depth], s.nk, s.nx);
}

EquivReport check_adequacy_cts(const Cts& c) {
  Stratification s(c);
  const ConditionalBisimilarity beh = cts_conditional_bisim(c);
  EquivReport r;
  for (std::size_t k = 0; k < s.nk; ++k) {
    for (std::size_t x = 0; x < s.nx; ++x) {
      r.labels.push_back(c.conditions.name(k) + "|" + c.states.name(x));
    }
  }
  r.behavioural = beh.relation.flatten();
  r.depth = beh.iterations;
  s.extend_to(r.depth + 1);
  r.logical = same_condition_relation(s.levels[r.depth], s.nk, s.nx);
  r.depth_saturated = same_condition_relation(s.levels[r.depth + 1], s.nk, s.nx) == r.logical;
  compare(r, [&](std::size_t i, std::size_t j) { return checked_witness(c, s, i, j)->render(); });
  return r;
}

}  // namespace cobeh
