#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cobeh/core/error.hpp"
#include "cobeh/core/random.hpp"
#include "cobeh/equivalence/cts_equiv.hpp"
#include "cobeh/equivalence/lwa_equiv.hpp"
#include "cobeh/equivalence/moore_equiv.hpp"
#include "cobeh/equivalence/nda_equiv.hpp"
#include "cobeh/io/generators.hpp"
#include "cobeh/io/json_io.hpp"
#include "cobeh/liftings/laws.hpp"
#include "cobeh/logic/adequacy.hpp"
#include "cobeh/logic/logic.hpp"
#include "cobeh/quotient/cts_quotient.hpp"
#include "cobeh/quotient/quotient.hpp"

namespace {

using namespace cobeh;
using Json = nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

struct Options {
  std::string file;
  std::string kind;
  std::string semantics;
  bool text = false;

  std::vector<std::string> pair;
  bool all = false;
  std::string cond;

  bool identity = false;

  std::string random_kind;
  bool laws = false;
  bool adequacy = false;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::string mutation = "none";

  std::string formula;
  std::string subset;
  std::string vector;
  std::string state;
  bool theory = false;
  std::size_t maxlen = 3;
  std::optional<std::size_t> depth;

  bool backward = false;
  std::vector<std::string> initials;
};

const char* kRefusalNote =
    "a refusal of a state is any action set disjoint from its enabled actions";

SystemFile load(const Options& o) {
  if (o.file.empty()) throw MalformedInput("no input file given");
  SystemFile s = load_system_file(o.file);
  if (!o.kind.empty() && parse_family(o.kind) != family_of(s)) {
    throw MalformedInput(o.file + " holds a " + to_string(family_of(s)) + " system, not " + o.kind);
  }
  if (!o.semantics.empty()) {
    auto* m = std::get_if<MooreSystem>(&s);
    if (!m) throw MalformedInput("--semantics applies to moore systems only");
    const MooreSemantics sem = parse_semantics(o.semantics);
    *m = MooreSystem{with_semantics(m->machine.lts, sem), sem};
  }
  return s;
}

// A bare state label stands for its singleton.
Mask subset_arg(const Carrier& states, const std::string& text) {
  if (auto x = states.find(text)) return singleton(*x);
  return parse_subset(states, text);
}

QVector vector_arg(const Lwa& l, const std::string& text) {
  if (auto x = l.states.find(text)) return unit_vector(l.states.size(), *x);
  QVector v = parse_vector(text);
  if (v.size() != l.states.size()) {
    throw DimensionMismatch("vector " + text + " has " + std::to_string(v.size()) +
                            " entries, expected " + std::to_string(l.states.size()));
  }
  return v;
}

std::size_t condition_arg(const Cts& c, const std::string& text) { return c.conditions.at(text); }

std::vector<Mask> initial_masks(const Carrier& states, const std::vector<std::string>& given) {
  std::vector<Mask> out;
  for (const auto& t : given) out.push_back(subset_arg(states, t));
  if (out.empty()) {
    for (std::size_t x = 0; x < states.size(); ++x) out.push_back(singleton(x));
  }
  return out;
}

Json classes_json(const std::vector<std::vector<std::size_t>>& classes,
                  const std::function<std::string(std::size_t)>& label) {
  Json out = Json::array();
  for (const auto& cls : classes) {
    Json names = Json::array();
    for (auto i : cls) names.push_back(label(i));
    out.push_back(std::move(names));
  }
  return out;
}

Json machine_classes(const SubsetEquivalence& eq) {
  return classes_json(eq.classes(), [&](std::size_t i) { return eq.machine.label(i); });
}

Json report_json(const EquivReport& r) {
  Json cex = Json::array();
  for (const auto& c : r.counterexamples) cex.push_back({{"left", c.left}, {"right", c.right}, {"detail", c.detail}});
  return Json{{"adequate", r.adequate},
              {"expressive", r.expressive},
              {"depth", r.depth},
              {"depth_saturated", r.depth_saturated},
              {"behavioural_classes", r.behavioural_classes()},
              {"logical_classes", r.logical_classes()},
              {"counterexamples", cex},
              {"assumptions", r.assumptions}};
}

bool report_ok(const EquivReport& r) {
  return r.adequate && r.expressive && r.depth_saturated && r.counterexamples.empty();
}

void note_semantics(Json& out, const MooreSystem& m) {
  if (!m.semantics) return;
  out["semantics"] = to_string(*m.semantics);
  if (*m.semantics == MooreSemantics::failure) out["assumptions"] = Json::array({kRefusalNote});
}

// ---- equiv ---------------------------------------------------------------

int equiv_nda(const Options& o, const Nda& n, Json& out) {
  if (o.all) {
    const SubsetEquivalence eq = nda_language_equiv(n, all_masks(n.states.size()));
    out["iterations"] = eq.iterations;
    out["classes"] = machine_classes(eq);
    return kPass;
  }
  const Mask u = subset_arg(n.states, o.pair[0]);
  const Mask v = subset_arg(n.states, o.pair[1]);
  const bool related = nda_language_equiv(n, {u, v}).related(u, v);
  const PairVerdict oracle = nda_pair_oracle(n, u, v);
  if (related != oracle.equivalent) throw std::logic_error("fixpoint and product search disagree");
  out["left"] = format_subset(n.states, u);
  out["right"] = format_subset(n.states, v);
  out["equivalent"] = related;
  if (oracle.witness) {
    out["witness"] = format_word(n.alphabet, *oracle.witness);
    out["accepted_by"] = eval_word_nda(n, u, *oracle.witness) ? out["left"] : out["right"];
  }
  return related ? kPass : kFail;
}

int equiv_lwa(const Options& o, const Lwa& l, Json& out) {
  const std::size_t n = l.states.size();
  if (o.all) {
    const UnobservableSubspace w = lwa_unobservable_subspace(l);
    BitRel rel(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        rel.set(i, j, lwa_equiv(l, unit_vector(n, i), unit_vector(n, j)));
      }
    }
    Json basis = Json::array();
    for (const auto& b : w.space.basis()) basis.push_back(format_vector(b));
    out["iterations"] = w.iterations;
    out["unobservable_basis"] = basis;
    out["classes"] = classes_json(rel.classes(), [&](std::size_t i) { return l.states.name(i); });
    return kPass;
  }
  const QVector p = vector_arg(l, o.pair[0]);
  const QVector q = vector_arg(l, o.pair[1]);
  const bool related = lwa_equiv(l, p, q);
  const PairVerdict oracle = lwa_trace_oracle(l, p, q, n);
  if (related != oracle.equivalent) throw std::logic_error("subspace and trace comparison disagree");
  out["left"] = format_vector(p);
  out["right"] = format_vector(q);
  out["equivalent"] = related;
  if (oracle.witness) {
    out["witness"] = format_word(l.alphabet, *oracle.witness);
    out["left_trace"] = lwa_trace(l, p, *oracle.witness).str();
    out["right_trace"] = lwa_trace(l, q, *oracle.witness).str();
  }
  return related ? kPass : kFail;
}

int equiv_cts(const Options& o, const Cts& c, Json& out) {
  const ConditionalBisimilarity bisim = cts_conditional_bisim(c);
  std::vector<std::size_t> conds;
  if (!o.cond.empty()) {
    conds.push_back(condition_arg(c, o.cond));
  } else {
    for (std::size_t k = 0; k < c.conditions.size(); ++k) conds.push_back(k);
  }
  auto state = [&](std::size_t x) { return c.states.name(x); };
  out["iterations"] = bisim.iterations;
  if (o.all) {
    Json per = Json::object();
    for (auto k : conds) per[c.conditions.name(k)] = classes_json(bisim.relation.slice(k).classes(), state);
    out["classes"] = per;
    if (o.cond.empty()) out["under_all_conditions"] = classes_json(bisimilar_under_all(bisim.relation).classes(), state);
    return kPass;
  }
  const std::size_t x = c.states.at(o.pair[0]);
  const std::size_t y = c.states.at(o.pair[1]);
  out["left"] = state(x);
  out["right"] = state(y);
  bool all_related = true;
  Json per = Json::array();
  for (auto k : conds) {
    const bool related = bisim.relation.contains(k, x, y);
    all_related = all_related && related;
    Json entry{{"condition", c.conditions.name(k)}, {"equivalent", related}};
    if (!related) {
      auto f = cts_distinguishing_formula(c, k, x, y);
      if (!f) throw std::logic_error("no formula separates non-bisimilar states");
      entry["witness"] = f->render();
    }
    per.push_back(std::move(entry));
  }
  out["equivalent"] = all_related;
  out["conditions"] = per;
  return all_related ? kPass : kFail;
}

int equiv_moore(const Options& o, const MooreSystem& m, Json& out) {
  const Carrier& states = m.machine.lts.states;
  note_semantics(out, m);
  if (o.all) {
    const SubsetEquivalence eq = moore_equiv(m.machine, all_masks(states.size()));
    out["iterations"] = eq.iterations;
    out["classes"] = machine_classes(eq);
    return kPass;
  }
  const Mask u = subset_arg(states, o.pair[0]);
  const Mask v = subset_arg(states, o.pair[1]);
  const SubsetEquivalence eq = moore_equiv(m.machine, {u, v});
  const std::size_t i = eq.machine.index_of(u);
  const std::size_t j = eq.machine.index_of(v);
  const bool related = eq.related(u, v);
  const auto witness = separating_word(eq.machine, i, j);
  if (related == witness.has_value()) throw std::logic_error("fixpoint and product search disagree");
  out["left"] = format_subset(states, u);
  out["right"] = format_subset(states, v);
  out["equivalent"] = related;
  if (witness) {
    std::size_t a = i;
    std::size_t b = j;
    for (auto s : *witness) {
      a = eq.machine.target(a, s);
      b = eq.machine.target(b, s);
    }
    out["witness"] = format_word(m.machine.lts.alphabet, *witness);
    out["left_output"] = m.machine.lattice.format(eq.machine.out[a]);
    out["right_output"] = m.machine.lattice.format(eq.machine.out[b]);
  }
  return related ? kPass : kFail;
}

int cmd_equiv(Options o, Json& out) {
  if (o.all && !o.pair.empty()) throw MalformedInput("--pair and --all are exclusive");
  if (o.pair.empty()) o.all = true;
  const SystemFile s = load(o);
  out["command"] = "equiv";
  out["kind"] = to_string(family_of(s));
  out["mode"] = o.all ? "all" : "pair";
  if (!o.cond.empty() && family_of(s) != Family::cts) throw MalformedInput("--cond applies to cts systems only");
  return std::visit(
      [&](const auto& sys) -> int {
        using T = std::decay_t<decltype(sys)>;
        if constexpr (std::is_same_v<T, Nda>) return equiv_nda(o, sys, out);
        else if constexpr (std::is_same_v<T, Lwa>) return equiv_lwa(o, sys, out);
        else if constexpr (std::is_same_v<T, Cts>) return equiv_cts(o, sys, out);
        else return equiv_moore(o, sys, out);
      },
      s);
}

// ---- quotient ------------------------------------------------------------

int quotient_nda(const Options& o, const Nda& n, Json& out) {
  const std::size_t nx = n.states.size();
  require_powerset_cap(nx, kEqualizerCap);
  BitRel eq;
  if (o.identity) {
    eq = BitRel::identity(std::size_t{1} << nx);
  } else {
    const SubsetEquivalence lang = nda_language_equiv(n, all_masks(nx));
    for (std::size_t i = 0; i < lang.machine.size(); ++i) {
      if (lang.machine.subset_states[i] != i) throw std::logic_error("powerset machine is not in mask order");
    }
    eq = lang.relation;
  }
  const EqualizerAutomaton e = build_equalizer_automaton(n, eq);
  out["equivalence"] = o.identity ? "identity" : "language";

  Json states = Json::array();
  for (std::size_t i = 0; i < e.size(); ++i) states.push_back(e.label(i));
  Json trans = Json::array();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t a = 0; a < e.alphabet.size(); ++a) {
      trans.push_back({{"from", e.label(i)}, {"action", e.alphabet.name(a)}, {"to", e.label(e.target(i, a))}});
    }
  }
  Json kappa = Json::array();
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e.kappa(x, i)) kappa.push_back({n.states.name(x), e.label(i)});
    }
  }
  Json image = Json::object();
  for (Mask u : all_masks(nx)) {
    Json targets = Json::array();
    for (Mask w : e.kappa_image(u)) targets.push_back(format_subset(n.states, w));
    image[format_subset(n.states, u)] = targets;
  }
  Json redundant = Json::array();
  for (Mask r : redundant_states(e)) redundant.push_back(format_subset(n.states, r));
  const HomomorphismCheck hom = verify_homomorphism_rel(n, e);

  out["states"] = states;
  out["datum"] = e.label(e.datum);
  out["transitions"] = trans;
  out["kappa"] = kappa;
  out["kappa_image"] = image;
  out["redundant"] = redundant;
  out["homomorphism"] = hom.holds;
  if (hom.witness) out["homomorphism_witness"] = *hom.witness;
  return hom.holds ? kPass : kFail;
}

int quotient_cts(const Options& o, const Cts& c, Json& out) {
  const std::size_t nk = c.conditions.size();
  const std::size_t nx = c.states.size();
  const CondRel r = o.identity ? CondRel::identity(nk, nx) : cts_conditional_bisim(c).relation;
  const CtsQuotient q = cts_quotient(c, r);
  Json classes = Json::object();
  for (std::size_t k = 0; k < nk; ++k) {
    for (std::size_t x = 0; x < nx; ++x) {
      classes[c.conditions.name(k) + "|" + c.states.name(x)] = q.quotient.states.name(q.class_of[k * nx + x]);
    }
  }
  out["equivalence"] = o.identity ? "identity" : "conditional bisimilarity";
  out["class_of"] = classes;
  out["quotient"] = to_json(q.quotient);
  return kPass;
}

int cmd_quotient(const Options& o, Json& out) {
  const SystemFile s = load(o);
  out["command"] = "quotient";
  out["kind"] = to_string(family_of(s));
  if (const auto* n = std::get_if<Nda>(&s)) return quotient_nda(o, *n, out);
  if (const auto* c = std::get_if<Cts>(&s)) return quotient_cts(o, *c, out);
  throw MalformedInput("quotient supports nda and cts systems");
}

// ---- check ---------------------------------------------------------------

Mutation parse_mutation(const std::string& name) {
  for (int m = 0; m <= static_cast<int>(Mutation::lifting_one_sided); ++m) {
    if (to_string(static_cast<Mutation>(m)) == name) return static_cast<Mutation>(m);
  }
  throw MalformedInput("unknown mutation '" + name + "'");
}

bool check_laws(const Options& o, Family family, Json& out) {
  const LawReport r = check_lifting_laws(family, o.trials, o.seed, parse_mutation(o.mutation));
  Json laws = Json::array();
  for (const auto& law : r.laws) {
    laws.push_back({{"law", law.law},
                    {"trials", law.trials},
                    {"failed_trials", law.failed_trials},
                    {"passed", law.passed()},
                    {"counterexamples", law.failures}});
  }
  out["laws"] = {{"mutation", to_string(r.mutation)}, {"all_passed", r.all_passed()}, {"results", laws}};
  return r.all_passed();
}

EquivReport adequacy_of(const SystemFile& s) {
  return std::visit(
      [](const auto& sys) -> EquivReport {
        using T = std::decay_t<decltype(sys)>;
        if constexpr (std::is_same_v<T, Nda>) {
          return check_adequacy_nda(sys, all_masks(sys.states.size()));
        } else if constexpr (std::is_same_v<T, Lwa>) {
          return check_adequacy_lwa(sys, default_lwa_points(sys));
        } else if constexpr (std::is_same_v<T, Cts>) {
          return check_adequacy_cts(sys);
        } else {
          EquivReport r = check_adequacy_moore(sys.machine, all_masks(sys.machine.lts.states.size()));
          if (sys.semantics == MooreSemantics::failure) r.assumptions.push_back(kRefusalNote);
          return r;
        }
      },
      s);
}

SystemFile random_system(Family family, Rng& rng, std::size_t trial, const std::string& semantics) {
  switch (family) {
    case Family::nda: return random_nda(rng);
    case Family::lwa: return random_lwa(rng);
    case Family::cts: return random_cts(rng);
    case Family::moore: break;
  }
  static const MooreSemantics cycle[] = {MooreSemantics::trace, MooreSemantics::failure, MooreSemantics::ready};
  const MooreSemantics sem = semantics.empty() ? cycle[trial % 3] : parse_semantics(semantics);
  return MooreSystem{with_semantics(random_lts(rng), sem), sem};
}

bool check_adequacy_random(const Options& o, Family family, Json& out) {
  // Instances use a stream separate from the law checker's.
  const std::uint64_t base = o.seed ^ 0xA5A5A5A5A5A5A5A5ULL;
  std::size_t failures = 0;
  std::size_t max_depth = 0;
  Json failing = Json::array();
  for (std::size_t t = 0; t < o.trials; ++t) {
    Rng rng = Rng::derive(base, t);
    const SystemFile s = random_system(family, rng, t, o.semantics);
    const EquivReport r = adequacy_of(s);
    max_depth = std::max(max_depth, r.depth);
    if (report_ok(r)) continue;
    ++failures;
    if (failing.size() < 3) failing.push_back({{"trial", t}, {"system", save_system(s)}, {"report", report_json(r)}});
  }
  out["adequacy"] = {{"instances", o.trials},
                     {"failures", failures},
                     {"max_depth", max_depth},
                     {"all_passed", failures == 0},
                     {"failing", failing}};
  if (family == Family::moore && (o.semantics.empty() || o.semantics == "failure")) {
    out["adequacy"]["assumptions"] = Json::array({kRefusalNote});
  }
  return failures == 0;
}

int cmd_check(const Options& o, Json& out) {
  if (!o.laws && !o.adequacy) throw MalformedInput("check needs --laws and/or --adequacy");
  if (o.random_kind.empty() == o.file.empty()) throw MalformedInput("check needs either a FILE or --random KIND");
  out["command"] = "check";
  std::optional<SystemFile> file;
  Family family;
  if (!o.random_kind.empty()) {
    family = parse_family(o.random_kind);
    if (!o.kind.empty() && parse_family(o.kind) != family) throw MalformedInput("--kind contradicts --random");
    out["source"] = "random";
  } else {
    file = load(o);
    family = family_of(*file);
    out["source"] = o.file;
  }
  out["kind"] = to_string(family);
  out["seed"] = o.seed;
  out["trials"] = o.trials;
  bool ok = true;
  if (o.laws) ok = check_laws(o, family, out) && ok;
  if (o.adequacy) {
    if (file) {
      const EquivReport r = adequacy_of(*file);
      out["adequacy"] = report_json(r);
      ok = report_ok(r) && ok;
    } else {
      ok = check_adequacy_random(o, family, out) && ok;
    }
  }
  out["all_passed"] = ok;
  return ok ? kPass : kFail;
}

// ---- eval ----------------------------------------------------------------

template <class Obs, class Render>
Json theory_json(const Theory<Obs>& th, const Carrier& alphabet, Render render) {
  Json out = Json::array();
  for (const auto& [w, obs] : th) out.push_back({{"formula", render_word_formula(alphabet, w)}, {"value", render(obs)}});
  return out;
}

int eval_nda(const Options& o, const Nda& n, Json& out) {
  if (o.subset.empty()) throw MalformedInput("eval on an nda needs --subset");
  const Mask u = subset_arg(n.states, o.subset);
  out["at"] = format_subset(n.states, u);
  if (!o.formula.empty()) {
    const Word w = parse_word_formula(n.alphabet, o.formula);
    out["formula"] = render_word_formula(n.alphabet, w);
    out["value"] = eval_word_nda(n, u, w);
  }
  if (o.theory) out["theory"] = theory_json(theory_word(n, u, o.maxlen), n.alphabet, [](bool b) { return b; });
  return kPass;
}

int eval_lwa(const Options& o, const Lwa& l, Json& out) {
  if (o.vector.empty()) throw MalformedInput("eval on an lwa needs --vector");
  const QVector p = vector_arg(l, o.vector);
  out["at"] = format_vector(p);
  if (!o.formula.empty()) {
    const Word w = parse_word_formula(l.alphabet, o.formula);
    out["formula"] = render_word_formula(l.alphabet, w);
    out["value"] = lwa_trace(l, p, w).str();
  }
  if (o.theory) {
    out["theory"] = theory_json(theory_word(l, p, o.maxlen), l.alphabet, [](const Rational& r) { return r.str(); });
  }
  return kPass;
}

int eval_moore(const Options& o, const MooreSystem& m, Json& out) {
  if (o.subset.empty()) throw MalformedInput("eval on a moore system needs --subset");
  const Carrier& states = m.machine.lts.states;
  const Mask u = subset_arg(states, o.subset);
  note_semantics(out, m);
  out["at"] = format_subset(states, u);
  if (!o.formula.empty()) {
    const Word w = parse_word_formula(m.machine.lts.alphabet, o.formula);
    const DeterminizedMachine d = moore_determinize(m.machine, {u});
    std::size_t i = d.index_of(u);
    for (auto a : w) i = d.target(i, a);
    out["formula"] = render_word_formula(m.machine.lts.alphabet, w);
    out["value"] = m.machine.lattice.format(d.out[i]);
  }
  if (o.theory) {
    out["theory"] = theory_json(theory_word(m.machine, u, o.maxlen), m.machine.lts.alphabet,
                                [&](LatticeElem e) { return m.machine.lattice.format(e); });
  }
  return kPass;
}

int eval_cts(const Options& o, const Cts& c, Json& out) {
  const std::size_t nx = c.states.size();
  if (!o.formula.empty()) {
    const auto f = parse_cts_formula(o.formula);
    const Predicate sat = eval_cts(c, *f);
    out["formula"] = f->render();
    if (!o.state.empty()) {
      const std::size_t x = c.states.at(o.state);
      Json per = Json::object();
      for (std::size_t k = 0; k < c.conditions.size(); ++k) {
        if (o.cond.empty() || condition_arg(c, o.cond) == k) per[c.conditions.name(k)] = static_cast<bool>(sat[k * nx + x]);
      }
      out["at"] = o.state;
      out["value"] = per;
    } else {
      Json points = Json::array();
      for (std::size_t e = 0; e < sat.size(); ++e) {
        if (sat[e]) points.push_back(c.conditions.name(e / nx) + "|" + c.states.name(e % nx));
      }
      out["satisfied_at"] = points;
    }
  }
  if (o.theory) {
    const std::size_t depth = o.depth ? *o.depth : cts_conditional_bisim(c).iterations;
    const BitRel logical = cts_logical_relation(c, depth);
    Json per = Json::object();
    for (std::size_t k = 0; k < c.conditions.size(); ++k) {
      BitRel slice(nx);
      for (std::size_t x = 0; x < nx; ++x) {
        for (std::size_t y = 0; y < nx; ++y) slice.set(x, y, logical.contains(k * nx + x, k * nx + y));
      }
      per[c.conditions.name(k)] = classes_json(slice.classes(), [&](std::size_t x) { return c.states.name(x); });
    }
    out["theory"] = {{"depth", depth}, {"classes", per}};
  }
  return kPass;
}

int cmd_eval(const Options& o, Json& out) {
  if (o.formula.empty() && !o.theory) throw MalformedInput("eval needs --formula or --theory");
  const SystemFile s = load(o);
  out["command"] = "eval";
  out["kind"] = to_string(family_of(s));
  return std::visit(
      [&](const auto& sys) -> int {
        using T = std::decay_t<decltype(sys)>;
        if constexpr (std::is_same_v<T, Nda>) return eval_nda(o, sys, out);
        else if constexpr (std::is_same_v<T, Lwa>) return eval_lwa(o, sys, out);
        else if constexpr (std::is_same_v<T, Cts>) return eval_cts(o, sys, out);
        else return eval_moore(o, sys, out);
      },
      s);
}

// ---- determinize ---------------------------------------------------------

Json machine_json(const DeterminizedMachine& d, const std::function<Json(LatticeElem)>& output) {
  Json states = Json::array();
  Json trans = Json::array();
  Json outs = Json::object();
  for (std::size_t i = 0; i < d.size(); ++i) {
    states.push_back(d.label(i));
    outs[d.label(i)] = output(d.out[i]);
    for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
      trans.push_back({{"from", d.label(i)}, {"action", d.alphabet.name(a)}, {"to", d.label(d.target(i, a))}});
    }
  }
  return Json{{"states", states}, {"transitions", trans}, {"outputs", outs}};
}

int cmd_determinize(const Options& o, Json& out) {
  const SystemFile s = load(o);
  out["command"] = "determinize";
  out["kind"] = to_string(family_of(s));
  out["direction"] = o.backward ? "backward" : "forward";
  if (o.backward) {
    const auto* n = std::get_if<Nda>(&s);
    if (!n) throw MalformedInput("backward determinization applies to nda systems only");
    if (!o.initials.empty()) throw MalformedInput("--initial has no effect with --backward");
    const BackwardDfa b = backward_determinize(*n);
    Json states = Json::array();
    Json trans = Json::array();
    Json accepting = Json::array();
    for (Mask u : all_masks(n->states.size())) {
      const std::string label = format_subset(n->states, u);
      states.push_back(label);
      if (b.accepting(u)) accepting.push_back(label);
      for (std::size_t a = 0; a < b.alphabet.size(); ++a) {
        trans.push_back({{"from", label}, {"action", b.alphabet.name(a)}, {"to", format_subset(n->states, b.target(u, a))}});
      }
    }
    out["datum"] = format_subset(n->states, b.datum);
    out["states"] = states;
    out["transitions"] = trans;
    out["accepting"] = accepting;
    return kPass;
  }
  if (const auto* n = std::get_if<Nda>(&s)) {
    const DeterminizedMachine d = forward_determinize(*n, initial_masks(n->states, o.initials));
    out.update(machine_json(d, [](LatticeElem e) { return Json(e != 0); }));
    return kPass;
  }
  if (const auto* m = std::get_if<MooreSystem>(&s)) {
    note_semantics(out, *m);
    const DeterminizedMachine d = moore_determinize(m->machine, initial_masks(m->machine.lts.states, o.initials));
    out.update(machine_json(d, [&](LatticeElem e) { return Json(m->machine.lattice.format(e)); }));
    return kPass;
  }
  throw MalformedInput("forward determinization applies to nda and moore systems");
}

// ---- output --------------------------------------------------------------

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool is_flat(const Json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v) {
    if (e.is_structured()) return false;
  }
  return true;
}

void print_text(std::ostream& os, const Json& v, const std::string& indent) {
  for (const auto& [key, val] : v.items()) {
    const std::string head = indent + (v.is_array() ? "-" : key + ":");
    if (!val.is_structured()) {
      os << head << ' ' << scalar_text(val) << '\n';
    } else if (is_flat(val)) {
      os << head;
      for (const auto& e : val) os << ' ' << scalar_text(e);
      os << '\n';
    } else {
      os << head << '\n';
      print_text(os, val, indent + "  ");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Behavioural equivalences, quotients and modal logics for finite coalgebras"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_file) {
    auto* f = sub->add_option("file", o.file, "System description (JSON)");
    if (needs_file) f->required();
    sub->add_option("--kind", o.kind, "Expected system kind (nda, lwa, cts, moore)");
    sub->add_option("--semantics", o.semantics, "Moore semantics: trace, failure or ready");
    auto* json = sub->add_flag("--json", "JSON report (default)");
    sub->add_flag("--text", o.text, "Plain text report")->excludes(json);
  };

  auto* equiv = app.add_subcommand("equiv", "Decide behavioural equivalence");
  common(equiv, true);
  equiv->add_option("--pair", o.pair, "Two subsets, vectors or states")->expected(2)->allow_extra_args(false);
  equiv->add_flag("--all", o.all, "List every equivalence class");
  equiv->add_option("--cond", o.cond, "Restrict a CTS to one condition");

  auto* quotient = app.add_subcommand("quotient", "Build the equalizer automaton or CTS quotient");
  common(quotient, true);
  quotient->add_flag("--identity", o.identity, "Quotient by the identity relation");

  auto* check = app.add_subcommand("check", "Run law and adequacy checks");
  common(check, false);
  check->add_option("--random", o.random_kind, "Sample random systems of this kind");
  check->add_flag("--laws", o.laws, "Check the lifting laws");
  check->add_flag("--adequacy", o.adequacy, "Check adequacy and expressivity of the logic");
  check->add_option("--seed", o.seed, "Seed for all sampling");
  check->add_option("--trials", o.trials, "Number of sampled instances");
  check->add_option("--mutation", o.mutation, "Run the laws against a deliberately broken lifting");

  auto* eval = app.add_subcommand("eval", "Evaluate formulas");
  common(eval, true);
  eval->add_option("--formula", o.formula, "Word formula such as [a][b]↓, or a CTS formula");
  eval->add_option("--subset", o.subset, "Subset of states, e.g. {x,y}");
  eval->add_option("--vector", o.vector, "Weight vector, e.g. [1/2, 0, -3]");
  eval->add_option("--state", o.state, "CTS state");
  eval->add_option("--cond", o.cond, "CTS condition");
  eval->add_flag("--theory", o.theory, "List the theory of the point");
  eval->add_option("--maxlen", o.maxlen, "Longest word in a listed theory");
  eval->add_option("--depth", o.depth, "Formula depth for CTS theories");

  auto* det = app.add_subcommand("determinize", "Dump a forward or backward subset construction");
  common(det, true);
  auto* fwd = det->add_flag("--forward", "Forward subset construction (default)");
  det->add_flag("--backward", o.backward, "Reverse-image construction on the full powerset")->excludes(fwd);
  det->add_option("--initial", o.initials, "Initial subsets for the forward construction")->allow_extra_args(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  Json out;
  int code = kPass;
  try {
    if (*equiv) code = cmd_equiv(o, out);
    else if (*quotient) code = cmd_quotient(o, out);
    else if (*check) code = cmd_check(o, out);
    else if (*eval) code = cmd_eval(o, out);
    else code = cmd_determinize(o, out);
  } catch (const cobeh::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  if (o.text) {
    print_text(std::cout, out, "");
  } else {
    std::cout << out.dump(2) << '\n';
  }
  return code;
}
