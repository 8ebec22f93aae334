#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cobeh/core/random.hpp"
#include "cobeh/equivalence/cts_equiv.hpp"
#include "cobeh/equivalence/lwa_equiv.hpp"
#include "cobeh/equivalence/moore_equiv.hpp"
#include "cobeh/equivalence/nda_equiv.hpp"
#include "cobeh/io/generators.hpp"
#include "cobeh/io/json_io.hpp"
#include "cobeh/liftings/laws.hpp"
#include "cobeh/logic/adequacy.hpp"
#include "cobeh/quotient/quotient.hpp"
#include "oracles.hpp"

using namespace cobeh;

namespace {

const std::string kData = COBEH_DATA_DIR;
const std::string kCli = COBEH_CLI;

// Collects the reasons a criterion failed; empty means pass.
struct Problems {
  std::vector<std::string> items;
  void add(std::string s) {
    if (items.size() < 5) items.push_back(std::move(s));
    ++count;
  }
  std::size_t count = 0;
};

std::vector<std::string> labels_of(const Carrier& base, const std::vector<Mask>& ms) {
  std::vector<std::string> out;
  for (Mask m : ms) out.push_back(format_subset(base, m));
  return out;
}

Problems ac1(double& seconds_budget) {
  Problems p;
  seconds_budget = 1.0;
  const Nda n = std::get<Nda>(load_system_file(kData + "/worked-example.json"));
  const Mask x = parse_subset(n.states, "{x}");
  const Mask y = parse_subset(n.states, "{y}");
  const Mask z = parse_subset(n.states, "{z}");

  // (a) the only non-identity merges over P(X)
  const SubsetEquivalence eq = nda_language_equiv(n, all_masks(3));
  std::set<std::pair<Mask, Mask>> merged;
  for (Mask u = 0; u < 8; ++u) {
    for (Mask v = u + 1; v < 8; ++v) {
      if (eq.related(u, v)) merged.insert({u, v});
    }
  }
  const std::set<std::pair<Mask, Mask>> expected{{y, x | y}, {y | z, x | y | z}};
  if (merged != expected) p.add("language classes over P(X) differ from {x,y}~{y}, {x,y,z}~{y,z}");

  // (b) equalizer carrier
  const EqualizerAutomaton e = build_equalizer_automaton(n, eq.relation);
  const std::vector<Mask> carrier{0, y, x | y, z, y | z, x | y | z};
  if (e.carrier != carrier) {
    std::string got;
    for (const auto& s : labels_of(n.states, e.carrier)) got += s + " ";
    p.add("equalizer carrier is " + got);
  }

  // (c) kappa images of {x,y} and {y}
  const std::vector<Mask> image{y, x | y, y | z, x | y | z};
  if (e.kappa_image(x | y) != image) p.add("|kappa|({x,y}) differs");
  if (e.kappa_image(y) != image) p.add("|kappa|({y}) differs");

  // (d) homomorphism
  const HomomorphismCheck h = verify_homomorphism_rel(n, e);
  if (!h.holds) p.add("homomorphism check failed: " + h.witness.value_or(""));
  return p;
}

Problems ac2(double& budget) {
  Problems p;
  budget = 60.0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng = Rng::derive(2024, t);
    const Nda n = random_nda(rng, 5, 2);
    const std::size_t size = std::size_t{1} << n.states.size();
    const SubsetEquivalence eq = nda_language_equiv(n, all_masks(n.states.size()));
    for (Mask u = 0; u < size; ++u) {
      for (Mask v = u; v < size; ++v) {
        if (eq.related(u, v) != oracle::nda_equivalent(n, u, v)) {
          p.add("automaton " + std::to_string(t) + ": " + format_subset(n.states, u) + " vs " +
                format_subset(n.states, v));
        }
      }
    }
  }
  return p;
}

Problems ac3(double& budget) {
  Problems p;
  budget = 60.0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng = Rng::derive(4048, t);
    const Lwa l = random_lwa(rng, 4, 2);
    const std::size_t n = l.states.size();
    const UnobservableSubspace w = lwa_unobservable_subspace(l);
    if (w.iterations > std::max<std::size_t>(n, 1)) {
      p.add("automaton " + std::to_string(t) + ": chain took " + std::to_string(w.iterations) + " steps");
    }
    std::vector<QVector> points = default_lwa_points(l);
    for (int extra = 0; extra < 3; ++extra) {
      QVector v(n);
      for (auto& c : v) c = random_weight(rng);
      points.push_back(v);
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto ti = oracle::lwa_traces(l, oracle::to_mpq(points[i]), n);
      for (std::size_t j = i; j < points.size(); ++j) {
        const bool by_traces = ti == oracle::lwa_traces(l, oracle::to_mpq(points[j]), n);
        if (lwa_equiv(l, points[i], points[j]) != by_traces) {
          p.add("automaton " + std::to_string(t) + ": " + format_vector(points[i]) + " vs " +
                format_vector(points[j]));
        }
      }
    }
  }
  return p;
}

Problems ac4(double& budget) {
  Problems p;
  budget = 60.0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng = Rng::derive(8096, t);
    const Cts c = random_cts(rng, 3, 6);
    const ConditionalBisimilarity b = cts_conditional_bisim(c);
    for (std::size_t k = 0; k < c.conditions.size(); ++k) {
      const auto ref = oracle::cts_slice_bisim(c, k);
      const BitRel refined = partition_relation(cts_slice_bisim_oracle(c, k), c.states.size());
      for (std::size_t x = 0; x < c.states.size(); ++x) {
        for (std::size_t y = 0; y < c.states.size(); ++y) {
          const bool got = b.relation.contains(k, x, y);
          if (got != ref[x][y] || got != refined.contains(x, y)) {
            p.add("system " + std::to_string(t) + " condition " + c.conditions.name(k) + ": " +
                  c.states.name(x) + ", " + c.states.name(y));
          }
        }
      }
    }
  }
  return p;
}

Problems ac5(double& budget) {
  Problems p;
  budget = 120.0;
  const std::uint64_t seed = 7;
  const std::vector<std::string> nda_like{"kleisli_unit",
                                          "kleisli_multiplication",
                                          "gamma_theta_mu_compatibility",
                                          "predicate_lifting_naturality",
                                          "relation_lifting_naturality",
                                          "relation_lifting_intersection",
                                          "relation_lifting_equality"};
  for (Family f : {Family::nda, Family::lwa, Family::cts, Family::moore}) {
    const LawReport r = check_lifting_laws(f, 100, seed);
    for (const auto& law : r.laws) {
      if (law.trials != 100) p.add(to_string(f) + " " + law.law + " ran " + std::to_string(law.trials) + " trials");
      if (!law.passed()) {
        p.add(to_string(f) + " " + law.law + ": " + (law.failures.empty() ? "" : law.failures.front()));
      }
    }
    if (f == Family::nda || f == Family::lwa) {
      for (const auto& name : nda_like) {
        if (!r.find(name)) p.add(to_string(f) + " lacks law " + name);
      }
    }
    for (const auto& [law, mutation] : law_mutations(f)) {
      const LawReport broken = check_lifting_laws(f, 100, seed, mutation);
      const LawResult* res = broken.find(law);
      if (!res || res->passed()) p.add(to_string(f) + " " + law + " did not catch " + to_string(mutation));
    }
  }
  return p;
}

void expect_adequate(Problems& p, const std::string& what, const EquivReport& r, bool need_saturation) {
  if (!r.adequate || !r.expressive || !r.counterexamples.empty()) {
    p.add(what + ": adequate=" + std::to_string(r.adequate) + " expressive=" + std::to_string(r.expressive) +
          (r.counterexamples.empty() ? "" : " " + r.counterexamples.front().detail));
  }
  if (need_saturation && !r.depth_saturated) p.add(what + ": depth " + std::to_string(r.depth) + " not saturated");
}

Problems ac6(double& budget) {
  Problems p;
  budget = 60.0;
  const Nda example = std::get<Nda>(load_system_file(kData + "/worked-example.json"));
  expect_adequate(p, "worked example", check_adequacy_nda(example, all_masks(3)), true);
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng = Rng::derive(16192, t);
    const Nda n = random_nda(rng, 5, 2);
    expect_adequate(p, "nda " + std::to_string(t), check_adequacy_nda(n, all_masks(n.states.size())), true);
  }
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng = Rng::derive(32384, t);
    const Lwa l = random_lwa(rng, 4, 2);
    expect_adequate(p, "lwa " + std::to_string(t), check_adequacy_lwa(l, default_lwa_points(l)), true);
  }
  for (std::uint64_t t = 0; t < 50; ++t) {
    Rng rng = Rng::derive(64768, t);
    const Cts c = random_cts(rng, 3, 6);
    const EquivReport r = check_adequacy_cts(c);
    expect_adequate(p, "cts " + std::to_string(t), r, true);
    // The behavioural side is also held against the definition.
    const std::size_t nx = c.states.size();
    for (std::size_t k = 0; k < c.conditions.size(); ++k) {
      const auto ref = oracle::cts_slice_bisim(c, k);
      for (std::size_t x = 0; x < nx; ++x) {
        for (std::size_t y = 0; y < nx; ++y) {
          if (r.logical.contains(k * nx + x, k * nx + y) != ref[x][y]) {
            p.add("cts " + std::to_string(t) + ": logical relation differs from bisimilarity");
          }
        }
      }
    }
  }
  return p;
}

Problems ac7(double& budget) {
  Problems p;
  budget = 1.0;
  const MooreSystem m = std::get<MooreSystem>(load_system_file(kData + "/branching-lts.json"));
  const Lts& l = m.machine.lts;
  const std::size_t p0 = l.states.at("p0");
  const std::size_t q0 = l.states.at("q0");

  // Confirm the shape by enumeration first.
  if (oracle::traces(l, p0, 4) != oracle::traces(l, q0, 4)) p.add("pair is not trace equivalent");
  if (oracle::failures(l, p0, 4) == oracle::failures(l, q0, 4)) p.add("pair is failure equivalent");
  if (oracle::ready_pairs(l, p0, 4) == oracle::ready_pairs(l, q0, 4)) p.add("pair is ready equivalent");

  const std::array<std::pair<MooreSemantics, bool>, 3> cases{
      {{MooreSemantics::trace, true}, {MooreSemantics::failure, false}, {MooreSemantics::ready, false}}};
  for (const auto& [sem, expected] : cases) {
    const OutputLts machine = with_semantics(l, sem);
    const SubsetEquivalence eq = moore_equiv(machine, {singleton(p0), singleton(q0)});
    if (eq.related(singleton(p0), singleton(q0)) != expected) {
      p.add("semantics " + to_string(sem) + " gives the wrong verdict");
    }
  }
  return p;
}

std::string run(const std::string& args) {
  std::string out;
  FILE* pipe = popen((kCli + " " + args + " 2>&1").c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  return out;
}

Problems ac8(double& budget) {
  Problems p;
  budget = 60.0;
  const std::string example = kData + "/worked-example.json";
  const std::vector<std::string> invocations{
      "check --random nda --laws --adequacy --trials 30 --seed 7",
      "check --random lwa --laws --adequacy --trials 30 --seed 11",
      "check --random cts --laws --adequacy --trials 30 --seed 13",
      "check --random moore --laws --adequacy --trials 30 --seed 17",
      "equiv " + example + " --all",
      "quotient " + example,
  };
  for (const auto& args : invocations) {
    const std::string first = run(args);
    const std::string second = run(args);
    if (first.empty() || first.front() != '{') p.add("no JSON report from: " + args);
    if (first != second) p.add("reports differ for: " + args);
  }
  return p;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Problems(double&)> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "golden worked example (classes, equalizer, kappa, homomorphism)", ac1},
      {"AC2", "NDA equivalence agrees with pair search on 200 automata", ac2},
      {"AC3", "LWA subspace verdicts agree with trace comparison on 200 automata", ac3},
      {"AC4", "CTS condition slices agree with partition refinement on 100 systems", ac4},
      {"AC5", "lifting laws hold on 100 samples and catch every mutation", ac5},
      {"AC6", "logics adequate and expressive (example, 100 NDA, 100 LWA, 50 CTS)", ac6},
      {"AC7", "trace equates, failure and ready separate a(b+c) and ab+ac", ac7},
      {"AC8", "CLI reports byte-identical across runs", ac8},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    double budget = 0;
    Problems p;
    const auto start = std::chrono::steady_clock::now();
    try {
      p = c.run(budget);
    } catch (const std::exception& e) {
      p.add(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget > 0 && secs > budget) p.add("took longer than " + std::to_string(budget) + " s");
    std::ostringstream line;
    line.precision(3);
    line << (p.count == 0 ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.title << " (" << std::fixed << secs << " s)";
    std::cout << line.str() << '\n';
    for (const auto& item : p.items) std::cout << "       " << item << '\n';
    if (p.count > p.items.size()) std::cout << "       ... " << p.count - p.items.size() << " more\n";
    if (p.count != 0) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
