#include "cobeh/liftings/laws.hpp"

#include "cobeh/core/error.hpp"
#include "laws_internal.hpp"

namespace cobeh {

bool LawReport::all_passed() const {
  for (const auto& l : laws) {
    if (!l.passed()) return false;
  }
  return true;
}

const LawResult* LawReport::find(const std::string& law) const {
  for (const auto& l : laws) {
    if (l.law == law) return &l;
  }
  return nullptr;
}

LawReport check_lifting_laws(Family family, std::size_t trials, std::uint64_t seed,
                             Mutation mutation) {
  std::vector<detail::LawSpec> specs;
  switch (family) {
    case Family::nda: specs = detail::nda_laws(mutation); break;
    case Family::lwa: specs = detail::lwa_laws(mutation); break;
    case Family::cts: specs = detail::cts_laws(mutation); break;
    case Family::moore: specs = detail::moore_laws(mutation); break;
  }
  LawReport report{family, seed, trials, mutation, {}};
  for (std::size_t li = 0; li < specs.size(); ++li) {
    LawResult result{specs[li].name, trials, 0, {}};
    const std::uint64_t law_seed = seed ^ (0x100000001B3ULL * (li + 1));
    for (std::size_t t = 0; t < trials; ++t) {
      Rng rng = Rng::derive(law_seed, t);
      if (auto failure = specs[li].check(rng)) {
        ++result.failed_trials;
        if (result.failures.size() < 3) {
          result.failures.push_back("trial " + std::to_string(t) + ": " + *failure);
        }
      }
    }
    report.laws.push_back(std::move(result));
  }
  return report;
}

std::vector<std::pair<std::string, Mutation>> law_mutations(Family family) {
  switch (family) {
    case Family::nda:
      return {{"kleisli_unit", Mutation::theta_drops_term},
              {"kleisli_multiplication", Mutation::theta_keeps_min},
              {"gamma_theta_mu_compatibility", Mutation::gamma_swap_on_odd},
              {"sigma_naturality", Mutation::sigma_adds_point},
              {"predicate_lifting_naturality", Mutation::lambda_adds_full},
              {"derived_modality_agreement", Mutation::lambda_adds_full},
              {"relation_lifting_naturality", Mutation::lifting_counts_support},
              {"relation_lifting_intersection", Mutation::lifting_exists},
              {"relation_lifting_equality", Mutation::lifting_ignores_term}};
    case Family::lwa:
      return {{"kleisli_unit", Mutation::theta_drops_term},
              {"kleisli_multiplication", Mutation::theta_keeps_min},
              {"gamma_theta_mu_compatibility", Mutation::gamma_swap_on_odd},
              {"sigma_naturality", Mutation::sigma_adds_point},
              {"predicate_lifting_naturality", Mutation::lambda_adds_full},
              {"derived_modality_agreement", Mutation::lambda_adds_full},
              {"relation_lifting_naturality", Mutation::lifting_counts_support},
              {"relation_lifting_intersection", Mutation::lifting_exists},
              {"relation_lifting_equality", Mutation::lifting_ignores_term}};
    case Family::cts:
      return {{"cokleisli_counit", Mutation::gamma_drops_max},
              {"cokleisli_comultiplication", Mutation::gamma_drops_max},
              {"box_lifting_naturality", Mutation::box_singleton_only},
              {"box_meet_preservation", Mutation::box_as_diamond},
              {"derived_box_agreement", Mutation::box_as_diamond},
              {"relation_lifting_naturality", Mutation::lifting_counts_support},
              {"relation_lifting_equality", Mutation::lifting_one_sided},
              {"egli_milner_agreement", Mutation::lifting_one_sided}};
    case Family::moore:
      return {{"predicate_lifting_naturality", Mutation::lambda_adds_full},
              {"predicate_lifting_meets", Mutation::lambda_any_action},
              {"derived_modality_agreement", Mutation::lambda_adds_full}};
  }
  return {};
}

std::string to_string(Family f) {
  switch (f) {
    case Family::nda: return "nda";
    case Family::lwa: return "lwa";
    case Family::cts: return "cts";
    case Family::moore: return "moore";
  }
  return "?";
}

std::string to_string(Mutation m) {
  switch (m) {
    case Mutation::none: return "none";
    case Mutation::theta_drops_term: return "theta_drops_term";
    case Mutation::theta_keeps_min: return "theta_keeps_min";
    case Mutation::gamma_swap_on_odd: return "gamma_swap_on_odd";
    case Mutation::gamma_drops_max: return "gamma_drops_max";
    case Mutation::sigma_adds_point: return "sigma_adds_point";
    case Mutation::lambda_adds_full: return "lambda_adds_full";
    case Mutation::lambda_any_action: return "lambda_any_action";
    case Mutation::box_singleton_only: return "box_singleton_only";
    case Mutation::box_as_diamond: return "box_as_diamond";
    case Mutation::lifting_counts_support: return "lifting_counts_support";
    case Mutation::lifting_exists: return "lifting_exists";
    case Mutation::lifting_ignores_term: return "lifting_ignores_term";
    case Mutation::lifting_one_sided: return "lifting_one_sided";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "nda") return Family::nda;
  if (name == "lwa") return Family::lwa;
  if (name == "cts") return Family::cts;
  if (name == "moore") return Family::moore;
  throw MalformedInput("unknown system kind '" + name + "' (expected nda, lwa, cts or moore)");
}

}  // namespace cobeh
