#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cobeh {

enum class Family { nda, lwa, cts, moore };

/// Deliberate corruptions of one ingredient of a lifting. Each law shipped
/// by check_lifting_laws has a mutation that must make it fail.
enum class Mutation {
  none,
  theta_drops_term,        // theta(termination) = empty
  theta_keeps_min,         // theta keeps only the smallest payload element
  gamma_swap_on_odd,       // gamma swaps two action components on odd-sized input
  gamma_drops_max,         // CTS gamma forgets the largest state
  sigma_adds_point,        // sigma^a also accepts p(a) = element 0
  lambda_adds_full,        // lambda^a also accepts a distinguished payload
  lambda_any_action,       // lambda^a tests "some action" instead of a fixed one
  box_singleton_only,      // CTS box only accepts successor sets of size <= 1
  box_as_diamond,          // CTS box replaced by diamond
  lifting_counts_support,  // relation lifting also demands equal support sizes
  lifting_exists,          // relation lifting quantifies actions existentially
  lifting_ignores_term,    // relation lifting ignores termination/output
  lifting_one_sided,       // CTS relation lifting drops the back-transfer clause
};

struct LawResult {
  std::string law;
  std::size_t trials = 0;
  std::size_t failed_trials = 0;
  /// Concrete counterexamples from the first failing trials (at most 3).
  std::vector<std::string> failures;
  bool passed() const { return failed_trials == 0; }
};

struct LawReport {
  Family family = Family::nda;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  Mutation mutation = Mutation::none;
  std::vector<LawResult> laws;
  bool all_passed() const;
  const LawResult* find(const std::string& law) const;
};

/// Samples `trials` random small instances (|X| <= 4, |A| <= 2, |K| <= 3,
/// weights from {0, +-1, +-1/2, 2}) and checks every law of the family
/// pointwise. Deterministic in (family, trials, seed, mutation).
LawReport check_lifting_laws(Family family, std::size_t trials, std::uint64_t seed,
                             Mutation mutation = Mutation::none);

/// Law name -> the mutation that must break it.
std::vector<std::pair<std::string, Mutation>> law_mutations(Family family);

std::string to_string(Family f);
std::string to_string(Mutation m);
/// Throws MalformedInput for unknown names.
Family parse_family(const std::string& name);

}  // namespace cobeh
