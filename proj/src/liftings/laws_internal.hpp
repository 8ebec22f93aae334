#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cobeh/core/random.hpp"
#include "cobeh/core/subset.hpp"
#include "cobeh/liftings/laws.hpp"

namespace cobeh::detail {

/// One sampled check: returns a counterexample description on failure.
using LawFn = std::function<std::optional<std::string>(Rng&)>;

struct LawSpec {
  std::string name;
  LawFn check;
};

std::vector<LawSpec> nda_laws(Mutation m);
std::vector<LawSpec> lwa_laws(Mutation m);
std::vector<LawSpec> cts_laws(Mutation m);
std::vector<LawSpec> moore_laws(Mutation m);

inline Mask random_mask(Rng& rng, std::size_t n) { return rng.below(Mask{1} << n); }

inline std::string mask_str(Mask m) {
  std::string s = "{";
  bool first = true;
  for (auto i : members(m)) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

}  // namespace cobeh::detail
