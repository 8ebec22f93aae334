#pragma once

#include <cstddef>
#include <vector>

#include "cobeh/core/bitrel.hpp"
#include "cobeh/equivalence/cond_rel.hpp"
#include "cobeh/systems/systems.hpp"

namespace cobeh {

/// (k, x, x') survives iff the k-successor sets of x and x' are related by
/// the two-sided transfer condition under R.
CondRel cts_step(const Cts& c, const CondRel& r);

struct ConditionalBisimilarity {
  CondRel relation;
  std::size_t iterations = 0;
};

ConditionalBisimilarity cts_conditional_bisim(const Cts& c);

/// x ~ x' iff (k, x, x') is in r for every condition k.
BitRel bisimilar_under_all(const CondRel& r);

using Partition = std::vector<std::vector<std::size_t>>;

/// Strong bisimilarity of the LTS x -> delta(k, x) by signature refinement.
/// Blocks are sorted and ordered by smallest member.
Partition cts_slice_bisim_oracle(const Cts& c, std::size_t k);

BitRel partition_relation(const Partition& p, std::size_t n);

}  // namespace cobeh
