#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cobeh/core/bitrel.hpp"
#include "cobeh/core/rational.hpp"
#include "cobeh/logic/formula.hpp"
#include "cobeh/systems/determinize.hpp"
#include "cobeh/systems/systems.hpp"

namespace cobeh {

struct Counterexample {
  std::string left;
  std::string right;
  /// Distinguishing formula for behaviourally equivalent points, or a note
  /// when logically equivalent points are behaviourally distinct.
  std::string detail;
};

/// Behavioural relation from the equivalence engines against the logical
/// relation computed independently from the family's formulas.
struct EquivReport {
  std::vector<std::string> labels;
  BitRel behavioural;
  BitRel logical;
  bool adequate = true;    // behavioural ⊆ logical
  bool expressive = true;  // logical ⊆ behavioural
  std::vector<Counterexample> counterexamples;
  /// Formula depth or word length used for the logical relation, and whether
  /// one more level left it unchanged.
  std::size_t depth = 0;
  bool depth_saturated = true;
  std::vector<std::string> assumptions;

  std::vector<std::vector<std::string>> behavioural_classes() const;
  std::vector<std::vector<std::string>> logical_classes() const;
};

/// Shortest word (shortlex least among the shortest) on which the outputs
/// of machine states i and j differ; none when they are bisimilar.
std::optional<Word> separating_word(const DeterminizedMachine& d, std::size_t i, std::size_t j);

/// Points are the subsets reachable from `initials`; the logical relation
/// comes from product search over word formulas.
EquivReport check_adequacy_nda(const Nda& n, const std::vector<Mask>& initials);
EquivReport check_adequacy_moore(const OutputLts& m, const std::vector<Mask>& initials);

/// Points are the given vectors; the logical relation compares traces on all
/// words of length <= |X| and confirms that length |X| + 1 adds nothing.
EquivReport check_adequacy_lwa(const Lwa& l, const std::vector<QVector>& points);
/// The zero vector followed by the unit vectors.
std::vector<QVector> default_lwa_points(const Lwa& l);

/// Points are K x X; the logical relation is generated by formulas of box
/// depth up to the number of fixpoint iterations, with depth + 1 checked.
/// Distinguishing formulas are verified by evaluation before being reported.
EquivReport check_adequacy_cts(const Cts& c);

/// Points of K x X that agree on every formula of box depth <= depth; only
/// points of the same condition are related.
BitRel cts_logical_relation(const Cts& c, std::size_t depth);

/// Formula satisfied at (k, x) but not at (k, y), verified by evaluation;
/// null when the two are bisimilar under k.
CtsFormula::Ptr cts_distinguishing_formula(const Cts& c, std::size_t k, std::size_t x, std::size_t y);

}  // namespace cobeh
