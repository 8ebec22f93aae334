#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace cobeh {

template <class Rel>
struct GfpResult {
  Rel relation;
  /// Number of applications of the step operator, including the final one
  /// that confirmed stability.
  std::size_t iterations = 0;
};

/// Greatest post-fixpoint of a monotone operator below `top`, by downward
/// Kleene iteration R_{i+1} = R_i & step(R_i).
///
/// Rel must provide operator&, operator== and is_subset_of. Because the
/// iterates decrease, step(R_{i+1}) must be contained in step(R_i); a
/// violation means the operator is not monotone and raises std::logic_error.
template <class Rel, class Step>
GfpResult<Rel> gfp(Step&& step, Rel top) {
  GfpResult<Rel> result{std::move(top), 0};
  Rel previous_image = step(result.relation);
  for (;;) {
    ++result.iterations;
    Rel next = result.relation & previous_image;
    if (next == result.relation) return result;
    Rel image = step(next);
    if (!image.is_subset_of(previous_image)) {
      throw std::logic_error("gfp: step operator is not monotone");
    }
    result.relation = std::move(next);
    previous_image = std::move(image);
  }
}

}  // namespace cobeh
