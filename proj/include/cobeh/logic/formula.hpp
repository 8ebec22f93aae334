#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "cobeh/core/carrier.hpp"
#include "cobeh/equivalence/nda_equiv.hpp"

namespace cobeh {

/// Word formulas: [a][b]↓ holds at U iff U_ab terminates. The empty word
/// renders as "↓".
std::string render_word_formula(const Carrier& alphabet, const Word& w);
/// Accepts the rendered form "[a][b]↓" as well as plain words ("ab", "a.b",
/// "ε"). Throws MalformedInput.
Word parse_word_formula(const Carrier& alphabet, std::string_view text);

/// Modal formula over {tt, ¬, ∧, □}.
class CtsFormula {
 public:
  enum class Op { tt, neg, conj, box };
  using Ptr = std::shared_ptr<const CtsFormula>;

  static Ptr tt();
  static Ptr neg(Ptr f);
  static Ptr conj(Ptr l, Ptr r);
  static Ptr box(Ptr f);
  /// ¬□¬f
  static Ptr diamond(Ptr f) { return neg(box(neg(std::move(f)))); }

  Op op() const { return op_; }
  const Ptr& left() const { return left_; }
  const Ptr& right() const { return right_; }

  /// Nesting depth of □.
  std::size_t modal_depth() const;
  /// "tt", "¬φ", "(φ ∧ ψ)", "□φ".
  std::string render() const;

 private:
  CtsFormula(Op op, Ptr l, Ptr r) : op_(op), left_(std::move(l)), right_(std::move(r)) {}
  Op op_;
  Ptr left_;
  Ptr right_;
};

/// Parses the rendered syntax; "!", "~" for ¬, "&" for ∧, "[]" for □ and
/// "<>" for ¬□¬ are accepted too. Throws MalformedInput.
CtsFormula::Ptr parse_cts_formula(std::string_view text);

}  // namespace cobeh
