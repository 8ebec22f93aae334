#include "cobeh/logic/formula.hpp"

#include <algorithm>

#include "cobeh/core/error.hpp"

namespace cobeh {

namespace {
constexpr std::string_view kDown = "↓";
}  // namespace

std::string render_word_formula(const Carrier& alphabet, const Word& w) {
  std::string s;
  for (auto a : w) s += "[" + alphabet.name(a) + "]";
  return s + std::string(kDown);
}

Word parse_word_formula(const Carrier& alphabet, std::string_view text) {
  if (text.empty() || text.front() != '[') {
    if (text == kDown) return {};
    return parse_word(alphabet, std::string(text));
  }
  Word w;
  std::size_t pos = 0;
  while (pos < text.size() && text[pos] == '[') {
    const std::size_t close = text.find(']', pos);
    if (close == std::string_view::npos) throw MalformedInput("unterminated '[' in formula");
    w.push_back(alphabet.at(text.substr(pos + 1, close - pos - 1)));
    pos = close + 1;
  }
  if (text.substr(pos) != kDown) {
    throw MalformedInput("word formula must end with ↓: '" + std::string(text) + "'");
  }
  return w;
}

CtsFormula::Ptr CtsFormula::tt() { return Ptr(new CtsFormula(Op::tt, nullptr, nullptr)); }
CtsFormula::Ptr CtsFormula::neg(Ptr f) { return Ptr(new CtsFormula(Op::neg, std::move(f), nullptr)); }
CtsFormula::Ptr CtsFormula::conj(Ptr l, Ptr r) {
  return Ptr(new CtsFormula(Op::conj, std::move(l), std::move(r)));
}
CtsFormula::Ptr CtsFormula::box(Ptr f) { return Ptr(new CtsFormula(Op::box, std::move(f), nullptr)); }

std::size_t CtsFormula::modal_depth() const {
  switch (op_) {
    case Op::tt: return 0;
    case Op::neg: return left_->modal_depth();
    case Op::conj: return std::max(left_->modal_depth(), right_->modal_depth());
    case Op::box: return 1 + left_->modal_depth();
  }
  return 0;
}

std::string CtsFormula::render() const {
  switch (op_) {
    case Op::tt: return "tt";
    case Op::neg: return "¬" + left_->render();
    case Op::conj: return "(" + left_->render() + " ∧ " + right_->render() + ")";
    case Op::box: return "□" + left_->render();
  }
  return "";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  CtsFormula::Ptr parse() {
    auto f = conjunction();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected input");
    return f;
  }

 private:
  CtsFormula::Ptr conjunction() {
    auto f = unary();
    for (;;) {
      skip_space();
      if (!eat("∧") && !eat("&")) return f;
      f = CtsFormula::conj(f, unary());
    }
  }

  CtsFormula::Ptr unary() {
    skip_space();
    if (eat("¬") || eat("!") || eat("~")) return CtsFormula::neg(unary());
    if (eat("□") || eat("[]")) return CtsFormula::box(unary());
    if (eat("<>") || eat("◇")) return CtsFormula::diamond(unary());
    if (eat("tt")) return CtsFormula::tt();
    if (eat("(")) {
      auto f = conjunction();
      skip_space();
      if (!eat(")")) fail("expected ')'");
      return f;
    }
    fail("expected a formula");
  }

  bool eat(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw MalformedInput("formula '" + std::string(text_) + "': " + what + " at offset " +
                         std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CtsFormula::Ptr parse_cts_formula(std::string_view text) { return Parser(text).parse(); }

}  // namespace cobeh
