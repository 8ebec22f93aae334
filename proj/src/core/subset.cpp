#include "cobeh/core/subset.hpp"

#include "cobeh/core/error.hpp"

namespace cobeh {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string format_subset(const Carrier& base, Mask m) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (!has_member(m, i)) continue;
    if (!first) out += ',';
    out += base.name(i);
    first = false;
  }
  out += '}';
  return out;
}

Mask parse_subset(const Carrier& base, std::string_view text) {
  text = trim(text);
  if (text == "∅") return 0;
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw MalformedInput("subset must be written {a,b,...}: '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  Mask m = 0;
  if (trim(text).empty()) return m;
  while (true) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    if (item.empty()) throw MalformedInput("empty member in subset literal");
    const std::size_t i = base.at(item);
    if (i >= kMaxMaskWidth) throw CapExceeded("subset member beyond 64-element limit");
    m |= singleton(i);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return m;
}

void require_powerset_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw CapExceeded("powerset of " + std::to_string(n) + " elements exceeds cap of " +
                      std::to_string(cap));
  }
}

std::vector<Mask> all_masks(std::size_t n, std::size_t cap) {
  require_powerset_cap(n, cap);
  std::vector<Mask> out(std::size_t{1} << n);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

std::vector<std::size_t> members(Mask m) {
  std::vector<std::size_t> out;
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

}  // namespace cobeh
