#include "cobeh/core/carrier.hpp"

#include "cobeh/core/error.hpp"

namespace cobeh {

Carrier::Carrier(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second) {
      throw MalformedInput("duplicate label '" + names_[i] + "'");
    }
  }
}

Carrier Carrier::numbered(std::string_view prefix, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return Carrier(std::move(names));
}

std::optional<std::size_t> Carrier::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Carrier::at(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw MalformedInput("unknown label '" + std::string(label) + "'");
}

}  // namespace cobeh
