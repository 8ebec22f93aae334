#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cobeh {

/// A finite, ordered set of labelled elements. Positions are 0-based and
/// follow the order in which labels were given.
class Carrier {
 public:
  Carrier() = default;
  /// Throws MalformedInput on duplicate labels.
  explicit Carrier(std::vector<std::string> names);

  /// Labels prefix0, prefix1, ...
  static Carrier numbered(std::string_view prefix, std::size_t n);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws MalformedInput for an unknown label.
  std::size_t at(std::string_view label) const;

  friend bool operator==(const Carrier& a, const Carrier& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace cobeh
