#include "cobeh/core/semilattice.hpp"

#include "cobeh/core/error.hpp"
#include "cobeh/core/subset.hpp"

namespace cobeh {

std::vector<std::string> Semilattice::diagnose(const Carrier& elements,
                                               const std::vector<std::vector<std::size_t>>& join,
                                               std::size_t bottom) {
  const std::size_t n = elements.size();
  std::vector<std::string> out;
  if (join.size() != n) {
    out.push_back("join table has " + std::to_string(join.size()) + " rows for " +
                  std::to_string(n) + " elements");
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (join[i].size() != n) {
      out.push_back("join table row '" + elements.name(i) + "' has " +
                    std::to_string(join[i].size()) + " entries");
      return out;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (join[i][j] >= n) {
        out.push_back("join of '" + elements.name(i) + "' and '" + elements.name(j) +
                      "' is out of range");
        return out;
      }
    }
  }
  if (bottom >= n) {
    out.push_back("bottom element is out of range");
    return out;
  }
  const auto name = [&](std::size_t i) { return "'" + elements.name(i) + "'"; };

  for (std::size_t i = 0; i < n; ++i) {
    if (join[i][i] != i) {
      out.push_back("join is not idempotent at element " + name(i));
      break;
    }
  }
  [&] {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (join[i][j] != join[j][i]) {
          out.push_back("join is not commutative at elements " + name(i) + " and " + name(j));
          return;
        }
      }
    }
  }();
  [&] {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (join[join[i][j]][k] != join[i][join[j][k]]) {
            out.push_back("join is not associative at elements " + name(i) + ", " + name(j) +
                          ", " + name(k));
            return;
          }
        }
      }
    }
  }();
  for (std::size_t i = 0; i < n; ++i) {
    if (join[bottom][i] != i || join[i][bottom] != i) {
      out.push_back("bottom " + name(bottom) + " is not a unit for element " + name(i));
      break;
    }
  }
  return out;
}

Semilattice Semilattice::table(Carrier elements, std::vector<std::vector<std::size_t>> join,
                               std::size_t bottom) {
  const auto problems = diagnose(elements, join, bottom);
  if (!problems.empty()) {
    std::string msg = "invalid semilattice:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw MalformedInput(msg);
  }
  Semilattice s;
  s.kind_ = Kind::table;
  s.labels_ = std::move(elements);
  s.join_ = std::move(join);
  s.bottom_ = bottom;
  return s;
}

Semilattice Semilattice::boolean() {
  return table(Carrier({"0", "1"}), {{0, 1}, {1, 1}}, 0);
}

Semilattice Semilattice::powerset(Carrier atoms) {
  if (atoms.size() > kMaxMaskWidth) {
    throw CapExceeded("powerset lattice over more than 64 atoms");
  }
  Semilattice s;
  s.kind_ = Kind::powerset;
  s.labels_ = std::move(atoms);
  s.bottom_ = 0;
  return s;
}

LatticeElem Semilattice::join(LatticeElem a, LatticeElem b) const {
  if (kind_ == Kind::powerset) return a | b;
  return join_[a][b];
}

bool Semilattice::contains(LatticeElem e) const {
  if (kind_ == Kind::powerset) return mask_in_range(e, labels_.size());
  return e < labels_.size();
}

std::size_t Semilattice::element_count() const {
  if (kind_ == Kind::powerset) return std::size_t{1} << labels_.size();
  return labels_.size();
}

std::string Semilattice::format(LatticeElem e) const {
  if (kind_ == Kind::powerset) return format_subset(labels_, e);
  return labels_.name(e);
}

LatticeElem Semilattice::parse(std::string_view text) const {
  if (kind_ == Kind::powerset) return parse_subset(labels_, text);
  return labels_.at(text);
}

}  // namespace cobeh
