#include "cobeh/equivalence/cond_rel.hpp"

#include "cobeh/core/error.hpp"

namespace cobeh {

CondRel::CondRel(std::size_t conditions, std::size_t states)
    : states_(states), slices_(conditions, BitRel(states)) {}

CondRel CondRel::full(std::size_t conditions, std::size_t states) {
  CondRel r(conditions, states);
  for (auto& s : r.slices_) s = BitRel::full(states);
  return r;
}

CondRel CondRel::identity(std::size_t conditions, std::size_t states) {
  CondRel r(conditions, states);
  for (auto& s : r.slices_) s = BitRel::identity(states);
  return r;
}

std::size_t CondRel::count() const {
  std::size_t c = 0;
  for (const auto& s : slices_) c += s.count();
  return c;
}

bool CondRel::is_subset_of(const CondRel& other) const {
  if (other.slices_.size() != slices_.size()) return false;
  for (std::size_t k = 0; k < slices_.size(); ++k) {
    if (!slices_[k].is_subset_of(other.slices_[k])) return false;
  }
  return true;
}

CondRel& CondRel::operator&=(const CondRel& other) {
  if (other.slices_.size() != slices_.size() || other.states_ != states_) {
    throw DimensionMismatch("conditional relations over different carriers");
  }
  for (std::size_t k = 0; k < slices_.size(); ++k) slices_[k] &= other.slices_[k];
  return *this;
}

BitRel CondRel::flatten() const {
  BitRel out(slices_.size() * states_);
  for (std::size_t k = 0; k < slices_.size(); ++k) {
    for (std::size_t x = 0; x < states_; ++x) {
      for (std::size_t y = 0; y < states_; ++y) {
        if (slices_[k].contains(x, y)) out.set(k * states_ + x, k * states_ + y);
      }
    }
  }
  return out;
}

}  // namespace cobeh
