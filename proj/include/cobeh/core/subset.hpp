#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cobeh/core/carrier.hpp"

namespace cobeh {

/// Subset of a base carrier as a little-endian bitmask: bit i set iff
/// element i is a member.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxMaskWidth = 64;
/// Largest base carrier for which the full powerset may be materialized.
inline constexpr std::size_t kDefaultPowersetCap = 12;

constexpr Mask full_mask(std::size_t n) {
  return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}
constexpr bool mask_in_range(Mask m, std::size_t n) {
  return (m & ~full_mask(n)) == 0;
}
constexpr bool has_member(Mask m, std::size_t i) { return (m >> i) & 1U; }
constexpr Mask singleton(std::size_t i) { return Mask{1} << i; }
inline int cardinality(Mask m) { return std::popcount(m); }

/// "{x,y}" with members in carrier order; the empty set is "{}".
std::string format_subset(const Carrier& base, Mask m);
/// Accepts "{x,y}", "{}" and "∅". Throws MalformedInput.
Mask parse_subset(const Carrier& base, std::string_view text);

/// Throws CapExceeded when n exceeds cap.
void require_powerset_cap(std::size_t n, std::size_t cap = kDefaultPowersetCap);

/// Masks 0 .. 2^n - 1 in numeric order.
std::vector<Mask> all_masks(std::size_t n, std::size_t cap = kDefaultPowersetCap);

std::vector<std::size_t> members(Mask m);

}  // namespace cobeh
