#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace mtkit {

/// Index of an element inside a finite poset or lattice.
using Element = std::uint32_t;

/// Subset of lattice elements, one bit per element id.
using ElementSet = std::uint64_t;

/// Element of a finite MT-algebra: the set of atoms below it.
using AtomSet = std::uint64_t;

inline constexpr std::size_t kMaxLatticeElements = 64;

/// Subset-quantified predicates enumerate every subset up to this many
/// candidates and switch to the equivalent finite reduction above it.
inline constexpr std::size_t kExhaustiveSubsetLimit = 20;

constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

constexpr bool has(std::uint64_t set, std::size_t i) { return (set >> i) & 1U; }

constexpr bool is_subset(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

/// Mask with the low `n` bits set.
constexpr std::uint64_t full_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : bit(n) - 1;
}

constexpr int count(std::uint64_t set) { return std::popcount(set); }

template <class F>
constexpr void for_each_bit(std::uint64_t set, F&& f) {
  while (set != 0) {
    const auto i = static_cast<Element>(std::countr_zero(set));
    f(i);
    set &= set - 1;
  }
}

inline std::vector<Element> to_vector(std::uint64_t set) {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(count(set)));
  for_each_bit(set, [&](Element i) { out.push_back(i); });
  return out;
}

template <class Range>
std::uint64_t to_mask(const Range& items) {
  std::uint64_t m = 0;
  for (auto i : items) m |= bit(static_cast<std::size_t>(i));
  return m;
}

}  // namespace mtkit
