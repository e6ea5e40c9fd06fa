#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace divl1 {

// Subsets of the ground set {0, ..., n-1} are bitmasks: bit i <=> element i.
using Subset = std::uint64_t;

// Ground sets are capped at 63 elements so that every subset fits a Subset
// with room for full-set arithmetic.
inline constexpr int kMaxGroundSetSize = 63;

inline int subset_size(Subset a) { return std::popcount(a); }

inline Subset full_set(int n) {
  if (n < 0 || n > kMaxGroundSetSize)
    throw std::out_of_range("ground set size out of range: " + std::to_string(n));
  return (Subset{1} << n) - 1;
}

inline bool contains(Subset a, int element) { return (a >> element) & 1; }

inline bool is_subset_of(Subset a, Subset b) { return (a & ~b) == 0; }

// Canonical representative of the split B | X-B: the side not containing
// element 0. Requires B to be a non-empty proper subset of {0..n-1}.
inline Subset canonical_split(Subset b, int n) {
  const Subset x = full_set(n);
  if (b == 0 || (b & ~x) != 0 || b == x)
    throw std::invalid_argument("split side must be a non-empty proper subset");
  return contains(b, 0) ? (x & ~b) : b;
}

// First subset of the given size, for use with next_same_size.
inline Subset first_of_size(int size) { return (Subset{1} << size) - 1; }

// Gosper's hack: next larger bitmask with the same popcount, or 0 past the end.
inline Subset next_same_size(Subset v, int n) {
  if (v == 0) return 0;
  const Subset c = v & (~v + 1);
  const Subset r = v + c;
  const Subset next = (((r ^ v) >> 2) / c) | r;
  return next < (Subset{1} << n) ? next : 0;
}

inline std::vector<int> subset_elements(Subset a) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(subset_size(a)));
  while (a) {
    const int i = std::countr_zero(a);
    out.push_back(i);
    a &= a - 1;
  }
  return out;
}

inline Subset subset_from_elements(const std::vector<int>& elements, int n) {
  Subset a = 0;
  for (int e : elements) {
    if (e < 0 || e >= n)
      throw std::out_of_range("element " + std::to_string(e) + " outside ground set of size " + std::to_string(n));
    if (contains(a, e))
      throw std::invalid_argument("duplicate element " + std::to_string(e) + " in subset");
    a |= Subset{1} << e;
  }
  return a;
}

inline std::string subset_to_string(Subset a) {
  std::string s = "{";
  bool first = true;
  for (int e : subset_elements(a)) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

}  // namespace divl1
