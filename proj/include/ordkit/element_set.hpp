#pragma once

#include <bitset>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ordkit/limits.hpp"

namespace ordkit {

/// Subset of a carrier, by element index. Bits at or above the carrier
/// size are always clear.
using ElementSet = std::bitset<kMaxElements>;

inline ElementSet make_set(std::initializer_list<std::size_t> members) {
  ElementSet s;
  for (auto m : members) s.set(m);
  return s;
}

/// The full set {0, ..., n-1}.
inline ElementSet full_set(std::size_t n) {
  ElementSet s;
  for (std::size_t i = 0; i < n; ++i) s.set(i);
  return s;
}

inline std::vector<std::size_t> members(const ElementSet& s, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (s.test(i)) out.push_back(i);
  return out;
}

inline bool is_subset(const ElementSet& a, const ElementSet& b) {
  return (a & ~b).none();
}

}  // namespace ordkit
