#pragma once

#include <cstddef>

namespace ordkit {

// Hard capacity of ElementSet; every carrier lives below this.
inline constexpr std::size_t kMaxElements = 192;

// Default caps. Every operation that takes a cap errors beyond it.
inline constexpr std::size_t kPropertyCheckCap = 16;
inline constexpr std::size_t kProductCap = 144;
inline constexpr std::size_t kOrderSearchCap = 8;
inline constexpr std::size_t kWeakOrderSearchCap = 6;
inline constexpr std::size_t kBruteForceCap = 4;
inline constexpr std::size_t kGroupOrderCap = 64;
inline constexpr std::size_t kExhaustiveGroupCap = 4;
inline constexpr std::size_t kEventRelationAtomCap = 5;
inline constexpr std::size_t kProbeAtomCap = 16;
inline constexpr std::size_t kBoxPointCap = 64;

}  // namespace ordkit
