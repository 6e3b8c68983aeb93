#pragma once

#include <optional>
#include <string_view>

#include "ordkit/relation.hpp"
#include "ordkit/topology.hpp"

namespace ordkit {

enum class SectionKind { weak_upper, weak_lower, strict_upper, strict_lower };

std::string_view section_name(SectionKind k);

struct ContinuityViolation {
  std::size_t element = 0;
  SectionKind kind = SectionKind::weak_upper;
  ElementSet section;
};

struct ContinuityResult {
  bool continuous = true;
  /// First failure scanning elements in index order, and for each element
  /// weak upper, weak lower, strict upper, strict lower.
  std::optional<ContinuityViolation> violation;

  explicit operator bool() const noexcept { return continuous; }
};

/// Weak sections must be closed and strict sections open at every point.
ContinuityResult is_continuous(const BinaryRelation& rel, const FiniteTopology& top);

}  // namespace ordkit
