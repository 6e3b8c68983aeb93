#pragma once

#include <cstddef>
#include <vector>

#include "ordkit/rational.hpp"

namespace ordkit {

enum class LpStatus { optimal, unbounded };

struct LpResult {
  LpStatus status = LpStatus::optimal;
  Rational value;
  /// Primal solution, one entry per column of A.
  std::vector<Rational> x;
  /// Dual solution, one entry per row of A (y >= 0, A^T y >= c, b.y = value).
  std::vector<Rational> y;
  std::size_t pivots = 0;
};

/// maximize c.x subject to A x <= b, x >= 0, with b >= 0 so the origin is
/// feasible. Condensed tableau simplex in exact arithmetic; Bland's rule
/// picks both the entering and the leaving variable.
LpResult maximize(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& c);

}  // namespace ordkit
