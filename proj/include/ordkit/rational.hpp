#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ordkit {

using Rational = mpq_class;

/// Accepts "n", "n/d" and "-n/d"; the result is canonical.
Rational parse_rational(std::string_view text);
/// Always "n/d" with d > 0, so integers come out as "n/1".
std::string format_rational(const Rational& q);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace ordkit
