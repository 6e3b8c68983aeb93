#include "ordkit/rational.hpp"

#include <cctype>

#include "ordkit/error.hpp"

namespace ordkit {

Rational parse_rational(std::string_view text) {
  const auto bad = [&] { return InputError("invalid rational '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  auto integer_part = [&](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw bad();
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
    return mpz_class(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  const mpz_class num = integer_part(text.substr(0, slash), true);
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    den = integer_part(text.substr(slash + 1), false);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw InputError("dimension mismatch in dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace ordkit
