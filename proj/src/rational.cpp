#include "g2lyap/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace g2lyap {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  // Validate before handing to gmp: one optional sign, digits, optional /digits.
  const char* s = text.c_str();
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  std::size_t digits = 0;
  while (std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) throw std::invalid_argument("rational: cannot parse '" + text + "'");
  if (s[i] == '/') {
    ++i;
    std::size_t den_start = i;
    while (std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_start) throw std::invalid_argument("rational: cannot parse '" + text + "'");
  }
  if (s[i] != '\0') throw std::invalid_argument("rational: cannot parse '" + text + "'");

  // gmp's reader takes '-' but not '+'
  Rational q(text[0] == '+' ? text.substr(1) : text);
  if (q.get_den() == 0) throw std::invalid_argument("rational: zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

double rational_to_double(const Rational& q) { return q.get_d(); }

}  // namespace g2lyap
