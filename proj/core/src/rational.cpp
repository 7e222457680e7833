#include "lspecial/rational.hpp"

#include <cctype>

namespace lspecial {

Rational rat_parse(const std::string& text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  bool negative = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  const std::size_t num_begin = i;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) throw ParseError("rat_parse: expected digits in '" + text + "'");
  BigInt num(text.substr(num_begin, i - num_begin));

  BigInt den(1);
  if (i < n) {
    if (text[i] != '/')
      throw ParseError("rat_parse: unexpected character in '" + text + "'");
    ++i;
    const std::size_t den_begin = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != n)
      throw ParseError("rat_parse: malformed denominator in '" + text + "'");
    den = BigInt(text.substr(den_begin, i - den_begin));
    if (den == 0) throw ZeroDenominatorError("rat_parse: zero denominator in '" + text + "'");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string rat_to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

double rat_to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace lspecial
