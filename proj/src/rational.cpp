#include "mfl/rational.hpp"

#include <cctype>

#include "mfl/error.hpp"

namespace mfl {

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto digits = [&](std::size_t start) {
    std::size_t j = start;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == start) throw SyntaxError(start, "expected digits in rational '" + std::string(text) + "'");
    return j;
  };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t num_end = digits(i);
  std::string num(text.substr(0, num_end));
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  std::string den = "1";
  if (num_end < text.size()) {
    if (text[num_end] != '/') throw SyntaxError(num_end, "unexpected character in rational");
    std::size_t den_end = digits(num_end + 1);
    if (den_end != text.size()) throw SyntaxError(den_end, "trailing characters in rational");
    den = std::string(text.substr(num_end + 1, den_end - num_end - 1));
  }
  mpz_class d(den);
  if (d == 0) throw SyntaxError(num_end + 1, "zero denominator");
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

}  // namespace mfl
