#include "orc/rational.hpp"

#include <cctype>

#include "orc/errors.hpp"

namespace orc {

namespace {

bool parse_int(std::string_view text, Int* out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  if (i == text.size()) return false;
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
  }
  *out = Int(std::string(text));
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  Int num, den = 1;
  bool ok = false;
  if (slash == std::string_view::npos) {
    ok = parse_int(text, &num);
  } else {
    ok = parse_int(text.substr(0, slash), &num) &&
         parse_int(text.substr(slash + 1), &den) && den != 0;
  }
  if (!ok) fail("ParseError", "not a rational: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Int floor_rational(const Rational& r) {
  const Int n = numerator(r), d = denominator(r);
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

Int ceil_rational(const Rational& r) { return -floor_rational(-r); }

bool is_integer(const Rational& r) { return denominator(r) == 1; }

std::string decimal_hint(const Rational& r, int digits) {
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const Int num = numerator(r), den = denominator(r);
  Int a = abs(num) * scale;
  Int q = (2 * a + den) / (2 * den);  // round half away from zero
  std::string frac = Int(q % scale).str();
  frac.insert(frac.begin(), digits - frac.size(), '0');
  std::string s = (num < 0 && q != 0) ? "-" : "";
  return s + Int(q / scale).str() + "." + frac;
}

}  // namespace orc
