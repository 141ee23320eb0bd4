#include "negsq/numeric.hpp"

#include <algorithm>
#include <limits>

#include "negsq/errors.hpp"

namespace negsq {

Integer floor_of(const Rational& r) {
  const Integer num = numerator_of(r);
  const Integer den = denominator_of(r);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  const Integer mm = abs_of(m);
  Integer r = a % mm;
  if (r < 0) r += mm;
  return r;
}

Integer abs_of(const Integer& a) { return a < 0 ? Integer(-a) : a; }

Rational abs_of(const Rational& a) { return a < 0 ? Rational(-a) : a; }

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& r) {
  if (is_integral(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

std::string terminating_decimal(const Rational& r) {
  Integer den = denominator_of(r);
  int twos = 0, fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) return {};
  const int digits = std::max(twos, fives);
  if (digits == 0) return numerator_of(r).str();

  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const Integer scaled = abs_of(numerator_of(r)) * scale / denominator_of(r);
  std::string s = scaled.str();
  if (s.size() <= static_cast<std::size_t>(digits))
    s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  if (r < 0) s.insert(0, "-");
  return s;
}

Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw ValidationError("not an integer: '" + text + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9')
      throw ValidationError("not an integer: '" + text + "'");
  }
  Integer v(text.substr(i));
  return text[0] == '-' ? Integer(-v) : v;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator: '" + text + "'");
  return make_rational(num, den);
}

std::int64_t to_int64(const Integer& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw ValidationError(std::string(what) + " out of range: " + v.str());
  return v.convert_to<std::int64_t>();
}

}  // namespace negsq
