#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace negsq {

namespace mp = boost::multiprecision;

// Expression templates are disabled so `auto` always yields a value.
using Integer = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::cpp_rational_backend, mp::et_off>;

inline Rational make_rational(const Integer& num, const Integer& den) {
  return Rational(num, den);
}

inline Integer numerator_of(const Rational& r) { return mp::numerator(r); }
inline Integer denominator_of(const Rational& r) { return mp::denominator(r); }

inline bool is_integral(const Rational& r) { return denominator_of(r) == 1; }

// Largest integer <= r.
Integer floor_of(const Rational& r);

// Euclidean remainder in [0, |m|).
Integer mod_floor(const Integer& a, const Integer& m);

Integer abs_of(const Integer& a);
Rational abs_of(const Rational& a);

// "p/q" or "p" in lowest terms.
std::string to_string(const Integer& v);
std::string to_string(const Rational& r);

// Exact decimal expansion when the denominator has only factors 2 and 5,
// empty otherwise.
std::string terminating_decimal(const Rational& r);

// Parses "a", "-a", "a/b". Throws ValidationError on malformed input.
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

// Narrowing conversion; throws ValidationError when out of range.
std::int64_t to_int64(const Integer& v, const char* what);

}  // namespace negsq
