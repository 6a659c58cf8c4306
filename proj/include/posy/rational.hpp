#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace posy {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

/// Parses "p/q" or an integer "p". With allow_decimal, also "1.25" and "2.5e-3",
/// converted exactly.
Rational parse_rational(std::string_view text, bool allow_decimal = false);

/// Canonical "p/q" with gcd(p,q) = 1 and q > 0; integers keep the "/1".
std::string to_string(const Rational& value);

double to_double(const Rational& value);
std::vector<double> to_double(const QVector& values);

/// Best rational approximation with denominator <= max_denominator (continued fractions).
Rational rationalize(double value, std::int64_t max_denominator);

Rational dot(const QVector& a, const QVector& b);

bool is_integer(const Rational& value);

}  // namespace posy
