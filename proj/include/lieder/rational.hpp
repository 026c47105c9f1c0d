#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace lieder {

/// Exact arbitrary-precision rational scalar. Canonical form (reduced
/// fraction, positive denominator) is maintained by every operation.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Coordinate vector over the rationals.
using Vec = std::vector<Rational>;

/// Parses "p", "-p" or "p/q". Signs are normalized, the fraction is
/// reduced. Throws ParseError on anything else (including floats).
Rational parse_rational(const std::string& text);

/// Canonical text form: integers without "/1", otherwise "p/q", q > 0.
std::string format_rational(const Rational& value);

bool is_integer(const Rational& value);

bool is_zero(const Vec& v);

/// y += a * x
void axpy(Vec& y, const Rational& a, const Vec& x);

Vec unit_vector(std::size_t dim, std::size_t index);

}  // namespace lieder
