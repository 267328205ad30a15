#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace tropalg {

// Expression templates are disabled so that `auto` always yields a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using RationalPoint = std::vector<Rational>;

/// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& q);

/// Accepts "12", "-3/4", "2.375". Throws UsageError otherwise.
Rational parse_rational(std::string_view text);

/// Exact decimal rendering with `digits` fractional digits, rounded half away
/// from zero. Used by the figure exporters.
std::string to_fixed(const Rational& q, unsigned digits);

Rational numerator_of(const Rational& q);
Rational denominator_of(const Rational& q);

}  // namespace tropalg
