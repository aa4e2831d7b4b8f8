#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace nielsen {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar. Always stored reduced with positive denominator;
// arithmetic is exact and division by zero throws.
using Rational = boost::multiprecision::cpp_rational;

Integer floor_to_integer(const Rational& r);
Integer ceil_to_integer(const Rational& r);
bool is_integer(const Rational& r);

// Representative of r mod 1 in [0, 1).
Rational mod_one(const Rational& r);

// Accepts "p/q" or "p" with optional leading sign; normalizes on input.
// Throws std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

// Reduced "p/q", or plain "p" when the denominator is 1.
std::string format_rational(const Rational& r);

// A point of the circle R/Z, stored by its representative in [0, 1).
struct UnitPoint {
    Rational value;

    UnitPoint() = default;
    explicit UnitPoint(const Rational& v) : value(mod_one(v)) {}

    friend bool operator==(const UnitPoint& a, const UnitPoint& b) { return a.value == b.value; }
    friend bool operator!=(const UnitPoint& a, const UnitPoint& b) { return a.value != b.value; }
    friend bool operator<(const UnitPoint& a, const UnitPoint& b) { return a.value < b.value; }
};

}  // namespace nielsen
