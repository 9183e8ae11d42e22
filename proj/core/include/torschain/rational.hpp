#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace torschain {

// Compare against Rational values, never bare ints: with C++20 rewritten
// comparisons boost 1.74 recurses forever on `r == 0`.
using Rational = boost::rational<std::int64_t>;

// "a/b" or "a"; surrounding whitespace is not accepted.
Rational parse_rational(std::string_view text);

// Integers print without a denominator ("0", "1"), everything else as "a/b".
std::string to_string(const Rational& r);

inline Rational abs_diff(const Rational& a, const Rational& b) {
  return a < b ? b - a : a - b;
}

}  // namespace torschain
