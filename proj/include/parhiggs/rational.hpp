#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace parhiggs {

/// Arbitrary-precision integer. All polynomial coefficients use this type:
/// Betti numbers overflow 64 bits already at moderate genus/puncture counts,
/// and intermediate products grow much faster than the final coefficients.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, used for parabolic weights and stability
/// parameters. Arithmetic is exact; nothing in the library ever rounds.
using Rat = boost::multiprecision::cpp_rational;

/// Floor of an exact rational (round toward minus infinity).
Int rat_floor(const Rat& x);

/// Smallest integer strictly greater than x.
Int rat_strict_ceil(const Rat& x);

/// Parse "a/b" or "a" with optional sign into an exact rational.
/// Decimal notation is rejected: 0.25 has no place in exact arithmetic
/// (the caller should write 1/4).
Rat parse_rational(const std::string& text);

/// Render as "a/b", or "a" when the denominator is 1.
std::string rat_to_string(const Rat& x);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n. n must be >= 0.
Int binomial(long n, long k);

} // namespace parhiggs
