#pragma once

#include <string>

#include "parhiggs/laurent.hpp"

namespace parhiggs {

/// Rational function of t: a quotient of integer-coefficient Laurent
/// polynomials kept in a normal form. Normalization after every operation:
///   - the denominator is a true polynomial with nonzero, positive constant
///     term (common powers of t are shifted into the numerator);
///   - numerator and denominator share no polynomial factor (exact gcd over
///     Z[t], computed with a primitive pseudo-remainder sequence);
///   - numerator and denominator share no integer content.
/// The numerator may legitimately keep negative exponents of t.
class RatFunc {
public:
    RatFunc() : num_(), den_(LaurentPoly::one()) {} // zero
    RatFunc(LaurentPoly num);                       // polynomial
    RatFunc(LaurentPoly num, LaurentPoly den);
    explicit RatFunc(const Int& c) : RatFunc(LaurentPoly::monomial(c, 0)) {}
    explicit RatFunc(const Rat& c);

    static RatFunc zero() { return {}; }
    static RatFunc one() { return RatFunc(LaurentPoly::one()); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    /// Throws ExactnessError on division by zero.
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    /// Equality by cross-multiplication (independent of normal form).
    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    /// Evaluate at a rational point (t != 0 required when negative
    /// exponents are present). Throws ExactnessError on a pole.
    Rat eval(const Rat& t) const;

    /// Convert to a Laurent polynomial, throwing ExactnessError when the
    /// value is not an integer-coefficient Laurent polynomial.
    LaurentPoly to_laurent() const;

    std::string to_string() const;

private:
    LaurentPoly num_, den_;
    void normalize();
};

/// gcd in Z[t] of two ordinary polynomials (nonnegative exponents),
/// normalized with positive leading coefficient; gcd(p, 0) = p up to sign.
/// Computed by a primitive pseudo-remainder sequence: exact, no rounding,
/// contents stripped at every step to control coefficient growth.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

} // namespace parhiggs
