#pragma once

#include <map>
#include <string>
#include <utility>

#include "parhiggs/rational.hpp"

namespace parhiggs {

/// Laurent polynomial in a single variable t with arbitrary-precision
/// integer coefficients. Negative exponents are first-class: intermediate
/// factors in coefficient-extraction pipelines routinely carry them even
/// though every final Poincaré polynomial has them cancel.
///
/// Representation: sparse exponent -> coefficient map holding only nonzero
/// coefficients (trimmed after every operation), plus the window
/// [min_exp, max_exp] of the support. Arithmetic in t is always exact and
/// never truncated; truncation exists only in the auxiliary-variable layer.
class LaurentPoly {
public:
    /// The zero polynomial.
    LaurentPoly() = default;

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(1, 0); }
    /// c * t^e (the zero polynomial when c == 0).
    static LaurentPoly monomial(Int c, long e);
    /// Convenience for building small polynomials in tests and formulas:
    /// a list of (exponent, coefficient) pairs, repeated exponents summed.
    static LaurentPoly from_terms(std::initializer_list<std::pair<long, Int>> terms);

    bool is_zero() const { return c_.empty(); }
    /// Support window [min_exp, max_exp]; {0, 0} for the zero polynomial.
    std::pair<long, long> window() const;
    long min_exp() const { return window().first; }
    long max_exp() const { return window().second; }
    /// Degree in t (max_exp); -1 for the zero polynomial by convention.
    long degree() const { return is_zero() ? -1 : max_exp(); }

    /// Coefficient of t^e (zero when absent).
    Int coeff(long e) const;
    const std::map<long, Int>& coeffs() const { return c_; }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator*(const Int& s) const;

    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

    /// Nonnegative integer power.
    LaurentPoly pow(unsigned long k) const;
    /// Multiplication by t^k.
    LaurentPoly shifted(long k) const;

    /// Exact division: returns q with *this == q * d, throwing
    /// ExactnessError when no such Laurent polynomial with integer
    /// coefficients exists. Used wherever a formula guarantees
    /// divisibility (e.g. by 1 - t^2) and we want that guarantee checked.
    LaurentPoly divide_exact(const LaurentPoly& d) const;

    /// Evaluation at t = -1 (the Euler characteristic of a Poincaré
    /// polynomial).
    Int eval_minus_one() const;

    /// true when coeff(e) == coeff(min_exp + max_exp - e) for all e.
    bool is_palindromic() const;

    /// All coefficients >= 0.
    bool has_nonnegative_coeffs() const;

    /// Human-readable ascending form, e.g. "1 + 7*t^2".
    std::string to_string(const std::string& var = "t") const;

private:
    std::map<long, Int> c_; // exponent -> nonzero coefficient
    void trim();
};

LaurentPoly operator*(const Int& s, const LaurentPoly& p);

} // namespace parhiggs
