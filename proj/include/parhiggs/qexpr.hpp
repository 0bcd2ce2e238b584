#pragma once

#include <map>
#include <string>
#include <vector>

#include "parhiggs/ratfunc.hpp"

namespace parhiggs {

/// Polynomial in q with rational-function-of-t coefficients, sparse and
/// trimmed. Exponents are nonnegative inside a normalized QExpr; negative
/// powers of q in a formula are expressed by shifting them into the
/// denominator.
using QPoly = std::map<long, RatFunc>;

QPoly qpoly_zero();
QPoly qpoly_one();
/// c(t) * q^e.
QPoly qpoly_monomial(RatFunc c, long e);
QPoly qpoly_add(const QPoly& a, const QPoly& b);
QPoly qpoly_neg(const QPoly& a);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
QPoly qpoly_pow(const QPoly& a, unsigned long k);
bool qpoly_is_zero(const QPoly& a);
long qpoly_degree(const QPoly& a); // -1 for zero

/// Rational expression in q over the field of rational functions of t,
/// normalized so that numerator and denominator have nonnegative
/// q-exponents with at least one q^0 term between them, share no polynomial
/// factor in q (gcd-reduced over the coefficient field), and the
/// denominator is monic in q. Equality is decided by cross-multiplication,
/// so it never depends on the normal form.
class QExpr {
public:
    QExpr(); // zero
    static QExpr from_qpoly(QPoly num);
    static QExpr ratio(QPoly num, QPoly den);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.empty(); }

    QExpr operator-() const;
    QExpr operator+(const QExpr& o) const;
    QExpr operator-(const QExpr& o) const;
    QExpr operator*(const QExpr& o) const;
    QExpr operator/(const QExpr& o) const;

    bool operator==(const QExpr& o) const;
    bool operator!=(const QExpr& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    QPoly num_, den_;
    void normalize();
};

/// Exact limit q -> 1 of a sum of q-expressions whose individual terms may
/// have poles at q = 1 that cancel in the sum. Substitutes q = 1 + s,
/// expands each term as an exact Laurent series in s down to its pole order
/// and up to s^0, and sums. Throws ExactnessError if any negative s-order
/// fails to cancel across the sum, or if the limit is not a polynomial in t
/// with integer coefficients.
LaurentPoly q_limit(const std::vector<QExpr>& terms);

} // namespace parhiggs
