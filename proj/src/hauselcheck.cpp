#include "parhiggs/hauselcheck.hpp"

#include <string>
#include <utility>

#include "parhiggs/errors.hpp"

namespace parhiggs {

namespace {

// c * q^qe * t^te.  Negative q-exponents are legal: QExpr::ratio shifts the
// common minimum exponent of numerator and denominator back to zero.
QPoly mono(Int c, long qe, long te) {
    return qpoly_monomial(RatFunc(LaurentPoly::monomial(std::move(c), te)),
                          qe);
}

// q^qe t^te + 1.
QPoly plus_one(long qe, long te) {
    return qpoly_add(mono(1, qe, te), qpoly_one());
}

// q^qe t^te - 1.
QPoly minus_one(long qe, long te) {
    return qpoly_add(mono(1, qe, te), qpoly_neg(qpoly_one()));
}

QPoly prod(std::initializer_list<QPoly> fs) {
    QPoly r = qpoly_one();
    for (const auto& f : fs) r = qpoly_mul(r, f);
    return r;
}

QPoly sum(std::initializer_list<QPoly> fs) {
    QPoly r = qpoly_zero();
    for (const auto& f : fs) r = qpoly_add(r, f);
    return r;
}

Int ipow(long base, long exp) {
    Int r = 1;
    for (long i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace

std::vector<QExpr> hausel_terms(long g, long n) {
    if (g < 0)
        throw ValidationError("hausel_terms: genus must be nonnegative, got " +
                              std::to_string(g));
    if (n < 1)
        throw ValidationError(
            "hausel_terms: the number of marked points must be at least 1, "
            "got " +
            std::to_string(n));

    const auto un = static_cast<unsigned long>(n);
    const auto g2 = static_cast<unsigned long>(2 * g);
    const auto g4 = static_cast<unsigned long>(4 * g);

    std::vector<QExpr> terms;
    terms.reserve(6);

    // ((q t^2 + 1)(q^2 t^4 + q t^2 + 1))^n (q^3 t^5 + 1)^{2g}
    // (q^2 t^3 + 1)^{2g}
    // / ((q^3 t^6 - 1)(q^3 t^4 - 1)(q^2 t^4 - 1)(q^2 t^2 - 1))
    {
        const QPoly per_point =
            qpoly_mul(plus_one(1, 2),
                      sum({mono(1, 2, 4), mono(1, 1, 2), qpoly_one()}));
        QPoly num = prod({qpoly_pow(per_point, un),
                          qpoly_pow(plus_one(3, 5), g2),
                          qpoly_pow(plus_one(2, 3), g2)});
        QPoly den = prod({minus_one(3, 6), minus_one(3, 4), minus_one(2, 4),
                          minus_one(2, 2)});
        terms.push_back(QExpr::ratio(std::move(num), std::move(den)));
    }

    // (q^3 t^6 (q + 1)(q^2 + q + 1))^n q^{6g-6} t^{12g-12} (q^3 t + 1)^{2g}
    // (q^2 t + 1)^{2g}
    // / ((q^3 t^2 - 1)(q^3 - 1)(q^2 t^2 - 1)(q^2 - 1))
    {
        const QPoly per_point =
            prod({mono(1, 3, 6), plus_one(1, 0),
                  sum({mono(1, 2, 0), mono(1, 1, 0), qpoly_one()})});
        QPoly num = prod({qpoly_pow(per_point, un),
                          mono(1, 6 * g - 6, 12 * g - 12),
                          qpoly_pow(plus_one(3, 1), g2),
                          qpoly_pow(plus_one(2, 1), g2)});
        QPoly den = prod({minus_one(3, 2), minus_one(3, 0), minus_one(2, 2),
                          minus_one(2, 0)});
        terms.push_back(QExpr::ratio(std::move(num), std::move(den)));
    }

    // (q^2 t^4 (2 q^2 t^2 + q t^2 + q + 2))^n q^{4g-4} t^{8g-8}
    // (q^3 t^3 + 1)^{2g} (q t + 1)^{2g}
    // / ((q^3 t^4 - 1)(q^3 t^2 - 1)(q t^2 - 1)(q - 1))
    {
        const QPoly per_point =
            qpoly_mul(mono(1, 2, 4), sum({mono(2, 2, 2), mono(1, 1, 2),
                                          mono(1, 1, 0), mono(2, 0, 0)}));
        QPoly num = prod({qpoly_pow(per_point, un),
                          mono(1, 4 * g - 4, 8 * g - 8),
                          qpoly_pow(plus_one(3, 3), g2),
                          qpoly_pow(plus_one(1, 1), g2)});
        QPoly den = prod({minus_one(3, 4), minus_one(3, 2), minus_one(1, 2),
                          minus_one(1, 0)});
        terms.push_back(QExpr::ratio(std::move(num), std::move(den)));
    }

    // 6^n (q t^2)^{3n} q^{6g-6} t^{12g-12} (q t + 1)^{4g}
    // / (3 (q t^2 - 1)^2 (q - 1)^2)
    {
        QPoly num = prod({mono(ipow(6, n), 3 * n, 6 * n),
                          mono(1, 6 * g - 6, 12 * g - 12),
                          qpoly_pow(plus_one(1, 1), g4)});
        QPoly den = prod({mono(3, 0, 0), qpoly_pow(minus_one(1, 2), 2),
                          qpoly_pow(minus_one(1, 0), 2)});
        terms.push_back(QExpr::ratio(std::move(num), std::move(den)));
    }

    // - (3 q^2 t^4 (q t^2 + 1))^n q^{4g-4} t^{8g-8} (q^2 t^3 + 1)^{2g}
    // (q t + 1)^{2g}
    // / ((q^2 t^4 - 1)(q^2 t^2 - 1)(q t^2 - 1)(q - 1))
    {
        QPoly num = prod({mono(ipow(3, n), 2 * n, 4 * n),
                          qpoly_pow(plus_one(1, 2), un),
                          mono(1, 4 * g - 4, 8 * g - 8),
                          qpoly_pow(plus_one(2, 3), g2),
                          qpoly_pow(plus_one(1, 1), g2)});
        QPoly den = prod({minus_one(2, 4), minus_one(2, 2), minus_one(1, 2),
                          minus_one(1, 0)});
        terms.push_back(
            QExpr::ratio(qpoly_neg(std::move(num)), std::move(den)));
    }

    // - (3 q^3 t^6 (q + 1))^n q^{6g-6} t^{12g-12} (q^2 t + 1)^{2g}
    // (q t + 1)^{2g}
    // / ((q^2 t^2 - 1)(q^2 - 1)(q t^2 - 1)(q - 1))
    {
        QPoly num = prod({mono(ipow(3, n), 3 * n, 6 * n),
                          qpoly_pow(plus_one(1, 0), un),
                          mono(1, 6 * g - 6, 12 * g - 12),
                          qpoly_pow(plus_one(2, 1), g2),
                          qpoly_pow(plus_one(1, 1), g2)});
        QPoly den = prod({minus_one(2, 2), minus_one(2, 0), minus_one(1, 2),
                          minus_one(1, 0)});
        terms.push_back(
            QExpr::ratio(qpoly_neg(std::move(num)), std::move(den)));
    }

    return terms;
}

LaurentPoly hausel_at_q1(long g, long n) {
    const LaurentPoly p = q_limit(hausel_terms(g, n));
    const bool bad_exponent = !p.is_zero() && p.min_exp() < 0;
    if (bad_exponent || !p.has_nonnegative_coeffs())
        throw VerificationError(
            "hausel_at_q1: the q -> 1 limit at g=" + std::to_string(g) +
            ", n=" + std::to_string(n) +
            " is not a polynomial with nonnegative coefficients: " +
            p.to_string());
    return p;
}

} // namespace parhiggs
