#include "parhiggs/qexpr.hpp"

#include <sstream>
#include <utility>

#include "parhiggs/errors.hpp"

namespace parhiggs {

namespace {

void qpoly_trim(QPoly& p) {
    for (auto it = p.begin(); it != p.end();) {
        if (it->second.is_zero())
            it = p.erase(it);
        else
            ++it;
    }
}

const RatFunc& qpoly_lc(const QPoly& p) { return p.rbegin()->second; }

QPoly qpoly_scale(const QPoly& a, const RatFunc& c) {
    QPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, k] : a) r.emplace(e, k * c);
    return r;
}

/// Polynomial in q with integer-coefficient t-polynomial coefficients.
/// Running the gcd here instead of over the rational-function field keeps
/// intermediate coefficients polynomial-sized: a fraction-field Euclidean
/// algorithm suffers catastrophic coefficient blowup on exactly the inputs
/// this code meets (numerators and denominators sharing cyclotomic-style
/// factors q^a t^b - 1).
using ZQPoly = std::map<long, LaurentPoly>;

void zq_trim(ZQPoly& p) {
    for (auto it = p.begin(); it != p.end();)
        it = it->second.is_zero() ? p.erase(it) : std::next(it);
}

long zq_degree(const ZQPoly& p) { return p.empty() ? -1 : p.rbegin()->first; }

/// Z[t]-content across the q-coefficients.
LaurentPoly zq_content(const ZQPoly& p) {
    LaurentPoly g;
    for (const auto& [e, c] : p) {
        g = poly_gcd(g, c);
        if (g == LaurentPoly::one()) break;
    }
    return g;
}

ZQPoly zq_primitive(ZQPoly p) {
    if (p.empty()) return p;
    const LaurentPoly g = zq_content(p);
    if (g != LaurentPoly::one())
        for (auto& [e, c] : p) c = c.divide_exact(g);
    return p;
}

/// Pseudo-remainder in q: the remainder of lc(b)^k * a under division by b
/// for a suitable k, computed without leaving Z[t].
ZQPoly zq_pseudo_rem(ZQPoly a, const ZQPoly& b) {
    const long db = zq_degree(b);
    const LaurentPoly& lb = b.rbegin()->second;
    while (!a.empty() && zq_degree(a) >= db) {
        const long da = zq_degree(a);
        const LaurentPoly la = a.rbegin()->second;
        ZQPoly r;
        for (const auto& [e, c] : a)
            if (e != da) r[e] = c * lb;
        for (const auto& [e, c] : b)
            if (e != db) r[e + da - db] -= c * la;
        zq_trim(r);
        a = std::move(r);
    }
    return a;
}

/// Clear the rational-function coefficients of p into Z[t][q]. The result
/// equals p up to a unit of the coefficient field (a common denominator
/// and a power of t), which is all a q-gcd computation can see.
ZQPoly zq_clear(const QPoly& p) {
    LaurentPoly common = LaurentPoly::one();
    for (const auto& [e, c] : p)
        common = (common * c.den()).divide_exact(poly_gcd(common, c.den()));
    ZQPoly r;
    long shift = 0;
    for (const auto& [e, c] : p) {
        LaurentPoly cleared = c.num() * common.divide_exact(c.den());
        shift = std::min(shift, cleared.min_exp());
        r.emplace(e, std::move(cleared));
    }
    if (shift != 0)
        for (auto& [e, c] : r) c = c.shifted(-shift);
    return r;
}

/// Gcd in q up to a unit of the coefficient field, by the primitive
/// pseudo-remainder sequence over Z[t].
ZQPoly zq_gcd(ZQPoly a, ZQPoly b) {
    a = zq_primitive(std::move(a));
    b = zq_primitive(std::move(b));
    if (zq_degree(a) < zq_degree(b)) std::swap(a, b);
    while (!b.empty()) {
        ZQPoly r = zq_primitive(zq_pseudo_rem(std::move(a), b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

QPoly zq_to_qpoly(const ZQPoly& p) {
    QPoly r;
    for (const auto& [e, c] : p) r.emplace(e, RatFunc(c));
    return r;
}

/// Exact quotient a / b when b divides a.
QPoly qpoly_div_exact(QPoly a, const QPoly& b) {
    QPoly q;
    const long db = qpoly_degree(b);
    const RatFunc& lb = qpoly_lc(b);
    while (!a.empty() && qpoly_degree(a) >= db) {
        const long da = qpoly_degree(a);
        RatFunc f = qpoly_lc(a) / lb;
        q[da - db] = f;
        for (const auto& [e, c] : b) {
            auto [it, inserted] = a.try_emplace(e + da - db, RatFunc{});
            it->second -= f * c;
        }
        qpoly_trim(a);
    }
    if (!a.empty()) throw ExactnessError("inexact q-polynomial division");
    return q;
}

/// Rational-coefficient polynomial gcd degree after evaluating t. Used as a
/// certified shortcut: if the leading coefficient of `a` does not vanish at
/// the evaluation point, the true gcd degree is bounded by the evaluated
/// gcd degree; a degree-0 evaluated gcd therefore proves coprimality
/// without running the (much costlier) Euclidean algorithm over the
/// rational-function field.
bool coprime_by_evaluation(const QPoly& a, const QPoly& b) {
    for (int point = 2; point < 12; ++point) {
        const Rat tau(point);
        bool usable = true;
        std::map<long, Rat> ea, eb;
        try {
            for (const auto& [e, c] : a) ea[e] = c.eval(tau);
            for (const auto& [e, c] : b) eb[e] = c.eval(tau);
        } catch (const ExactnessError&) {
            continue; // tau hit a coefficient pole; try the next point
        }
        if (ea[qpoly_degree(a)] == 0) continue; // leading coeff vanished
        for (auto it = ea.begin(); it != ea.end();)
            it = (it->second == 0) ? ea.erase(it) : std::next(it);
        for (auto it = eb.begin(); it != eb.end();)
            it = (it->second == 0) ? eb.erase(it) : std::next(it);
        // Euclid over Q.
        auto deg = [](const std::map<long, Rat>& p) {
            return p.empty() ? -1L : p.rbegin()->first;
        };
        std::map<long, Rat> x = std::move(ea), y = std::move(eb);
        while (!y.empty()) {
            const long dy = deg(y);
            const Rat ly = y.rbegin()->second;
            while (!x.empty() && deg(x) >= dy) {
                const long dx = deg(x);
                const Rat f = x.rbegin()->second / ly;
                for (const auto& [e, c] : y) {
                    x[e + dx - dy] -= f * c;
                    if (x[e + dx - dy] == 0) x.erase(e + dx - dy);
                }
            }
            std::swap(x, y);
        }
        return deg(x) == 0;
        (void)usable;
    }
    return false; // could not certify; caller falls back to exact Euclid
}

} // namespace

QPoly qpoly_zero() { return {}; }

QPoly qpoly_one() { return qpoly_monomial(RatFunc::one(), 0); }

QPoly qpoly_monomial(RatFunc c, long e) {
    QPoly p;
    if (!c.is_zero()) p.emplace(e, std::move(c));
    return p;
}

QPoly qpoly_add(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    for (const auto& [e, c] : b) {
        auto [it, inserted] = r.try_emplace(e, c);
        if (!inserted) it->second += c;
    }
    qpoly_trim(r);
    return r;
}

QPoly qpoly_neg(const QPoly& a) {
    QPoly r;
    for (const auto& [e, c] : a) r.emplace(e, -c);
    return r;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    QPoly r;
    for (const auto& [e1, c1] : a)
        for (const auto& [e2, c2] : b) {
            auto [it, inserted] = r.try_emplace(e1 + e2, RatFunc{});
            it->second += c1 * c2;
        }
    qpoly_trim(r);
    return r;
}

QPoly qpoly_pow(const QPoly& a, unsigned long k) {
    QPoly r = qpoly_one();
    QPoly base = a;
    while (k > 0) {
        if (k & 1) r = qpoly_mul(r, base);
        k >>= 1;
        if (k > 0) base = qpoly_mul(base, base);
    }
    return r;
}

bool qpoly_is_zero(const QPoly& a) { return a.empty(); }

long qpoly_degree(const QPoly& a) { return a.empty() ? -1 : a.rbegin()->first; }

QExpr::QExpr() : num_(), den_(qpoly_one()) {}

QExpr QExpr::from_qpoly(QPoly num) {
    QExpr e;
    e.num_ = std::move(num);
    e.normalize();
    return e;
}

QExpr QExpr::ratio(QPoly num, QPoly den) {
    if (qpoly_is_zero(den)) throw ExactnessError("q-expression with zero denominator");
    QExpr e;
    e.num_ = std::move(num);
    e.den_ = std::move(den);
    e.normalize();
    return e;
}

void QExpr::normalize() {
    qpoly_trim(num_);
    qpoly_trim(den_);
    if (num_.empty()) {
        den_ = qpoly_one();
        return;
    }
    // Shift out a common power of q so the minimum exponent across both is 0.
    const long shift = std::min(num_.begin()->first, den_.begin()->first);
    if (shift != 0) {
        QPoly n2, d2;
        for (auto& [e, c] : num_) n2.emplace(e - shift, std::move(c));
        for (auto& [e, c] : den_) d2.emplace(e - shift, std::move(c));
        num_ = std::move(n2);
        den_ = std::move(d2);
    }
    // gcd-reduce in q. The evaluation shortcut certifies coprimality in the
    // common case; otherwise run the primitive pseudo-remainder sequence
    // over cleared integer-polynomial coefficients.
    if (qpoly_degree(den_) > 0 && qpoly_degree(num_) > 0 &&
        !coprime_by_evaluation(num_, den_)) {
        ZQPoly g = zq_gcd(zq_clear(num_), zq_clear(den_));
        if (zq_degree(g) > 0) {
            const QPoly gq = zq_to_qpoly(g);
            num_ = qpoly_div_exact(std::move(num_), gq);
            den_ = qpoly_div_exact(std::move(den_), gq);
        }
    }
    // Make the denominator monic in q.
    const RatFunc lc = qpoly_lc(den_);
    if (!(lc == RatFunc::one())) {
        const RatFunc inv = RatFunc::one() / lc;
        num_ = qpoly_scale(num_, inv);
        den_ = qpoly_scale(den_, inv);
    }
}

QExpr QExpr::operator-() const {
    QExpr r = *this;
    r.num_ = qpoly_neg(r.num_);
    return r;
}

QExpr QExpr::operator+(const QExpr& o) const {
    return ratio(qpoly_add(qpoly_mul(num_, o.den_), qpoly_mul(o.num_, den_)),
                 qpoly_mul(den_, o.den_));
}

QExpr QExpr::operator-(const QExpr& o) const { return *this + (-o); }

QExpr QExpr::operator*(const QExpr& o) const {
    return ratio(qpoly_mul(num_, o.num_), qpoly_mul(den_, o.den_));
}

QExpr QExpr::operator/(const QExpr& o) const {
    if (o.is_zero()) throw ExactnessError("division by the zero q-expression");
    return ratio(qpoly_mul(num_, o.den_), qpoly_mul(den_, o.num_));
}

bool QExpr::operator==(const QExpr& o) const {
    QPoly lhs = qpoly_mul(num_, o.den_);
    QPoly rhs = qpoly_mul(o.num_, den_);
    return qpoly_is_zero(qpoly_add(lhs, qpoly_neg(rhs)));
}

std::string QExpr::to_string() const {
    auto render = [](const QPoly& p) {
        if (p.empty()) return std::string("0");
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : p) {
            if (!first) out << " + ";
            first = false;
            out << "(" << c.to_string() << ")";
            if (e == 1)
                out << "*q";
            else if (e != 0)
                out << "*q^" << e;
        }
        return out.str();
    };
    return "[" + render(num_) + "] / [" + render(den_) + "]";
}

LaurentPoly q_limit(const std::vector<QExpr>& terms) {
    // s-polynomials: maps s-exponent -> rational-function coefficient.
    using SPoly = std::map<long, RatFunc>;
    auto substitute = [](const QPoly& p) {
        // q = 1 + s, expanded exactly by binomials.
        SPoly s;
        for (const auto& [k, c] : p) {
            for (long j = 0; j <= k; ++j) {
                auto [it, inserted] = s.try_emplace(j, RatFunc{});
                it->second += c * RatFunc(binomial(k, j));
            }
        }
        for (auto it = s.begin(); it != s.end();)
            it = it->second.is_zero() ? s.erase(it) : std::next(it);
        return s;
    };

    std::map<long, RatFunc> total; // s-order -> accumulated coefficient
    for (const auto& term : terms) {
        if (term.is_zero()) continue;
        SPoly num = substitute(term.num());
        SPoly den = substitute(term.den());
        if (den.empty()) throw ExactnessError("q-limit of an expression with zero denominator");
        const long v = den.begin()->first; // pole order at q = 1
        // The term equals s^{-v} * num / u where u = den / s^v has a
        // nonzero constant coefficient; expand num / u to s-order v to
        // recover the Laurent coefficients of orders -v .. 0.
        SPoly u;
        for (const auto& [e, c] : den) u.emplace(e - v, c);
        const RatFunc u0 = u.at(0);
        std::vector<RatFunc> inv(static_cast<size_t>(v) + 1, RatFunc{});
        inv[0] = RatFunc::one() / u0;
        for (long j = 1; j <= v; ++j) {
            RatFunc acc;
            for (long i = 1; i <= j; ++i) {
                auto it = u.find(i);
                if (it != u.end()) acc += it->second * inv[static_cast<size_t>(j - i)];
            }
            inv[static_cast<size_t>(j)] = -(acc / u0);
        }
        for (long j = 0; j <= v; ++j) {
            RatFunc h;
            for (long b = 0; b <= j; ++b) {
                auto it = num.find(j - b);
                if (it != num.end()) h += it->second * inv[static_cast<size_t>(b)];
            }
            if (h.is_zero()) continue;
            auto [it, inserted] = total.try_emplace(j - v, RatFunc{});
            it->second += h;
        }
    }

    RatFunc value;
    for (const auto& [order, c] : total) {
        if (c.is_zero()) continue;
        if (order < 0)
            throw ExactnessError("q -> 1 limit: pole of order " + std::to_string(-order) +
                                 " fails to cancel across the sum");
        if (order == 0) value = c;
    }
    LaurentPoly result = value.to_laurent(); // throws when not integer-coefficient
    if (!result.is_zero() && result.min_exp() < 0)
        throw ExactnessError("q -> 1 limit is not a polynomial in t");
    return result;
}

} // namespace parhiggs
