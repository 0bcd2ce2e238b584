#include "parhiggs/ratfunc.hpp"

#include <utility>

#include "parhiggs/errors.hpp"

namespace parhiggs {

namespace {

Int content(const LaurentPoly& p) {
    Int g = 0;
    for (const auto& [e, c] : p.coeffs()) {
        g = gcd(g, c < 0 ? Int(-c) : c);
        if (g == 1) break;
    }
    return g;
}

LaurentPoly divide_by_int(const LaurentPoly& p, const Int& d) {
    LaurentPoly r;
    for (const auto& [e, c] : p.coeffs()) r += LaurentPoly::monomial(c / d, e);
    return r;
}

LaurentPoly primitive_part(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    Int c = content(p);
    LaurentPoly r = divide_by_int(p, c);
    if (r.coeffs().rbegin()->second < 0) r = -r;
    return r;
}

/// Pseudo-remainder of a by b (both nonzero, deg a >= deg b >= 0): the
/// remainder of lc(b)^(deg a - deg b + 1) * a under division by b, which
/// stays in Z[t] without any rational arithmetic.
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b) {
    const long db = b.max_exp();
    const Int lb = b.coeffs().rbegin()->second;
    while (!a.is_zero() && a.max_exp() >= db) {
        const long da = a.max_exp();
        const Int la = a.coeffs().rbegin()->second;
        a = a * lb - b.shifted(da - db) * la;
    }
    return a;
}

} // namespace

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    if (a.is_zero()) return primitive_part(b) * content(b);
    if (b.is_zero()) return primitive_part(a) * content(a);
    if (a.min_exp() < 0 || b.min_exp() < 0)
        throw ValidationError("poly_gcd expects ordinary polynomials");
    const Int cont = gcd(content(a), content(b));
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.max_exp() < b.max_exp()) std::swap(a, b);
    while (!b.is_zero()) {
        LaurentPoly r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a * cont;
}

RatFunc::RatFunc(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::one()) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ExactnessError("rational function with zero denominator");
    normalize();
}

RatFunc::RatFunc(const Rat& c)
    : num_(LaurentPoly::monomial(numerator(c), 0)),
      den_(LaurentPoly::monomial(denominator(c), 0)) {
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    // Shift the denominator's t-power into the numerator so the denominator
    // is an ordinary polynomial with a nonzero constant term.
    const long k = den_.min_exp();
    if (k != 0) {
        den_ = den_.shifted(-k);
        num_ = num_.shifted(-k);
    }
    // Cancel the polynomial gcd (computed on the numerator's polynomial
    // part; the numerator's own t-shift is not a shared polynomial factor).
    const long nshift = num_.min_exp();
    LaurentPoly g = poly_gcd(num_.shifted(-nshift), den_);
    if (g != LaurentPoly::one()) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    // Strip the shared integer content and fix the sign on the
    // denominator's constant term.
    Int c = gcd(content(num_), content(den_));
    if (den_.coeffs().begin()->second < 0) c = -c;
    if (c != 1) {
        num_ = divide_by_int(num_, c);
        den_ = divide_by_int(den_, c);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return {};
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw ExactnessError("division by the zero rational function");
    if (is_zero()) return {};
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

bool RatFunc::operator==(const RatFunc& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

Rat RatFunc::eval(const Rat& t) const {
    auto eval_poly = [&t](const LaurentPoly& p) {
        Rat r = 0;
        for (const auto& [e, c] : p.coeffs()) {
            Rat term(c);
            if (e > 0) {
                for (long i = 0; i < e; ++i) term *= t;
            } else if (e < 0) {
                if (t == 0) throw ExactnessError("evaluating t^negative at t = 0");
                for (long i = 0; i < -e; ++i) term /= t;
            }
            r += term;
        }
        return r;
    };
    Rat d = eval_poly(den_);
    if (d == 0) throw ExactnessError("rational function evaluated at a pole");
    return eval_poly(num_) / d;
}

LaurentPoly RatFunc::to_laurent() const {
    if (den_ == LaurentPoly::one()) return num_;
    return num_.divide_exact(den_); // throws ExactnessError when inexact
}

std::string RatFunc::to_string() const {
    if (den_ == LaurentPoly::one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

} // namespace parhiggs
