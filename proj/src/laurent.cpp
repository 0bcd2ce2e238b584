#include "parhiggs/laurent.hpp"

#include <sstream>

#include "parhiggs/errors.hpp"

namespace parhiggs {

void LaurentPoly::trim() {
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->second == 0)
            it = c_.erase(it);
        else
            ++it;
    }
}

LaurentPoly LaurentPoly::monomial(Int c, long e) {
    LaurentPoly p;
    if (c != 0) p.c_[e] = std::move(c);
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::initializer_list<std::pair<long, Int>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.c_[e] += c;
    p.trim();
    return p;
}

std::pair<long, long> LaurentPoly::window() const {
    if (c_.empty()) return {0, 0};
    return {c_.begin()->first, c_.rbegin()->first};
}

Int LaurentPoly::coeff(long e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Int(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.c_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) {
        auto [it, inserted] = c_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) {
        auto [it, inserted] = c_.try_emplace(e, Int(-c));
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    if (c_.empty() || o.c_.empty()) return r;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_)
            r.c_[e1 + e2] += c1 * c2;
    r.trim();
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator*(const Int& s) const {
    if (s == 0) return {};
    LaurentPoly r = *this;
    for (auto& [e, c] : r.c_) c *= s;
    return r;
}

LaurentPoly operator*(const Int& s, const LaurentPoly& p) { return p * s; }

LaurentPoly LaurentPoly::pow(unsigned long k) const {
    LaurentPoly r = one();
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.c_[e + k] = c;
    return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
    if (d.is_zero()) throw ExactnessError("division by the zero polynomial");
    if (is_zero()) return {};
    // Ascending (power-series style) long division, eliminating the lowest
    // remaining exponent each step. For an exact quotient this terminates
    // with an empty remainder; inexactness shows up either as a
    // non-divisible leading coefficient or as the quotient exponent
    // escaping the only window an exact quotient could occupy.
    const long d_lo = d.min_exp();
    const long d_hi = d.max_exp();
    const Int& d_low_coeff = d.c_.begin()->second;
    const long q_max = max_exp() - d_hi; // exact quotient cannot exceed this
    std::map<long, Int> rem = c_;
    LaurentPoly q;
    while (!rem.empty()) {
        const long re = rem.begin()->first;
        const Int rc = rem.begin()->second;
        if (rc % d_low_coeff != 0)
            throw ExactnessError("inexact polynomial division (non-integer quotient)");
        const long qe = re - d_lo;
        if (qe > q_max)
            throw ExactnessError("inexact polynomial division (nonzero remainder)");
        Int qc = rc / d_low_coeff;
        for (const auto& [de, dc] : d.c_) {
            Int& slot = rem[de + qe];
            slot -= qc * dc;
            if (slot == 0) rem.erase(de + qe);
        }
        q.c_[qe] = std::move(qc);
    }
    q.trim();
    return q;
}

Int LaurentPoly::eval_minus_one() const {
    Int r = 0;
    for (const auto& [e, c] : c_) {
        // (-1)^e depends only on the parity of e, also for negative e.
        if (e % 2 == 0)
            r += c;
        else
            r -= c;
    }
    return r;
}

bool LaurentPoly::is_palindromic() const {
    if (is_zero()) return true;
    const long s = min_exp() + max_exp();
    for (const auto& [e, c] : c_)
        if (c != coeff(s - e)) return false;
    return true;
}

bool LaurentPoly::has_nonnegative_coeffs() const {
    for (const auto& [e, c] : c_)
        if (c < 0) return false;
    return true;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : c_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else {
            if (a < 0) {
                out << " - ";
                a = -a;
            } else {
                out << " + ";
            }
        }
        const bool unit = (a == 1);
        if (e == 0) {
            out << a.str();
        } else {
            if (!unit) out << a.str() << "*";
            out << var;
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

} // namespace parhiggs
