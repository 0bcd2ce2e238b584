#include "parhiggs/aux_series.hpp"

#include <string>

#include "parhiggs/errors.hpp"

namespace parhiggs {

AuxSeries::AuxSeries(int nvars, Exps bounds) : nvars_(nvars), bounds_(bounds) {
    if (nvars != 1 && nvars != 2)
        throw ValidationError("auxiliary series support exactly 1 or 2 variables");
    if (nvars == 1 && bounds_[1] != 0)
        throw ValidationError("1-variable series must have a zero second bound");
    if (bounds_[0] < 0 || bounds_[1] < 0)
        throw ValidationError("truncation bounds must be nonnegative");
}

AuxSeries AuxSeries::one(int nvars, Exps bounds) {
    return monomial(nvars, bounds, LaurentPoly::one(), {0, 0});
}

AuxSeries AuxSeries::monomial(int nvars, Exps bounds, LaurentPoly c, Exps e) {
    AuxSeries s(nvars, bounds);
    if (nvars == 1 && e[1] != 0)
        throw ValidationError("1-variable series cannot carry a second exponent");
    if (!c.is_zero() && s.within_bounds(e)) s.terms_.emplace(e, std::move(c));
    return s;
}

bool AuxSeries::within_bounds(const Exps& e) const {
    return e[0] <= bounds_[0] && e[1] <= bounds_[1];
}

void AuxSeries::check_compatible(const AuxSeries& o) const {
    if (nvars_ != o.nvars_ || bounds_ != o.bounds_)
        throw ValidationError(
            "auxiliary series mismatch: operands must share variable count and "
            "truncation bounds");
}

AuxSeries& AuxSeries::operator+=(const AuxSeries& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

AuxSeries AuxSeries::operator+(const AuxSeries& o) const {
    AuxSeries r = *this;
    r += o;
    return r;
}

AuxSeries AuxSeries::operator*(const AuxSeries& o) const {
    check_compatible(o);
    AuxSeries r(nvars_, bounds_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exps e{e1[0] + e2[0], e1[1] + e2[1]};
            if (!within_bounds(e)) continue;
            auto [it, inserted] = r.terms_.try_emplace(e, LaurentPoly{});
            it->second += c1 * c2;
        }
    }
    for (auto it = r.terms_.begin(); it != r.terms_.end();) {
        if (it->second.is_zero())
            it = r.terms_.erase(it);
        else
            ++it;
    }
    return r;
}

AuxSeries& AuxSeries::operator*=(const AuxSeries& o) {
    *this = *this * o;
    return *this;
}

AuxSeries AuxSeries::scaled(const LaurentPoly& c) const {
    AuxSeries r(nvars_, bounds_);
    if (c.is_zero()) return r;
    for (const auto& [e, p] : terms_) r.terms_.emplace(e, p * c);
    return r;
}

AuxSeries AuxSeries::pow(unsigned long k) const {
    AuxSeries r = one(nvars_, bounds_);
    AuxSeries base = *this;
    while (k > 0) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return r;
}

LaurentPoly AuxSeries::coeff_at(Exps e) const {
    if (e[0] > bounds_[0] || e[1] > bounds_[1])
        throw TruncationError(
            "coefficient at (" + std::to_string(e[0]) + ", " + std::to_string(e[1]) +
            ") lies beyond the truncation bounds (" + std::to_string(bounds_[0]) +
            ", " + std::to_string(bounds_[1]) + ")");
    auto it = terms_.find(e);
    return it == terms_.end() ? LaurentPoly{} : it->second;
}

AuxSeries geom_expand(int nvars, AuxSeries::Exps bounds, const LaurentPoly& c,
                      AuxSeries::Exps m) {
    if (m[0] < 0 || m[1] < 0)
        throw ValidationError("geometric expansion requires nonnegative exponents");
    if (m[0] + m[1] == 0)
        throw ValidationError(
            "geometric expansion of an auxiliary-degree-0 factor; pure-t factors "
            "must be divided out exactly instead");
    if (nvars == 1 && m[1] != 0)
        throw ValidationError("1-variable series cannot carry a second exponent");
    AuxSeries s(nvars, bounds);
    LaurentPoly ck = LaurentPoly::one();
    AuxSeries::Exps e{0, 0};
    while (e[0] <= bounds[0] && e[1] <= bounds[1]) {
        s += AuxSeries::monomial(nvars, bounds, ck, e);
        e[0] += m[0];
        e[1] += m[1];
        ck *= c;
    }
    return s;
}

} // namespace parhiggs
