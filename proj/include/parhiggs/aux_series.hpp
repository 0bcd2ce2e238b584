#pragma once

#include <array>
#include <map>

#include "parhiggs/laurent.hpp"

namespace parhiggs {

/// Truncated formal power series in one or two auxiliary variables whose
/// coefficients are exact Laurent polynomials in t. The auxiliary variables
/// exist only to be expanded and extracted from: every generating-function
/// pipeline in this library multiplies a handful of polynomial factors and
/// geometric expansions together and then reads off one auxiliary
/// coefficient, which is an exact Laurent polynomial in t.
///
/// Truncation discards terms whose exponent in ANY auxiliary variable
/// exceeds the per-variable bound. All auxiliary exponents occurring in the
/// library's factors are nonnegative, so a discarded term can never flow
/// back into a retained coefficient: coefficients within the bounds are
/// exact, not approximate.
class AuxSeries {
public:
    using Exps = std::array<long, 2>; // second entry is 0 in the 1-variable case

    /// Zero series over `nvars` variables (1 or 2) with the given bounds.
    AuxSeries(int nvars, Exps bounds);

    static AuxSeries one(int nvars, Exps bounds);
    /// c(t) * X^e, dropped to zero if e exceeds the bounds.
    static AuxSeries monomial(int nvars, Exps bounds, LaurentPoly c, Exps e);

    int nvars() const { return nvars_; }
    Exps bounds() const { return bounds_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exps, LaurentPoly>& terms() const { return terms_; }

    /// Operands must agree in variable count and bounds; mixing truncation
    /// windows silently would make exactness claims meaningless.
    AuxSeries operator+(const AuxSeries& o) const;
    AuxSeries operator*(const AuxSeries& o) const;
    AuxSeries& operator+=(const AuxSeries& o);
    AuxSeries& operator*=(const AuxSeries& o);

    /// Multiply every coefficient by a fixed Laurent polynomial.
    AuxSeries scaled(const LaurentPoly& c) const;

    /// Nonnegative integer power (with truncation at each step).
    AuxSeries pow(unsigned long k) const;

    /// Exact coefficient of X^e. Throws TruncationError when a requested
    /// exponent exceeds its bound (the truncated data cannot answer);
    /// exponents below every stored term (including negative ones) are an
    /// exact zero, not an error.
    LaurentPoly coeff_at(Exps e) const;

private:
    int nvars_;
    Exps bounds_;
    std::map<Exps, LaurentPoly> terms_;

    void check_compatible(const AuxSeries& o) const;
    bool within_bounds(const Exps& e) const;
};

/// Truncated expansion of 1 / (1 - c(t) * X^m) = sum_k c^k X^{k m}.
/// The monomial must have nonnegative exponents and total auxiliary degree
/// at least 1; expanding a degree-0 factor is a contract violation (such
/// factors are pure-t and must be handled by exact polynomial division).
AuxSeries geom_expand(int nvars, AuxSeries::Exps bounds, const LaurentPoly& c,
                      AuxSeries::Exps m);

} // namespace parhiggs
