#include "parhiggs/symcurve.hpp"

#include "parhiggs/aux_series.hpp"
#include "parhiggs/errors.hpp"

namespace parhiggs {

LaurentPoly jac_poincare(long g) {
    if (g < 0) throw ValidationError("negative genus");
    return LaurentPoly::from_terms({{0, 1}, {1, 1}}).pow(static_cast<unsigned long>(2 * g));
}

LaurentPoly proj_poincare(long w) {
    LaurentPoly p;
    for (long k = 0; k < w; ++k) p += LaurentPoly::monomial(1, 2 * k);
    return p;
}

LaurentPoly sym_poincare(long g, long N) {
    if (g < 0) throw ValidationError("negative genus");
    if (N < 0) return {};
    // Truncation bound: target exponent N plus the maximal auxiliary degree
    // of the polynomial numerator factor (1 + x t)^(2g).
    const AuxSeries::Exps bounds{N + 2 * g, 0};
    const LaurentPoly t = LaurentPoly::monomial(1, 1);
    AuxSeries numerator =
        (AuxSeries::one(1, bounds) + AuxSeries::monomial(1, bounds, t, {1, 0}))
            .pow(static_cast<unsigned long>(2 * g));
    AuxSeries series = numerator * geom_expand(1, bounds, LaurentPoly::one(), {1, 0}) *
                       geom_expand(1, bounds, LaurentPoly::monomial(1, 2), {1, 0});
    return series.coeff_at({N, 0});
}

} // namespace parhiggs
