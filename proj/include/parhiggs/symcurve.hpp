#pragma once

#include "parhiggs/laurent.hpp"

namespace parhiggs {

/// Poincaré polynomial of the Jacobian of a genus-g curve: (1 + t)^(2g).
LaurentPoly jac_poincare(long g);

/// Poincaré polynomial of P^(w-1): 1 + t^2 + ... + t^(2(w-1)) for w >= 1,
/// and 0 for w <= 0 (the empty space). The argument is the dimension of the
/// ambient vector space, which is how it arises in flip loci.
LaurentPoly proj_poincare(long w);

/// Poincaré polynomial of the N-th symmetric product of a genus-g curve,
/// computed as the coefficient of x^N in (1 + x t)^(2g) / ((1 - x)(1 - x t^2))
/// through the exact truncated-series pipeline. Zero for N < 0.
LaurentPoly sym_poincare(long g, long N);

} // namespace parhiggs
