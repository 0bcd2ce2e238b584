#pragma once

#include <vector>

#include "parhiggs/laurent.hpp"
#include "parhiggs/qexpr.hpp"

namespace parhiggs {

/// The six terms of the two-variable generating expression H^n_3(q, t)
/// whose q -> 1 limit is conjectured to equal the total Poincare polynomial
/// of the rank-3 full-flag moduli space with varying determinant (n marked
/// points, genus g).  Each term is an exact rational expression in q over
/// rational functions of t; the individual terms have poles at q = 1 (of
/// order at most 2) that cancel only in the six-term sum.
/// Throws ValidationError unless g >= 0 and n >= 1.
std::vector<QExpr> hausel_terms(long g, long n);

/// Exact q -> 1 limit of the six-term sum.  Throws ExactnessError if the
/// poles fail to cancel or the limit is not an integer Laurent polynomial
/// in t, and VerificationError if the limit has a negative exponent or a
/// negative coefficient; any of these indicates a transcription or
/// arithmetic fault, not a property of the inputs.
LaurentPoly hausel_at_q1(long g, long n);

} // namespace parhiggs
