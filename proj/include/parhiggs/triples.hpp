#pragma once

#include <vector>

#include "parhiggs/laurent.hpp"
#include "parhiggs/weights.hpp"

namespace parhiggs {

/// Determinant mode for moduli computations: the full moduli space, or the
/// fixed-determinant subvariety.
enum class Det { varying, fixed };

/// A holomorphic triple of a rank-2 and a rank-1 parabolic bundle on a
/// genus-g curve with n marked points: degrees d1 (rank 2) and d2 (line),
/// weights (alpha; beta1 < beta2) per point, and a real stability parameter
/// sigma scanned over chambers.
struct TripleSpec {
    long g;
    WeightSystem weights; // Kind::LinePlusPair
    long d1;              // degree of the rank-2 bundle
    long d2;              // degree of the line bundle

    long points() const { return weights.points(); }
};

/// One wall of the chamber structure: the stability parameter sigma_c where
/// a destabilizing subtriple of type (d_M, eps) appears, together with the
/// flip-locus data that controls the jump of the chamber polynomial.
struct WallRecord {
    long d_M;             // degree of the destabilizing line subbundle M
    std::vector<int> eps; // per-point choice in {1, 2} of the beta entering M
    Rat sigma_c;          // critical value
    long s1, s2, s3;      // weight comparison counts for this eps
    long w_plus, w_minus; // fibre dimensions of the two projective flip bundles
    long N;               // symmetric-product degree of the wall base
    LaurentPoly delta;    // jump across the wall (varying-determinant mode)
};

/// Range [sigma_min, sigma_max] containing every critical value.
/// sigma_min is also the threshold below which the moduli space is empty.
std::pair<Rat, Rat> sigma_range(const TripleSpec& spec);

/// All genuine walls (N >= 0, sigma_c > sigma_min), ordered by (sigma_c,
/// d_M, eps). Coincident sigma_c values among distinct (d_M, eps) are
/// permitted here: each wall carries its own jump and the chamber sums
/// remain exact. Use critical_values() for the strict chamber presentation.
std::vector<WallRecord> wall_records(const TripleSpec& spec);

/// Strictly increasing list of critical values. Throws ValidationError if
/// two walls share a critical value or a wall sits exactly at sigma_min
/// (the weights are then too degenerate to present a chamber structure,
/// even though chamber evaluation away from walls stays exact).
std::vector<Rat> critical_values(const TripleSpec& spec);

/// Wall data for one choice of (d_M, eps); throws ValidationError when the
/// choice is not a genuine wall (N < 0 or sigma_c <= sigma_min).
WallRecord flip_data(const TripleSpec& spec, long d_M, const std::vector<int>& eps);

/// The jump across a wall in the requested determinant mode.
LaurentPoly wall_jump(const TripleSpec& spec, const WallRecord& wall, Det det);

/// Poincaré polynomial of the sigma-stable-triple moduli space, by the
/// closed coefficient-extraction formula. Zero for sigma < sigma_min;
/// throws ValidationError at sigma_min and at critical values, where the
/// moduli space is not smooth and the formula does not apply.
LaurentPoly triples_poincare(const TripleSpec& spec, const Rat& sigma, Det det);

/// Same value computed independently: the sum of wall jumps above sigma
/// (the chamber polynomial vanishes beyond the last wall and changes by
/// delta across each wall). Identical contract to triples_poincare.
LaurentPoly triples_poincare_wallsum(const TripleSpec& spec, const Rat& sigma, Det det);

/// Complex dimension of the moduli space in its nonempty chambers,
/// recovered from any wall (w+ + w- + 2g + N - 1) and checked for
/// consistency across walls. Throws ValidationError when no walls exist.
long triples_dim(const TripleSpec& spec);

} // namespace parhiggs
