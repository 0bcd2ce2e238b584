#pragma once

#include <vector>

#include "parhiggs/laurent.hpp"
#include "parhiggs/rational.hpp"
#include "parhiggs/triples.hpp"
#include "parhiggs/weights.hpp"

namespace parhiggs {

// Poincaré polynomials of moduli of rank-3 parabolic Higgs bundles with full
// flags, for varying and fixed determinant.
//
// The computation runs over the downward-flow stratification of the circle
// action that scales the Higgs field.  Strata are indexed by how the bundle
// splits into weight subbundles, recorded as the ordered rank vector of the
// pieces:
//
//   (3)      the Higgs field vanishes: moduli of stable parabolic bundles;
//   (1,1,1)  three line bundles chained by the Higgs field;
//   (1,2)    a line bundle mapping into a rank-2 piece;
//   (2,1)    a rank-2 piece mapping into a line bundle.
//
// Each family has a closed-form total (a residue-style coefficient
// extraction, valid for small generic weights) and an independent
// stratum-by-stratum enumeration used as a cross-check oracle.  The oracles
// evaluate honest stability inequalities against the explicit rational
// weights, so they share no code path with the closed forms.

/// Rank vector of the weight decomposition attached to a stratum family.
enum class HNType { t3, t111, t12, t21 };

/// Cohomology selector for the type-(1,1,1) strata of the fixed-determinant
/// moduli space.  The 3-torsion line bundles act on those strata; their
/// cohomology splits into the part fixed by the action ("invariant") and the
/// rest ("variant").  The varying-determinant total needs no split.
enum class Mode111 { nonfixed, fixed_invariant, fixed_variant };

/// Input data for the rank-3 moduli computations.
struct HiggsParams {
  long g;                // genus of the curve, >= 0
  long n;                // number of marked points, >= 1
  long degree;           // total degree; must be nonzero mod 3
  WeightSystem weights;  // full-flag system with three weights per point

  HiggsParams(long genus, long points, long total_degree, WeightSystem w);

  /// Convenience constructor using the generated small generic weights.
  static HiggsParams with_default_weights(long genus, long points,
                                          long total_degree);

  /// Residue of the degree mod 3, always 1 or 2.
  long delta0() const;
};

/// Complex dimension of the moduli space of rank-r parabolic Higgs bundles
/// with full flags: r^2(2g-2) + 2 + n*(r^2 - r).
long moduli_dim(long r, long g, long n);

/// One weight subbundle of a decomposed Higgs bundle: its rank, degree, and
/// the parabolic weights it carries at each marked point.
struct GradedPiece {
  long rank = 0;
  long degree = 0;
  std::vector<std::vector<Rat>> owned;  // owned[p] = weights carried at point p
};

/// Downward-flow index of the critical stratum whose points decompose into
/// the given ordered pieces (the Higgs field maps piece l into piece l+1).
/// The pieces must have total rank 3 and total degree params.degree.
long morse_index(const std::vector<GradedPiece>& pieces,
                 const HiggsParams& params);

/// Discrete data of one critical stratum together with its index and
/// Poincaré polynomial (varying-determinant form).
struct StratumRecord {
  HNType type = HNType::t111;

  // Type (1,1,1): line-piece degrees are (d1, m-d1, degree-m); assign[p] is
  // the permutation of {1,2,3} giving which of the point's three weights
  // each line piece carries.  Types (1,2)/(2,1): the stratum is recorded
  // through its chained-pair model (a line and a rank-2 piece linked by the
  // Higgs field, one member carrying the canonical twist); d1 is the degree
  // of the rank-2 member for type (1,2) and of the line member for type
  // (2,1), the other member's degree being determined by d1 and the total
  // degree.  assign[p] holds the single index of the weight carried by the
  // line summand of the underlying bundle.
  long d1 = 0;
  long m = 0;
  std::vector<std::vector<int>> assign;

  long m1 = 0, m2 = 0;  // effective-divisor degrees cut out by the Higgs field
  long s1 = 0, s2 = 0;  // points where consecutive line weights descend
  Rat F, G;             // weight offsets entering the stability inequalities
  long s0 = 0;          // strict weight inversions between line and rank-2 piece

  long index = 0;        // downward-flow index
  LaurentPoly poincare;  // Poincaré polynomial of the stratum
};

/// All nonempty type-(1,1,1) strata for the given parameters.
std::vector<StratumRecord> enumerate_111(const HiggsParams& params);

/// Closed-form total of the type-(1,1,1) strata: a two-variable coefficient
/// extraction (valid for small weights), or the closed product for the
/// variant part.  `bound_padding` widens every internal series-truncation
/// window by that amount; results are window-independent by construction,
/// so a nonzero padding serves as a truncation-robustness probe.
LaurentPoly contribution_111(const HiggsParams& params, Mode111 mode,
                             long bound_padding = 0);

/// Oracle for contribution_111: direct sum of index-weighted stratum
/// polynomials over enumerate_111.
LaurentPoly stratum_sum_111(const HiggsParams& params, Mode111 mode);

/// Closed-form totals of the type-(1,2) and type-(2,1) strata (one-variable
/// coefficient extractions, valid for small weights).
LaurentPoly contribution_12(const HiggsParams& params, Det det,
                            long bound_padding = 0);
LaurentPoly contribution_21(const HiggsParams& params, Det det,
                            long bound_padding = 0);

/// All nonempty strata of the requested line+rank-2 family (which must be
/// HNType::t12 or HNType::t21), with varying-determinant polynomials.
std::vector<StratumRecord> enumerate_type12(const HiggsParams& params,
                                            HNType which);

/// Oracle for contribution_12/contribution_21: enumerates strata and
/// evaluates each one through the chained-pairs moduli engine at the
/// canonical stability parameter 2g-2 (type (2,1) goes through the dual
/// chained-pair description).
LaurentPoly stratum_sum_type12(const HiggsParams& params, HNType which,
                               Det det);

/// Poincaré polynomial of the moduli space of stable rank-3 parabolic
/// bundles with full flags (the type-(3) stratum), via the closed product
/// formula.
LaurentPoly bundles3_poincare(const HiggsParams& params, Det det);

/// Oracle for bundles3_poincare: assembles the same polynomial from the
/// filtration-type recursion (one term per filtration length, with
/// hard-coded per-point intersection tables).
LaurentPoly bundles3_assembled(const HiggsParams& params, Det det);

/// Poincaré polynomial of the full rank-3 moduli space: sum of the four
/// stratum-family contributions.  Computed for both residues of the degree
/// mod 3 and cross-checked for equality before returning.  A nonzero
/// `bound_padding` recomputes with widened series-truncation windows (and
/// without memoization) as a truncation-robustness probe.
LaurentPoly higgs3_total(const HiggsParams& params, Det det,
                         long bound_padding = 0);

}  // namespace parhiggs
