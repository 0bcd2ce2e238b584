#include "parhiggs/higgs3.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>

#include "parhiggs/aux_series.hpp"
#include "parhiggs/errors.hpp"
#include "parhiggs/ratfunc.hpp"
#include "parhiggs/symcurve.hpp"

namespace parhiggs {

namespace {

/// Largest integer strictly less than x.
long largest_below(const Rat& x) {
    return -static_cast<long>(rat_strict_ceil(-x));
}

long floor_of(const Rat& x) { return static_cast<long>(rat_floor(x)); }

Int ipow(long base, long exp) {
    Int r = 1;
    for (long i = 0; i < exp; ++i) r *= base;
    return r;
}

LaurentPoly one_plus_t_pow(long k) {
    return LaurentPoly::from_terms({{0, 1}, {1, 1}}).pow(static_cast<unsigned long>(k));
}

const LaurentPoly& one_minus_t2() {
    static const LaurentPoly p = LaurentPoly::from_terms({{0, 1}, {2, -1}});
    return p;
}

/// The six orderings of {1, 2, 3}, used to distribute the three weights at
/// a point over the three line pieces of a fully split bundle.
constexpr std::array<std::array<int, 3>, 6> kPerms = {{
    {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1},
}};

/// In-process caches for the closed-form totals. For admissible (small)
/// weight systems the closed forms depend only on (g, n, degree residue),
/// so keying on those is exact, and the cross-checked totals get reused
/// across the two degree residues and across repeated queries.
std::mutex g_memo_mutex;
std::map<std::tuple<long, long, long>, LaurentPoly> g_memo_extract111;
std::map<std::tuple<long, long, long, int, int>, LaurentPoly> g_memo_pair;
std::map<std::tuple<long, long, int>, LaurentPoly> g_memo_total;

template <typename Map, typename Key>
bool memo_find(const Map& m, const Key& k, LaurentPoly& out) {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = m.find(k);
    if (it == m.end()) return false;
    out = it->second;
    return true;
}

template <typename Map, typename Key>
void memo_store(Map& m, const Key& k, const LaurentPoly& v) {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    m.emplace(k, v);
}

void check_final(const LaurentPoly& p, const char* what) {
    if (!p.is_zero() && p.min_exp() < 0)
        throw ExactnessError(std::string(what) +
                             ": negative powers of t failed to cancel");
}

}  // namespace

HiggsParams::HiggsParams(long genus, long points, long total_degree, WeightSystem w)
    : g(genus), n(points), degree(total_degree), weights(std::move(w)) {
    if (g < 0) throw ValidationError("genus must be nonnegative");
    if (n < 1) throw ValidationError("at least one marked point is required");
    if (((degree % 3) + 3) % 3 == 0)
        throw ValidationError(
            "total degree must be nonzero modulo 3; coprimality of degree and "
            "rank is what makes stable = semistable and the moduli space smooth");
    if (weights.kind() != WeightSystem::Kind::FullFlag)
        throw ValidationError("rank-3 moduli take a full-flag weight system");
    if (weights.points() != n)
        throw ValidationError("weight system carries " +
                              std::to_string(weights.points()) +
                              " points, expected " + std::to_string(n));
    if (!weights.is_small())
        throw ValidationError(
            "weights must be small (every weight below 1/(12 n)): the "
            "closed-form totals are specific to the small-weight chamber");
}

HiggsParams HiggsParams::with_default_weights(long genus, long points,
                                              long total_degree) {
    return HiggsParams(genus, points, total_degree,
                       WeightSystem::default_full_flag(points));
}

long HiggsParams::delta0() const { return ((degree % 3) + 3) % 3; }

long moduli_dim(long r, long g, long n) {
    return r * r * (2 * g - 2) + 2 + n * (r * r - r);
}

long morse_index(const std::vector<GradedPiece>& pieces,
                 const HiggsParams& params) {
    const long g = params.g;
    const long n = params.n;
    if (pieces.empty()) throw ValidationError("at least one piece is required");
    long total_rank = 0, total_degree = 0;
    for (const auto& pc : pieces) {
        if (pc.rank < 1 || pc.rank > 3)
            throw ValidationError("piece ranks must lie in {1, 2, 3}");
        if (static_cast<long>(pc.owned.size()) != n)
            throw ValidationError("each piece must list its weights at every point");
        for (const auto& ws : pc.owned)
            if (static_cast<long>(ws.size()) != pc.rank)
                throw ValidationError(
                    "a piece of rank r carries exactly r weights at each point");
        total_rank += pc.rank;
        total_degree += pc.degree;
    }
    if (total_rank != 3)
        throw ValidationError("pieces must have total rank 3");
    if (total_degree != params.degree)
        throw ValidationError("pieces must have total degree " +
                              std::to_string(params.degree));
    // The pieces' weights at each point must partition the full flag there.
    for (long p = 0; p < n; ++p) {
        std::vector<Rat> seen;
        for (const auto& pc : pieces)
            for (const auto& w : pc.owned[static_cast<size_t>(p)]) seen.push_back(w);
        std::sort(seen.begin(), seen.end());
        const std::vector<Rat> flag = {params.weights.flag(1, p),
                                       params.weights.flag(2, p),
                                       params.weights.flag(3, p)};
        if (seen != flag)
            throw ValidationError(
                "piece weights at a point do not partition the full flag");
    }

    // Real dimension of the downward flow:
    //   rank^2 (2g-2)  +  2 * (flag dimension at each point)
    //   + for each piece, twice its endomorphism-bundle correction
    //   + for each adjacent pair, twice the hom-bundle correction between
    //     consecutive pieces (the directions the Higgs field rules out).
    long lambda = 9 * (2 * g - 2) + 2 * (3 * n);
    for (const auto& pc : pieces) {
        // Pairs of weights (i, j) owned by the piece with w_i <= w_j; the
        // weights at a point are pairwise distinct, so this is r(r+1)/2.
        const long par_dim = n * pc.rank * (pc.rank + 1) / 2;
        lambda += 2 * ((1 - g - n) * pc.rank * pc.rank + par_dim);
    }
    for (size_t l = 0; l + 1 < pieces.size(); ++l) {
        const auto& a = pieces[l];
        const auto& b = pieces[l + 1];
        long strict_pairs = 0;
        for (long p = 0; p < n; ++p)
            for (const auto& wi : a.owned[static_cast<size_t>(p)])
                for (const auto& wj : b.owned[static_cast<size_t>(p)])
                    if (wi < wj) ++strict_pairs;
        lambda += 2 * ((1 - g) * a.rank * b.rank - a.rank * b.degree +
                       b.rank * a.degree - strict_pairs);
    }
    return lambda;
}

// ---------------------------------------------------------------------------
// Fully split strata: three line bundles chained by the Higgs field.
// ---------------------------------------------------------------------------

std::vector<StratumRecord> enumerate_111(const HiggsParams& params) {
    const long g = params.g, n = params.n, Delta = params.degree;
    std::vector<StratumRecord> out;
    std::vector<int> pi(static_cast<size_t>(n), 0);
    for (;;) {
        // Weight bookkeeping for this assignment of flag weights to pieces.
        long s1 = 0, s2 = 0;
        Rat F = 0, G = 0;
        for (long p = 0; p < n; ++p) {
            const auto& perm = kPerms[static_cast<size_t>(pi[static_cast<size_t>(p)])];
            const Rat& w1 = params.weights.flag(perm[0], p);
            const Rat& w2 = params.weights.flag(perm[1], p);
            const Rat& w3 = params.weights.flag(perm[2], p);
            if (w1 > w2) ++s1;
            if (w2 > w3) ++s2;
            const Rat all = params.weights.flag(1, p) + params.weights.flag(2, p) +
                            params.weights.flag(3, p);
            F += all - 3 * w3;
            G += 2 * all - 3 * w2 - 3 * w3;
        }
        const long c1 = n - s1 + 2 * g - 2;
        const long c2 = n - s2 + 2 * g - 2;

        // Stability bounds the degree d1 of the top line piece from below
        // and the divisor degrees m1, m2 >= 0 bound everything else.
        const long d1_lo = floor_of((Rat(Delta) - G) / 3) + 1;
        const long d1_hi = floor_of(Rat(Delta + 2 * c1 + c2) / 3);
        for (long d1 = d1_lo; d1 <= d1_hi; ++d1) {
            const long m_lo =
                std::max(floor_of((2 * Rat(Delta) - F) / 3) + 1, 2 * d1 - c1);
            const long m_hi = floor_of(Rat(Delta + d1 + c2) / 2);
            for (long m = m_lo; m <= m_hi; ++m) {
                StratumRecord r;
                r.type = HNType::t111;
                r.d1 = d1;
                r.m = m;
                r.assign.reserve(static_cast<size_t>(n));
                for (long p = 0; p < n; ++p) {
                    const auto& perm =
                        kPerms[static_cast<size_t>(pi[static_cast<size_t>(p)])];
                    r.assign.push_back({perm[0], perm[1], perm[2]});
                }
                r.s1 = s1;
                r.s2 = s2;
                r.F = F;
                r.G = G;
                r.m1 = m - 2 * d1 + c1;
                r.m2 = Delta - 2 * m + d1 + c2;
                r.index = 2 * (4 * g - 4 + n + s1 + s2 - Delta + d1 + m);
                r.poincare = jac_poincare(g) * sym_poincare(g, r.m1) *
                             sym_poincare(g, r.m2);
                out.push_back(std::move(r));
            }
        }
        size_t p = 0;
        while (p < pi.size() && ++pi[p] == 6) {
            pi[p] = 0;
            ++p;
        }
        if (p == pi.size()) break;
    }
    return out;
}

namespace {

/// Two-variable residue extraction shared by the varying-determinant total
/// and the invariant part of the fixed-determinant total for the fully
/// split strata (they differ by one Jacobian factor, applied by the caller).
LaurentPoly extract_111(long g, long n, long delta0, long pad) {
    const auto key = std::make_tuple(g, n, delta0);
    LaurentPoly cached;
    if (pad == 0 && memo_find(g_memo_extract111, key, cached)) return cached;

    const long Eu = 3 * n + 6 * g - 9 + delta0;
    const long Ev = 3 * n + 6 * g - 6 - delta0;
    LaurentPoly res;
    if (Eu >= 0 && Ev >= 0) {
        // Truncation policy: extraction target plus the largest auxiliary
        // degree the polynomial numerator factors can contribute, plus any
        // caller-requested padding (a robustness probe: the result must be
        // independent of the window size).
        const AuxSeries::Exps bounds{Eu + 3 * n + 6 * g + pad,
                                     Ev + 3 * n + 6 * g + pad};
        const LaurentPoly t = LaurentPoly::monomial(1, 1);
        const LaurentPoly t2 = LaurentPoly::monomial(1, 2);
        auto mono = [&](LaurentPoly c, long eu, long ev) {
            return AuxSeries::monomial(2, bounds, std::move(c), {eu, ev});
        };
        const AuxSeries one = AuxSeries::one(2, bounds);

        AuxSeries s = (one + mono(LaurentPoly::monomial(2, 2), 2, 1) +
                       mono(LaurentPoly::monomial(2, 2), 1, 2) +
                       mono(LaurentPoly::monomial(1, 4), 3, 3))
                          .pow(static_cast<unsigned long>(n));
        s *= (one + mono(t, 2, 1)).pow(static_cast<unsigned long>(2 * g));
        s *= (one + mono(t, 1, 2)).pow(static_cast<unsigned long>(2 * g));
        s *= geom_expand(2, bounds, LaurentPoly::one(), {2, 1});
        s *= geom_expand(2, bounds, LaurentPoly::one(), {1, 2});
        s *= geom_expand(2, bounds, t2, {2, 1});
        s *= geom_expand(2, bounds, t2, {1, 2});
        s *= geom_expand(2, bounds, t2, {0, 3});
        s *= geom_expand(2, bounds, t2, {3, 0});
        res = s.coeff_at({Eu, Ev}).shifted(2 * (4 * g - 3 + n));
    }
    if (pad == 0) memo_store(g_memo_extract111, key, res);
    return res;
}

}  // namespace

LaurentPoly contribution_111(const HiggsParams& params, Mode111 mode,
                             long bound_padding) {
    const long g = params.g, n = params.n;
    LaurentPoly res;
    switch (mode) {
        case Mode111::nonfixed:
            res = extract_111(g, n, params.delta0(), bound_padding) *
                  jac_poincare(g);
            break;
        case Mode111::fixed_invariant:
            res = extract_111(g, n, params.delta0(), bound_padding);
            break;
        case Mode111::fixed_variant: {
            if (g == 0) return {};  // no 3-torsion beyond the trivial bundle
            const Int count = 2 * ipow(6, n - 1) * (ipow(3, 2 * g) - 1);
            res = (LaurentPoly::monomial(count, 12 * g - 12 + 6 * n) *
                   one_plus_t_pow(4 * g - 4));
            break;
        }
    }
    check_final(res, "fully split stratum total");
    return res;
}

LaurentPoly stratum_sum_111(const HiggsParams& params, Mode111 mode) {
    const long g = params.g, n = params.n;
    const Int variant_dim = g >= 1 ? ipow(3, 2 * g) - 1 : Int(0);
    LaurentPoly total;
    for (const auto& r : enumerate_111(params)) {
        if (mode == Mode111::nonfixed) {
            total += r.poincare.shifted(r.index);
            continue;
        }
        // Fixing the determinant pins down the third line bundle; the
        // stratum survives exactly when that equation is solvable.
        const long residue =
            (((r.m1 + 2 * r.m2 + params.degree + r.s1 + 2 * r.s2) % 3) + 3) % 3;
        if (residue != 0) continue;
        if (mode == Mode111::fixed_invariant) {
            total +=
                (sym_poincare(g, r.m1) * sym_poincare(g, r.m2)).shifted(r.index);
        } else {
            if (g == 0) continue;
            const Int dim =
                variant_dim * binomial(2 * g - 2, r.m1) * binomial(2 * g - 2, r.m2);
            total += LaurentPoly::monomial(dim, 16 * g - 16 + 6 * n - r.m1 - r.m2);
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Line + rank-2 strata: closed forms.
// ---------------------------------------------------------------------------

namespace {

/// One-variable residue extraction shared by the two line+rank-2 families;
/// they use the same integrand shapes and differ only in the extraction
/// exponent and the pure-t shift of the subtracted term.
LaurentPoly extract_pair(long g, long n, long Ex, long second_shift, Det det,
                         long pad) {
    if (Ex < 0) return {};
    const AuxSeries::Exps bounds{Ex + n + 2 * g + pad, 0};
    const LaurentPoly t = LaurentPoly::monomial(1, 1);
    auto mono = [&](LaurentPoly c, long e) {
        return AuxSeries::monomial(1, bounds, std::move(c), {e, 0});
    };
    const AuxSeries one = AuxSeries::one(1, bounds);
    const AuxSeries common =
        (one + mono(t, 1)).pow(static_cast<unsigned long>(2 * g)) *
        geom_expand(1, bounds, LaurentPoly::one(), {1, 0}) *
        geom_expand(1, bounds, LaurentPoly::monomial(1, 2), {1, 0});

    AuxSeries first_s =
        common *
        (mono(LaurentPoly::from_terms({{0, 1}, {2, 2}}), 0) +
         mono(LaurentPoly::from_terms({{2, 2}, {4, 1}}), 1))
            .pow(static_cast<unsigned long>(n)) *
        geom_expand(1, bounds, LaurentPoly::monomial(1, -2), {1, 0}) *
        geom_expand(1, bounds, LaurentPoly::monomial(1, 2), {2, 0});
    const LaurentPoly first =
        first_s.coeff_at({Ex, 0}).shifted(8 * g - 8 + 2 * n);

    AuxSeries second_s =
        common *
        (mono(LaurentPoly::from_terms({{0, 1}, {2, 2}}), 0) +
         mono(LaurentPoly::from_terms({{4, 2}, {6, 1}}), 1))
            .pow(static_cast<unsigned long>(n)) *
        geom_expand(1, bounds, LaurentPoly::monomial(1, 4), {1, 0}) *
        geom_expand(1, bounds, LaurentPoly::monomial(1, 8), {2, 0});
    const LaurentPoly second = second_s.coeff_at({Ex, 0}).shifted(second_shift);

    const LaurentPoly jac_factor =
        det == Det::varying ? one_plus_t_pow(4 * g) : one_plus_t_pow(2 * g);
    return ((first - second) * jac_factor).divide_exact(one_minus_t2());
}

LaurentPoly contribution_pair(const HiggsParams& params, HNType which, Det det,
                              long pad) {
    const long g = params.g, n = params.n, delta0 = params.delta0();
    const auto key = std::make_tuple(g, n, delta0, which == HNType::t12 ? 0 : 1,
                                     det == Det::varying ? 0 : 1);
    LaurentPoly cached;
    if (pad == 0 && memo_find(g_memo_pair, key, cached)) return cached;

    LaurentPoly res;
    if (which == HNType::t12)
        res = extract_pair(g, n, n + 2 * g - 5 + delta0, 6 * g + 6 - 4 * delta0,
                           det, pad);
    else
        res = extract_pair(g, n, n + 2 * g - 2 - delta0, 6 * g - 6 + 4 * delta0,
                           det, pad);
    check_final(res, "line+rank-2 stratum total");
    if (pad == 0) memo_store(g_memo_pair, key, res);
    return res;
}

}  // namespace

LaurentPoly contribution_12(const HiggsParams& params, Det det,
                            long bound_padding) {
    return contribution_pair(params, HNType::t12, det, bound_padding);
}

LaurentPoly contribution_21(const HiggsParams& params, Det det,
                            long bound_padding) {
    return contribution_pair(params, HNType::t21, det, bound_padding);
}

// ---------------------------------------------------------------------------
// Line + rank-2 strata: stratum-by-stratum oracle.
// ---------------------------------------------------------------------------

std::vector<StratumRecord> enumerate_type12(const HiggsParams& params,
                                            HNType which) {
    if (which != HNType::t12 && which != HNType::t21)
        throw ValidationError(
            "stratum enumeration by chained pairs covers only the (1,2) and "
            "(2,1) families");
    const long g = params.g, n = params.n, Delta = params.degree;
    const Rat sigma = Rat(2 * g - 2);
    std::vector<StratumRecord> out;

    std::vector<int> pick(static_cast<size_t>(n), 1);
    for (;;) {
        // Split each point's flag into the line's weight and the rank-2
        // pair, in increasing order.
        std::vector<std::array<Rat, 3>> w(static_cast<size_t>(n));
        std::vector<std::array<Rat, 3>> dual(static_cast<size_t>(n));
        Rat sum_alpha = 0, sum_beta = 0;
        long s0 = 0;
        for (long p = 0; p < n; ++p) {
            const int k = pick[static_cast<size_t>(p)];
            const auto& flags = params.weights.at(p);
            const Rat alpha = flags[static_cast<size_t>(k - 1)];
            const Rat b1 = k == 1 ? flags[1] : flags[0];
            const Rat b2 = k == 3 ? flags[1] : flags[2];
            w[static_cast<size_t>(p)] = {alpha, b1, b2};
            dual[static_cast<size_t>(p)] = {1 - alpha, 1 - b2, 1 - b1};
            sum_alpha += alpha;
            sum_beta += b1 + b2;
            if (which == HNType::t12)
                s0 += (b1 > alpha ? 1 : 0) + (b2 > alpha ? 1 : 0);
            else
                s0 += (b1 < alpha ? 1 : 0) + (b2 < alpha ? 1 : 0);
        }

        // Stability of the decomposed Higgs bundle bounds the chained-pair
        // degree d1 from above.
        const Rat d1_bound =
            which == HNType::t12
                ? (Rat(12 * g - 12 + 2 * Delta) - sum_beta + 2 * sum_alpha) / 3
                : (Rat(Delta + 6 * g - 6) - 2 * sum_alpha + sum_beta) / 3;
        const long d1_max = largest_below(d1_bound);

        const WeightSystem spec_w = which == HNType::t12
                                        ? WeightSystem::line_pair(w)
                                        : WeightSystem::line_pair(dual);
        for (long d1 = d1_max;; --d1) {
            const long d2 = which == HNType::t12 ? Delta + 4 * g - 4 - d1
                                                 : Delta + 2 * g - 2 - d1;
            // The (2,1) family is evaluated through its dual chained pair:
            // complemented weights, reflected degrees.
            const TripleSpec spec =
                which == HNType::t12
                    ? TripleSpec{g, spec_w, d1, d2}
                    : TripleSpec{g, spec_w, -2 * n - d2, -n - d1};

            // Descend until no destabilizing wall sits above the evaluation
            // parameter; the top wall moves strictly down with d1, so every
            // lower d1 gives an empty stratum too.
            bool wall_above = false;
            for (const auto& wr : wall_records(spec))
                if (wr.sigma_c > sigma) {
                    wall_above = true;
                    break;
                }
            if (!wall_above) break;

            LaurentPoly P = triples_poincare(spec, sigma, Det::varying);
            if (P.is_zero()) continue;

            StratumRecord r;
            r.type = which;
            r.d1 = d1;
            r.assign.reserve(static_cast<size_t>(n));
            for (long p = 0; p < n; ++p)
                r.assign.push_back({pick[static_cast<size_t>(p)]});
            r.s0 = s0;
            r.index = which == HNType::t12
                          ? 12 * g - 12 + 4 * n - 2 * d1 + 4 * d2 - 2 * s0
                          : 12 * g - 12 + 4 * n - 4 * d1 + 2 * d2 - 2 * s0;
            r.poincare = std::move(P);
            out.push_back(std::move(r));
        }

        size_t p = 0;
        while (p < pick.size() && ++pick[p] == 4) {
            pick[p] = 1;
            ++p;
        }
        if (p == pick.size()) break;
    }
    return out;
}

LaurentPoly stratum_sum_type12(const HiggsParams& params, HNType which,
                               Det det) {
    const long g = params.g;
    LaurentPoly total;
    for (const auto& r : enumerate_type12(params, which)) {
        // A chained pair with the rank-2 determinant pinned loses one
        // Jacobian factor relative to the varying-determinant space.
        const LaurentPoly piece = det == Det::varying
                                      ? r.poincare
                                      : r.poincare.divide_exact(jac_poincare(g));
        total += piece.shifted(r.index);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Stable bundles (vanishing Higgs field).
// ---------------------------------------------------------------------------

LaurentPoly bundles3_poincare(const HiggsParams& params, Det det) {
    const long g = params.g, n = params.n;
    const LaurentPoly c1 = one_plus_t_pow(1);
    const LaurentPoly c2 = LaurentPoly::from_terms({{0, 1}, {2, 1}});
    const LaurentPoly c3 = LaurentPoly::from_terms({{0, 1}, {3, 1}});
    const LaurentPoly c5 = LaurentPoly::from_terms({{0, 1}, {5, 1}});
    const LaurentPoly full_pt =
        LaurentPoly::from_terms({{0, 1}, {2, 2}, {4, 2}, {6, 1}});
    const LaurentPoly three_pt = LaurentPoly::from_terms({{0, 1}, {2, 1}, {4, 1}});

    const unsigned long twog = static_cast<unsigned long>(2 * g);
    const LaurentPoly num = c3.pow(twog) * c5.pow(twog) +
                            (c1.pow(2 * twog) * three_pt).shifted(6 * g - 2) -
                            (c1.pow(twog) * c3.pow(twog) * c2 * c2).shifted(4 * g - 2);
    const LaurentPoly den =
        one_minus_t2().pow(3) * LaurentPoly::from_terms({{0, 1}, {4, -1}});

    LaurentPoly res = (c1.pow(twog) *
                       full_pt.pow(static_cast<unsigned long>(n - 1)) * num)
                          .divide_exact(den);
    if (det == Det::fixed) res = res.divide_exact(jac_poincare(g));
    check_final(res, "stable-bundle stratum total");
    return res;
}

LaurentPoly bundles3_assembled(const HiggsParams& params, Det det) {
    const long g = params.g, n = params.n, Delta = params.degree;
    const unsigned long twog = static_cast<unsigned long>(2 * g);
    const unsigned long nm1 = static_cast<unsigned long>(n - 1);
    const LaurentPoly c1 = one_plus_t_pow(1);
    const LaurentPoly c2 = LaurentPoly::from_terms({{0, 1}, {2, 1}});
    const LaurentPoly c3 = LaurentPoly::from_terms({{0, 1}, {3, 1}});
    const LaurentPoly c5 = LaurentPoly::from_terms({{0, 1}, {5, 1}});

    // Per-point intersection tables: each admissible pattern of flag lines
    // hit by the destabilizing subbundle contributes t^(2 * codimension).
    LaurentPoly pair_pt, lines_pt;
    for (const int e : {0, 1, 2}) pair_pt += LaurentPoly::monomial(1, 2 * e);
    for (const int e : {0, 1, 1, 2, 2, 3}) lines_pt += LaurentPoly::monomial(1, 2 * e);

    // Filtration-free totals of the two lower ranks and the rank-3 sum over
    // all (not necessarily stable) bundles.
    const RatFunc P1(jac_poincare(g), one_minus_t2());
    const RatFunc P2(c2.pow(nm1) * c1.pow(twog) * c3.pow(twog),
                     one_minus_t2().pow(3));
    const RatFunc P3(lines_pt.pow(nm1) * c1.pow(twog) * c3.pow(twog) * c5.pow(twog),
                     one_minus_t2().pow(4) * LaurentPoly::from_terms({{0, 1}, {4, -1}}));

    // Slope-of-subbundle exponents for the two filtration shapes with a
    // rank-1 + rank-2 split, and the fully split shape.
    const long e12 = 3 * floor_of(Rat(Delta) / 3) - Delta + 2 * g + 1;
    const long e21 = 3 * floor_of(Rat(2 * Delta) / 3) - 2 * Delta + 2 * g + 1;

    const RatFunc t6m1(LaurentPoly::from_terms({{6, 1}, {0, -1}}));
    const RatFunc t4m1(LaurentPoly::from_terms({{4, 1}, {0, -1}}));
    const RatFunc shape12(LaurentPoly::monomial(1, 2 * e12) +
                          LaurentPoly::monomial(1, 2 * e21));

    RatFunc sum = P3;
    sum += RatFunc(pair_pt.pow(static_cast<unsigned long>(n))) * shape12 / t6m1 *
           P1 * P2;
    sum += RatFunc(lines_pt.pow(static_cast<unsigned long>(n)) *
                   LaurentPoly::monomial(1, 2 * (3 * g - 1))) /
           (t4m1 * t4m1) * P1 * P1 * P1;

    LaurentPoly res = (RatFunc(one_minus_t2()) * sum).to_laurent();
    if (det == Det::fixed) res = res.divide_exact(jac_poincare(g));
    check_final(res, "assembled stable-bundle total");
    return res;
}

// ---------------------------------------------------------------------------
// Full moduli space.
// ---------------------------------------------------------------------------

namespace {

LaurentPoly total_one_degree(const HiggsParams& params, Det det, long pad) {
    if (det == Det::varying)
        return contribution_111(params, Mode111::nonfixed, pad) +
               contribution_12(params, Det::varying, pad) +
               contribution_21(params, Det::varying, pad) +
               bundles3_poincare(params, Det::varying);
    return contribution_111(params, Mode111::fixed_invariant, pad) +
           contribution_111(params, Mode111::fixed_variant, pad) +
           contribution_12(params, Det::fixed, pad) +
           contribution_21(params, Det::fixed, pad) +
           bundles3_poincare(params, Det::fixed);
}

}  // namespace

LaurentPoly higgs3_total(const HiggsParams& params, Det det,
                         long bound_padding) {
    const auto key =
        std::make_tuple(params.g, params.n, det == Det::varying ? 0 : 1);
    LaurentPoly cached;
    if (bound_padding == 0 && memo_find(g_memo_total, key, cached))
        return cached;

    // The answer must not depend on which nonzero residue the degree has
    // modulo 3; computing both ways makes every run self-checking.
    const LaurentPoly res = total_one_degree(params, det, bound_padding);
    const long alt_degree =
        params.delta0() == 1 ? params.degree + 1 : params.degree - 1;
    const HiggsParams alt(params.g, params.n, alt_degree, params.weights);
    const LaurentPoly other = total_one_degree(alt, det, bound_padding);
    if (res != other)
        throw VerificationError(
            "total Poincaré polynomial differs between the two degree "
            "residues: " +
            res.to_string() + " vs " + other.to_string());
    check_final(res, "total Poincaré polynomial");
    if (bound_padding == 0) memo_store(g_memo_total, key, res);
    return res;
}

}  // namespace parhiggs
