#include "parhiggs/triples.hpp"

#include <algorithm>
#include <string>

#include "parhiggs/aux_series.hpp"
#include "parhiggs/errors.hpp"
#include "parhiggs/symcurve.hpp"

namespace parhiggs {

namespace {

void check_spec(const TripleSpec& spec) {
    if (spec.g < 0) throw ValidationError("negative genus");
    if (spec.weights.kind() != WeightSystem::Kind::LinePlusPair)
        throw ValidationError("triples need a line-plus-pair weight system");
}

/// Per-eps combinatorial data entering every wall and chamber formula.
struct EpsData {
    long s1 = 0, s2 = 0, s3 = 0;
    Rat wsum; // sum over points of (alpha + beta_{3-eps} - 2 beta_eps)
};

EpsData eps_data(const TripleSpec& spec, const std::vector<int>& eps) {
    const long n = spec.points();
    if (static_cast<long>(eps.size()) != n)
        throw ValidationError("eps must assign 1 or 2 to every marked point");
    EpsData d;
    for (long p = 0; p < n; ++p) {
        if (eps[static_cast<size_t>(p)] != 1 && eps[static_cast<size_t>(p)] != 2)
            throw ValidationError("eps entries must be 1 or 2");
        const bool eps2 = eps[static_cast<size_t>(p)] == 2;
        const Rat& a = spec.weights.alpha(p);
        const Rat& be = eps2 ? spec.weights.beta2(p) : spec.weights.beta1(p);
        const Rat& bs = eps2 ? spec.weights.beta1(p) : spec.weights.beta2(p);
        if (a < bs) ++d.s1;
        if (a < be) ++d.s2;
        if (be < bs) ++d.s3;
        d.wsum += a + bs - 2 * be;
    }
    return d;
}

Rat sigma_critical(const TripleSpec& spec, long d_M, const EpsData& e) {
    // 3 d_M - d1 - d2 + sum_p (2 beta_eps - alpha - beta_{3-eps})
    return Rat(3 * d_M - spec.d1 - spec.d2) - e.wsum;
}

std::vector<std::vector<int>> all_eps(long n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(n), 1);
    while (true) {
        out.push_back(cur);
        size_t k = 0;
        for (; k < cur.size(); ++k) {
            if (cur[k] == 1) {
                cur[k] = 2;
                break;
            }
            cur[k] = 1;
        }
        if (k == cur.size()) break;
    }
    return out;
}

WallRecord make_wall(const TripleSpec& spec, long d_M, const std::vector<int>& eps,
                     const EpsData& e) {
    WallRecord w;
    w.d_M = d_M;
    w.eps = eps;
    w.sigma_c = sigma_critical(spec, d_M, e);
    w.s1 = e.s1;
    w.s2 = e.s2;
    w.s3 = e.s3;
    w.N = spec.d1 - spec.d2 - d_M + e.s1;
    w.w_plus = spec.d1 - spec.d2 - d_M + e.s2 + e.s3;
    w.w_minus = 2 * d_M - spec.d1 + spec.g - 1 + spec.points() - e.s3;
    w.delta = (proj_poincare(w.w_minus) - proj_poincare(w.w_plus)) *
              jac_poincare(spec.g).pow(2) * sym_poincare(spec.g, w.N);
    return w;
}

} // namespace

std::pair<Rat, Rat> sigma_range(const TripleSpec& spec) {
    check_spec(spec);
    Rat beta_sum = 0, alpha_sum = 0;
    for (long p = 0; p < spec.points(); ++p) {
        beta_sum += spec.weights.beta1(p) + spec.weights.beta2(p);
        alpha_sum += spec.weights.alpha(p);
    }
    const Rat mu1 = (Rat(spec.d1) + beta_sum) / 2;
    const Rat mu2 = Rat(spec.d2) + alpha_sum;
    const Rat sigma_m = mu1 - mu2;
    return {sigma_m, 4 * sigma_m + Rat(3 * spec.points())};
}

std::vector<WallRecord> wall_records(const TripleSpec& spec) {
    check_spec(spec);
    const Rat sigma_m = sigma_range(spec).first;
    std::vector<WallRecord> walls;
    for (const auto& eps : all_eps(spec.points())) {
        const EpsData e = eps_data(spec, eps);
        // Genuine walls: N >= 0 bounds d_M above; sigma_c > sigma_m bounds
        // it below (sigma_c increases by 3 per unit of d_M).
        const long d_hi = spec.d1 - spec.d2 + e.s1;
        const Rat lower = (sigma_m + Rat(spec.d1 + spec.d2) + e.wsum) / 3;
        const long d_lo = static_cast<long>(rat_floor(lower)) + 1;
        for (long d_M = d_lo; d_M <= d_hi; ++d_M) {
            const WallRecord w = make_wall(spec, d_M, eps, e);
            if (w.sigma_c > sigma_m) walls.push_back(w);
        }
    }
    std::sort(walls.begin(), walls.end(), [](const WallRecord& a, const WallRecord& b) {
        if (a.sigma_c != b.sigma_c) return a.sigma_c < b.sigma_c;
        if (a.d_M != b.d_M) return a.d_M < b.d_M;
        return a.eps < b.eps;
    });
    return walls;
}

std::vector<Rat> critical_values(const TripleSpec& spec) {
    check_spec(spec);
    const Rat sigma_m = sigma_range(spec).first;
    // A wall exactly at sigma_m is a degeneracy the chamber presentation
    // cannot absorb; detect it before the strictly-above enumeration.
    for (const auto& eps : all_eps(spec.points())) {
        const EpsData e = eps_data(spec, eps);
        const Rat at_m = (sigma_m + Rat(spec.d1 + spec.d2) + e.wsum) / 3;
        if (denominator(at_m) == 1) {
            const long d_M = static_cast<long>(numerator(at_m));
            if (spec.d1 - spec.d2 - d_M + e.s1 >= 0)
                throw ValidationError(
                    "weight degeneracy: a wall coincides with the lower stability "
                    "threshold");
        }
    }
    std::vector<Rat> values;
    for (const auto& w : wall_records(spec)) values.push_back(w.sigma_c);
    for (size_t i = 1; i < values.size(); ++i)
        if (values[i] == values[i - 1])
            throw ValidationError(
                "weight degeneracy: two distinct walls share the critical value " +
                rat_to_string(values[i]));
    return values;
}

WallRecord flip_data(const TripleSpec& spec, long d_M, const std::vector<int>& eps) {
    check_spec(spec);
    const EpsData e = eps_data(spec, eps);
    const WallRecord w = make_wall(spec, d_M, eps, e);
    if (w.N < 0)
        throw ValidationError("(d_M, eps) is not a genuine wall: negative symmetric degree");
    if (!(w.sigma_c > sigma_range(spec).first))
        throw ValidationError("(d_M, eps) is not a genuine wall: critical value at or "
                              "below the stability threshold");
    return w;
}

LaurentPoly wall_jump(const TripleSpec& spec, const WallRecord& wall, Det det) {
    if (det == Det::varying) return wall.delta;
    // Fixing the determinant of the rank-2 bundle removes one Jacobian
    // factor from the wall base; the jump divides exactly.
    return wall.delta.divide_exact(jac_poincare(spec.g));
}

namespace {

/// Shared sigma validation: returns true when the caller should just
/// return 0 (empty moduli), throws at sigma_min and at critical values.
bool sigma_trivial(const TripleSpec& spec, const Rat& sigma) {
    const Rat sigma_m = sigma_range(spec).first;
    if (sigma < sigma_m) return true;
    if (sigma == sigma_m)
        throw ValidationError(
            "sigma equals the lower stability threshold; the moduli space is not "
            "defined there");
    for (const auto& w : wall_records(spec))
        if (w.sigma_c == sigma)
            throw ValidationError("sigma = " + rat_to_string(sigma) +
                                  " is a critical value; evaluate inside a chamber");
    return false;
}

} // namespace

LaurentPoly triples_poincare(const TripleSpec& spec, const Rat& sigma, Det det) {
    check_spec(spec);
    if (sigma_trivial(spec, sigma)) return {};
    const long g = spec.g;
    const long n = spec.points();
    const LaurentPoly one_minus_t2 = LaurentPoly::from_terms({{0, 1}, {2, -1}});
    const LaurentPoly jac_factor =
        det == Det::varying ? jac_poincare(g).pow(2) : jac_poincare(g);

    // Accumulate the raw extraction differences across all descent patterns
    // first; only the full sum is guaranteed divisible by 1 - t^2 (each
    // single pattern generally is not).
    LaurentPoly raw;
    for (const auto& eps : all_eps(n)) {
        const EpsData e = eps_data(spec, eps);
        // Smallest d_M whose wall lies strictly above sigma; every
        // destabilizing type with d_M at least this value contributes.
        const long dbar =
            static_cast<long>(rat_floor((Rat(spec.d1 + spec.d2) + e.wsum + sigma) / 3)) + 1;
        const long target = spec.d1 - spec.d2 + e.s1 - dbar;
        if (target < 0) continue; // no walls above sigma for this eps
        const AuxSeries::Exps bounds{target + 2 * g, 0};
        const LaurentPoly t = LaurentPoly::monomial(1, 1);
        const AuxSeries common =
            (AuxSeries::one(1, bounds) + AuxSeries::monomial(1, bounds, t, {1, 0}))
                .pow(static_cast<unsigned long>(2 * g)) *
            geom_expand(1, bounds, LaurentPoly::one(), {1, 0}) *
            geom_expand(1, bounds, LaurentPoly::monomial(1, 2), {1, 0});
        const LaurentPoly first =
            (common * geom_expand(1, bounds, LaurentPoly::monomial(1, -2), {1, 0}))
                .coeff_at({target, 0})
                .shifted(2 * spec.d1 - 2 * spec.d2 + 2 * e.s2 + 2 * e.s3 - 2 * dbar);
        const LaurentPoly second =
            (common * geom_expand(1, bounds, LaurentPoly::monomial(1, 4), {1, 0}))
                .coeff_at({target, 0})
                .shifted(-2 * spec.d1 + 2 * g - 2 + 2 * n - 2 * e.s3 + 4 * dbar);
        raw += first - second;
    }
    const LaurentPoly total = raw.divide_exact(one_minus_t2) * jac_factor;
    if (!total.is_zero() && total.min_exp() < 0)
        throw ExactnessError("chamber polynomial acquired negative exponents");
    return total;
}

LaurentPoly triples_poincare_wallsum(const TripleSpec& spec, const Rat& sigma, Det det) {
    check_spec(spec);
    if (sigma_trivial(spec, sigma)) return {};
    LaurentPoly total;
    for (const auto& w : wall_records(spec))
        if (w.sigma_c > sigma) total += wall_jump(spec, w, det);
    return total;
}

long triples_dim(const TripleSpec& spec) {
    const auto walls = wall_records(spec);
    if (walls.empty())
        throw ValidationError(
            "no walls: the moduli space is empty in every chamber, so its "
            "dimension is undefined");
    const long dim = walls.front().w_plus + walls.front().w_minus + 2 * spec.g +
                     walls.front().N - 1;
    for (const auto& w : walls)
        if (w.w_plus + w.w_minus + 2 * spec.g + w.N - 1 != dim)
            throw VerificationError("wall data disagree on the moduli dimension");
    return dim;
}

} // namespace parhiggs
