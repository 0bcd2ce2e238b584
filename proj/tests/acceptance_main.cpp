// Acceptance gate for the library: each numbered criterion prints one
// PASS/FAIL line (with indented evidence), and the process exits with the
// number of failed criteria.  Expected values are frozen from independent
// derivations; nothing here is adjusted to match the code under test.

#include <algorithm>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "parhiggs/errors.hpp"
#include "parhiggs/hauselcheck.hpp"
#include "parhiggs/higgs3.hpp"
#include "parhiggs/laurent.hpp"
#include "parhiggs/symcurve.hpp"
#include "parhiggs/triples.hpp"

using namespace parhiggs;

namespace {

int failures = 0;

void verdict(int number, const std::string& name, bool ok) {
    std::cout << "CRITERION " << number << " [" << name
              << "]: " << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok) ++failures;
}

LaurentPoly from_ascending(const std::vector<long>& coeffs) {
    LaurentPoly p;
    for (size_t e = 0; e < coeffs.size(); ++e)
        p += LaurentPoly::monomial(Int(coeffs[e]), static_cast<long>(e));
    return p;
}

LaurentPoly total(long g, long n, Det det, long pad = 0) {
    return higgs3_total(HiggsParams::with_default_weights(g, n, 1), det, pad);
}

const std::vector<long> kTotal_0_3 = {1, 0, 7};
const std::vector<long> kTotal_0_4 = {1, 0, 9, 0, 43, 0, 144, 0, 271};
const std::vector<long> kTotal_0_5 = {1, 0, 11, 0, 63, 0, 249, 0, 762,
                                      0, 1926, 0, 3791, 0, 4645};
const std::vector<long> kTotal_1_1 = {1, 2, 4, 8, 13, 20, 24, 18, 6};
const std::vector<long> kTotal_2_1 = {
    1,    4,    9,    20,   42,   80,   144,  244,  401,
    640,  981,  1464, 2134, 3036, 4216, 5688, 7408, 9224,
    10860, 11876, 11670, 9860, 6810, 3620, 1368, 324, 36};
const std::vector<long> kTotal_2_2 = {
    1,     4,     11,    28,    62,     128,    247,    448,   782,
    1308,  2113,  3312,  5043,  7496,   10884,  15472,  21572, 29504,
    39605, 52100, 66925, 83564, 100849, 116656, 127737, 129952,
    119187, 94368, 61178, 30540, 10848, 2416,  252};

struct GridCase {
    long g, n;
    const std::vector<long>* expect;
};

const std::vector<GridCase> kGrid = {
    {2, 1, &kTotal_2_1}, {2, 2, &kTotal_2_2}, {1, 1, &kTotal_1_1},
    {0, 3, &kTotal_0_3}, {0, 4, &kTotal_0_4}, {0, 5, &kTotal_0_5}};

bool criterion1() {
    bool ok = true;
    for (const GridCase& c : kGrid) {
        const LaurentPoly got = total(c.g, c.n, Det::varying);
        const bool match = got == from_ascending(*c.expect);
        std::cout << "  (g=" << c.g << ", n=" << c.n << "): "
                  << (match ? "matches the reference polynomial"
                            : "MISMATCH: got " + got.to_string())
                  << "\n";
        ok = ok && match;
    }
    return ok;
}

bool criterion2() {
    bool ok = true;
    const HiggsParams p3 = HiggsParams::with_default_weights(0, 3, 1);
    const bool only111 = bundles3_poincare(p3, Det::varying).is_zero() &&
                         contribution_12(p3, Det::varying).is_zero() &&
                         contribution_21(p3, Det::varying).is_zero() &&
                         !contribution_111(p3, Mode111::nonfixed).is_zero();
    std::cout << "  (0,3): only the three-line family contributes: "
              << (only111 ? "yes" : "NO") << "\n";
    ok = ok && only111;

    const HiggsParams p4 = HiggsParams::with_default_weights(0, 4, 1);
    const bool four = !contribution_12(p4, Det::varying).is_zero() &&
                      contribution_21(p4, Det::varying).is_zero();
    std::cout << "  (0,4): line-into-pair nonzero, pair-into-line zero: "
              << (four ? "yes" : "NO") << "\n";
    ok = ok && four;

    const HiggsParams p5 = HiggsParams::with_default_weights(0, 5, 1);
    const bool five = !contribution_12(p5, Det::varying).is_zero() &&
                      !contribution_21(p5, Det::varying).is_zero();
    std::cout << "  (0,5): both pair families nonzero: "
              << (five ? "yes" : "NO") << "\n";
    return ok && five;
}

bool criterion3() {
    bool ok = true;
    for (const auto& gn : {std::pair<long, long>{1, 1}, {2, 1}, {2, 2}}) {
        const auto [g, n] = gn;
        const LaurentPoly lhs =
            total(g, n, Det::fixed) * jac_poincare(g) -
            total(g, n, Det::varying);
        Int scale = 2;
        for (long i = 1; i < n; ++i) scale *= 6;
        Int torsion = 1;
        for (long i = 0; i < 2 * g; ++i) torsion *= 3;
        torsion -= 1;
        const LaurentPoly rhs =
            (LaurentPoly::monomial(scale * torsion, 12 * g - 12 + 6 * n) *
             jac_poincare(2 * g - 2)) *
            jac_poincare(g);
        const bool identity = lhs == rhs;
        std::cout << "  (g=" << g << ", n=" << n
                  << ") determinant-comparison identity: "
                  << (identity ? "holds" : "FAILS") << "\n";
        ok = ok && identity;

        const Int chi = total(g, n, Det::fixed).eval_minus_one();
        const bool chi_zero = chi == 0;
        std::cout << "  (g=" << g << ", n=" << n
                  << ") fixed-determinant Euler characteristic: " << chi
                  << (chi_zero ? " (= 0 as claimed)"
                               : " (claimed 0: FAILS)")
                  << "\n";
        ok = ok && chi_zero;
    }
    return ok;
}

bool criterion4() {
    bool ok = true;
    for (const GridCase& c : kGrid) {
        const long dv = total(c.g, c.n, Det::varying).degree();
        const long df = total(c.g, c.n, Det::fixed).degree();
        const bool match =
            dv == 18 * c.g - 16 + 6 * c.n && df == 16 * c.g - 16 + 6 * c.n;
        std::cout << "  (g=" << c.g << ", n=" << c.n << "): degrees (" << dv
                  << ", " << df << ") vs (" << 18 * c.g - 16 + 6 * c.n << ", "
                  << 16 * c.g - 16 + 6 * c.n << ")"
                  << (match ? "" : "  MISMATCH") << "\n";
        ok = ok && match;
    }
    return ok;
}

bool criterion5() {
    bool ok = true;

    for (const auto& gn : {std::pair<long, long>{0, 3}, {1, 1}, {2, 1}}) {
        const HiggsParams params =
            HiggsParams::with_default_weights(gn.first, gn.second, 1);
        bool here = true;
        for (const Mode111 mode : {Mode111::nonfixed, Mode111::fixed_invariant,
                                   Mode111::fixed_variant})
            here = here && stratum_sum_111(params, mode) ==
                               contribution_111(params, mode);
        std::cout << "  three-line family closed form vs enumeration at (g="
                  << gn.first << ", n=" << gn.second
                  << "): " << (here ? "equal" : "DIFFER") << "\n";
        ok = ok && here;
    }

    for (const auto& gn : {std::pair<long, long>{0, 3}, {1, 1}}) {
        const HiggsParams params =
            HiggsParams::with_default_weights(gn.first, gn.second, 1);
        bool here = true;
        for (const Det det : {Det::varying, Det::fixed})
            here = here &&
                   stratum_sum_type12(params, HNType::t12, det) ==
                       contribution_12(params, det) &&
                   stratum_sum_type12(params, HNType::t21, det) ==
                       contribution_21(params, det);
        std::cout << "  pair families closed form vs enumeration at (g="
                  << gn.first << ", n=" << gn.second
                  << "): " << (here ? "equal" : "DIFFER") << "\n";
        ok = ok && here;
    }

    for (const auto& gn : {std::pair<long, long>{1, 1}, {2, 1}, {2, 2}}) {
        const HiggsParams params =
            HiggsParams::with_default_weights(gn.first, gn.second, 1);
        bool here = true;
        for (const Det det : {Det::varying, Det::fixed})
            here = here && bundles3_assembled(params, det) ==
                               bundles3_poincare(params, det);
        std::cout << "  bundle family closed form vs assembly at (g="
                  << gn.first << ", n=" << gn.second
                  << "): " << (here ? "equal" : "DIFFER") << "\n";
        ok = ok && here;
    }

    // randomized chamber scans: the closed formula against the wall-jump sum
    std::mt19937 rng(1789);
    std::uniform_int_distribution<long> dg(0, 2), dn(1, 3), dd(-4, 4),
        sixteenth(1, 15);
    long specs = 0, evaluations = 0, mismatches = 0;
    while (specs < 50) {
        const TripleSpec spec{dg(rng), WeightSystem::default_line_pair(dn(rng)),
                              dd(rng), dd(rng)};
        const auto range = sigma_range(spec);
        std::vector<Rat> breaks;
        breaks.push_back(range.first);
        for (const WallRecord& w : wall_records(spec))
            breaks.push_back(w.sigma_c);
        std::sort(breaks.begin(), breaks.end());
        breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
        std::uniform_int_distribution<size_t> pick(0, breaks.size() - 1);
        for (int draw = 0; draw < 3; ++draw) {
            const size_t i = pick(rng);
            const Rat lo = breaks[i];
            const Rat sigma = i + 1 < breaks.size()
                                  ? lo + (breaks[i + 1] - lo) *
                                             Rat(sixteenth(rng), 16)
                                  : lo + Rat(sixteenth(rng), 16);
            for (const Det det : {Det::varying, Det::fixed}) {
                ++evaluations;
                if (triples_poincare(spec, sigma, det) !=
                    triples_poincare_wallsum(spec, sigma, det))
                    ++mismatches;
            }
        }
        ++specs;
    }
    std::cout << "  chamber formula vs wall-jump sum: " << specs
              << " random families, " << evaluations << " evaluations, "
              << mismatches << " mismatches\n";
    return ok && mismatches == 0;
}

bool criterion6() {
    bool ok = true;
    for (const GridCase& c : kGrid) {
        if (c.g == 0 && c.n == 5) continue; // outside the comparison grid
        const LaurentPoly limit = hausel_at_q1(c.g, c.n);
        const LaurentPoly moduli = total(c.g, c.n, Det::varying);
        if (limit == moduli) {
            std::cout << "  (g=" << c.g << ", n=" << c.n
                      << "): q->1 limit equals the moduli polynomial\n";
            continue;
        }
        // a mismatch only counts when the reference values themselves are
        // reproduced and wider truncation windows change nothing
        const bool reference_ok = moduli == from_ascending(*c.expect);
        const bool persists =
            total(c.g, c.n, Det::varying, 6 * c.n + 12 * c.g) == moduli;
        std::cout << "  (g=" << c.g << ", n=" << c.n
                  << "): q->1 limit DIFFERS from the moduli polynomial"
                  << (reference_ok ? "; reference values reproduced" : "")
                  << (persists ? "; persists under doubled windows" : "")
                  << "\n";
        if (limit * jac_poincare(c.g) == moduli)
            std::cout << "      note: limit * (1+t)^(2g) equals the moduli "
                         "polynomial exactly, so the six-term expression is "
                         "one (qt+1)^(2g)-type factor short as displayed\n";
        ok = ok && !(reference_ok && persists);
    }
    return ok;
}

bool criterion7() {
    bool ok = true;

    // exact-arithmetic ring laws
    {
        std::mt19937 rng(5150);
        std::uniform_int_distribution<long> e(-3, 5);
        std::uniform_int_distribution<int> c(-7, 7);
        auto rand_poly = [&] {
            LaurentPoly p;
            for (int i = 0; i < 5; ++i)
                p += LaurentPoly::monomial(Int(c(rng)), e(rng));
            return p;
        };
        bool laws = true;
        for (int trial = 0; trial < 100; ++trial) {
            const LaurentPoly a = rand_poly(), b = rand_poly(),
                              d = rand_poly();
            laws = laws && (a + b) * d == a * d + b * d &&
                   a * b == b * a && (a - a).is_zero() &&
                   (b.is_zero() || (a * b).divide_exact(b) == a);
        }
        std::cout << "  polynomial ring laws (100 random triples): "
                  << (laws ? "hold" : "FAIL") << "\n";
        ok = ok && laws;
    }

    // stratum indices: even, nonnegative, and positive whenever the bundle
    // family occupies the minimum (positive genus)
    {
        bool idx = true;
        for (const auto& gn :
             {std::pair<long, long>{0, 3}, {1, 1}, {1, 2}, {2, 1}}) {
            const HiggsParams params =
                HiggsParams::with_default_weights(gn.first, gn.second, 1);
            for (const StratumRecord& r : enumerate_111(params))
                idx = idx && r.index % 2 == 0 && r.index >= 0 &&
                      (gn.first == 0 || r.index > 0);
            for (const HNType which : {HNType::t12, HNType::t21})
                for (const StratumRecord& r : enumerate_type12(params, which))
                    idx = idx && r.index % 2 == 0 && r.index >= 0 &&
                          (gn.first == 0 || r.index > 0);
        }
        std::cout << "  index parity and positivity over enumerated strata: "
                  << (idx ? "hold" : "FAIL") << "\n";
        ok = ok && idx;
    }

    // the total must not depend on which degree representative is used
    {
        bool indep = true;
        for (const Det det : {Det::varying, Det::fixed}) {
            const LaurentPoly base = total(1, 1, det);
            for (const long D : {2L, 4L, -1L, -2L})
                indep = indep &&
                        higgs3_total(HiggsParams::with_default_weights(1, 1, D),
                                     det) == base;
        }
        std::cout << "  degree-representative independence at (1,1): "
                  << (indep ? "holds" : "FAIL") << "\n";
        ok = ok && indep;
    }

    // positivity and normalization of every grid polynomial
    {
        bool shape = true;
        for (const GridCase& c : kGrid)
            for (const Det det : {Det::varying, Det::fixed}) {
                const LaurentPoly p = total(c.g, c.n, det);
                shape = shape && p.has_nonnegative_coeffs() &&
                        p.coeff(0) == 1 && p.min_exp() == 0;
            }
        std::cout << "  nonnegative coefficients and constant term 1: "
                  << (shape ? "hold" : "FAIL") << "\n";
        ok = ok && shape;
    }

    // chamber polynomials are constant between walls
    {
        const TripleSpec spec{1, WeightSystem::default_line_pair(2), 1, -1};
        const auto range = sigma_range(spec);
        std::vector<Rat> walls;
        for (const WallRecord& w : wall_records(spec))
            walls.push_back(w.sigma_c);
        std::sort(walls.begin(), walls.end());
        walls.erase(std::unique(walls.begin(), walls.end()), walls.end());
        bool constant = true;
        Rat prev = range.first;
        long palindromic = 0, chambers = 0;
        for (const Rat& w : walls) {
            if (w > prev) {
                const LaurentPoly a = triples_poincare(
                    spec, prev + (w - prev) / 4, Det::varying);
                const LaurentPoly b = triples_poincare(
                    spec, prev + (w - prev) * 3 / 4, Det::varying);
                constant = constant && a == b;
                ++chambers;
                if (!a.is_zero() && a.is_palindromic()) ++palindromic;
            }
            prev = w;
        }
        std::cout << "  chamber constancy over " << chambers
                  << " chambers: " << (constant ? "holds" : "FAIL") << "\n";
        std::cout << "  chamber palindromicity (report only): " << palindromic
                  << "/" << chambers << " sampled chambers palindromic\n";
        ok = ok && constant;
    }

    return ok;
}

} // namespace

int main() {
    std::cout << "acceptance gate: exact moduli-polynomial library\n";
    verdict(1, "reference-grid regression", criterion1());
    verdict(2, "genus-zero family attribution", criterion2());
    verdict(3, "fixed-determinant identities", criterion3());
    verdict(4, "degree law", criterion4());
    verdict(5, "closed forms vs independent oracles", criterion5());
    verdict(6, "six-term conjectural formula at q = 1", criterion6());
    verdict(7, "standalone invariant suites", criterion7());
    std::cout << (failures == 0
                      ? "all criteria passed"
                      : std::to_string(failures) + " criterion(s) failed")
              << "\n";
    return failures;
}
