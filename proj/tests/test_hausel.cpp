#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "parhiggs/errors.hpp"
#include "parhiggs/hauselcheck.hpp"
#include "parhiggs/higgs3.hpp"
#include "parhiggs/qexpr.hpp"
#include "parhiggs/symcurve.hpp"

using namespace parhiggs;

namespace {

/// Value of a q-polynomial at q = 1 (sum of its coefficients).
RatFunc at_q1(const QPoly& p) {
    RatFunc v;
    for (const auto& [e, c] : p) v += c;
    return v;
}

/// Derivative in q, evaluated at q = 1.
RatFunc deriv_at_q1(const QPoly& p) {
    RatFunc v;
    for (const auto& [e, c] : p) v += RatFunc(Int(e)) * c;
    return v;
}

} // namespace

TEST_CASE("six terms, with poles at q = 1 only in the expected places") {
    const std::vector<QExpr> terms = hausel_terms(1, 1);
    REQUIRE(terms.size() == 6);
    // the first term is regular at q = 1 ...
    CHECK(!at_q1(terms[0].den()).is_zero());
    // ... while the fourth has a double pole there, which must cancel in
    // the sum and only in the sum
    CHECK(at_q1(terms[3].den()).is_zero());
    CHECK(deriv_at_q1(terms[3].den()).is_zero());
    CHECK_THROWS_AS(q_limit({terms[3]}), ExactnessError);
    CHECK_NOTHROW(q_limit(terms));
    CHECK_THROWS_AS(hausel_terms(-1, 1), ValidationError);
    CHECK_THROWS_AS(hausel_terms(1, 0), ValidationError);
}

TEST_CASE("genus zero: the q -> 1 limit equals the moduli polynomial") {
    for (long n = 3; n <= 5; ++n) {
        const LaurentPoly limit = hausel_at_q1(0, n);
        const LaurentPoly moduli =
            higgs3_total(HiggsParams::with_default_weights(0, n, 1),
                         Det::varying);
        CHECK(limit == moduli);
        CHECK(limit.has_nonnegative_coeffs());
        CHECK(limit.min_exp() == 0);
    }
    CHECK(hausel_at_q1(0, 3) == LaurentPoly::from_terms({{0, 1}, {2, 7}}));
}

TEST_CASE("positive genus: the limit reproduces the moduli polynomial only "
          "after restoring a Jacobian factor") {
    // frozen q -> 1 limit of the six-term expression at genus 1, one point
    const LaurentPoly limit_1_1 = LaurentPoly::from_terms(
        {{0, 1}, {2, 3}, {3, 2}, {4, 6}, {5, 6}, {6, 6}});
    CHECK(hausel_at_q1(1, 1) == limit_1_1);

    for (const auto& gn : {std::pair<long, long>{1, 1}, {2, 1}, {2, 2}}) {
        const auto [g, n] = gn;
        const LaurentPoly limit = hausel_at_q1(g, n);
        const LaurentPoly moduli = higgs3_total(
            HiggsParams::with_default_weights(g, n, 1), Det::varying);
        CHECK(limit != moduli);
        CHECK(limit * jac_poincare(g) == moduli);
    }
}
