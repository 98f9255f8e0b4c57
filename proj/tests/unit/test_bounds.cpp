#include "bounds.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace edsfn;

TEST_CASE("Lang-type cap and Szpiro-type degree bound") {
    CHECK(lang_bound(1) == 1944);
    CHECK(lang_bound(2) == 24 * 6561);
    const auto& lc = testfix::prime_fixture("char7");
    const AnalyzedCurve<PF> e(lc.curve);
    const SurfaceData<PF> s = e.surface_data();
    const BoundContext ctx = bound_context(e, s);
    CHECK(ctx.chi == 1);
    CHECK(ctx.genus == 0);
    CHECK(ctx.insep == 7);
    CHECK(ctx.disc_degree == 12);
    CHECK(ctx.conductor_degree == 5);
    CHECK(pesenti_szpiro(ctx) == 126);
    CHECK(ctx.disc_degree <= pesenti_szpiro(ctx));
    const mpq_class pairing = canonical_pairing(e, s, *lc.point);
    CHECK(1 / pairing <= mpq_class(lang_bound(ctx.chi)));
}

TEST_CASE("height floors") {
    BoundContext zero;
    zero.chi = 1;
    CHECK(height_floor(zero).log10 == doctest::Approx(-15.5).epsilon(1e-12));
    zero.genus = 2;
    CHECK(height_floor(zero).log10 == doctest::Approx(-55).epsilon(1e-12));
    BoundContext p7;
    p7.chi = 1;
    p7.p = 7;
    p7.insep = 7;
    CHECK(height_floor(p7).log10 == doctest::Approx(-126).epsilon(1e-12));
    p7.genus = 3;
    CHECK(height_floor(p7).log10 == doctest::Approx(-36.0 * 3 * 7).epsilon(1e-12));
}

TEST_CASE("theta(5) is positive with margin") {
    const Interval t = theta(5);
    CHECK(t.lo > mpq_class(26, 1000));
    CHECK(t.lo <= t.hi);
    CHECK(theta(0).lo > 0);
}

TEST_CASE("threshold solver: degree-2 inequality with divisor weight") {
    // 1/14 n^2 <= 3 d(n) + 3 style inequalities fail from some point on.
    ThresholdInequality q;
    q.name = "test";
    q.alpha = {mpq_class(1, 2), mpq_class(1, 2)};
    q.degree = 2;
    q.beta = 10;
    q.weight = ThresholdInequality::Weight::Linear;
    q.gamma = 0;
    const ThresholdResult r = threshold_solver(q);
    // n^2/2 <= 10 n holds exactly for n <= 20.
    CHECK(r.lastHolding == 20);
    CHECK(r.threshold == 21);
    for (long n = r.threshold; n <= r.threshold + 1000; ++n) CHECK_FALSE(q.holds(n));
}

TEST_CASE("threshold solver: divisor-count bound at chi = 1 gives 8213") {
    ThresholdInequality q;
    q.name = "chi=1";
    q.alpha = theta(0);
    q.degree = 2;
    q.beta = 36 * 81;
    q.weight = ThresholdInequality::Weight::Linear;
    const ThresholdResult r = threshold_solver(q);
    CHECK(r.threshold == 8213);
    CHECK(q.holds(8212));
    CHECK_FALSE(q.holds(8213));
    CHECK(r.verifiedUpTo >= 4 * r.threshold);
}

TEST_CASE("threshold solver: char 7 closing inequality crosses near 11998") {
    ThresholdInequality q;
    q.name = "char7";
    q.alpha = {mpq_class(12, 100), mpq_class(12, 100)};
    q.degree = 1;
    q.beta = mpq_class(14 * 31, 24);
    q.weight = ThresholdInequality::Weight::Power;
    q.eps = 0.465;
    q.gamma = 14;
    const ThresholdResult r = threshold_solver(q);
    CHECK(std::abs(static_cast<double>(r.lastHolding) - 11998.0) <= 0.05 * 11998.0);
    CHECK(q.holds(11998));
    CHECK_FALSE(q.holds(static_cast<long>(1.05 * 11998)));
}

TEST_CASE("threshold solver refuses a non-positive leading coefficient") {
    ThresholdInequality q;
    q.alpha = {0, 0};
    CHECK_THROWS_AS(threshold_solver(q), Error);
}

TEST_CASE("primitivity report on the char 7 fixture") {
    const auto& lc = testfix::prime_fixture("char7");
    const AnalyzedCurve<PF> e(lc.curve);
    const PrimitivityReport<PF> r = primitivity_report(e, *lc.point, 50);
    CHECK(r.status == "ok");
    CHECK(r.ordinary);
    CHECK(r.tame);
    CHECK(r.pairing == mpq_class(1, 14));
    CHECK(r.nonPrimitive == std::vector<long>{2, 3, 4});
    REQUIRE(r.threshold.has_value());
    CHECK(*r.threshold == 5);
    CHECK(r.unresolved.empty());
}

TEST_CASE("refuted non-primitivity never contradicts the computed EDS") {
    for (const std::string id : {"char7", "family-m1", "family-m2"}) {
        CAPTURE(id);
        const auto& lc = testfix::prime_fixture(id);
        if (!lc.point) continue;
        const AnalyzedCurve<PF> e(lc.curve);
        const SurfaceData<PF> s = e.surface_data();
        const BoundContext ctx = bound_context(e, s);
        const mpq_class pairing = canonical_pairing(e, s, *lc.point);
        const EdsResult<PF> eds = eds_generate(e, *lc.point, 30);
        for (const auto& rec : eds.records) {
            if (rec.n == 1) continue;
            // Tame cap on deg W: (p^e - 1) chi with e = v_p(n).
            long pe = 1;
            for (long m = rec.n; m % static_cast<long>(ctx.p) == 0; m /= static_cast<long>(ctx.p)) pe *= static_cast<long>(ctx.p);
            const InequalityCheck c = nonprimitive_rhs_charp(rec.n, ctx, pairing, mpq_class((pe - 1) * ctx.chi), false);
            if (c.refuted) CHECK(rec.primitive);
        }
    }
}

TEST_CASE("supersingular curve is reported as non-ordinary") {
    const auto& lc = testfix::prime_fixture("kummer-ss");
    const AnalyzedCurve<PF> e(lc.curve);
    const PrimitivityReport<PF> r = primitivity_report(e, *lc.point, 10);
    CHECK_FALSE(r.ordinary);
    CHECK(r.status.rfind("non-ordinary", 0) == 0);
    CHECK_FALSE(r.threshold.has_value());
}
