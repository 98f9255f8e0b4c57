#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "gen.hpp"
#include "parse.hpp"

using namespace edsfn;

namespace {

using R7 = RatFunc<PrimeField>;

long ceil_div(long a, long b) {
    return (a + b - 1) / b;
}

}  // namespace

TEST_CASE("kodaira table from c4 and discriminant valuations") {
    CHECK(kodaira_type(0, 0, 0).name() == "I0");
    CHECK(kodaira_type(0, 0, 7).name() == "I7");
    CHECK(kodaira_type(1, 1, 2).name() == "II");
    CHECK(kodaira_type(1, 2, 3).name() == "III");
    CHECK(kodaira_type(2, 2, 4).name() == "IV");
    CHECK(kodaira_type(2, 3, 6).name() == "I0*");
    CHECK(kodaira_type(2, 3, 9).name() == "I3*");
    CHECK(kodaira_type(3, 4, 8).name() == "IV*");
    CHECK(kodaira_type(3, 5, 9).name() == "III*");
    CHECK(kodaira_type(4, 5, 10).name() == "II*");
    CHECK_THROWS_AS(kodaira_type(4, 6, 12), Error);
    CHECK_THROWS_AS(kodaira_type(1, 1, 5), Error);
}

TEST_CASE("fibre invariants: Euler numbers, groups, conductor") {
    const FibreType i7{Kodaira::In, 7}, i3s{Kodaira::InStar, 3}, i2s{Kodaira::InStar, 2};
    CHECK(i7.euler() == 7);
    CHECK(i7.group_name() == "Z/7");
    CHECK(i3s.euler() == 9);
    CHECK(i3s.group_name() == "Z/4");
    CHECK(i2s.group_name() == "Z/2xZ/2");
    CHECK(FibreType{Kodaira::IIStar, 0}.euler() == 10);
    CHECK(FibreType{Kodaira::III, 0}.conductor_exponent() == 2);
    CHECK(i7.conductor_exponent() == 1);
}

TEST_CASE("char 7 fixture fibres") {
    const auto& lc = testfix::prime_fixture("char7");
    const AnalyzedCurve<PrimeField> e(lc.curve);
    const SurfaceData<PrimeField> s = e.surface_data();
    REQUIRE(s.fibres.size() == 3);
    CHECK(s.fibres[0].place.to_string() == "t");
    CHECK(s.fibres[0].type.name() == "II");
    CHECK(s.fibres[1].place.to_string() == "t+2");
    CHECK(s.fibres[1].type.name() == "I7");
    CHECK(s.fibres[2].place.is_infinity());
    CHECK(s.fibres[2].type.name() == "III");
    CHECK(s.chi == 1);
    CHECK(s.disc_degree == 12);
    CHECK(s.conductor_degree == 5);
    CHECK(insep_degree_j(lc.curve) == 7);
    const PrimeField f(7);
    CHECK(lc.curve.inv().j == parse_ratfunc(f, "6*t^7/(t+2)^7"));
}

TEST_CASE("smooth fibration and small characteristic are refused") {
    const RationalField q;
    const Curve<RationalField> smooth(parse_ratfunc(q, "0"), parse_ratfunc(q, "0"), parse_ratfunc(q, "0"),
                                      parse_ratfunc(q, "1"), parse_ratfunc(q, "0"));
    try {
        AnalyzedCurve<RationalField>(smooth).surface_data();
        FAIL("expected EverywhereGoodReduction");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EverywhereGoodReduction);
        CHECK(is_assumption_violation(e.code()));
    }
    const auto& c2 = testfix::prime_fixture("char2");
    try {
        AnalyzedCurve<PrimeField>(c2.curve).surface_data();
        FAIL("expected BadCharacteristic");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadCharacteristic);
    }
}

TEST_CASE("random short curves: sum of Euler numbers and disc degree equal 12 chi") {
    // Coefficients coprime at every finite place keep the model minimal there,
    // so chi is the weight at infinity: ceil(max(deg a4 / 4, deg a6 / 6)).
    std::mt19937_64 rng(20261015);
    const std::uint64_t primes[] = {5, 7, 11, 13};
    int tested = 0;
    while (tested < 20) {
        const PrimeField f(primes[tested % 4]);
        const Poly<PrimeField> a4 = testgen::random_poly(f, rng, 5);
        const Poly<PrimeField> a6 = testgen::random_poly(f, rng, 8);
        if (a4.is_zero() || a6.is_zero() || gcd(a4, a6).degree() > 0) continue;
        const long expect_chi = std::max(ceil_div(std::max(a4.degree(), 0L), 4),
                                         ceil_div(std::max(a6.degree(), 0L), 6));
        if (expect_chi < 1) continue;
        const Curve<PrimeField> e = Curve<PrimeField>::short_form(R7(a4), R7(a6));
        if (e.inv().disc.is_zero() || e.inv().j.is_constant()) continue;
        const SurfaceData<PrimeField> s = AnalyzedCurve<PrimeField>(e).surface_data();
        long euler = 0;
        for (const auto& fb : s.fibres) euler += fb.e_v * fb.place.degree();
        CHECK(euler == 12 * s.chi);
        CHECK(s.disc_degree == 12 * s.chi);
        CHECK(s.chi == expect_chi);
        ++tested;
    }
}

TEST_CASE("random model changes preserve j, fibres and D_P") {
    const auto& lc = testfix::prime_fixture("char7");
    const PrimeField& f = lc.curve.field();
    std::mt19937_64 rng(7);
    const AnalyzedCurve<PrimeField> base(lc.curve);
    const SurfaceData<PrimeField> s0 = base.surface_data();
    const long d0 = denominator_divisor(base, *lc.point).degree();
    for (int trial = 0; trial < 6; ++trial) {
        Poly<PrimeField> u = testgen::random_poly(f, rng, 1);
        if (u.is_zero()) continue;
        const ModelTransform<PrimeField> m{R7(u), R7(testgen::random_poly(f, rng, 2)), R7(testgen::random_poly(f, rng, 1)),
                                           R7(testgen::random_poly(f, rng, 3))};
        const Curve<PrimeField> e2 = lc.curve.transformed(m);
        const Point<PrimeField> p2 = lc.curve.map_point(m, *lc.point);
        CHECK(e2.contains(p2));
        CHECK(e2.inv().j == lc.curve.inv().j);
        const AnalyzedCurve<PrimeField> a2(e2);
        const SurfaceData<PrimeField> s2 = a2.surface_data();
        CHECK(s2.chi == s0.chi);
        REQUIRE(s2.fibres.size() == s0.fibres.size());
        for (std::size_t i = 0; i < s0.fibres.size(); ++i) CHECK(s2.fibres[i].type == s0.fibres[i].type);
        CHECK(denominator_divisor(a2, p2).degree() == d0);
        const Curve<PrimeField> back = e2.transformed(m.inverse());
        CHECK(back.coefficients() == lc.curve.coefficients());
    }
}

TEST_CASE("family fixture: Euler numbers sum to 12 deg f") {
    for (auto [id, degf] : {std::pair{"family-m1", 2L}, std::pair{"family-m2", 4L}}) {
        const auto& lc = testfix::prime_fixture(id);
        const SurfaceData<PrimeField> s = AnalyzedCurve<PrimeField>(lc.curve).surface_data();
        long euler = 0;
        for (const auto& fb : s.fibres) euler += fb.e_v * fb.place.degree();
        CHECK(euler == 12 * degf);
        CHECK(s.chi == degf);
    }
}

TEST_CASE("minimalization shift follows the largest admissible k") {
    // 12k <= 36, 4k <= 12, 6k <= 18 gives k = 3: the model becomes good at (t).
    const RationalField q;
    const auto t12 = parse_ratfunc(q, "t^12");
    const auto t18 = parse_ratfunc(q, "t^18");
    const auto v = PlaceClass<RationalField>::finite(Poly<RationalField>::from_ints(q, {0, 1}));
    const MinimalModel<RationalField> m = minimalize_at(Curve<RationalField>::short_form(t12, t18), v);
    CHECK(m.n_v == 3);
    CHECK(ord_at(m.model.inv().disc, v) == 0);
    CHECK(minimalize_at(m.model, v).n_v == 0);
}
