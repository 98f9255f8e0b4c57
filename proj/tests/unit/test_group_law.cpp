#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "parse.hpp"

using namespace edsfn;

namespace {

using P7 = Point<PrimeField>;

// Points aP + T for small a and T among the given extra points.
std::vector<P7> sample_points(const LoadedCurve<PrimeField>& lc, const std::vector<P7>& extra, std::mt19937_64& rng,
                              int count) {
    std::uniform_int_distribution<long> mult(-5, 5);
    std::uniform_int_distribution<std::size_t> pick(0, extra.size());
    std::vector<P7> out;
    for (int i = 0; i < count; ++i) {
        P7 q = multiply(lc.curve, mult(rng), *lc.point);
        const std::size_t k = pick(rng);
        if (k < extra.size()) q = add(lc.curve, q, extra[k]);
        out.push_back(q);
    }
    return out;
}

// The 2-torsion of y^2 = x (x - f^2)(x - g^2).
std::vector<P7> two_torsion(const LoadedCurve<PrimeField>& lc, int m) {
    const PrimeField& f = lc.curve.field();
    const std::string fs = "((t^" + std::to_string(2 * m) + "-1)/2)^2";
    const std::string gs = "t^" + std::to_string(2 * m);
    const auto zero = RatFunc<PrimeField>(f);
    return {P7::affine(zero, zero), P7::affine(parse_ratfunc(f, fs), zero), P7::affine(parse_ratfunc(f, gs), zero)};
}

}  // namespace

TEST_CASE("group law: associativity, inverse and identity on 100 random triples per fixture") {
    std::mt19937_64 rng(424242);
    for (const std::string id : {"char7", "family-m1", "family-m2", "kummer-ss", "char2", "char3"}) {
        CAPTURE(id);
        const auto& lc = testfix::prime_fixture(id);
        std::vector<P7> extra;
        if (id == "family-m1") extra = two_torsion(lc, 1);
        if (id == "family-m2") extra = two_torsion(lc, 2);
        const P7 o = P7::zero(lc.curve.field());
        int failures = 0;
        for (int i = 0; i < 100; ++i) {
            const auto s = sample_points(lc, extra, rng, 3);
            const P7 left = add(lc.curve, add(lc.curve, s[0], s[1]), s[2]);
            const P7 right = add(lc.curve, s[0], add(lc.curve, s[1], s[2]));
            if (!(left == right)) ++failures;
            if (!(add(lc.curve, s[0], negate(lc.curve, s[0])) == o)) ++failures;
            if (!(add(lc.curve, s[0], o) == s[0])) ++failures;
            if (!(add(lc.curve, s[0], s[1]) == add(lc.curve, s[1], s[0]))) ++failures;
            if (!s[0].infinity && !lc.curve.contains(s[0])) ++failures;
        }
        CHECK(failures == 0);
    }
}

TEST_CASE("multiply agrees with repeated addition") {
    const auto& lc = testfix::prime_fixture("char7");
    P7 acc = P7::zero(lc.curve.field());
    for (long n = 1; n <= 20; ++n) {
        acc = add(lc.curve, acc, *lc.point);
        CHECK(multiply(lc.curve, n, *lc.point) == acc);
        CHECK(multiply(lc.curve, -n, *lc.point) == negate(lc.curve, acc));
    }
}

TEST_CASE("doubling matches the tangent-line oracle on the short model") {
    // x(2P) = (x^4 - 2 a4 x^2 - 8 a6 x + a4^2) / (4 y^2) for y^2 = x^3 + a4 x + a6.
    const auto& lc = testfix::prime_fixture("char7");
    const PrimeField& f = lc.curve.field();
    using R = RatFunc<PrimeField>;
    const R a4 = lc.curve.a4(), a6 = lc.curve.a6();
    for (long k : {1, 2, 3, 5}) {
        const P7 q = multiply(lc.curve, k, *lc.point);
        const R& x = q.x;
        const R num = x.pow(4) - R::from_int(f, 2) * a4 * x.pow(2) - R::from_int(f, 8) * a6 * x + a4.pow(2);
        CHECK(multiply(lc.curve, 2, q).x == num / (R::from_int(f, 4) * q.y.pow(2)));
    }
}

TEST_CASE("points off the curve are rejected") {
    const auto& lc = testfix::prime_fixture("char7");
    const PrimeField& f = lc.curve.field();
    const P7 bad = P7::affine(parse_ratfunc(f, "t"), parse_ratfunc(f, "1"));
    CHECK_THROWS_AS(require_on_curve(lc.curve, bad), Error);
}

TEST_CASE("char 7 EDS table rows") {
    const auto& lc = testfix::prime_fixture("char7");
    const AnalyzedCurve<PrimeField> e(lc.curve);
    const EdsResult<PrimeField> eds = eds_generate(e, *lc.point, 14);
    const char* rows[] = {"0", "0", "0", "0", "1*(t+3)", "1*(t+4)", "1*(t)", "1*(t^2+6*t+4)"};
    for (int n = 1; n <= 8; ++n) CHECK(eds.records[static_cast<std::size_t>(n - 1)].divisor.to_string() == rows[n - 1]);
    CHECK(eds.records[13].divisor.to_string() == "1*(t) + 5*(inf)");
    CHECK(eds.non_primitive() == std::vector<long>{2, 3, 4});
    CHECK(eds.meeting_index(PlaceClass<PrimeField>::infinity(lc.curve.field())) == 14);
}

TEST_CASE("EDS is a divisibility sequence: D_m <= D_n for m | n") {
    const auto& lc = testfix::prime_fixture("char7");
    const AnalyzedCurve<PrimeField> e(lc.curve);
    const EdsResult<PrimeField> eds = eds_generate(e, *lc.point, 36);
    for (long n = 2; n <= 36; ++n) {
        for (long m = 1; m < n; ++m) {
            if (n % m != 0) continue;
            const auto& dm = eds.records[static_cast<std::size_t>(m - 1)].divisor;
            const auto& dn = eds.records[static_cast<std::size_t>(n - 1)].divisor;
            for (const auto& [v, k] : dm.entries()) CHECK(multiplicity_on(dn, v) >= k);
        }
    }
}

TEST_CASE("small characteristic EDS supports") {
    const auto& c2 = testfix::prime_fixture("char2");
    const EdsResult<PrimeField> e2 = eds_generate(AnalyzedCurve<PrimeField>(c2.curve), *c2.point, 16);
    CHECK(e2.records[3].divisor.to_string() == "1*(t)");
    CHECK(e2.records[7].divisor.to_string() == "5*(t)");
    CHECK(e2.records[15].divisor.to_string() == "21*(t)");
    const auto& c3 = testfix::prime_fixture("char3");
    const EdsResult<PrimeField> e3 = eds_generate(AnalyzedCurve<PrimeField>(c3.curve), *c3.point, 9);
    const PrimeField& f = c3.curve.field();
    const std::vector<PlaceClass<PrimeField>> allowed{PlaceClass<PrimeField>::finite(Poly<PrimeField>::from_ints(f, {1, 1})),
                                                      PlaceClass<PrimeField>::finite(Poly<PrimeField>::from_ints(f, {2, 1}))};
    CHECK(e3.records[2].divisor.support_contained(allowed));
    CHECK(e3.records[8].divisor.support_contained(allowed));
}

TEST_CASE("torsion points are refused by the EDS generator") {
    const auto& lc = testfix::prime_fixture("family-m1");
    const AnalyzedCurve<PrimeField> e(lc.curve);
    const auto zero = RatFunc<PrimeField>(lc.curve.field());
    try {
        eds_generate(e, P7::affine(zero, zero), 4);
        FAIL("expected TorsionPoint");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::TorsionPoint);
    }
}
