#include "doctest.h"
#include "fixtures.hpp"

using namespace edsfn;

namespace {

using PF7 = PrimeField;

long deg_d(const AnalyzedCurve<PF7>& e, const Point<PF7>& p, long n) {
    return denominator_divisor(e, multiply(e.curve(), n, p)).degree();
}

mpq_class corrections_at(const HeightCertificate<PF7>& cert, long k) {
    mpq_class c = 0;
    for (const auto& pc : cert.per_place) {
        c += pc.place.degree() * correction_value(pc.type, component_multiple(pc.type, pc.candidates.front(), k));
    }
    return c;
}

}  // namespace

TEST_CASE("correction values per fibre type") {
    CHECK(correction_value({Kodaira::In, 7}, 2) == mpq_class(10, 7));
    CHECK(correction_value({Kodaira::In, 4}, 2) == 1);  // 4/4 must compare equal to 1
    CHECK(correction_value({Kodaira::III, 0}, 1) == mpq_class(1, 2));
    CHECK(correction_value({Kodaira::IV, 0}, 2) == mpq_class(2, 3));
    CHECK(correction_value({Kodaira::IVStar, 0}, 1) == mpq_class(4, 3));
    CHECK(correction_value({Kodaira::IIIStar, 0}, 1) == mpq_class(3, 2));
    CHECK(correction_value({Kodaira::InStar, 2}, 1) == 1);
    CHECK(correction_value({Kodaira::InStar, 2}, 2) == mpq_class(3, 2));
    CHECK(correction_value({Kodaira::InStar, 3}, 2) == 1);
    CHECK(correction_value({Kodaira::InStar, 3}, 1) == mpq_class(7, 4));
    CHECK(correction_value({Kodaira::In, 7}, 0) == 0);
    CHECK_THROWS_AS(correction_value({Kodaira::In, 7}, 7), Error);
    CHECK_THROWS_AS(correction_value({Kodaira::II, 0}, 1), Error);
}

TEST_CASE("char 7 height certificate") {
    const auto& lc = testfix::prime_fixture("char7");
    const AnalyzedCurve<PF7> e(lc.curve);
    const SurfaceData<PF7> s = e.surface_data();
    const HeightCertificate<PF7> cert = height_certificate(e, s, *lc.point);
    CHECK(cert.pairing == mpq_class(1, 14));
    CHECK(cert.canonical == mpq_class(1, 28));
    CHECK(cert.exponent_lcm == 14);
    CHECK(cert.total == mpq_class(27, 14));
    REQUIRE(cert.per_place.size() == 3);
    CHECK(cert.per_place[0].c == 0);
    CHECK_FALSE(cert.per_place[0].singular);
    CHECK(cert.per_place[1].c == mpq_class(10, 7));
    CHECK(cert.per_place[1].candidates == std::vector<long>{2, 5});
    CHECK(cert.per_place[2].c == mpq_class(1, 2));
    CHECK_FALSE(identity_component_test(cert));
    CHECK(weighted_correction_sum(cert.per_place, 1) <= 12 * s.chi);
}

TEST_CASE("Shioda identity for n <= 30 on two fixtures") {
    for (const std::string id : {"char7", "family-m1"}) {
        CAPTURE(id);
        const auto& lc = testfix::prime_fixture(id);
        const AnalyzedCurve<PF7> e(lc.curve);
        const SurfaceData<PF7> s = e.surface_data();
        const HeightCertificate<PF7> cert = height_certificate(e, s, *lc.point);
        const EdsResult<PF7> eds = eds_generate(e, *lc.point, 30);
        for (const auto& r : eds.records) {
            CHECK(2 * r.degree == r.n * r.n * cert.pairing - 2 * s.chi + corrections_at(cert, r.n));
        }
    }
}

TEST_CASE("total correction stays within [0, 3 chi] for k <= 50") {
    for (const std::string id : {"char7", "family-m1", "family-m2", "kummer-ss"}) {
        CAPTURE(id);
        const auto& lc = testfix::prime_fixture(id);
        const AnalyzedCurve<PF7> e(lc.curve);
        const SurfaceData<PF7> s = e.surface_data();
        const mpq_class pairing = canonical_pairing(e, s, *lc.point);
        const EdsResult<PF7> eds = eds_generate(e, *lc.point, 50);
        for (const auto& r : eds.records) {
            const mpq_class c = total_correction(s.chi, pairing, r.n, r.degree);
            CHECK(c >= 0);
            CHECK(c <= 3 * s.chi);
        }
    }
}

TEST_CASE("pairing is independent of the auxiliary multiple") {
    const auto& lc = testfix::prime_fixture("family-m1");
    const AnalyzedCurve<PF7> e(lc.curve);
    const SurfaceData<PF7> s = e.surface_data();
    CHECK(canonical_pairing(e, s, *lc.point, 1) == 2);
    CHECK(canonical_pairing(e, s, *lc.point, 2) == 2);
    // <2Q, 2Q> = 4 <Q, Q>.
    CHECK(canonical_pairing(e, s, multiply(lc.curve, 2, *lc.point)) == 8);
}

TEST_CASE("a multiple killing the component groups meets identity components") {
    const auto& lc = testfix::prime_fixture("family-m1");
    const AnalyzedCurve<PF7> e(lc.curve);
    const SurfaceData<PF7> s = e.surface_data();
    const Point<PF7> q2 = multiply(lc.curve, 2, *lc.point);
    const HeightCertificate<PF7> cert = height_certificate(e, s, q2);
    CHECK(identity_component_test(cert));
    CHECK(cert.pairing == 2 * s.chi + 2 * deg_d(e, *lc.point, 2));
}

TEST_CASE("component solver: symmetric labels share one choice") {
    const PrimeField f(7);
    const FibreType i3{Kodaira::In, 3};
    std::vector<PlaceCorrection<PF7>> pieces{{PlaceClass<PF7>::infinity(f), i3, true, 0, {0}, true}};
    // Component 1 of I3: c(kP) = 2/3, 2/3, 0.
    const std::vector<mpq_class> totals{mpq_class(2, 3), mpq_class(2, 3), 0};
    const auto solved = component_solver(pieces, totals);
    CHECK(solved[0].candidates == std::vector<long>{1, 2});
    CHECK(solved[0].unique);
    CHECK(solved[0].c == mpq_class(2, 3));
    CHECK_THROWS_AS(component_solver(pieces, {mpq_class(1, 2), 0, 0}), Error);
}

TEST_CASE("total correction outside [0, 3 chi] is rejected") {
    CHECK_THROWS_AS(total_correction(1, mpq_class(1, 14), 1, -1), Error);
    CHECK(total_correction(1, mpq_class(1, 14), 1, 0) == mpq_class(27, 14));
}
