#include <cmath>

#include "arith.hpp"
#include "doctest.h"
#include "error.hpp"

using namespace edsfn;

namespace {

long brute_v(long n, long p) {
    long e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

long brute_pow(long p, long e) {
    long r = 1;
    while (e-- > 0) r *= p;
    return r;
}

}  // namespace

TEST_CASE("divisor functions agree with brute force") {
    for (long n = 1; n <= 2000; ++n) {
        long cnt = 0, s2 = 0;
        std::vector<long> ds;
        for (long m = 1; m <= n; ++m) {
            if (n % m) continue;
            ++cnt;
            s2 += m * m;
            ds.push_back(m);
        }
        CHECK(divisors(n) == ds);
        CHECK(d(n) == cnt);
        CHECK(sigma2(n) == s2);
    }
    CHECK_THROWS_AS(divisors(0), Error);
    CHECK_THROWS_AS(d(kMaxArithArgument + 1), Error);
}

TEST_CASE("p-weighted divisor sums and their closed forms for n <= 500") {
    for (long p : {5, 7, 11}) {
        for (long n = 1; n <= 500; ++n) {
            long dp = 0, s2p = 0;
            for (long m = 1; m <= n; ++m) {
                if (n % m) continue;
                const long w = brute_pow(p, brute_v(n / m, p));
                dp += w;
                s2p += w * m * m;
            }
            CHECK(d_p(n, p) == dp);
            CHECK(sigma2_p(n, p) == s2p);
            const WeightedSumCheck c = weighted_sum_identities(n, p);
            CHECK(c.e == brute_v(n, p));
            CHECK(c.dpFormula == dp);
            CHECK(c.sigma2pFormula == s2p);
            CHECK(c.sigmaBound);
        }
    }
}

TEST_CASE("divisor count bound holds for 3 <= n <= 1e5") {
    const long limit = 100000;
    std::vector<long> cnt(limit + 1, 0);
    for (long m = 1; m <= limit; ++m) {
        for (long k = m; k <= limit; k += m) ++cnt[k];
    }
    long failures = 0;
    for (long n = 3; n <= limit; ++n) {
        if (static_cast<double>(cnt[n]) > divisor_bound(n)) ++failures;
    }
    CHECK(failures == 0);
    CHECK(d(720720) == 240);
    CHECK(240.0 <= divisor_bound(720720));
}

TEST_CASE("log lcm(1..n) < 1.04 n for n <= 1e4") {
    mpz_class l = 1;
    long failures = 0;
    for (long n = 1; n <= 10000; ++n) {
        mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(n));
        long exp2 = 0;
        const double mant = mpz_get_d_2exp(&exp2, l.get_mpz_t());
        const double ln = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
        if (ln >= 1.04 * static_cast<double>(n)) ++failures;
        if (n == 10 || n == 100 || n == 10000) CHECK(lcm_upto(n) == l);
    }
    CHECK(failures == 0);
    CHECK(lcm_upto(0) == 1);
    CHECK(lcm_upto(10) == 2520);
}

TEST_CASE("zeta(2) enclosures") {
    const Interval w = zeta2();
    const Interval c = zeta2_certified(1000);
    CHECK(c.lo <= c.hi);
    CHECK(c.hi - c.lo < mpq_class(1, 1000000000));
    // The certified interval must sit inside the working one.
    CHECK(w.lo <= c.lo);
    CHECK(c.hi <= w.hi);
    const double pi2_6 = M_PI * M_PI / 6.0;
    CHECK(c.lo.get_d() <= pi2_6);
    CHECK(pi2_6 <= c.hi.get_d());
}

TEST_CASE("ratio helper is canonical") {
    const mpq_class q = ratio(4, 4);
    CHECK(q == 1);
    CHECK(q.get_num() == 1);
    CHECK(ratio(6, -4) == mpq_class(-3, 2));
}
