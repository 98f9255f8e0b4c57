#ifndef EDSFN_CORE_ARITH_HPP
#define EDSFN_CORE_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace edsfn {

/// a/b in canonical form; GMP arithmetic and comparison assume it.
inline mpq_class ratio(long a, long b) {
    mpq_class q(a, b);
    q.canonicalize();
    return q;
}

/// Largest argument accepted by the divisor sums.
inline constexpr long kMaxArithArgument = 1000000000L;

/// Closed rational interval.
struct Interval {
    mpq_class lo, hi;
    bool contains(const mpq_class& q) const { return lo <= q && q <= hi; }
};

/// The working enclosure [1.6449340, 1.6449341] of zeta(2).
Interval zeta2();

/// Certified enclosure from the partial sum to `terms` plus the convexity
/// bounds 1/N - 1/(2N^2) < sum_{k>N} 1/k^2 < 1/(N + 1/2).
Interval zeta2_certified(long terms = 1000);

/// Positive divisors of n in increasing order.
std::vector<long> divisors(long n);

long d(long n);
long sigma2(long n);
long v_p(long n, long p);
/// lcm(1, ..., n); 1 for n = 0.
mpz_class lcm_upto(long n);
/// sum over m | n of p^{v_p(n/m)}.
long d_p(long n, long p);
/// sum over m | n of p^{v_p(n/m)} m^2.
long sigma2_p(long n, long p);

struct WeightedSumCheck {
    long n, p, e;
    long dp, sigma2p;
    mpq_class dpFormula, sigma2pFormula;
    bool sigmaBound;  // sigma2_p(n) < (1 + 1/p) zeta(2) n^2 at the upper end
};

/// Checks the closed forms for d_p and sigma2_p and the zeta(2) estimate;
/// raises IdentityViolation on a mismatch.
WeightedSumCheck weighted_sum_identities(long n, long p);

/// Upper bound n^{1.5379 log 2 / log log n} for d(n), n >= 3, rounded outward
/// by the factor 1 + 2^-40; n itself for n < 3.
double divisor_bound(long n);

/// Exponent 1.5379 log 2 / log log n used by divisor_bound (n >= 3).
double divisor_bound_exponent(long n);

/// Outward slack factor applied to every floating comparison.
inline constexpr double kSlack = 1.0 + 1.0 / 1099511627776.0;  // 1 + 2^-40

}  // namespace edsfn

#endif
