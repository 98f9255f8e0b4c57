#include "arith.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace edsfn {

namespace {

void check_argument(long n) {
    if (n < 1) raise(ErrorCode::InvalidArgument, "argument must be positive, got " + std::to_string(n));
    if (n > kMaxArithArgument) raise(ErrorCode::Overflow, "argument " + std::to_string(n) + " exceeds 10^9");
}

long ipow(long b, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(r, b, &r)) raise(ErrorCode::Overflow, "power overflows 64 bits");
    }
    return r;
}

}  // namespace

Interval zeta2() { return {ratio(16449340, 10000000), ratio(16449341, 10000000)}; }

Interval zeta2_certified(long terms) {
    if (terms < 1) raise(ErrorCode::InvalidArgument, "need at least one term");
    mpq_class s = 0;
    for (long k = 1; k <= terms; ++k) s += mpq_class(1, k * k);
    const mpq_class n(terms);
    Interval out{s + 1 / n - 1 / (2 * n * n), s + 1 / (n + mpq_class(1, 2))};
    out.lo.canonicalize();
    out.hi.canonicalize();
    return out;
}

std::vector<long> divisors(long n) {
    check_argument(n);
    std::vector<long> small, large;
    for (long m = 1; m * m <= n; ++m) {
        if (n % m != 0) continue;
        small.push_back(m);
        if (m != n / m) large.push_back(n / m);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

long d(long n) { return static_cast<long>(divisors(n).size()); }

long sigma2(long n) {
    long s = 0;
    for (long m : divisors(n)) s += m * m;
    return s;
}

long v_p(long n, long p) {
    check_argument(n);
    if (p < 2) raise(ErrorCode::InvalidArgument, "p must be at least 2");
    long e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

mpz_class lcm_upto(long n) {
    if (n < 0) raise(ErrorCode::InvalidArgument, "lcm_upto of a negative integer");
    mpz_class l = 1;
    for (long k = 2; k <= n; ++k) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(k));
    return l;
}

long d_p(long n, long p) {
    long s = 0;
    for (long m : divisors(n)) s += ipow(p, v_p(n / m, p));
    return s;
}

long sigma2_p(long n, long p) {
    long s = 0;
    for (long m : divisors(n)) s += ipow(p, v_p(n / m, p)) * m * m;
    return s;
}

WeightedSumCheck weighted_sum_identities(long n, long p) {
    WeightedSumCheck c{n, p, v_p(n, p), d_p(n, p), sigma2_p(n, p), 0, 0, false};
    const long pe = ipow(p, c.e);
    c.dpFormula = ratio(pe * p - 1, (c.e + 1) * (p - 1)) * d(n);
    c.sigma2pFormula = ratio(pe * (p + 1), pe * p + 1) * sigma2(n);
    c.dpFormula.canonicalize();
    c.sigma2pFormula.canonicalize();
    const mpq_class cap = (1 + mpq_class(1, p)) * zeta2().hi * n * n;
    c.sigmaBound = c.sigma2p < cap;
    if (c.dpFormula != c.dp || c.sigma2pFormula != c.sigma2p || !c.sigmaBound) {
        raise(ErrorCode::IdentityViolation, "divisor-sum identity fails at n=" + std::to_string(n) +
                                                ", p=" + std::to_string(p));
    }
    return c;
}

double divisor_bound_exponent(long n) {
    if (n < 3) raise(ErrorCode::InvalidArgument, "divisor bound exponent needs n >= 3");
    const double x = static_cast<double>(n);
    return 1.5379 * std::log(2.0) / std::log(std::log(x)) * kSlack;
}

double divisor_bound(long n) {
    if (n < 3) return static_cast<double>(n);
    return std::pow(static_cast<double>(n), divisor_bound_exponent(n)) * kSlack;
}

}  // namespace edsfn
