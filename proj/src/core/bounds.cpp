#include "bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <type_traits>

#include "charp.hpp"

namespace edsfn {

namespace {

long ipow(long b, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(r, b, &r)) raise(ErrorCode::Overflow, "power overflows 64 bits");
    }
    return r;
}

// Lower end of a rational as a double, pushed down by the slack.
double down(const mpq_class& q) {
    const double v = q.get_d();
    return v >= 0 ? v / kSlack : v * kSlack;
}

double up(const mpq_class& q) {
    const double v = q.get_d();
    return v >= 0 ? v * kSlack : v / kSlack;
}

std::string log10_string(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "10^%g", v);
    return buf;
}

}  // namespace

template <class F>
BoundContext bound_context(const AnalyzedCurve<F>& e, const SurfaceData<F>& s) {
    BoundContext ctx;
    ctx.chi = s.chi;
    ctx.genus = s.genus;
    ctx.p = e.field().characteristic();
    ctx.insep = insep_degree_j(e.curve());
    if constexpr (std::is_same_v<F, PrimeField>) ctx.s = 1;
    ctx.disc_degree = s.disc_degree;
    ctx.conductor_degree = s.conductor_degree;
    ctx.szpiro = s.szpiro;
    return ctx;
}

mpz_class lang_bound(long chi) {
    if (chi < 1) raise(ErrorCode::InvalidArgument, "chi must be positive");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(4 * chi));
    return 24 * r;
}

long pesenti_szpiro(const BoundContext& ctx) {
    return 6 * ctx.insep * (2 * ctx.genus - 2 + ctx.conductor_degree);
}

mpq_class hindry_silverman_raw(const mpq_class& sigma, long m, long n) {
    if (m < 1 || n < 2) raise(ErrorCode::InvalidArgument, "need M >= 1 and N >= 2");
    if (sgn(sigma) <= 0) raise(ErrorCode::InvalidArgument, "Szpiro ratio must be positive");
    const mpz_class l = lcm_upto(n - 1);
    mpq_class num = 6 * ((1 + mpq_class(1, m)) / sigma - mpq_class(1, m) - mpq_class(1, n));
    mpq_class den = mpq_class((m + 1) * (m + 2)) * l * l;
    mpq_class r = num / den;
    r.canonicalize();
    return r;
}

HeightFloor height_floor(const BoundContext& ctx) {
    HeightFloor f;
    if (ctx.p == 0) {
        if (ctx.chi >= 2 * (ctx.genus - 1)) {
            f.log10 = -15.5;
            f.regime = "char 0, h(E) >= 2(g-1)";
        } else {
            f.log10 = -9.0 - 23.0 * static_cast<double>(ctx.genus);
            f.regime = "char 0, h(E) < 2(g-1)";
        }
    } else {
        const double x = static_cast<double>(ctx.insep);
        if (ctx.chi >= 2 * ctx.insep * (ctx.genus - 1)) {
            f.log10 = -18.0 * x;
            f.regime = "char p, h(E) >= 2 p^r (g-1)";
        } else {
            f.log10 = -36.0 * static_cast<double>(ctx.genus) * x;
            f.regime = "char p, h(E) < 2 p^r (g-1)";
        }
    }
    return f;
}

double log10_phi(double x) {
    const double num = -24.96 * x / std::log(10.0) + std::log10(56 * x * x + 1);
    const double den = std::log10(800 * x * x * x) + std::log10(12 * x + 1) + std::log10(100 * x * x + 1) +
                       std::log10(200 * x * x + 1);
    return num - den;
}

Interval theta(long p) {
    if (p < 0 || p == 1) raise(ErrorCode::InvalidArgument, "theta needs p = 0 or a prime");
    const Interval z = zeta2();
    const mpq_class w = p == 0 ? mpq_class(1) : 1 + mpq_class(1, p);
    return {2 - w * z.hi, 2 - w * z.lo};
}

namespace {

InequalityCheck generic_check(long n, long p, long chi, const mpq_class& pairing, const mpq_class& c3,
                              const std::vector<mpq_class>* totals) {
    if (n < 2) raise(ErrorCode::InvalidArgument, "non-primitivity check needs n > 1");
    if (totals && static_cast<long>(totals->size()) < n) raise(ErrorCode::InvalidArgument, "correction totals too short");
    const bool weighted = p != 0 && n % p == 0;
    const mpq_class hhat = pairing / 2;
    const long dn = weighted ? d_p(n, p) : d(n);
    const long s2 = weighted ? sigma2_p(n, p) : sigma2(n);
    InequalityCheck c;
    c.n = n;
    c.exactCorrections = totals != nullptr;
    mpq_class c1 = 0, c2 = 0;
    if (totals) {
        c1 = (*totals)[static_cast<std::size_t>(n - 1)] / 2;
        for (long m : divisors(n)) {
            if (m == n) continue;
            const long w = weighted ? ipow(p, v_p(n / m, p)) : 1;
            c2 += w * (*totals)[static_cast<std::size_t>(m - 1)] / 2;
        }
    } else {
        c2 = ratio(3 * chi * (dn - 1), 2);
    }
    c.lhs = mpq_class(chi * (dn - 2)) + c1 + mpq_class(n) * n * hhat;
    c.rhs = hhat * (s2 - n * n) + c2 + (weighted ? c3 : mpq_class(0));
    c.refuted = c.lhs > c.rhs;
    return c;
}

}  // namespace

InequalityCheck nonprimitive_rhs_char0(long n, long chi, const mpq_class& pairing, const std::vector<mpq_class>* totals) {
    return generic_check(n, 0, chi, pairing, 0, totals);
}

InequalityCheck nonprimitive_rhs_charp(long n, const BoundContext& ctx, const mpq_class& pairing, const mpq_class& c3,
                                       bool wild, const std::vector<mpq_class>* totals) {
    if (ctx.p <= 3) raise(ErrorCode::BadCharacteristic, "characteristic p > 3 required");
    const long p = static_cast<long>(ctx.p);
    if (wild && n % p == 0 && !ctx.s) {
        raise(ErrorCode::WildWithoutFiniteField, "wild curve: the bound needs the constant field GF(p^s)");
    }
    return generic_check(n, p, ctx.chi, pairing, c3, totals);
}

bool ThresholdInequality::holds(long n) const {
    if (weight == Weight::Power) {
        const double x = static_cast<double>(n);
        const double lhs = down(alpha.lo) * std::pow(x, static_cast<double>(degree));
        const double rhs = up(beta) * std::pow(x, eps) * kSlack + up(gamma);
        return lhs <= rhs;
    }
    const mpz_class nz(n);
    mpz_class np;
    mpz_pow_ui(np.get_mpz_t(), nz.get_mpz_t(), static_cast<unsigned long>(degree));
    const long w = weight == Weight::Linear ? n : d(n);
    return alpha.lo * np <= beta * w + gamma;
}

ThresholdResult threshold_solver(const ThresholdInequality& ineq) {
    const double eps = ineq.weight == ThresholdInequality::Weight::Power ? ineq.eps : 1.0;
    const double a = static_cast<double>(ineq.degree);
    if (sgn(ineq.alpha.lo) <= 0 || a <= eps) {
        raise(ErrorCode::NoCrossover, ineq.name + ": the right side is not dominated");
    }
    const double al = down(ineq.alpha.lo), be = up(ineq.beta), ga = up(ineq.gamma);
    // w(n) <= n^eps, so alpha n^a > beta n^eps + gamma rules n out; the gap is
    // increasing beyond the critical point nc.
    auto dominated = [&](double x) { return al * std::pow(x, a) > (be * std::pow(x, eps) + ga) * kSlack; };
    const double nc = std::pow(std::max(be * eps / (al * a), 0.0), 1.0 / (a - eps));
    long lo = std::max<long>(1, static_cast<long>(std::ceil(nc)) + 1);
    long hi = lo;
    while (!dominated(static_cast<double>(hi))) {
        if (hi > std::numeric_limits<long>::max() / 4) raise(ErrorCode::NoCrossover, ineq.name + ": no crossover found");
        lo = hi;
        hi *= 2;
    }
    while (lo < hi) {
        const long mid = lo + (hi - lo) / 2;
        if (dominated(static_cast<double>(mid))) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    ThresholdResult r;
    r.analyticBound = hi;
    for (long n = 1; n < r.analyticBound; ++n) {
        if (ineq.holds(n)) r.lastHolding = n;
    }
    r.threshold = r.lastHolding + 1;
    r.verifiedUpTo = std::max(r.analyticBound, 4 * r.threshold);
    for (long n = r.analyticBound; n <= r.verifiedUpTo; ++n) {
        if (ineq.holds(n)) {
            raise(ErrorCode::NoCrossover, ineq.name + " holds at " + std::to_string(n) + " beyond the analytic bound");
        }
    }
    return r;
}

namespace {

// Least n0 with theta hhat n^2 > chi + chi/2 n (1 + ln n) + wcap(n) for all n >= n0,
// where wcap(n) = (n - 1) chi in characteristic p and 0 otherwise.
long report_crossover(const mpq_class& theta_lo, const mpq_class& hhat, long chi, bool charp) {
    const double th = down(theta_lo) * down(hhat);
    if (th <= 0) raise(ErrorCode::NoCrossover, "theta * hhat is not positive");
    const double c = static_cast<double>(chi);
    auto refuted = [&](double x) {
        const double rhs = c + c / 2 * x * (1 + std::log(x)) + (charp ? (x - 1) * c : 0.0);
        return th * x * x > rhs * kSlack;
    };
    long lo = std::max<long>(2, static_cast<long>(std::ceil(c / (2 * th))) + 1);
    long hi = lo;
    while (!refuted(static_cast<double>(hi))) {
        if (hi > (1L << 40)) raise(ErrorCode::NoCrossover, "report crossover exceeds 2^40");
        lo = hi;
        hi *= 2;
    }
    while (lo < hi) {
        const long mid = lo + (hi - lo) / 2;
        if (refuted(static_cast<double>(mid))) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return hi;
}

}  // namespace

template <class F>
PrimitivityReport<F> primitivity_report(const AnalyzedCurve<F>& e, const Point<F>& p, long nmax, long depth) {
    const SurfaceData<F> s = e.surface_data();
    const BoundContext ctx = bound_context(e, s);
    PrimitivityReport<F> rep;
    rep.chi = s.chi;
    rep.genus = s.genus;
    rep.nmax = nmax;
    const bool charp = ctx.p != 0;
    const long pl = static_cast<long>(ctx.p);

    std::vector<Poly<F>> extra;
    if constexpr (std::is_same_v<F, PrimeField>) {
        if (charp) {
            const HasseProfile prof = hasse_profile(e, s);
            rep.ordinary = prof.ordinary;
            rep.tame = prof.tame;
            extra = profile_polys(prof);
            long hsum = 0;
            for (const auto& [v, h] : prof.perPlace) hsum += h * v.degree();
            rep.rows.push_back({"hasse_sum", std::to_string((pl - 1) * s.chi), {"char p > 3"},
                                prof.ordinary ? std::optional<bool>(hsum == (pl - 1) * s.chi) : std::nullopt});
        }
    }
    const EdsResult<F> eds = eds_generate(e, p, nmax, extra);
    rep.nonPrimitive = eds.non_primitive();

    const HeightCertificate<F> cert = height_certificate(e, s, p, depth);
    rep.pairing = cert.pairing;
    const mpq_class hhat = cert.pairing / 2;

    rep.rows.push_back({"lang_bound", lang_bound(s.chi).get_str(), {"point of infinite order", "checks 1/<P,P>"},
                        mpq_class(1) / cert.pairing <= mpq_class(lang_bound(s.chi))});
    std::vector<std::string> ps_assume{charp ? "char p, p^r = " + std::to_string(ctx.insep) : "char 0"};
    rep.rows.push_back({"pesenti_szpiro", std::to_string(pesenti_szpiro(ctx)), ps_assume,
                        s.disc_degree <= pesenti_szpiro(ctx)});
    const HeightFloor floor = height_floor(ctx);
    rep.rows.push_back({"height_floor", log10_string(floor.log10), {floor.regime},
                        std::log10(down(hhat / s.chi)) >= floor.log10});

    if (!rep.ordinary) {
        rep.status = "non-ordinary: theorems inapplicable";
        return rep;
    }

    rep.exactCorrections = std::all_of(cert.per_place.begin(), cert.per_place.end(), [](const auto& pc) { return pc.unique; });
    auto correction = [&](long k) {
        mpq_class c = 0;
        for (const auto& pc : cert.per_place) {
            c += pc.place.degree() * correction_value(pc.type, component_multiple(pc.type, pc.candidates.front(), k));
        }
        return c;
    };
    bool capped = true;
    for (const auto& rec : eds.records) {
        const mpq_class c = correction(rec.n);
        if (c > 3 * s.chi) capped = false;
        if (rep.exactCorrections && 2 * rec.degree != rec.n * rec.n * cert.pairing - 2 * s.chi + c) {
            raise(ErrorCode::IdentityViolation, "Shioda identity fails at n=" + std::to_string(rec.n));
        }
    }
    rep.rows.push_back({"correction_cap", std::to_string(3 * s.chi), {"sum_v c_v(nP, nP) for n <= nmax"}, capped});

    if (!rep.tame) {
        rep.status = "wild: threshold needs the constant-field data";
        return rep;
    }

    const Interval th = theta(charp ? pl : 0);
    rep.rows.push_back({"theta", th.lo.get_str() + " .. " + th.hi.get_str(), {charp ? "2 - (1+1/p) zeta(2)" : "2 - zeta(2)"},
                        sgn(th.lo) > 0});
    rep.scanLimit = std::max(nmax, report_crossover(th.lo, hhat, s.chi, charp));

    // Degree of D_{nP}: exact from the identity, or the range [n^2 hhat - chi, n^2 hhat + chi/2].
    auto deg_lower = [&](long n) {
        return rep.exactCorrections ? (n * n * cert.pairing - 2 * s.chi + correction(n)) / 2
                                    : mpq_class(n * n * hhat - s.chi);
    };
    auto deg_upper = [&](long n) {
        return rep.exactCorrections ? deg_lower(n) : mpq_class(n * n * hhat + ratio(s.chi, 2));
    };
    auto refuted = [&](long n) {
        const bool weighted = charp && n % pl == 0;
        mpq_class rhs = weighted ? mpq_class((ipow(pl, v_p(n, pl)) - 1) * s.chi) : mpq_class(0);
        for (long m : divisors(n)) {
            if (m == n) continue;
            rhs += (weighted ? ipow(pl, v_p(n / m, pl)) : 1) * deg_upper(m);
        }
        return deg_lower(n) > rhs;
    };
    bool consistent = true;
    for (long n = 2; n <= rep.scanLimit; ++n) {
        const bool ref = refuted(n);
        if (n <= nmax) {
            if (ref && !eds.records[static_cast<std::size_t>(n - 1)].primitive) consistent = false;
        } else if (!ref) {
            rep.unresolved.push_back(n);
        }
    }
    if (!consistent) raise(ErrorCode::IdentityViolation, "degree refutation contradicts the computed EDS");
    long last = 0;
    for (long n : rep.nonPrimitive) last = std::max(last, n);
    for (long n : rep.unresolved) last = std::max(last, n);
    rep.threshold = last + 1;
    rep.status = "ok";
    rep.rows.push_back({"threshold", std::to_string(*rep.threshold),
                        {"EDS to " + std::to_string(nmax), "degree refutation to " + std::to_string(rep.scanLimit)},
                        rep.unresolved.empty()});
    return rep;
}

#define EDSFN_INSTANTIATE_BOUNDS(F)                                                             \
    template BoundContext bound_context(const AnalyzedCurve<F>&, const SurfaceData<F>&);        \
    template PrimitivityReport<F> primitivity_report(const AnalyzedCurve<F>&, const Point<F>&, long, long);

EDSFN_INSTANTIATE_BOUNDS(RationalField)
EDSFN_INSTANTIATE_BOUNDS(PrimeField)

#undef EDSFN_INSTANTIATE_BOUNDS

}  // namespace edsfn
