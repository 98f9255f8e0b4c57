#ifndef EDSFN_CORE_BOUNDS_HPP
#define EDSFN_CORE_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "heights.hpp"

namespace edsfn {

struct BoundContext {
    long chi = 0;
    long genus = 0;
    std::uint64_t p = 0;  // 0 in characteristic 0
    long insep = 1;       // p^r, the inseparable degree of j; 1 for char 0 or constant j
    std::optional<long> s;  // constant field GF(p^s), when known
    long disc_degree = 0;
    long conductor_degree = 0;
    mpq_class szpiro;
};

template <class F>
BoundContext bound_context(const AnalyzedCurve<F>& e, const SurfaceData<F>& s);

struct BoundReport {
    std::string name;
    std::string value;
    std::vector<std::string> assumptions;
    std::optional<bool> satisfied;
};

/// 24 * 3^{4 chi}, a cap on 1/<P, P>.
mpz_class lang_bound(long chi);

/// 6 p^r (2g - 2 + deg N_E), with p^r = 1 in characteristic 0 or for constant j.
long pesenti_szpiro(const BoundContext& ctx);

/// Raw lower bound on hhat(P) / h(E); nonpositive when M, N are too small for sigma.
mpq_class hindry_silverman_raw(const mpq_class& sigma, long m, long n);

struct HeightFloor {
    double log10 = 0;  // the floor is 10^log10 times h(E) = chi
    std::string regime;
};

/// 10^-15.5 or 10^{-9-23g} in characteristic 0, 10^{-18 p^r} or 10^{-36 g p^r} in characteristic p.
HeightFloor height_floor(const BoundContext& ctx);

/// log10 of phi(x) = e^{-24.96x}(56x^2+1) / (800x^3(12x+1)(100x^2+1)(200x^2+1)).
double log10_phi(double x);

/// 2 - (1 + 1/p) zeta(2); p = 0 gives 2 - zeta(2).
Interval theta(long p);

struct InequalityCheck {
    long n = 0;
    mpq_class lhs, rhs;
    bool refuted = false;  // lhs > rhs: D_{nP} must have a primitive valuation
    bool exactCorrections = false;
};

/// chi (d(n) - 2) + C1 + n^2 hhat <= hhat (sigma2(n) - n^2) + C2. `totals[k-1]` is
/// sum_v c_v(kP, kP) for k <= n when known; otherwise C1 = 0 and
/// C2 = 3/2 chi (d(n) - 1).
InequalityCheck nonprimitive_rhs_char0(long n, long chi, const mpq_class& pairing,
                                       const std::vector<mpq_class>* totals = nullptr);

/// Characteristic p version: p not dividing n is the char 0 form; otherwise
/// chi (d_p(n) - 2) + C1 + n^2 hhat <= hhat (sigma2_p(n) - n^2) + C2 + C3 with
/// p-weighted C2 and C3 = cap on deg W. Wild curves need the constant field.
InequalityCheck nonprimitive_rhs_charp(long n, const BoundContext& ctx, const mpq_class& pairing, const mpq_class& c3,
                                       bool wild, const std::vector<mpq_class>* totals = nullptr);

/// alpha n^a <= beta w(n) + gamma, where w is n, d(n) or n^eps.
struct ThresholdInequality {
    enum class Weight { Linear, DivisorCount, Power };
    std::string name;
    Interval alpha;  // the lower end is used, so "holds" is conservative
    long degree = 2;
    mpq_class beta;
    Weight weight = Weight::Linear;
    double eps = 1.0;
    mpq_class gamma = 0;

    /// True when the inequality can hold at n (non-primitivity not excluded).
    bool holds(long n) const;
};

struct ThresholdResult {
    long threshold = 1;      // fails for every n >= threshold
    long lastHolding = 0;    // 0 when it never holds
    long analyticBound = 0;  // fails for every n >= analyticBound by monotone domination
    long verifiedUpTo = 0;   // direct evaluation covered [1, verifiedUpTo]
};

ThresholdResult threshold_solver(const ThresholdInequality& ineq);

template <class F>
struct PrimitivityReport {
    long chi = 0;
    long genus = 0;
    mpq_class pairing;
    std::string status;  // "ok", "non-ordinary: theorems inapplicable", "wild: ..."
    bool ordinary = true;
    bool tame = true;
    long nmax = 0;
    std::vector<long> nonPrimitive;  // from the computed EDS, n > 1
    std::vector<long> unresolved;    // n > nmax where degree refutation fails
    std::optional<long> threshold;
    long scanLimit = 0;
    bool exactCorrections = false;
    std::vector<BoundReport> rows;
};

/// EDS to nmax, then degree-wise refutation from the Shioda identity with
/// periodic corrections up to an analytic crossover.
template <class F>
PrimitivityReport<F> primitivity_report(const AnalyzedCurve<F>& e, const Point<F>& p, long nmax, long depth = 0);

}  // namespace edsfn

#endif
