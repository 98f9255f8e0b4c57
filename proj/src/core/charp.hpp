#ifndef EDSFN_CORE_CHARP_HPP
#define EDSFN_CORE_CHARP_HPP

#include <map>
#include <optional>
#include <vector>

#include "heights.hpp"

namespace edsfn {

using PF = PrimeField;

/// Largest characteristic accepted by the Hasse routines.
inline constexpr std::uint64_t kMaxHasseCharacteristic = 101;

struct HasseProfile {
    RatFunc<PF> globalH;
    std::map<PlaceClass<PF>, long> perPlace;  // nonzero h_{E,v} only
    bool ordinary = false;
    bool tame = false;
};

/// Coefficient of x^{p-1} in (x^3 + A x + B)^{(p-1)/2} for the short model
/// A = -c4/48, B = -c6/864. Nonzero iff E is ordinary.
RatFunc<PF> hasse_invariant(const Curve<PF>& e);

/// h_{E,v} = ord_v(H) - (p-1) n_v on a refinement fine enough that both terms
/// are constant, zeros dropped. Checks h >= 0 and sum h deg(v) = (p-1) chi.
std::map<PlaceClass<PF>, long> hasse_valuations(const AnalyzedCurve<PF>& e, const SurfaceData<PF>& s,
                                                const RatFunc<PF>& h);

/// H, the h values when ordinary, and the ordinary / tame tags.
HasseProfile hasse_profile(const AnalyzedCurve<PF>& e, const SurfaceData<PF>& s);

/// h_{E,v} at a piece of a profile class (0 off the support).
long hasse_at(const HasseProfile& profile, const PlaceClass<PF>& piece);

/// Smallest k >= 0 with p^k (2p - 1) >= p + (p-1)^2 chi.
long wild_threshold(std::uint64_t p, long chi);

/// v_p(n) for n > 0.
long p_adic_valuation(long n, std::uint64_t p);

struct OrdPrediction {
    long m_v = 0;
    long e = 0;                  // v_p(n / m_v); -1 when m_v does not divide n
    bool exact = true;
    long lower = 0, upper = 0;   // equal when exact
    mpq_class deltaLower, deltaUpper;  // bounds on delta(min(e, k)), wild only
};

/// Predicted ord_v(D_{nP}) from m(v), ord_v(D_{m(v)P}) and h_{E,v}. The wild
/// branch needs chi and the canonical height hhat(P) for the delta bounds.
OrdPrediction predict_ord(std::uint64_t p, long h, long m_v, long ord_dm, long n, long chi, const mpq_class& hhat);

struct OrdCheck {
    long n;
    PlaceClass<PF> place;
    long h;
    long actual;
    OrdPrediction predicted;
};

/// Compares every ord_v(D_{nP}), n <= eds length, against predict_ord; raises
/// RecursionViolation at the first mismatch. `eds` must be generated with the
/// profile classes as extra splitters.
std::vector<OrdCheck> verify_ord_recursion(const HasseProfile& profile, const EdsResult<PF>& eds, long chi,
                                           const mpq_class& hhat);

/// Extra splitters that make EDS classes coherent with the profile.
std::vector<Poly<PF>> profile_polys(const HasseProfile& profile);

struct MeetingCheck {
    PlaceClass<PF> place;
    long h;
    std::string reduction;  // "good", "multiplicative", "additive"
    long m_v;               // 0 when not met within the EDS range
    bool ok;
};

/// For every v with h_{E,v} > 0: good reduction forces p not dividing m(v),
/// additive reduction forces m(v) | 12p, multiplicative reduction cannot occur.
/// Raises ConstraintViolation.
std::vector<MeetingCheck> meeting_constraints(const AnalyzedCurve<PF>& e, const HasseProfile& profile,
                                              const EdsResult<PF>& eds);

struct WLedger {
    long n = 0;
    long e = 0;        // v_p(n)
    long degW = 0;     // exact
    mpq_class bound;   // tame or wild bound for deg W
    bool tame = true;
};

/// deg W(E,P,n) = sum over v in Supp D_{nP} with m(v) < n of
/// (ord_v D_{nP} - p^{v_p(n/m(v))} ord_v D_{m(v)P}) deg v, against the tame
/// bound (p^e - 1) chi or the two wild bounds. Raises BoundViolation.
WLedger w_ledger(const AnalyzedCurve<PF>& e, const HasseProfile& profile, const EdsResult<PF>& eds, long chi,
                 const mpq_class& hhat, long n);

}  // namespace edsfn

#endif
