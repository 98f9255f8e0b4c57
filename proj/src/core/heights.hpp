#ifndef EDSFN_CORE_HEIGHTS_HPP
#define EDSFN_CORE_HEIGHTS_HPP

#include <vector>

#include "group_law.hpp"

namespace edsfn {

/// Correcting term c_v(P, P) for a point meeting simple component i.
mpq_class correction_value(const FibreType& type, long i);

/// Exponent lcm over the component groups of all bad fibres.
template <class F>
long component_exponent_lcm(const SurfaceData<F>& s);

/// <P, P> = (2 chi + 2 deg D_{LP}) / L^2 with L the component exponent lcm
/// times `multiple`, since LP meets the identity component everywhere.
template <class F>
mpq_class canonical_pairing(const AnalyzedCurve<F>& e, const SurfaceData<F>& s, const Point<F>& p, long multiple = 1);

/// sum_v c_v(nP, nP) = 2 chi + 2 deg D_{nP} - n^2 <P, P>, checked to lie in [0, 3 chi].
mpq_class total_correction(long chi, const mpq_class& pairing, long n, long deg_dn);

template <class F>
struct PlaceCorrection {
    PlaceClass<F> place;
    FibreType type;
    bool singular;                // P reduces to a singular point of the fibre
    mpq_class c;                  // c_v(P, P)
    std::vector<long> candidates; // components consistent with every constraint
    bool unique = true;           // c_v(kP, kP) determined for every k
};

template <class F>
struct HeightCertificate {
    mpq_class pairing;
    mpq_class canonical;
    long naive_degree = 0;
    mpq_class total;  // sum_v c_v(P, P)
    long exponent_lcm = 1;
    long depth = 0;   // constraint depth the solver settled at
    std::vector<PlaceCorrection<F>> per_place;
};

/// Bad fibre classes split so that the reduction of P (integral, singular)
/// is uniform on every piece.
template <class F>
std::vector<PlaceCorrection<F>> bad_pieces(const AnalyzedCurve<F>& e, const SurfaceData<F>& s, const Point<F>& p);

/// Finds the component of P on every bad piece from the identities
/// sum_v deg(v) c_v(kP, kP) = total_correction(k), k = 1..depth. `totals[k-1]`
/// holds the right side. Pieces where P is nonsingular are pinned to 0.
template <class F>
std::vector<PlaceCorrection<F>> component_solver(std::vector<PlaceCorrection<F>> pieces,
                                                 const std::vector<mpq_class>& totals);

/// Full certificate: pairing, EDS degrees to the solver depth, per-place terms.
/// `depth` = 0 picks the exponent lcm; ambiguity doubles it up to 8 times.
template <class F>
HeightCertificate<F> height_certificate(const AnalyzedCurve<F>& e, const SurfaceData<F>& s, const Point<F>& p,
                                        long depth = 0);

/// True iff P meets the identity component at every fibre.
template <class F>
bool identity_component_test(const HeightCertificate<F>& cert) {
    return sgn(cert.total) == 0;
}

/// sum of weighted corrections 4 (multiplicative, I_n*) and 6 (other additive)
/// times deg(v); bounded by 12 chi.
template <class F>
mpq_class weighted_correction_sum(const std::vector<PlaceCorrection<F>>& pieces, long k);

}  // namespace edsfn

#endif
