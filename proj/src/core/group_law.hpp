#ifndef EDSFN_CORE_GROUP_LAW_HPP
#define EDSFN_CORE_GROUP_LAW_HPP

#include <functional>
#include <vector>

#include "curve.hpp"

namespace edsfn {

template <class F>
Point<F> negate(const Curve<F>& e, const Point<F>& p);

template <class F>
Point<F> add(const Curve<F>& e, const Point<F>& p, const Point<F>& q);

/// n * P by double-and-add; negative n allowed.
template <class F>
Point<F> multiply(const Curve<F>& e, long n, const Point<F>& p);

/// Throws PointNotOnCurve unless p lies on e.
template <class F>
void require_on_curve(const Curve<F>& e, const Point<F>& p);

/// D_P: for each place, max(0, -ord(x_v)/2) with x_v the x-coordinate in a
/// model minimal at that place. Classes are split against the curve's special
/// classes and against `extra_split`.
template <class F>
Divisor<F> denominator_divisor(const AnalyzedCurve<F>& e, const Point<F>& p,
                               const std::vector<Poly<F>>& extra_split = {});

template <class F>
struct EdsRecord {
    long n;
    Divisor<F> divisor;
    long degree;
    bool primitive;
    std::vector<PlaceClass<F>> new_places;
};

template <class F>
struct MeetingIndex {
    PlaceClass<F> place;
    long m;
};

template <class F>
struct EdsResult {
    std::vector<EdsRecord<F>> records;  // records[i].n == i + 1
    std::vector<MeetingIndex<F>> meetings;

    /// Meeting index of the meeting class containing `piece`, or 0.
    long meeting_index(const PlaceClass<F>& piece) const;
    /// Indices n > 1 with D_n non-primitive. D_1 = 0 is left out.
    std::vector<long> non_primitive() const;
};

/// D_{nP} for n = 1..nmax via nP = (n-1)P + P, with incremental support
/// tracking through a running radical. In characteristic 0 the valuation at
/// each place is checked to be constant along its multiples.
/// `on_point`, when set, sees every multiple.
template <class F>
EdsResult<F> eds_generate(const AnalyzedCurve<F>& e, const Point<F>& p, long nmax,
                          const std::vector<Poly<F>>& extra_split = {},
                          const std::function<void(long, const Point<F>&)>& on_point = {});

/// Multiplicity in d of the class containing `piece` (which must lie inside
/// a single class of d or be coprime to all of them).
template <class F>
long multiplicity_on(const Divisor<F>& d, const PlaceClass<F>& piece);

}  // namespace edsfn

#endif
