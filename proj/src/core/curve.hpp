#ifndef EDSFN_CORE_CURVE_HPP
#define EDSFN_CORE_CURVE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kodaira.hpp"
#include "place.hpp"

namespace edsfn {

template <class F>
struct Invariants {
    RatFunc<F> b2, b4, b6, b8, c4, c6, disc, j;
};

/// The zero O or an affine point with rational-function coordinates.
template <class F>
struct Point {
    bool infinity = true;
    RatFunc<F> x, y;

    static Point zero(const F& field) { return Point{true, RatFunc<F>(field), RatFunc<F>(field)}; }
    static Point affine(RatFunc<F> x, RatFunc<F> y) { return Point{false, std::move(x), std::move(y)}; }

    friend bool operator==(const Point& a, const Point& b) {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.x == b.x && a.y == b.y;
    }
    std::string to_string() const { return infinity ? "O" : "(" + x.to_string() + ", " + y.to_string() + ")"; }
};

/// x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
template <class F>
struct ModelTransform {
    RatFunc<F> u, r, s, t;

    static ModelTransform identity(const F& field);
    ModelTransform inverse() const;
    /// Apply `this` first, then `next`.
    ModelTransform then(const ModelTransform& next) const;
};

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over K(t).
template <class F>
class Curve {
   public:
    using R = RatFunc<F>;

    Curve(R a1, R a2, R a3, R a4, R a6);
    static Curve short_form(const R& a4, const R& a6);

    const F& field() const noexcept { return a_[0].field(); }
    std::uint64_t characteristic() const noexcept { return field().characteristic(); }
    const R& a1() const noexcept { return a_[0]; }
    const R& a2() const noexcept { return a_[1]; }
    const R& a3() const noexcept { return a_[2]; }
    const R& a4() const noexcept { return a_[3]; }
    const R& a6() const noexcept { return a_[4]; }
    const std::array<R, 5>& coefficients() const noexcept { return a_; }
    const Invariants<F>& inv() const noexcept { return inv_; }

    bool contains(const Point<F>& p) const;
    Curve transformed(const ModelTransform<F>& m) const;
    /// Coordinates of p on transformed(m).
    Point<F> map_point(const ModelTransform<F>& m, const Point<F>& p) const;
    /// The same curve with t replaced by 1/s, written in the variable s.
    Curve at_infinity_chart() const;
    /// Transform to y^2 = x^3 - c4/48 x - c6/864; characteristic must exceed 3.
    ModelTransform<F> to_short() const;

    std::string to_string() const;

   private:
    std::array<R, 5> a_;
    Invariants<F> inv_;
};

template <class F>
Invariants<F> invariants(const Curve<F>& e) {
    return e.inv();
}

/// Valuation data of a curve at one place class.
template <class F>
struct LocalData {
    PlaceClass<F> place;
    long vC4 = 0, vC6 = 0, vDelta = 0;  // of the given model
    long k = 0;                         // scaling u = pi^k to a minimal model
    long vC4min = 0, vC6min = 0, vDeltaMin = 0;
    std::optional<FibreType> type;  // absent in characteristic 2, 3
};

template <class F>
struct MinimalModel {
    Curve<F> model;
    long n_v;
    ModelTransform<F> transform;
};

/// Local minimal model at v. In characteristic 0 or p > 3 this is the short
/// model rescaled by pi^k; in characteristic 2, 3 only the scaling is applied
/// and a finite place with non-integral coefficients is rejected.
template <class F>
MinimalModel<F> minimalize_at(const Curve<F>& e, const PlaceClass<F>& v);

template <class F>
LocalData<F> local_data(const Curve<F>& e, const PlaceClass<F>& v);

template <class F>
struct FibreReport {
    PlaceClass<F> place;
    long vDelta, vC4, vC6;
    FibreType type;
    long m_v, e_v, n_v;
    std::string group;
};

template <class F>
struct SurfaceData {
    long chi = 0;
    std::vector<FibreReport<F>> fibres;
    long conductor_degree = 0;
    long disc_degree = 0;
    mpq_class szpiro;
    long genus = 0;
};

/// A curve together with the place classes where its model is special:
/// the refinement of c4, c6 and the discriminant (or of the coefficients in
/// characteristic 2, 3), plus infinity.
template <class F>
class AnalyzedCurve {
   public:
    explicit AnalyzedCurve(Curve<F> e);

    const Curve<F>& curve() const noexcept { return e_; }
    const F& field() const noexcept { return e_.field(); }
    bool small_characteristic() const noexcept { return e_.characteristic() == 2 || e_.characteristic() == 3; }

    /// All special classes, infinity last.
    const std::vector<LocalData<F>>& locals() const noexcept { return locals_; }
    std::vector<Poly<F>> special_polys() const;
    /// Local data of the special class containing a subclass, or the trivial
    /// record for a class coprime to all of them.
    LocalData<F> local_containing(const PlaceClass<F>& piece) const;

    /// x and y shifted so the minimal model at every place is a rescaling:
    /// the short-model coordinates in characteristic 0 or p > 3, the given
    /// ones in characteristic 2, 3.
    RatFunc<F> minimal_x(const Point<F>& p) const;
    RatFunc<F> minimal_y(const Point<F>& p) const;

    SurfaceData<F> surface_data() const;

   private:
    Curve<F> e_;
    std::vector<LocalData<F>> locals_;
};

/// Largest p^r with j in K(t^{p^r}); 1 in characteristic 0 or for constant j.
template <class F>
long insep_degree_j(const Curve<F>& e);

/// floor(a / b) for b > 0.
inline long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace edsfn

#endif
