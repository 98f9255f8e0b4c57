#ifndef EDSFN_CORE_PLACE_HPP
#define EDSFN_CORE_PLACE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ratfunc.hpp"

namespace edsfn {

/// A Galois-stable set of points of P^1: the roots of a squarefree monic
/// polynomial, or the point at infinity. Classes in one working set are
/// pairwise coprime.
template <class F>
class PlaceClass {
   public:
    using P = Poly<F>;

    static PlaceClass finite(const P& poly);
    static PlaceClass infinity(const F& field) { return PlaceClass(P(field)); }

    bool is_infinity() const noexcept { return poly_.is_zero(); }
    /// Defining polynomial; only meaningful for finite classes.
    const P& poly() const noexcept { return poly_; }
    long degree() const noexcept { return is_infinity() ? 1 : poly_.degree(); }

    /// Finite classes by (degree, coefficients), infinity last.
    int compare(const PlaceClass& o) const;
    friend bool operator<(const PlaceClass& a, const PlaceClass& b) { return a.compare(b) < 0; }
    friend bool operator==(const PlaceClass& a, const PlaceClass& b) { return a.compare(b) == 0; }
    friend bool operator!=(const PlaceClass& a, const PlaceClass& b) { return a.compare(b) != 0; }

    /// "t^2+6*t+4" or "inf".
    std::string to_string() const { return is_infinity() ? "inf" : poly_.to_string(); }

   private:
    explicit PlaceClass(P poly) : poly_(std::move(poly)) {}
    P poly_;  // zero marks infinity
};

/// Multiplicity of the class in f; for finite classes it must be the same at
/// every root (NonUniformPlace otherwise).
template <class F>
long ord_at(const RatFunc<F>& f, const PlaceClass<F>& v);

/// Multiplicity of a squarefree class in a nonzero polynomial.
template <class F>
long ord_at(const Poly<F>& f, const PlaceClass<F>& v);

/// Coprime squarefree refinement of the roots of the inputs; each input has
/// constant multiplicity along every returned class. Sorted, never contains
/// infinity.
template <class F>
std::vector<PlaceClass<F>> refine_places(const std::vector<Poly<F>>& polys);

/// Splits `classes` against `against` so that every output class is either
/// contained in or coprime to each class of `against`.
template <class F>
std::vector<PlaceClass<F>> split_classes(const std::vector<PlaceClass<F>>& classes,
                                         const std::vector<Poly<F>>& against);

/// Splits classes so that min(max(ord f, -cap), cap) is constant on each piece.
template <class F>
std::vector<PlaceClass<F>> split_by_valuation(const std::vector<PlaceClass<F>>& classes, const RatFunc<F>& f, long cap);

/// ord_v(f) clamped to [-cap, cap]; cap for f = 0.
template <class F>
long capped_ord_at(const RatFunc<F>& f, const PlaceClass<F>& v, long cap);

template <class F>
class Divisor {
   public:
    using Map = std::map<PlaceClass<F>, long>;

    Divisor() = default;
    explicit Divisor(Map entries);

    const Map& entries() const noexcept { return entries_; }
    bool is_zero() const noexcept { return entries_.empty(); }
    long at(const PlaceClass<F>& v) const;
    void add_at(const PlaceClass<F>& v, long m);

    Divisor& operator+=(const Divisor& o);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a += b.scaled(-1); }
    friend bool operator==(const Divisor& a, const Divisor& b) { return a.entries_ == b.entries_; }
    Divisor scaled(long k) const;

    long degree() const;
    std::vector<PlaceClass<F>> support() const;
    bool is_effective() const;

    /// Every support class lies in the union of `s`. With refine = false the
    /// classes must be coherent (equal or coprime) or IncoherentPlaces is raised.
    bool support_contained(const std::vector<PlaceClass<F>>& s, bool refine = true) const;

    /// "1*(t^2+6*t+4) + 5*(inf)", or "0".
    std::string to_string() const;

   private:
    Map entries_;
};

}  // namespace edsfn

#endif
