#ifndef EDSFN_CORE_POLY_HPP
#define EDSFN_CORE_POLY_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace edsfn {

/// Degree of the zero polynomial.
inline constexpr long kMinusInfinity = std::numeric_limits<long>::min();

/// Dense univariate polynomial in t over a base field. Coefficients are
/// stored in ascending order without trailing zeros, so the zero polynomial
/// has an empty coefficient list.
template <class F>
class Poly {
   public:
    using Field = F;
    using Element = typename F::Element;

    explicit Poly(const F& field) : field_(field) {}
    Poly(const F& field, std::vector<Element> coeffs);

    static Poly constant(const F& field, const Element& c);
    static Poly monomial(const F& field, const Element& c, std::size_t k);
    static Poly variable(const F& field) { return monomial(field, field.one(), 1); }
    static Poly from_ints(const F& field, std::initializer_list<long long> ascending);

    const F& field() const noexcept { return field_; }
    const std::vector<Element>& coeffs() const noexcept { return c_; }

    long degree() const noexcept { return c_.empty() ? kMinusInfinity : static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && field_.is_one(c_[0]); }
    bool is_monic() const { return !c_.empty() && field_.is_one(c_.back()); }

    const Element& lc() const;
    Element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }

    Poly monic() const;
    Poly derivative() const;
    Element eval(const Element& x) const;
    Poly pow(unsigned e) const;
    Poly scaled(const Element& s) const;

    /// f(t^k)
    Poly inflate(std::size_t k) const;
    /// g with f = g(t^k), if f only has exponents divisible by k.
    std::optional<Poly> deflate(std::size_t k) const;
    /// t^n f(1/t); requires n >= deg f.
    Poly reversed(std::size_t n) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }
    friend bool operator==(const Poly& a, const Poly& b) { return a.compare(b) == 0; }
    friend bool operator!=(const Poly& a, const Poly& b) { return a.compare(b) != 0; }

    /// Total order: by degree, then by coefficients from the top down.
    int compare(const Poly& o) const;

    /// Descending-order text such as "t^2+6*t+4".
    std::string to_string(const std::string& var = "t") const;

   private:
    static Poly multiply(const Poly& a, const Poly& b);
    void trim();

    F field_;
    std::vector<Element> c_;
};

/// Quotient and remainder; b must be nonzero.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b);

template <class F>
Poly<F> rem(const Poly<F>& a, const Poly<F>& b);

/// a / b, throwing NotExact when b does not divide a.
template <class F>
Poly<F> div_exact(const Poly<F>& a, const Poly<F>& b);

template <class F>
bool divides(const Poly<F>& b, const Poly<F>& a);

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(const Poly<F>& a, const Poly<F>& b);

/// Squarefree decomposition f = lc * prod s_i^{m_i} with the s_i monic,
/// squarefree, pairwise coprime and non-constant. Correct in characteristic p.
template <class F>
std::vector<std::pair<Poly<F>, long>> squarefree_decomposition(const Poly<F>& f);

/// Monic radical of f.
template <class F>
Poly<F> squarefree_part(const Poly<F>& f);

}  // namespace edsfn

#endif
