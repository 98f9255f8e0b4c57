#ifndef EDSFN_CORE_RATFUNC_HPP
#define EDSFN_CORE_RATFUNC_HPP

#include <string>

#include "poly.hpp"

namespace edsfn {

/// Reduced fraction num/den in K(t): gcd(num, den) = 1, den monic. Zero is 0/1.
template <class F>
class RatFunc {
   public:
    using Element = typename F::Element;
    using P = Poly<F>;

    explicit RatFunc(const F& field) : num_(field), den_(P::constant(field, field.one())) {}
    explicit RatFunc(const P& num) : num_(num), den_(P::constant(num.field(), num.field().one())) {}
    RatFunc(const P& num, const P& den);

    static RatFunc constant(const F& field, const Element& c) { return RatFunc(P::constant(field, c)); }
    static RatFunc from_int(const F& field, long long v) { return constant(field, field.from_int(v)); }
    static RatFunc variable(const F& field) { return RatFunc(P::variable(field)); }

    const F& field() const noexcept { return num_.field(); }
    const P& num() const noexcept { return num_; }
    const P& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFunc inv() const;
    RatFunc pow(long e) const;
    RatFunc scaled(const Element& s) const { return RatFunc(num_.scaled(s), den_, Reduced{}); }

    /// f(1/s) written as a function of s.
    RatFunc at_infinity_chart() const;
    /// f(t^k)
    RatFunc inflate(std::size_t k) const { return RatFunc(num_.inflate(k), den_.inflate(k), Reduced{}); }

    RatFunc operator-() const { return RatFunc(-num_, den_, Reduced{}); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add(a, b, false); }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add(a, b, true); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return mul(a, b); }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return mul(a, b.inv()); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// "num" when den = 1, else "(num)/(den)".
    std::string to_string(const std::string& var = "t") const;

   private:
    struct Reduced {};
    // Takes num/den already coprime and den monic.
    RatFunc(P num, P den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    static RatFunc add(const RatFunc& a, const RatFunc& b, bool subtract);
    static RatFunc mul(const RatFunc& a, const RatFunc& b);

    P num_;
    P den_;
};

}  // namespace edsfn

#endif
