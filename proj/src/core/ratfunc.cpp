#include "ratfunc.hpp"

namespace edsfn {

template <class F>
RatFunc<F>::RatFunc(const P& num, const P& den) : num_(num), den_(den) {
    if (den.is_zero()) raise(ErrorCode::ZeroInput, "rational function with zero denominator");
    const F& f = num.field();
    if (num_.is_zero()) {
        den_ = P::constant(f, f.one());
        return;
    }
    P g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = div_exact(num_, g);
        den_ = div_exact(den_, g);
    }
    if (!den_.is_monic()) {
        const Element s = f.inv(den_.lc());
        num_ = num_.scaled(s);
        den_ = den_.scaled(s);
    }
}

template <class F>
RatFunc<F> RatFunc<F>::inv() const {
    if (num_.is_zero()) raise(ErrorCode::ZeroInput, "inverse of the zero rational function");
    const Element s = field().inv(num_.lc());
    return RatFunc(den_.scaled(s), num_.scaled(s), Reduced{});
}

template <class F>
RatFunc<F> RatFunc<F>::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Reduced{});
}

template <class F>
RatFunc<F> RatFunc<F>::at_infinity_chart() const {
    if (num_.is_zero()) return *this;
    const std::size_t dn = static_cast<std::size_t>(num_.degree());
    const std::size_t dd = static_cast<std::size_t>(den_.degree());
    const F& f = field();
    P n = num_.reversed(dn);
    P d = den_.reversed(dd);
    if (dd > dn) n = n * P::monomial(f, f.one(), dd - dn);
    if (dn > dd) d = d * P::monomial(f, f.one(), dn - dd);
    return RatFunc(n, d);
}

// Henrici: only the gcds of the denominators and of the cross terms are taken.
template <class F>
RatFunc<F> RatFunc<F>::add(const RatFunc& a, const RatFunc& b, bool subtract) {
    const P bn = subtract ? -b.num_ : b.num_;
    if (a.is_zero()) return RatFunc(bn, b.den_, Reduced{});
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + bn, a.den_, Reduced{});
    const P g = gcd(a.den_, b.den_);
    if (g.is_one()) {
        return RatFunc(a.num_ * b.den_ + bn * a.den_, a.den_ * b.den_, Reduced{});
    }
    const P ad = div_exact(a.den_, g);
    const P bd = div_exact(b.den_, g);
    P num = a.num_ * bd + bn * ad;
    P den = ad * b.den_;
    if (num.is_zero()) return RatFunc(a.field());
    const P h = gcd(num, g);
    if (!h.is_one()) {
        num = div_exact(num, h);
        den = div_exact(den, h);
    }
    return RatFunc(std::move(num), std::move(den), Reduced{});
}

template <class F>
RatFunc<F> RatFunc<F>::mul(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc(a.field());
    const P g1 = gcd(a.num_, b.den_);
    const P g2 = gcd(b.num_, a.den_);
    P n1 = g1.is_one() ? a.num_ : div_exact(a.num_, g1);
    P d2 = g1.is_one() ? b.den_ : div_exact(b.den_, g1);
    P n2 = g2.is_one() ? b.num_ : div_exact(b.num_, g2);
    P d1 = g2.is_one() ? a.den_ : div_exact(a.den_, g2);
    // g1, g2 are monic, so den stays monic.
    return RatFunc(n1 * n2, d1 * d2, Reduced{});
}

template <class F>
std::string RatFunc<F>::to_string(const std::string& var) const {
    if (den_.is_one()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

template class RatFunc<RationalField>;
template class RatFunc<PrimeField>;

}  // namespace edsfn
