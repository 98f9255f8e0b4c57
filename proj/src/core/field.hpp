#ifndef EDSFN_CORE_FIELD_HPP
#define EDSFN_CORE_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "error.hpp"

namespace edsfn {

bool is_prime_u64(std::uint64_t n) noexcept;

/// Exact rationals backed by GMP.
class RationalField {
   public:
    using Element = mpq_class;

    std::uint64_t characteristic() const noexcept { return 0; }
    std::string name() const { return "Q"; }

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_int(long long v) const { return Element(mpz_class(std::to_string(v))); }
    Element from_rational(const mpq_class& q) const { return q; }

    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool is_one(const Element& a) const { return a == 1; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    int compare(const Element& a, const Element& b) const { return cmp(a, b); }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const {
        if (sgn(a) == 0) raise(ErrorCode::ZeroInput, "inverse of zero");
        return Element(1) / a;
    }
    Element div(const Element& a, const Element& b) const { return a * inv(b); }

    // Characteristic zero has no Frobenius; callers only use this in char p.
    Element pth_root(const Element& a) const { return a; }

    std::string to_string(const Element& a) const { return a.get_str(); }
    mpq_class lift(const Element& a) const { return a; }

    bool operator==(const RationalField&) const noexcept { return true; }
};

/// The prime field GF(p) for 2 <= p < 2^31, elements stored reduced in [0, p).
class PrimeField {
   public:
    using Element = std::uint64_t;

    explicit PrimeField(std::uint64_t p);

    std::uint64_t characteristic() const noexcept { return p_; }
    std::uint64_t modulus() const noexcept { return p_; }
    std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        return static_cast<Element>(r < 0 ? r + static_cast<long long>(p_) : r);
    }
    Element from_mpz(const mpz_class& z) const;
    Element from_rational(const mpq_class& q) const;

    bool is_zero(Element a) const { return a == 0; }
    bool is_one(Element a) const { return a == 1; }
    bool equal(Element a, Element b) const { return a == b; }
    int compare(Element a, Element b) const { return a < b ? -1 : (a > b ? 1 : 0); }

    Element add(Element a, Element b) const {
        Element s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const { return (a * b) % p_; }
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, std::uint64_t e) const;

    // Frobenius is the identity on GF(p).
    Element pth_root(Element a) const { return a; }

    std::string to_string(Element a) const { return std::to_string(a); }
    mpq_class lift(Element a) const { return mpq_class(static_cast<unsigned long>(a)); }

    bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

   private:
    std::uint64_t p_;
};

}  // namespace edsfn

#endif
