#include "field.hpp"

namespace edsfn {

bool is_prime_u64(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 31)) raise(ErrorCode::InvalidArgument, "modulus must be below 2^31");
    if (!is_prime_u64(p)) raise(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::from_mpz(const mpz_class& z) const {
    mpz_class r = z % mpz_class(static_cast<unsigned long>(p_));
    if (r < 0) r += static_cast<unsigned long>(p_);
    return r.get_ui();
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
    Element den = from_mpz(q.get_den());
    if (den == 0) raise(ErrorCode::ZeroInput, "denominator " + q.get_den().get_str() + " vanishes in " + name());
    return mul(from_mpz(q.get_num()), inv(den));
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const {
    Element r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0) raise(ErrorCode::ZeroInput, "inverse of zero in " + name());
    // extended Euclid on signed values
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p_), new_r = static_cast<long long>(a);
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<long long>(p_);
    return static_cast<Element>(t);
}

}  // namespace edsfn
