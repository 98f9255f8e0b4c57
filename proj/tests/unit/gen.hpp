#ifndef EDSFN_TESTS_GEN_HPP
#define EDSFN_TESTS_GEN_HPP

#include <random>

#include "place.hpp"

namespace edsfn::testgen {

inline PrimeField::Element random_elem(const PrimeField& f, std::mt19937_64& rng) {
    return std::uniform_int_distribution<std::uint64_t>(0, f.modulus() - 1)(rng);
}

inline RationalField::Element random_elem(const RationalField&, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    return mpq_class(num(rng), den(rng));
}

template <class F>
Poly<F> random_poly(const F& f, std::mt19937_64& rng, int max_deg) {
    int d = std::uniform_int_distribution<int>(0, max_deg)(rng);
    std::vector<typename F::Element> c;
    for (int i = 0; i <= d; ++i) c.push_back(random_elem(f, rng));
    if (f.is_zero(c.back())) c.back() = f.one();
    return Poly<F>(f, c);
}

// Product of small random factors raised to random powers, so that
// multiplicities above one actually occur.
template <class F>
Poly<F> random_factored(const F& f, std::mt19937_64& rng, int factors) {
    Poly<F> r = Poly<F>::constant(f, f.one());
    for (int i = 0; i < factors; ++i) {
        Poly<F> q = random_poly(f, rng, 2);
        if (q.degree() <= 0) continue;
        r = r * q.pow(std::uniform_int_distribution<unsigned>(1, 3)(rng));
    }
    return r;
}

}  // namespace edsfn::testgen

#endif
