#ifndef EDSFN_TESTS_FIXTURES_HPP
#define EDSFN_TESTS_FIXTURES_HPP

#include "bounds.hpp"
#include "charp.hpp"
#include "golden.hpp"

namespace edsfn::testfix {

inline const LoadedCurve<PrimeField>& prime_fixture(const std::string& id) {
    static std::map<std::string, AnyCurve> cache;
    auto it = cache.find(id);
    if (it == cache.end()) it = cache.emplace(id, load_fixture_curve(id, default_fixture_dir())).first;
    return std::get<LoadedCurve<PrimeField>>(it->second);
}

}  // namespace edsfn::testfix

#endif
