#include "charp.hpp"

#include "arith.hpp"

#include <algorithm>

namespace edsfn {

namespace {

long checked_pow(long base, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(r, base, &r)) raise(ErrorCode::Overflow, "power overflows 64 bits");
    }
    return r;
}

mpz_class floor_q(const mpq_class& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

long to_long(const mpz_class& z) {
    if (!z.fits_slong_p()) raise(ErrorCode::Overflow, "value exceeds 64 bits");
    return z.get_si();
}

std::uint64_t checked_characteristic(const PF& f) {
    const std::uint64_t p = f.characteristic();
    if (p <= 3) raise(ErrorCode::BadCharacteristic, "Hasse invariant needs characteristic p > 3");
    if (p > kMaxHasseCharacteristic) {
        raise(ErrorCode::InvalidArgument, "characteristic " + std::to_string(p) + " exceeds the Hasse guard " +
                                              std::to_string(kMaxHasseCharacteristic));
    }
    return p;
}

// Classes of eds divisor entry v cut along the meeting classes.
std::vector<PlaceClass<PF>> meeting_pieces(const EdsResult<PF>& eds, const PlaceClass<PF>& v) {
    if (v.is_infinity()) return {v};
    std::vector<Poly<PF>> mpolys;
    for (const auto& mi : eds.meetings) {
        if (!mi.place.is_infinity()) mpolys.push_back(mi.place.poly());
    }
    return split_classes<PF>({v}, mpolys);
}

}  // namespace

RatFunc<PF> hasse_invariant(const Curve<PF>& e) {
    const PF& f = e.field();
    const std::uint64_t p = checked_characteristic(f);
    using R = RatFunc<PF>;
    const R a = -e.inv().c4 / R::from_int(f, 48);
    const R b = -e.inv().c6 / R::from_int(f, 864);
    const long m = static_cast<long>((p - 1) / 2);
    std::vector<PF::Element> fact(static_cast<std::size_t>(m) + 1, f.one());
    for (long i = 1; i <= m; ++i) fact[static_cast<std::size_t>(i)] = f.mul(fact[static_cast<std::size_t>(i - 1)], f.from_int(i));
    auto at = [&](long i) { return fact[static_cast<std::size_t>(i)]; };
    // (x^3)^i (A x)^j B^l with i + j + l = m and 3i + j = p - 1.
    R h(f);
    for (long i = 0; 3 * i <= static_cast<long>(p) - 1; ++i) {
        const long j = static_cast<long>(p) - 1 - 3 * i;
        const long l = m - i - j;
        if (l < 0) continue;
        const PF::Element coef = f.div(at(m), f.mul(at(i), f.mul(at(j), at(l))));
        h = h + (a.pow(j) * b.pow(l)).scaled(coef);
    }
    return h;
}

std::map<PlaceClass<PF>, long> hasse_valuations(const AnalyzedCurve<PF>& e, const SurfaceData<PF>& s,
                                                const RatFunc<PF>& h) {
    if (h.is_zero()) raise(ErrorCode::NotOrdinary, "the Hasse invariant vanishes");
    const long pm1 = static_cast<long>(checked_characteristic(e.field())) - 1;
    std::vector<Poly<PF>> polys{h.num(), h.den()};
    for (const auto& sp : e.special_polys()) {
        if (!sp.is_zero()) polys.push_back(sp);
    }
    std::vector<PlaceClass<PF>> classes = refine_places(polys);
    classes.push_back(PlaceClass<PF>::infinity(e.field()));

    std::map<PlaceClass<PF>, long> out;
    long sum = 0;
    for (const auto& v : classes) {
        const long hv = ord_at(h, v) - pm1 * e.local_containing(v).k;
        if (hv < 0) {
            raise(ErrorCode::NegativeHasseValuation, "h = " + std::to_string(hv) + " at " + v.to_string());
        }
        if (hv != 0) out.emplace(v, hv);
        sum += hv * v.degree();
    }
    if (sum != pm1 * s.chi) {
        raise(ErrorCode::SumMismatch, "sum of h is " + std::to_string(sum) + ", expected (p-1) chi = " +
                                          std::to_string(pm1 * s.chi));
    }
    return out;
}

HasseProfile hasse_profile(const AnalyzedCurve<PF>& e, const SurfaceData<PF>& s) {
    HasseProfile prof{hasse_invariant(e.curve()), {}, false, false};
    prof.ordinary = !prof.globalH.is_zero();
    if (!prof.ordinary) return prof;
    prof.perPlace = hasse_valuations(e, s, prof.globalH);
    const long pm1 = static_cast<long>(e.field().characteristic()) - 1;
    prof.tame = std::all_of(prof.perPlace.begin(), prof.perPlace.end(), [&](const auto& kv) { return kv.second <= pm1; });
    return prof;
}

long hasse_at(const HasseProfile& profile, const PlaceClass<PF>& piece) {
    for (const auto& [c, h] : profile.perPlace) {
        if (c.is_infinity() || piece.is_infinity()) {
            if (c.is_infinity() && piece.is_infinity()) return h;
            continue;
        }
        const Poly<PF> g = gcd(c.poly(), piece.poly());
        if (g.is_one()) continue;
        if (g.degree() != piece.degree()) {
            raise(ErrorCode::IncoherentPlaces, piece.to_string() + " straddles Hasse class " + c.to_string());
        }
        return h;
    }
    return 0;
}

std::vector<Poly<PF>> profile_polys(const HasseProfile& profile) {
    std::vector<Poly<PF>> out;
    for (const auto& [c, h] : profile.perPlace) {
        if (!c.is_infinity()) out.push_back(c.poly());
    }
    return out;
}

long wild_threshold(std::uint64_t p, long chi) {
    const mpz_class pz(static_cast<unsigned long>(p));
    const mpz_class target = pz + (pz - 1) * (pz - 1) * chi;
    long k = 0;
    mpz_class pk = 1;
    while (pk * (2 * pz - 1) < target) {
        pk *= pz;
        ++k;
    }
    return k;
}

long p_adic_valuation(long n, std::uint64_t p) {
    if (n <= 0) raise(ErrorCode::InvalidArgument, "p-adic valuation of a nonpositive integer");
    const long pl = static_cast<long>(p);
    long e = 0;
    while (n % pl == 0) {
        n /= pl;
        ++e;
    }
    return e;
}

OrdPrediction predict_ord(std::uint64_t p, long h, long m_v, long ord_dm, long n, long chi, const mpq_class& hhat) {
    if (m_v < 1 || n < 1) raise(ErrorCode::InvalidArgument, "meeting index and n must be positive");
    OrdPrediction out;
    out.m_v = m_v;
    if (n % m_v != 0) {
        out.e = -1;
        return out;
    }
    const long pl = static_cast<long>(p);
    out.e = p_adic_valuation(n / m_v, p);
    const long pe = checked_pow(pl, out.e);
    const long base = pe * ord_dm;
    if (h <= pl - 1 || out.e == 0) {
        // delta(0) = 0, so the wild branch is exact at e = 0 too.
        out.lower = out.upper = base + (pe - 1) / (pl - 1) * h;
        return out;
    }
    const long k = wild_threshold(p, chi);
    const long ek = std::min(out.e, k);
    const long pk = checked_pow(pl, ek);
    out.exact = false;
    out.deltaLower = mpq_class(pl * (pk - 1) / (pl - 1));
    out.deltaUpper = mpq_class(pk) * pk * m_v * m_v * hhat + ratio(chi, 2) - pk;
    if (out.e <= k) {
        out.lower = base + to_long(floor_q(out.deltaLower));
        out.upper = base + to_long(floor_q(out.deltaUpper));
    } else {
        const long pek = checked_pow(pl, out.e - k);
        const long tail = (pek - 1) / (pl - 1) * h;
        out.lower = base + tail + pek * to_long(floor_q(out.deltaLower));
        out.upper = base + tail + to_long(floor_q(pek * out.deltaUpper));
    }
    return out;
}

std::vector<OrdCheck> verify_ord_recursion(const HasseProfile& profile, const EdsResult<PF>& eds, long chi,
                                           const mpq_class& hhat) {
    if (!profile.ordinary) raise(ErrorCode::NotOrdinary, "order recursion needs an ordinary curve");
    const std::uint64_t p = profile.globalH.field().characteristic();
    std::vector<OrdCheck> out;
    for (const auto& rec : eds.records) {
        const long n = rec.n;
        for (const auto& [v, ord] : rec.divisor.entries()) {
            for (const auto& piece : meeting_pieces(eds, v)) {
                const long m = eds.meeting_index(piece);
                const long d0 = multiplicity_on(eds.records[static_cast<std::size_t>(m - 1)].divisor, piece);
                const long h = hasse_at(profile, piece);
                OrdPrediction pred = predict_ord(p, h, m, d0, n, chi, hhat);
                if (ord < pred.lower || ord > pred.upper) {
                    raise(ErrorCode::RecursionViolation,
                          "ord at " + piece.to_string() + " for n=" + std::to_string(n) + " is " + std::to_string(ord) +
                              ", predicted [" + std::to_string(pred.lower) + ", " + std::to_string(pred.upper) + "]");
                }
                out.push_back({n, piece, h, ord, std::move(pred)});
            }
        }
        // Every class met at a divisor m of n must reappear in D_{nP}.
        for (const auto& mi : eds.meetings) {
            if (mi.m > n || n % mi.m != 0) continue;
            bool covered = true;
            if (mi.place.is_infinity()) {
                covered = rec.divisor.at(mi.place) > 0;
            } else {
                Poly<PF> rest = mi.place.poly();
                for (const auto& [v, ord] : rec.divisor.entries()) {
                    if (!v.is_infinity()) rest = div_exact(rest, gcd(rest, v.poly()));
                }
                covered = rest.degree() == 0;
            }
            if (!covered) {
                raise(ErrorCode::RecursionViolation, mi.place.to_string() + " met at n=" + std::to_string(mi.m) +
                                                         " is missing from D_{nP} at n=" + std::to_string(n));
            }
        }
    }
    return out;
}

std::vector<MeetingCheck> meeting_constraints(const AnalyzedCurve<PF>& e, const HasseProfile& profile,
                                              const EdsResult<PF>& eds) {
    const long p = static_cast<long>(e.field().characteristic());
    std::vector<MeetingCheck> out;
    for (const auto& [c, h] : profile.perPlace) {
        const LocalData<PF> loc = e.local_containing(c);
        const FibreType type = loc.type.value_or(FibreType{});
        const std::string red = type.is_good() ? "good" : (type.is_multiplicative() ? "multiplicative" : "additive");
        auto check = [&](const PlaceClass<PF>& piece, long m) {
            bool ok = true;
            if (type.is_multiplicative()) {
                ok = false;
            } else if (m > 0) {
                ok = type.is_good() ? m % p != 0 : (12 * p) % m == 0;
            }
            if (!ok) {
                raise(ErrorCode::ConstraintViolation, red + " reduction at " + piece.to_string() + " with h=" +
                                                          std::to_string(h) + " and m(v)=" + std::to_string(m));
            }
            out.push_back({piece, h, red, m, ok});
        };
        Poly<PF> rest = c.is_infinity() ? Poly<PF>(e.field()) : c.poly();
        bool seen = false;
        for (const auto& mi : eds.meetings) {
            if (c.is_infinity() || mi.place.is_infinity()) {
                if (c.is_infinity() && mi.place.is_infinity()) {
                    check(c, mi.m);
                    seen = true;
                }
                continue;
            }
            const Poly<PF> g = gcd(rest, mi.place.poly());
            if (g.is_one()) continue;
            check(PlaceClass<PF>::finite(g), mi.m);
            rest = div_exact(rest, g);
        }
        if (c.is_infinity() ? !seen : rest.degree() > 0) {
            check(c.is_infinity() ? c : PlaceClass<PF>::finite(rest), 0);
        }
    }
    return out;
}

WLedger w_ledger(const AnalyzedCurve<PF>& e, const HasseProfile& profile, const EdsResult<PF>& eds, long chi,
                 const mpq_class& hhat, long n) {
    if (n < 1 || n > static_cast<long>(eds.records.size())) raise(ErrorCode::InvalidArgument, "n outside the EDS range");
    const std::uint64_t p = e.field().characteristic();
    const long pl = static_cast<long>(p);
    WLedger out;
    out.n = n;
    out.e = p_adic_valuation(n, p);
    out.tame = profile.tame;
    long max_m_good = 0;
    for (const auto& [v, ord] : eds.records[static_cast<std::size_t>(n - 1)].divisor.entries()) {
        for (const auto& piece : meeting_pieces(eds, v)) {
            const long m = eds.meeting_index(piece);
            if (m >= n) continue;
            const long d0 = multiplicity_on(eds.records[static_cast<std::size_t>(m - 1)].divisor, piece);
            out.degW += (ord - checked_pow(pl, p_adic_valuation(n / m, p)) * d0) * piece.degree();
            if (hasse_at(profile, piece) > 0 && e.local_containing(piece).type.value_or(FibreType{}).is_good()) {
                max_m_good = std::max(max_m_good, m);
            }
        }
    }
    const long pe = checked_pow(pl, out.e);
    if (out.tame) {
        out.bound = mpq_class((pe - 1) * chi);
    } else {
        const mpq_class big_m = std::max<mpq_class>(mpq_class(144 * pl * pl), mpq_class(max_m_good * max_m_good));
        const long k = wild_threshold(p, chi);
        const mpq_class half_chi(chi, 2);
        if (out.e <= k) {
            out.bound = mpq_class((pe - 1) * chi) + mpq_class(chi) * pe * pe * hhat * big_m + half_chi * chi;
        } else {
            const long pk = checked_pow(pl, k);
            const long pek = checked_pow(pl, out.e - k);
            out.bound = chi * ((pe - 1) + pek * (1 + mpq_class(pk) * pk * big_m * hhat + half_chi));
        }
    }
    if (out.degW > out.bound) {
        raise(ErrorCode::BoundViolation, "deg W = " + std::to_string(out.degW) + " exceeds " + out.bound.get_str() +
                                             " at n=" + std::to_string(n));
    }
    return out;
}

}  // namespace edsfn
