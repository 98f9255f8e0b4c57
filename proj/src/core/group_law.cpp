#include "group_law.hpp"

namespace edsfn {

template <class F>
void require_on_curve(const Curve<F>& e, const Point<F>& p) {
    if (!e.contains(p)) raise(ErrorCode::PointNotOnCurve, p.to_string() + " is not on " + e.to_string());
}

template <class F>
Point<F> negate(const Curve<F>& e, const Point<F>& p) {
    if (p.infinity) return p;
    return Point<F>::affine(p.x, -p.y - e.a1() * p.x - e.a3());
}

template <class F>
Point<F> add(const Curve<F>& e, const Point<F>& p, const Point<F>& q) {
    using R = RatFunc<F>;
    if (p.infinity) return q;
    if (q.infinity) return p;
    const F& f = e.field();
    R lambda(f), nu(f);
    if (p.x == q.x) {
        R denom = p.y + q.y + e.a1() * q.x + e.a3();
        if (denom.is_zero()) return Point<F>::zero(f);
        // Doubling; p == q here since x agrees and q != -p.
        const R& x = p.x;
        const R& y = p.y;
        R num_l = R::from_int(f, 3) * x * x + R::from_int(f, 2) * e.a2() * x + e.a4() - e.a1() * y;
        R num_n = -(x * x * x) + e.a4() * x + R::from_int(f, 2) * e.a6() - e.a3() * y;
        R den = R::from_int(f, 2) * y + e.a1() * x + e.a3();
        R den_inv = den.inv();
        lambda = num_l * den_inv;
        nu = num_n * den_inv;
    } else {
        R dx_inv = (q.x - p.x).inv();
        lambda = (q.y - p.y) * dx_inv;
        nu = (p.y * q.x - q.y * p.x) * dx_inv;
    }
    R x3 = lambda * lambda + e.a1() * lambda - e.a2() - p.x - q.x;
    R y3 = -(lambda + e.a1()) * x3 - nu - e.a3();
    return Point<F>::affine(std::move(x3), std::move(y3));
}

template <class F>
Point<F> multiply(const Curve<F>& e, long n, const Point<F>& p) {
    if (n < 0) return multiply(e, -n, negate(e, p));
    Point<F> acc = Point<F>::zero(e.field());
    Point<F> base = p;
    while (n > 0) {
        if (n & 1) acc = add(e, acc, base);
        n >>= 1;
        if (n > 0) base = add(e, base, base);
    }
    return acc;
}

namespace {

template <class F>
void add_pole(Divisor<F>& d, const PlaceClass<F>& v, long ox, const RatFunc<F>& y, long k) {
    if (ox >= 0) return;
    if (ox % 2 != 0) {
        raise(ErrorCode::ParityViolation, "x has a pole of odd order " + std::to_string(-ox) + " at " + v.to_string());
    }
    const long oy = ord_at(y, v) - 3 * k;
    if (2 * oy != 3 * ox) {
        raise(ErrorCode::ParityViolation, "pole orders of x and y disagree at " + v.to_string());
    }
    d.add_at(v, -ox / 2);
}

}  // namespace

template <class F>
Divisor<F> denominator_divisor(const AnalyzedCurve<F>& e, const Point<F>& p, const std::vector<Poly<F>>& extra_split) {
    if (p.infinity) raise(ErrorCode::ZeroSection, "denominator divisor of O");
    const RatFunc<F> x = e.minimal_x(p);
    const RatFunc<F> y = e.minimal_y(p);
    std::vector<Poly<F>> splitters = e.special_polys();
    splitters.insert(splitters.end(), extra_split.begin(), extra_split.end());

    Divisor<F> d;
    const Poly<F>& den = x.den();
    for (const auto& v : split_classes(refine_places<F>({den}), splitters)) {
        const long k = e.local_containing(v).k;
        add_pole(d, v, ord_at(x, v) - 2 * k, y, k);
    }
    // Where the minimal model is a proper rescaling (k > 0), regular values of x
    // can still become poles.
    for (const auto& loc : e.locals()) {
        if (loc.place.is_infinity() || loc.k <= 0) continue;
        Poly<F> c = loc.place.poly();
        c = div_exact(c, gcd(c, den));
        if (c.degree() <= 0) continue;
        const long cap = 2 * loc.k;
        Poly<F> g = gcd(x.num(), c.pow(static_cast<unsigned>(cap)));
        std::vector<PlaceClass<F>> pieces = split_classes(refine_places<F>({c, g}), splitters);
        for (const auto& v : pieces) {
            if (!gcd(v.poly(), c).is_one()) add_pole(d, v, (g.is_one() ? 0 : ord_at(g, v)) - cap, y, loc.k);
        }
    }
    const auto inf = PlaceClass<F>::infinity(e.field());
    const long kinf = e.local_containing(inf).k;
    if (!x.is_zero()) add_pole(d, inf, ord_at(x, inf) - 2 * kinf, y, kinf);
    return d;
}

template <class F>
long multiplicity_on(const Divisor<F>& d, const PlaceClass<F>& piece) {
    for (const auto& [c, m] : d.entries()) {
        if (c.is_infinity() != piece.is_infinity()) continue;
        if (c.is_infinity()) return m;
        Poly<F> g = gcd(c.poly(), piece.poly());
        if (g.is_one()) continue;
        if (g.degree() != piece.degree()) raise(ErrorCode::IncoherentPlaces, piece.to_string() + " straddles " + c.to_string());
        return m;
    }
    return 0;
}

template <class F>
long EdsResult<F>::meeting_index(const PlaceClass<F>& piece) const {
    for (const auto& mi : meetings) {
        if (mi.place.is_infinity() != piece.is_infinity()) continue;
        if (piece.is_infinity()) return mi.m;
        Poly<F> g = gcd(mi.place.poly(), piece.poly());
        if (g.is_one()) continue;
        if (g.degree() != piece.degree()) {
            raise(ErrorCode::IncoherentPlaces, piece.to_string() + " straddles meeting class " + mi.place.to_string());
        }
        return mi.m;
    }
    return 0;
}

template <class F>
std::vector<long> EdsResult<F>::non_primitive() const {
    std::vector<long> out;
    for (const auto& r : records) {
        if (r.n > 1 && !r.primitive) out.push_back(r.n);
    }
    return out;
}

template <class F>
EdsResult<F> eds_generate(const AnalyzedCurve<F>& e, const Point<F>& p, long nmax, const std::vector<Poly<F>>& extra_split,
                          const std::function<void(long, const Point<F>&)>& on_point) {
    if (nmax < 1) raise(ErrorCode::InvalidArgument, "nmax must be positive");
    require_on_curve(e.curve(), p);
    const F& f = e.field();
    const bool char0 = f.characteristic() == 0;
    EdsResult<F> out;
    Poly<F> radical = Poly<F>::constant(f, f.one());
    bool infinity_seen = false;
    Point<F> q = Point<F>::zero(f);
    for (long n = 1; n <= nmax; ++n) {
        q = add(e.curve(), q, p);
        if (q.infinity) raise(ErrorCode::TorsionPoint, "the point has order " + std::to_string(n));
        if (on_point) on_point(n, q);
        EdsRecord<F> rec{n, denominator_divisor(e, q, extra_split), 0, false, {}};
        rec.degree = rec.divisor.degree();
        for (const auto& [v, m] : rec.divisor.entries()) {
            if (v.is_infinity()) {
                if (!infinity_seen) {
                    infinity_seen = true;
                    rec.new_places.push_back(v);
                }
                continue;
            }
            Poly<F> fresh = div_exact(v.poly(), gcd(v.poly(), radical));
            if (fresh.degree() > 0) {
                rec.new_places.push_back(PlaceClass<F>::finite(fresh));
                radical = radical * fresh;
            }
        }
        for (const auto& v : rec.new_places) out.meetings.push_back({v, n});
        rec.primitive = !rec.new_places.empty();
        if (char0) {
            for (const auto& [v, m] : rec.divisor.entries()) {
                std::vector<Poly<F>> mpolys;
                for (const auto& mi : out.meetings) {
                    if (!mi.place.is_infinity()) mpolys.push_back(mi.place.poly());
                }
                for (const auto& piece : split_classes<F>({v}, mpolys)) {
                    const long mv = out.meeting_index(piece);
                    if (mv == n) continue;
                    const long first = multiplicity_on(out.records[static_cast<std::size_t>(mv - 1)].divisor, piece);
                    if (n % mv != 0 || first != m) {
                        raise(ErrorCode::RecursionViolation, "valuation at " + piece.to_string() + " changes from " +
                                                                 std::to_string(first) + " at n=" + std::to_string(mv) +
                                                                 " to " + std::to_string(m) + " at n=" + std::to_string(n));
                    }
                }
            }
        }
        out.records.push_back(std::move(rec));
    }
    return out;
}

#define EDSFN_INSTANTIATE_GROUP(F)                                                                         \
    template void require_on_curve(const Curve<F>&, const Point<F>&);                                     \
    template Point<F> negate(const Curve<F>&, const Point<F>&);                                            \
    template Point<F> add(const Curve<F>&, const Point<F>&, const Point<F>&);                              \
    template Point<F> multiply(const Curve<F>&, long, const Point<F>&);                                    \
    template Divisor<F> denominator_divisor(const AnalyzedCurve<F>&, const Point<F>&, const std::vector<Poly<F>>&); \
    template long multiplicity_on(const Divisor<F>&, const PlaceClass<F>&);                                \
    template struct EdsResult<F>;                                                                          \
    template EdsResult<F> eds_generate(const AnalyzedCurve<F>&, const Point<F>&, long, const std::vector<Poly<F>>&, \
                                       const std::function<void(long, const Point<F>&)>&);

EDSFN_INSTANTIATE_GROUP(RationalField)
EDSFN_INSTANTIATE_GROUP(PrimeField)

#undef EDSFN_INSTANTIATE_GROUP

}  // namespace edsfn
