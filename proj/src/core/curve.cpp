#include "curve.hpp"

#include <algorithm>

namespace edsfn {

namespace {

template <class F>
RatFunc<F> rf(const F& f, long long v) {
    return RatFunc<F>::from_int(f, v);
}

// Uniformizer power pi^k at a class; at infinity pi = 1/t.
template <class F>
RatFunc<F> uniformizer_power(const PlaceClass<F>& v, const F& f, long k) {
    RatFunc<F> pi = v.is_infinity() ? RatFunc<F>::variable(f).inv() : RatFunc<F>(v.poly());
    return pi.pow(k);
}

template <class F>
long val(const RatFunc<F>& f, const PlaceClass<F>& v) {
    return f.is_zero() ? kInfiniteValuation : ord_at(f, v);
}

long shift(long v, long by) { return v >= kInfiniteValuation / 2 ? v : v - by; }

// Wraps compound coefficients in parentheses for display.
std::string coef_text(const std::string& s) {
    bool compound = s.find_first_of("+/", 0) != std::string::npos || s.find('-', 1) != std::string::npos;
    return compound ? "(" + s + ")" : s;
}

}  // namespace

template <class F>
ModelTransform<F> ModelTransform<F>::identity(const F& field) {
    return {rf(field, 1), RatFunc<F>(field), RatFunc<F>(field), RatFunc<F>(field)};
}

template <class F>
ModelTransform<F> ModelTransform<F>::inverse() const {
    const RatFunc<F> ui = u.inv();
    return {ui, -r * ui * ui, -s * ui, (r * s - t) * ui * ui * ui};
}

template <class F>
ModelTransform<F> ModelTransform<F>::then(const ModelTransform& n) const {
    const RatFunc<F> u2 = u * u;
    return {u * n.u, u2 * n.r + r, u * n.s + s, u2 * u * n.t + s * u2 * n.r + t};
}

template <class F>
Invariants<F> compute_invariants(const std::array<RatFunc<F>, 5>& a) {
    using R = RatFunc<F>;
    const F& f = a[0].field();
    const R &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a6 = a[4];
    R b2 = a1 * a1 + rf(f, 4) * a2;
    R b4 = rf(f, 2) * a4 + a1 * a3;
    R b6 = a3 * a3 + rf(f, 4) * a6;
    R b8 = a1 * a1 * a6 + rf(f, 4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    R c4 = b2 * b2 - rf(f, 24) * b4;
    R c6 = -(b2 * b2 * b2) + rf(f, 36) * b2 * b4 - rf(f, 216) * b6;
    R disc = -(b2 * b2 * b8) - rf(f, 8) * b4 * b4 * b4 - rf(f, 27) * b6 * b6 + rf(f, 9) * b2 * b4 * b6;
    R j = disc.is_zero() ? R(f) : c4 * c4 * c4 / disc;
    return {b2, b4, b6, b8, c4, c6, disc, j};
}

template <class F>
Curve<F>::Curve(R a1, R a2, R a3, R a4, R a6)
    : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)}, inv_(compute_invariants(a_)) {
    if (inv_.disc.is_zero()) raise(ErrorCode::SingularCurve, "discriminant vanishes for " + to_string());
}

template <class F>
Curve<F> Curve<F>::short_form(const R& a4, const R& a6) {
    const F& f = a4.field();
    return Curve(R(f), R(f), R(f), a4, a6);
}

template <class F>
bool Curve<F>::contains(const Point<F>& p) const {
    if (p.infinity) return true;
    const R& x = p.x;
    const R& y = p.y;
    R lhs = y * y + a1() * x * y + a3() * y;
    R rhs = x * x * x + a2() * x * x + a4() * x + a6();
    return lhs == rhs;
}

template <class F>
Curve<F> Curve<F>::transformed(const ModelTransform<F>& m) const {
    const F& f = field();
    const R &u = m.u, &r = m.r, &s = m.s, &t = m.t;
    if (u.is_zero()) raise(ErrorCode::ZeroInput, "model transform with u = 0");
    const R ui = u.inv();
    const R ui2 = ui * ui;
    const R ui3 = ui2 * ui;
    R n1 = (a1() + rf(f, 2) * s) * ui;
    R n2 = (a2() - s * a1() + rf(f, 3) * r - s * s) * ui2;
    R n3 = (a3() + r * a1() + rf(f, 2) * t) * ui3;
    R n4 = (a4() - s * a3() + rf(f, 2) * r * a2() - (t + r * s) * a1() + rf(f, 3) * r * r - rf(f, 2) * s * t) * ui2 * ui2;
    R n6 = (a6() + r * a4() + r * r * a2() + r * r * r - t * a3() - t * t - r * t * a1()) * ui3 * ui3;
    return Curve(n1, n2, n3, n4, n6);
}

template <class F>
Point<F> Curve<F>::map_point(const ModelTransform<F>& m, const Point<F>& p) const {
    if (p.infinity) return p;
    const R ui = m.u.inv();
    R x = (p.x - m.r) * ui * ui;
    R y = (p.y - m.s * (p.x - m.r) - m.t) * ui * ui * ui;
    return Point<F>::affine(x, y);
}

template <class F>
Curve<F> Curve<F>::at_infinity_chart() const {
    return Curve(a1().at_infinity_chart(), a2().at_infinity_chart(), a3().at_infinity_chart(),
                 a4().at_infinity_chart(), a6().at_infinity_chart());
}

template <class F>
ModelTransform<F> Curve<F>::to_short() const {
    const std::uint64_t p = characteristic();
    if (p == 2 || p == 3) raise(ErrorCode::BadCharacteristic, "short model needs characteristic other than 2, 3");
    const F& f = field();
    R r = -inv_.b2 / rf(f, 12);
    R s = -a1() / rf(f, 2);
    R t = -(a3() + r * a1()) / rf(f, 2);
    return {rf(f, 1), r, s, t};
}

template <class F>
std::string Curve<F>::to_string() const {
    auto term = [](const R& c, const std::string& mono) -> std::string {
        if (c.is_zero()) return "";
        std::string s = c.to_string();
        if (mono.empty()) return coef_text(s);
        if (c.is_one()) return mono;
        return coef_text(s) + "*" + mono;
    };
    std::string lhs = "y^2";
    for (auto piece : {term(a1(), "x*y"), term(a3(), "y")}) {
        if (!piece.empty()) lhs += (piece[0] == '-' ? "" : "+") + piece;
    }
    std::string rhs = "x^3";
    for (auto piece : {term(a2(), "x^2"), term(a4(), "x"), term(a6(), "")}) {
        if (!piece.empty()) rhs += (piece[0] == '-' ? "" : "+") + piece;
    }
    return lhs + "=" + rhs;
}

template <class F>
LocalData<F> local_data(const Curve<F>& e, const PlaceClass<F>& v) {
    LocalData<F> d{v, 0, 0, 0, 0, 0, 0, 0, std::nullopt};
    const Invariants<F>& in = e.inv();
    d.vDelta = ord_at(in.disc, v);
    d.vC4 = val(in.c4, v);
    d.vC6 = val(in.c6, v);
    const std::uint64_t p = e.characteristic();
    if (p == 2 || p == 3) {
        static constexpr long weights[5] = {1, 2, 3, 4, 6};
        long k = kInfiniteValuation;
        for (int i = 0; i < 5; ++i) {
            const auto& a = e.coefficients()[static_cast<std::size_t>(i)];
            if (!a.is_zero()) k = std::min(k, floor_div(ord_at(a, v), weights[i]));
        }
        d.k = k == kInfiniteValuation ? 0 : k;
    } else {
        long k4 = d.vC4 >= kInfiniteValuation / 2 ? kInfiniteValuation : floor_div(d.vC4, 4);
        long k6 = d.vC6 >= kInfiniteValuation / 2 ? kInfiniteValuation : floor_div(d.vC6, 6);
        d.k = std::min(k4, k6);
    }
    d.vC4min = shift(d.vC4, 4 * d.k);
    d.vC6min = shift(d.vC6, 6 * d.k);
    d.vDeltaMin = d.vDelta - 12 * d.k;
    if (p != 2 && p != 3) d.type = kodaira_type(d.vC4min, d.vC6min, d.vDeltaMin);
    return d;
}

template <class F>
MinimalModel<F> minimalize_at(const Curve<F>& e, const PlaceClass<F>& v) {
    const F& f = e.field();
    LocalData<F> d = local_data(e, v);
    const std::uint64_t p = e.characteristic();
    ModelTransform<F> m = ModelTransform<F>::identity(f);
    if (p == 2 || p == 3) {
        if (!v.is_infinity() && d.k < 0) {
            raise(ErrorCode::BadCharacteristic, "non-integral model at " + v.to_string() + " in characteristic " +
                                                    std::to_string(p));
        }
    } else {
        m = e.to_short();
    }
    ModelTransform<F> scale{uniformizer_power(v, f, d.k), RatFunc<F>(f), RatFunc<F>(f), RatFunc<F>(f)};
    m = m.then(scale);
    return {e.transformed(m), d.k, m};
}

template <class F>
AnalyzedCurve<F>::AnalyzedCurve(Curve<F> e) : e_(std::move(e)) {
    std::vector<Poly<F>> polys;
    auto push = [&](const RatFunc<F>& r) {
        if (r.is_zero()) return;
        polys.push_back(r.num());
        polys.push_back(r.den());
    };
    const Invariants<F>& in = e_.inv();
    push(in.disc);
    if (small_characteristic()) {
        for (const auto& a : e_.coefficients()) push(a);
    } else {
        push(in.c4);
        push(in.c6);
    }
    for (const auto& v : refine_places(polys)) locals_.push_back(local_data(e_, v));
    locals_.push_back(local_data(e_, PlaceClass<F>::infinity(field())));
}

template <class F>
std::vector<Poly<F>> AnalyzedCurve<F>::special_polys() const {
    std::vector<Poly<F>> out;
    for (const auto& d : locals_) {
        if (!d.place.is_infinity()) out.push_back(d.place.poly());
    }
    return out;
}

template <class F>
LocalData<F> AnalyzedCurve<F>::local_containing(const PlaceClass<F>& piece) const {
    for (const auto& d : locals_) {
        if (piece.is_infinity() != d.place.is_infinity()) continue;
        if (piece.is_infinity()) return d;
        Poly<F> g = gcd(piece.poly(), d.place.poly());
        if (g.is_one()) continue;
        if (g.degree() != piece.degree()) {
            raise(ErrorCode::IncoherentPlaces, piece.to_string() + " straddles " + d.place.to_string());
        }
        LocalData<F> r = d;
        r.place = piece;
        return r;
    }
    LocalData<F> r{piece, 0, 0, 0, 0, 0, 0, 0, std::nullopt};
    if (!small_characteristic()) r.type = FibreType{};
    return r;
}

template <class F>
RatFunc<F> AnalyzedCurve<F>::minimal_x(const Point<F>& p) const {
    if (small_characteristic()) return p.x;
    return p.x + e_.inv().b2 / RatFunc<F>::from_int(field(), 12);
}

template <class F>
RatFunc<F> AnalyzedCurve<F>::minimal_y(const Point<F>& p) const {
    if (small_characteristic()) return p.y;
    return p.y + (e_.a1() * p.x + e_.a3()) / RatFunc<F>::from_int(field(), 2);
}

template <class F>
SurfaceData<F> AnalyzedCurve<F>::surface_data() const {
    if (small_characteristic()) {
        raise(ErrorCode::BadCharacteristic, "fibre classification needs characteristic 0 or p > 3");
    }
    SurfaceData<F> s;
    long euler = 0;
    long principal = 0;
    for (const auto& d : locals_) {
        principal += d.vDelta * d.place.degree();
        if (d.vDeltaMin == 0) continue;
        const FibreType& t = *d.type;
        s.fibres.push_back({d.place, d.vDeltaMin, d.vC4min, d.vC6min, t, t.components(), t.euler(), d.k, t.group_name()});
        euler += t.euler() * d.place.degree();
        s.disc_degree += d.vDeltaMin * d.place.degree();
        s.conductor_degree += t.conductor_exponent() * d.place.degree();
    }
    if (principal != 0) raise(ErrorCode::InconsistentValuations, "discriminant divisor has nonzero degree");
    if (s.fibres.empty()) raise(ErrorCode::EverywhereGoodReduction, e_.to_string() + " has no bad fibre");
    if (euler != s.disc_degree || euler % 12 != 0) {
        raise(ErrorCode::InconsistentValuations, "sum of Euler numbers " + std::to_string(euler) +
                                                     " against discriminant degree " + std::to_string(s.disc_degree));
    }
    s.chi = euler / 12;
    s.szpiro = mpq_class(s.disc_degree, s.conductor_degree);
    s.szpiro.canonicalize();
    return s;
}

template <class F>
long insep_degree_j(const Curve<F>& e) {
    const std::uint64_t p = e.characteristic();
    const RatFunc<F>& j = e.inv().j;
    if (p == 0 || j.is_constant()) return 1;
    long q = 1;
    for (;;) {
        const std::size_t next = static_cast<std::size_t>(q) * p;
        if (!j.num().deflate(next) || !j.den().deflate(next)) return q;
        q = static_cast<long>(next);
    }
}

#define EDSFN_INSTANTIATE_CURVE(F)                                                  \
    template struct ModelTransform<F>;                                              \
    template class Curve<F>;                                                        \
    template class AnalyzedCurve<F>;                                                \
    template LocalData<F> local_data(const Curve<F>&, const PlaceClass<F>&);        \
    template MinimalModel<F> minimalize_at(const Curve<F>&, const PlaceClass<F>&);  \
    template long insep_degree_j(const Curve<F>&);

EDSFN_INSTANTIATE_CURVE(RationalField)
EDSFN_INSTANTIATE_CURVE(PrimeField)

#undef EDSFN_INSTANTIATE_CURVE

}  // namespace edsfn
