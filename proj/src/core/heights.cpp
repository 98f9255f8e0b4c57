#include "heights.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace edsfn {

mpq_class correction_value(const FibreType& type, long i) {
    if (!valid_component(type, i)) raise(ErrorCode::InvalidComponent, std::to_string(i) + " in " + type.name());
    if (i == 0) return 0;
    switch (type.kind) {
        case Kodaira::In: {
            mpq_class c(i * (type.n - i), type.n);
            c.canonicalize();  // GMP comparisons assume canonical form
            return c;
        }
        case Kodaira::III: return mpq_class(1, 2);
        case Kodaira::IV: return mpq_class(2, 3);
        case Kodaira::IVStar: return mpq_class(4, 3);
        case Kodaira::IIIStar: return mpq_class(3, 2);
        case Kodaira::InStar: {
            // The near component is label 1 in the Klein group and the element
            // of order 2 (label 2) in Z/4.
            const bool near = type.group_kind() == GroupKind::Klein ? i == 1 : i == 2;
            mpq_class far(4 + type.n, 4);
            far.canonicalize();
            return near ? mpq_class(1) : far;
        }
        default: return 0;
    }
}

template <class F>
long component_exponent_lcm(const SurfaceData<F>& s) {
    long l = 1;
    for (const auto& f : s.fibres) l = std::lcm(l, f.type.group_exponent());
    return l;
}

template <class F>
mpq_class canonical_pairing(const AnalyzedCurve<F>& e, const SurfaceData<F>& s, const Point<F>& p, long multiple) {
    if (multiple < 1) raise(ErrorCode::InvalidArgument, "multiple must be positive");
    require_on_curve(e.curve(), p);
    const long l = component_exponent_lcm(s) * multiple;
    const Point<F> lp = multiply(e.curve(), l, p);
    if (lp.infinity) raise(ErrorCode::TorsionPoint, "the point is killed by " + std::to_string(l));
    const long deg = denominator_divisor(e, lp).degree();
    mpq_class pairing(2 * s.chi + 2 * deg, l * l);
    pairing.canonicalize();
    if (sgn(pairing) <= 0) raise(ErrorCode::TorsionPoint, "the point has height zero");
    return pairing;
}

mpq_class total_correction(long chi, const mpq_class& pairing, long n, long deg_dn) {
    mpq_class c = mpq_class(2 * chi + 2 * deg_dn) - mpq_class(n) * mpq_class(n) * pairing;
    if (sgn(c) < 0 || c > 3 * chi) {
        raise(ErrorCode::RangeViolation, "total correction " + c.get_str() + " at n=" + std::to_string(n) +
                                             " lies outside [0, " + std::to_string(3 * chi) + "]");
    }
    return c;
}

template <class F>
std::vector<PlaceCorrection<F>> bad_pieces(const AnalyzedCurve<F>& e, const SurfaceData<F>& s, const Point<F>& p) {
    if (p.infinity) raise(ErrorCode::ZeroSection, "correction terms of O");
    require_on_curve(e.curve(), p);
    const F& f = e.field();
    using R = RatFunc<F>;
    const R xs = e.minimal_x(p);
    const R ys = e.minimal_y(p);
    // The minimal short model is y^2 = x^3 + A x + B with A = -c4/48, so the
    // singular point is where y and 3x^2 + A both vanish.
    const R a = e.small_characteristic() ? R(f) : -e.curve().inv().c4 / R::from_int(f, 48);
    const R g = R::from_int(f, 3) * xs * xs + a;

    std::vector<PlaceCorrection<F>> out;
    for (const auto& fib : s.fibres) {
        const long k = fib.n_v;
        const long cap = 4 * (k < 0 ? -k : k) + 2 + fib.vDelta;
        std::vector<PlaceClass<F>> pieces{fib.place};
        for (const R* h : {&xs, &ys, &g}) pieces = split_by_valuation(pieces, *h, cap);
        for (const auto& v : pieces) {
            const bool integral = capped_ord_at(xs, v, cap) >= 2 * k;
            const bool singular = integral && !e.small_characteristic() && capped_ord_at(ys, v, cap) > 3 * k &&
                                  capped_ord_at(g, v, cap) > 4 * k;
            out.push_back({v, fib.type, singular, 0, {0}, true});
        }
    }
    return out;
}

namespace {

struct Choice {
    std::vector<mpq_class> vec;  // c(kP, kP), k = 1..depth
    std::vector<long> labels;
};

template <class F>
std::vector<Choice> choices_for(const PlaceCorrection<F>& pc, std::size_t depth) {
    std::vector<long> labels;
    if (pc.singular) {
        for (long i = 1; i < pc.type.group_order(); ++i) labels.push_back(i);
    }
    if (labels.empty()) labels.push_back(0);
    std::vector<Choice> out;
    for (long i : labels) {
        std::vector<mpq_class> vec;
        for (std::size_t k = 1; k <= depth; ++k) {
            vec.push_back(correction_value(pc.type, component_multiple(pc.type, i, static_cast<long>(k))));
        }
        auto it = std::find_if(out.begin(), out.end(), [&](const Choice& c) { return c.vec == vec; });
        if (it == out.end()) {
            out.push_back({std::move(vec), {i}});
        } else {
            it->labels.push_back(i);
        }
    }
    return out;
}

}  // namespace

template <class F>
std::vector<PlaceCorrection<F>> component_solver(std::vector<PlaceCorrection<F>> pieces,
                                                 const std::vector<mpq_class>& totals) {
    const std::size_t depth = totals.size();
    if (depth == 0) raise(ErrorCode::InvalidArgument, "component solver needs at least one constraint");
    std::vector<std::vector<Choice>> options;
    for (const auto& pc : pieces) options.push_back(choices_for(pc, depth));

    std::vector<std::set<std::size_t>> used(pieces.size());
    std::vector<std::size_t> pick(pieces.size());
    std::vector<mpq_class> acc(depth, mpq_class(0));
    long solutions = 0;
    // Corrections are nonnegative, so a partial sum above a total is dead.
    std::function<void(std::size_t)> dfs = [&](std::size_t j) {
        for (std::size_t k = 0; k < depth; ++k) {
            if (acc[k] > totals[k]) return;
        }
        if (j == pieces.size()) {
            if (acc != totals) return;
            ++solutions;
            for (std::size_t q = 0; q < pick.size(); ++q) used[q].insert(pick[q]);
            return;
        }
        const long deg = pieces[j].place.degree();
        for (std::size_t o = 0; o < options[j].size(); ++o) {
            pick[j] = o;
            for (std::size_t k = 0; k < depth; ++k) acc[k] += deg * options[j][o].vec[k];
            dfs(j + 1);
            for (std::size_t k = 0; k < depth; ++k) acc[k] -= deg * options[j][o].vec[k];
        }
    };
    dfs(0);
    if (solutions == 0) {
        raise(ErrorCode::NoSolution, "no assignment of components matches the correction totals");
    }
    for (std::size_t j = 0; j < pieces.size(); ++j) {
        auto& pc = pieces[j];
        pc.candidates.clear();
        for (std::size_t o : used[j]) {
            for (long i : options[j][o].labels) pc.candidates.push_back(i);
        }
        std::sort(pc.candidates.begin(), pc.candidates.end());
        pc.unique = used[j].size() == 1;
        pc.c = options[j][*used[j].begin()].vec[0];
    }
    return pieces;
}

template <class F>
HeightCertificate<F> height_certificate(const AnalyzedCurve<F>& e, const SurfaceData<F>& s, const Point<F>& p,
                                        long depth) {
    if (depth < 0) raise(ErrorCode::InvalidArgument, "depth must be nonnegative");
    HeightCertificate<F> cert;
    cert.exponent_lcm = component_exponent_lcm(s);
    cert.pairing = canonical_pairing(e, s, p);
    cert.canonical = cert.pairing / 2;
    const long start = depth > 0 ? depth : cert.exponent_lcm;
    const std::vector<PlaceCorrection<F>> pieces = bad_pieces(e, s, p);

    std::vector<long> degrees;
    Point<F> q = Point<F>::zero(e.field());
    auto extend = [&](long upto) {
        while (static_cast<long>(degrees.size()) < upto) {
            q = add(e.curve(), q, p);
            if (q.infinity) raise(ErrorCode::TorsionPoint, "the point has finite order");
            degrees.push_back(denominator_divisor(e, q).degree());
        }
    };
    for (long d = start;; d *= 2) {
        extend(d);
        std::vector<mpq_class> totals;
        for (long k = 1; k <= d; ++k) {
            totals.push_back(total_correction(s.chi, cert.pairing, k, degrees[static_cast<std::size_t>(k - 1)]));
        }
        cert.per_place = component_solver(pieces, totals);
        cert.depth = d;
        cert.total = totals[0];
        const bool settled = std::all_of(cert.per_place.begin(), cert.per_place.end(),
                                         [](const auto& pc) { return pc.unique; });
        if (settled || 2 * d > 8 * start) break;
    }
    cert.naive_degree = degrees[0];
    return cert;
}

template <class F>
mpq_class weighted_correction_sum(const std::vector<PlaceCorrection<F>>& pieces, long k) {
    mpq_class sum = 0;
    for (const auto& pc : pieces) {
        const long w = (pc.type.kind == Kodaira::In || pc.type.kind == Kodaira::InStar) ? 4 : 6;
        const long i = component_multiple(pc.type, pc.candidates.front(), k);
        sum += pc.place.degree() * w * correction_value(pc.type, i);
    }
    return sum;
}

#define EDSFN_INSTANTIATE_HEIGHTS(F)                                                                                  \
    template long component_exponent_lcm(const SurfaceData<F>&);                                                      \
    template mpq_class canonical_pairing(const AnalyzedCurve<F>&, const SurfaceData<F>&, const Point<F>&, long);      \
    template std::vector<PlaceCorrection<F>> bad_pieces(const AnalyzedCurve<F>&, const SurfaceData<F>&,               \
                                                        const Point<F>&);                                              \
    template std::vector<PlaceCorrection<F>> component_solver(std::vector<PlaceCorrection<F>>,                        \
                                                              const std::vector<mpq_class>&);                         \
    template HeightCertificate<F> height_certificate(const AnalyzedCurve<F>&, const SurfaceData<F>&, const Point<F>&, \
                                                     long);                                                            \
    template mpq_class weighted_correction_sum(const std::vector<PlaceCorrection<F>>&, long);

EDSFN_INSTANTIATE_HEIGHTS(RationalField)
EDSFN_INSTANTIATE_HEIGHTS(PrimeField)

#undef EDSFN_INSTANTIATE_HEIGHTS

}  // namespace edsfn
