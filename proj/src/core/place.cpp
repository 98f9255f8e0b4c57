#include "place.hpp"

#include <algorithm>

namespace edsfn {

template <class F>
PlaceClass<F> PlaceClass<F>::finite(const P& poly) {
    if (poly.degree() <= 0) raise(ErrorCode::InvalidArgument, "place class needs a non-constant polynomial");
    return PlaceClass(poly.monic());
}

template <class F>
int PlaceClass<F>::compare(const PlaceClass& o) const {
    if (is_infinity() || o.is_infinity()) {
        return static_cast<int>(is_infinity()) - static_cast<int>(o.is_infinity());
    }
    return poly_.compare(o.poly_);
}

template <class F>
long ord_at(const Poly<F>& f, const PlaceClass<F>& v) {
    if (f.is_zero()) raise(ErrorCode::ZeroInput, "valuation of zero");
    if (v.is_infinity()) return -f.degree();
    long m = 0;
    Poly<F> q = f;
    for (;;) {
        auto [d, r] = divmod(q, v.poly());
        if (!r.is_zero()) break;
        q = std::move(d);
        ++m;
    }
    if (!gcd(q, v.poly()).is_one()) {
        raise(ErrorCode::NonUniformPlace, "multiplicity of " + v.to_string() + " varies across its roots");
    }
    return m;
}

template <class F>
long ord_at(const RatFunc<F>& f, const PlaceClass<F>& v) {
    if (f.is_zero()) raise(ErrorCode::ZeroInput, "valuation of zero");
    if (v.is_infinity()) return f.den().degree() - f.num().degree();
    return ord_at(f.num(), v) - ord_at(f.den(), v);
}

namespace {

// Refines a list of monic squarefree polynomials into a coprime basis.
template <class F>
std::vector<Poly<F>> coprime_basis(std::vector<Poly<F>> work) {
    std::vector<Poly<F>> basis;
    while (!work.empty()) {
        Poly<F> a = std::move(work.back());
        work.pop_back();
        if (a.degree() <= 0) continue;
        bool split = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Poly<F> g = gcd(a, basis[i]);
            if (g.is_one()) continue;
            Poly<F> b = std::move(basis[i]);
            basis.erase(basis.begin() + static_cast<long>(i));
            work.push_back(div_exact(a, g));
            work.push_back(div_exact(b, g));
            work.push_back(std::move(g));
            split = true;
            break;
        }
        if (!split) basis.push_back(std::move(a));
    }
    std::sort(basis.begin(), basis.end(), [](const Poly<F>& x, const Poly<F>& y) { return x.compare(y) < 0; });
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    return basis;
}

}  // namespace

template <class F>
std::vector<PlaceClass<F>> refine_places(const std::vector<Poly<F>>& polys) {
    std::vector<Poly<F>> work;
    for (const auto& f : polys) {
        if (f.is_zero()) raise(ErrorCode::ZeroInput, "refine_places of the zero polynomial");
        if (f.degree() == 0) continue;
        for (auto& [s, m] : squarefree_decomposition(f)) work.push_back(s);
    }
    std::vector<PlaceClass<F>> out;
    for (const auto& b : coprime_basis(std::move(work))) out.push_back(PlaceClass<F>::finite(b));
    return out;
}

template <class F>
std::vector<PlaceClass<F>> split_classes(const std::vector<PlaceClass<F>>& classes,
                                         const std::vector<Poly<F>>& against) {
    std::vector<PlaceClass<F>> out;
    for (const auto& c : classes) {
        if (c.is_infinity()) {
            out.push_back(c);
            continue;
        }
        std::vector<Poly<F>> pieces{c.poly()};
        for (const auto& a : against) {
            if (a.is_zero()) continue;
            std::vector<Poly<F>> next;
            for (const auto& piece : pieces) {
                Poly<F> g = gcd(piece, a);
                if (g.is_one() || g.degree() == piece.degree()) {
                    next.push_back(piece);
                } else {
                    next.push_back(g);
                    next.push_back(div_exact(piece, g));
                }
            }
            pieces = std::move(next);
        }
        for (const auto& piece : pieces) out.push_back(PlaceClass<F>::finite(piece));
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <class F>
std::vector<PlaceClass<F>> split_by_valuation(const std::vector<PlaceClass<F>>& classes, const RatFunc<F>& f, long cap) {
    if (f.is_zero() || cap <= 0) return classes;
    std::vector<PlaceClass<F>> out;
    for (const auto& c : classes) {
        if (c.is_infinity()) {
            out.push_back(c);
            continue;
        }
        const Poly<F> qc = c.poly().pow(static_cast<unsigned>(cap));
        for (auto& piece : refine_places<F>({c.poly(), gcd(f.num(), qc), gcd(f.den(), qc)})) out.push_back(piece);
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <class F>
long capped_ord_at(const RatFunc<F>& f, const PlaceClass<F>& v, long cap) {
    if (f.is_zero()) return cap;
    if (v.is_infinity()) return std::clamp(ord_at(f, v), -cap, cap);
    const Poly<F> qc = v.poly().pow(static_cast<unsigned>(cap));
    return ord_at(gcd(f.num(), qc), v) - ord_at(gcd(f.den(), qc), v);
}

template <class F>
Divisor<F>::Divisor(Map entries) {
    for (auto& [v, m] : entries) {
        if (m != 0) entries_.emplace(v, m);
    }
}

template <class F>
long Divisor<F>::at(const PlaceClass<F>& v) const {
    auto it = entries_.find(v);
    return it == entries_.end() ? 0 : it->second;
}

template <class F>
void Divisor<F>::add_at(const PlaceClass<F>& v, long m) {
    if (m == 0) return;
    auto [it, inserted] = entries_.emplace(v, m);
    if (!inserted) {
        it->second += m;
        if (it->second == 0) entries_.erase(it);
    }
}

template <class F>
Divisor<F>& Divisor<F>::operator+=(const Divisor& o) {
    for (const auto& [v, m] : o.entries_) add_at(v, m);
    return *this;
}

template <class F>
Divisor<F> Divisor<F>::scaled(long k) const {
    if (k == 0) return Divisor();
    Divisor d;
    for (const auto& [v, m] : entries_) d.entries_.emplace(v, m * k);
    return d;
}

template <class F>
long Divisor<F>::degree() const {
    long d = 0;
    for (const auto& [v, m] : entries_) d += m * v.degree();
    return d;
}

template <class F>
std::vector<PlaceClass<F>> Divisor<F>::support() const {
    std::vector<PlaceClass<F>> s;
    for (const auto& [v, m] : entries_) s.push_back(v);
    return s;
}

template <class F>
bool Divisor<F>::is_effective() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second >= 0; });
}

template <class F>
bool Divisor<F>::support_contained(const std::vector<PlaceClass<F>>& s, bool refine) const {
    for (const auto& [v, m] : entries_) {
        if (v.is_infinity()) {
            if (std::find_if(s.begin(), s.end(), [](const auto& c) { return c.is_infinity(); }) == s.end()) {
                return false;
            }
            continue;
        }
        if (!refine) {
            bool found = false;
            for (const auto& c : s) {
                if (c.is_infinity()) continue;
                if (c == v) {
                    found = true;
                } else if (!gcd(c.poly(), v.poly()).is_one()) {
                    raise(ErrorCode::IncoherentPlaces, v.to_string() + " overlaps " + c.to_string());
                }
            }
            if (!found) return false;
            continue;
        }
        // Strip every root shared with a class of s; v is covered iff nothing remains.
        Poly<F> rest = v.poly();
        for (const auto& c : s) {
            if (c.is_infinity()) continue;
            Poly<F> g = gcd(rest, c.poly());
            if (!g.is_one()) rest = div_exact(rest, g);
            if (rest.degree() == 0) break;
        }
        if (rest.degree() > 0) return false;
    }
    return true;
}

template <class F>
std::string Divisor<F>::to_string() const {
    if (entries_.empty()) return "0";
    std::string out;
    for (const auto& [v, m] : entries_) {
        if (!out.empty()) out += " + ";
        out += std::to_string(m) + "*(" + v.to_string() + ")";
    }
    return out;
}

#define EDSFN_INSTANTIATE_PLACE(F)                                                                  \
    template class PlaceClass<F>;                                                                   \
    template class Divisor<F>;                                                                      \
    template long ord_at(const RatFunc<F>&, const PlaceClass<F>&);                                  \
    template long ord_at(const Poly<F>&, const PlaceClass<F>&);                                     \
    template std::vector<PlaceClass<F>> refine_places(const std::vector<Poly<F>>&);                 \
    template std::vector<PlaceClass<F>> split_by_valuation(const std::vector<PlaceClass<F>>&, const RatFunc<F>&, long); \
    template long capped_ord_at(const RatFunc<F>&, const PlaceClass<F>&, long);                     \
    template std::vector<PlaceClass<F>> split_classes(const std::vector<PlaceClass<F>>&,            \
                                                      const std::vector<Poly<F>>&);

EDSFN_INSTANTIATE_PLACE(RationalField)
EDSFN_INSTANTIATE_PLACE(PrimeField)

#undef EDSFN_INSTANTIATE_PLACE

}  // namespace edsfn
