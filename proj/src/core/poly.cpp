#include "poly.hpp"

#include <algorithm>
#include <type_traits>

namespace edsfn {

template <class F>
Poly<F>::Poly(const F& field, std::vector<Element> coeffs) : field_(field), c_(std::move(coeffs)) {
    trim();
}

template <class F>
void Poly<F>::trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
}

template <class F>
Poly<F> Poly<F>::constant(const F& field, const Element& c) {
    return Poly(field, std::vector<Element>{c});
}

template <class F>
Poly<F> Poly<F>::monomial(const F& field, const Element& c, std::size_t k) {
    if (field.is_zero(c)) return Poly(field);
    std::vector<Element> v(k + 1, field.zero());
    v[k] = c;
    return Poly(field, std::move(v));
}

template <class F>
Poly<F> Poly<F>::from_ints(const F& field, std::initializer_list<long long> ascending) {
    std::vector<Element> v;
    v.reserve(ascending.size());
    for (long long x : ascending) v.push_back(field.from_int(x));
    return Poly(field, std::move(v));
}

template <class F>
const typename Poly<F>::Element& Poly<F>::lc() const {
    if (c_.empty()) raise(ErrorCode::ZeroInput, "leading coefficient of the zero polynomial");
    return c_.back();
}

template <class F>
Poly<F> Poly<F>::monic() const {
    if (c_.empty() || field_.is_one(c_.back())) return *this;
    return scaled(field_.inv(c_.back()));
}

template <class F>
Poly<F> Poly<F>::scaled(const Element& s) const {
    if (field_.is_zero(s)) return Poly(field_);
    std::vector<Element> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.mul(c_[i], s);
    return Poly(field_, std::move(v));
}

template <class F>
Poly<F> Poly<F>::derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<Element> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        v[i - 1] = field_.mul(c_[i], field_.from_int(static_cast<long long>(i)));
    }
    return Poly(field_, std::move(v));
}

template <class F>
typename Poly<F>::Element Poly<F>::eval(const Element& x) const {
    Element acc = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
    return acc;
}

template <class F>
Poly<F> Poly<F>::pow(unsigned e) const {
    Poly result = constant(field_, field_.one());
    Poly base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

template <class F>
Poly<F> Poly<F>::inflate(std::size_t k) const {
    if (k == 0) raise(ErrorCode::InvalidArgument, "inflate by zero");
    if (c_.empty() || k == 1) return *this;
    std::vector<Element> v((c_.size() - 1) * k + 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
    return Poly(field_, std::move(v));
}

template <class F>
std::optional<Poly<F>> Poly<F>::deflate(std::size_t k) const {
    if (k == 0) raise(ErrorCode::InvalidArgument, "deflate by zero");
    if (c_.empty() || k == 1) return *this;
    std::vector<Element> v((c_.size() - 1) / k + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i % k == 0) {
            v[i / k] = c_[i];
        } else if (!field_.is_zero(c_[i])) {
            return std::nullopt;
        }
    }
    return Poly(field_, std::move(v));
}

template <class F>
Poly<F> Poly<F>::reversed(std::size_t n) const {
    if (c_.empty()) return *this;
    if (static_cast<long>(n) < degree()) raise(ErrorCode::InvalidArgument, "reversal length below degree");
    std::vector<Element> v(n + 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) v[n - i] = c_[i];
    return Poly(field_, std::move(v));
}

template <class F>
Poly<F> Poly<F>::operator-() const {
    std::vector<Element> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.neg(c_[i]);
    return Poly(field_, std::move(v));
}

template <class F>
Poly<F>& Poly<F>::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
    trim();
    return *this;
}

template <class F>
Poly<F>& Poly<F>::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
    trim();
    return *this;
}

template <class F>
Poly<F> Poly<F>::multiply(const Poly& a, const Poly& b) {
    const F& f = a.field_;
    if (a.c_.empty() || b.c_.empty()) return Poly(f);
    const std::size_t n = a.c_.size() + b.c_.size() - 1;
    std::vector<Element> v(n);
    if constexpr (std::is_same_v<F, PrimeField>) {
        // Products are below 2^62, so 128-bit accumulation never overflows.
        const std::uint64_t p = f.modulus();
        for (std::size_t k = 0; k < n; ++k) {
            unsigned __int128 acc = 0;
            const std::size_t lo = k >= b.c_.size() ? k - b.c_.size() + 1 : 0;
            const std::size_t hi = std::min(k, a.c_.size() - 1);
            for (std::size_t i = lo; i <= hi; ++i) {
                acc += static_cast<unsigned __int128>(a.c_[i] * b.c_[k - i]);
            }
            v[k] = static_cast<std::uint64_t>(acc % p);
        }
    } else {
        std::fill(v.begin(), v.end(), f.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (f.is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Poly(f, std::move(v));
}

template <class F>
int Poly<F>::compare(const Poly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size() ? -1 : 1;
    for (std::size_t i = c_.size(); i-- > 0;) {
        int r = field_.compare(c_[i], o.c_[i]);
        if (r != 0) return r;
    }
    return 0;
}

template <class F>
std::string Poly<F>::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Element& c = c_[i];
        if (field_.is_zero(c)) continue;
        const bool negative = field_.compare(c, field_.zero()) < 0;
        const Element mag = negative ? field_.neg(c) : c;
        if (negative) {
            out += "-";
        } else if (!first) {
            out += "+";
        }
        first = false;
        if (i == 0) {
            out += field_.to_string(mag);
            continue;
        }
        if (!field_.is_one(mag)) out += field_.to_string(mag) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    const F& f = a.field();
    if (b.is_zero()) raise(ErrorCode::ZeroInput, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<F>(f), a};
    using E = typename F::Element;
    std::vector<E> r = a.coeffs();
    const std::vector<E>& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    const E inv_lc = f.inv(d.back());
    std::vector<E> q(r.size() - db, f.zero());
    if constexpr (std::is_same_v<F, PrimeField>) {
        // Lazy reduction: entries absorb up to `budget` products (each below
        // (p-1)^2 < 2^62) before a full pass mod p; the leading entry is
        // reduced on use.
        const std::uint64_t p = f.modulus();
        const std::uint64_t sq = (p - 1) * (p - 1);
        const std::uint64_t budget = sq == 0 ? ~std::uint64_t{0} : (~std::uint64_t{0} - p) / sq;
        std::uint64_t pending = 0;
        for (std::size_t i = r.size(); i-- > db;) {
            const E top = r[i] % p;
            if (top == 0) continue;
            const E coef = f.mul(top, inv_lc);
            q[i - db] = coef;
            const E neg = p - coef;
            if (++pending > budget) {
                for (std::size_t k = 0; k < i; ++k) r[k] %= p;
                pending = 1;
            }
            for (std::size_t j = 0; j < db; ++j) r[i - db + j] += neg * d[j];
        }
        for (std::size_t k = 0; k < db; ++k) r[k] %= p;
        r.resize(db);
        return {Poly<F>(f, std::move(q)), Poly<F>(f, std::move(r))};
    }
    for (std::size_t i = r.size(); i-- > db;) {
        if (f.is_zero(r[i])) continue;
        const E coef = f.mul(r[i], inv_lc);
        q[i - db] = coef;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(coef, d[j]));
    }
    r.resize(db);
    return {Poly<F>(f, std::move(q)), Poly<F>(f, std::move(r))};
}

template <class F>
Poly<F> rem(const Poly<F>& a, const Poly<F>& b) {
    return divmod(a, b).second;
}

template <class F>
Poly<F> div_exact(const Poly<F>& a, const Poly<F>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) raise(ErrorCode::NotExact, b.to_string() + " does not divide " + a.to_string());
    return q;
}

template <class F>
bool divides(const Poly<F>& b, const Poly<F>& a) {
    if (b.is_zero()) return a.is_zero();
    return rem(a, b).is_zero();
}

template <class F>
Poly<F> gcd(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> x = a, y = b;
    while (!y.is_zero()) {
        Poly<F> r = rem(x, y);
        x = std::move(y);
        y = std::move(r).monic();
    }
    return x.monic();
}

namespace {

template <class F>
void squarefree_rec(const Poly<F>& f, long scale, std::vector<std::pair<Poly<F>, long>>& out) {
    if (f.degree() <= 0) return;
    const F& field = f.field();
    const std::uint64_t p = field.characteristic();
    auto pth_root = [&](const Poly<F>& g) {
        auto d = g.deflate(static_cast<std::size_t>(p));
        if (!d) raise(ErrorCode::NotExact, "expected a p-th power: " + g.to_string());
        std::vector<typename F::Element> v = d->coeffs();
        for (auto& c : v) c = field.pth_root(c);
        return Poly<F>(field, std::move(v));
    };
    const Poly<F> df = f.derivative();
    if (df.is_zero()) {
        squarefree_rec(pth_root(f), scale * static_cast<long>(p), out);
        return;
    }
    Poly<F> c = gcd(f, df);
    Poly<F> w = div_exact(f, c);
    long i = 1;
    while (!w.is_one()) {
        Poly<F> y = gcd(w, c);
        Poly<F> z = div_exact(w, y);
        if (z.degree() > 0) out.emplace_back(z.monic(), i * scale);
        ++i;
        w = std::move(y);
        c = div_exact(c, w);
    }
    if (c.degree() > 0) {
        if (p == 0) raise(ErrorCode::NotExact, "squarefree decomposition left a residue in characteristic 0");
        squarefree_rec(pth_root(c), scale * static_cast<long>(p), out);
    }
}

}  // namespace

template <class F>
std::vector<std::pair<Poly<F>, long>> squarefree_decomposition(const Poly<F>& f) {
    if (f.is_zero()) raise(ErrorCode::ZeroInput, "squarefree decomposition of zero");
    std::vector<std::pair<Poly<F>, long>> out;
    squarefree_rec(f.monic(), 1, out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

template <class F>
Poly<F> squarefree_part(const Poly<F>& f) {
    const F& field = f.field();
    Poly<F> r = Poly<F>::constant(field, field.one());
    for (const auto& [s, m] : squarefree_decomposition(f)) r = r * s;
    return r;
}

#define EDSFN_INSTANTIATE_POLY(F)                                                       \
    template class Poly<F>;                                                             \
    template std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>&, const Poly<F>&);       \
    template Poly<F> rem(const Poly<F>&, const Poly<F>&);                               \
    template Poly<F> div_exact(const Poly<F>&, const Poly<F>&);                         \
    template bool divides(const Poly<F>&, const Poly<F>&);                              \
    template Poly<F> gcd(const Poly<F>&, const Poly<F>&);                               \
    template std::vector<std::pair<Poly<F>, long>> squarefree_decomposition(const Poly<F>&); \
    template Poly<F> squarefree_part(const Poly<F>&);

EDSFN_INSTANTIATE_POLY(RationalField)
EDSFN_INSTANTIATE_POLY(PrimeField)

#undef EDSFN_INSTANTIATE_POLY

}  // namespace edsfn
