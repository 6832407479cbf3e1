#pragma once

// Bivariate refinement series: a Puiseux series in q whose coefficients are
// rational functions of Y = y^(1/ygrid).  ygrid is per-series and gets
// promoted to the lcm when two series meet (exponents of Y are stretched
// accordingly), exactly like the q-grid inside Puiseux.

#include "vw/laurent.hpp"

namespace vw {

template <class K>
struct BiSeries {
    using RF = RatFunc<K>;
    using Series = Puiseux<RF>;

    Series s;
    long long yg = 2;

    BiSeries() = default;
    BiSeries(Series qs, long long ygrid) : s(std::move(qs)), yg(ygrid) {}

    static BiSeries from_q(const Puiseux<K>& q, long long ygrid = 2) {
        return {q.map_coeffs([](const K& c) { return RF(c); }), ygrid};
    }
    // c * q^qe * y^ye
    static BiSeries monomial(const K& c, const Rat& qe, const Rat& ye,
                             std::optional<Rat> order = std::nullopt) {
        long long ygrid = (long long)rat_den(ye);
        long long ypow = (long long)rat_num(ye);
        return {Series::monomial(RF::monomial(c, ypow), qe, order), ygrid};
    }
    static BiSeries one() { return from_q(Puiseux<K>::one(), 1); }
    static BiSeries zero_exact() { return {Series::zero_exact(), 1}; }

    bool is_zero() const { return s.is_zero(); }
    const std::optional<Rat>& order() const { return s.order(); }

    BiSeries with_ygrid(long long g) const {
        long long l = lcm_ll(yg, g);
        if (l == yg) return *this;
        long long f = l / yg;
        return {s.map_coeffs([&](const RF& c) { return c.stretched(f); }), l};
    }
    static std::pair<BiSeries, BiSeries> aligned(const BiSeries& a, const BiSeries& b) {
        long long l = lcm_ll(a.yg, b.yg);
        return {a.with_ygrid(l), b.with_ygrid(l)};
    }

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
        auto [x, y] = aligned(a, b);
        return {x.s + y.s, x.yg};
    }
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b) {
        auto [x, y] = aligned(a, b);
        return {x.s - y.s, x.yg};
    }
    BiSeries operator-() const { return {-s, yg}; }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
        auto [x, y] = aligned(a, b);
        return {x.s * y.s, x.yg};
    }
    BiSeries recip(std::optional<Rat> order = std::nullopt) const { return {s.recip(order), yg}; }
    BiSeries pow(long long n) const { return {s.pow(n), yg}; }
    BiSeries sqrt(const RF& leading_root, std::optional<Rat> order = std::nullopt) const {
        return {s.sqrt(leading_root, order), yg};
    }
    BiSeries truncated(const Rat& order) const { return {s.truncated(order), yg}; }
    BiSeries rescale_phase(const Rat& scale, const Rat& rho) const { return {s.rescale_phase(scale, rho), yg}; }
    BiSeries scaled(const RF& c) const { return {s.scaled(c), yg}; }
    BiSeries scaled_rat(const Rat& c) const { return {s.scaled_rat(c), yg}; }

    // y -> y^a for positive rational a
    BiSeries y_scaled(const Rat& a) const {
        long long p = (long long)rat_num(a), q = (long long)rat_den(a);
        if (p <= 0) throw std::invalid_argument("y_scaled: scale must be positive");
        BiSeries r{s.map_coeffs([&](const RF& c) { return c.stretched(p); }), yg * q};
        return r;
    }
    BiSeries y_inverted() const {
        return {s.map_coeffs([](const RF& c) { return c.y_inverted(); }), yg};
    }
    Puiseux<K> y_one() const {
        return s.map_coeffs([](const RF& c) { return c.eval_one(); });
    }

    static bool agree_to(const BiSeries& a, const BiSeries& b, const Rat& order) {
        auto [x, y] = aligned(a, b);
        return Series::agree_to(x.s, y.s, order);
    }
};

using QYSeries = BiSeries<Rat>;
using CYSeries = BiSeries<Cyclotomic>;

inline CYSeries promote_y(const QYSeries& a) {
    using RFC = RatFunc<Cyclotomic>;
    auto lift = [](const LaurentPoly<Rat>& p) {
        LaurentPoly<Cyclotomic> q;
        q.lo = p.lo;
        q.c.reserve(p.c.size());
        for (const auto& x : p.c) q.c.push_back(Cyclotomic(x));
        return q;
    };
    return {a.s.map_coeffs([&](const RatFunc<Rat>& c) { return RFC(lift(c.num()), lift(c.den())); }), a.yg};
}

// Exact square root of a polynomial (even degree, square leading coefficient
// over Q); used to take branch roots of leading y-coefficients.
inline std::optional<LaurentPoly<Rat>> sqrt_laurent(const LaurentPoly<Rat>& p) {
    if (p.is_zero()) return LaurentPoly<Rat>::zero();
    if (p.lo % 2 != 0 || p.c.size() % 2 == 0) return std::nullopt;
    auto lead = exact_sqrt(p.c.back());
    if (!lead) return std::nullopt;
    size_t n = (p.c.size() - 1) / 2;
    std::vector<Rat> g(n + 1, Rat(0));
    g[n] = *lead;
    for (long long k = (long long)n - 1; k >= 0; --k) {
        // coefficient of Y^(k+n) in g^2 must match p
        Rat acc = p.c[k + n];
        for (size_t j = (size_t)k + 1; j < n; ++j) acc -= g[j] * g[k + n - j];
        g[k] = acc / (Rat(2) * g[n]);
    }
    LaurentPoly<Rat> r;
    r.lo = p.lo / 2;
    r.c = g;
    r.normalize();
    LaurentPoly<Rat> chk = r * r;
    if (!(chk == p)) return std::nullopt;
    return r;
}

inline std::optional<RatFunc<Rat>> sqrt_ratfunc(const RatFunc<Rat>& f) {
    auto n = sqrt_laurent(f.num());
    if (!n) return std::nullopt;
    auto d = sqrt_laurent(f.den());
    if (!d) return std::nullopt;
    return RatFunc<Rat>(*n, *d);
}

}  // namespace vw
