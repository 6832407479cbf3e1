#pragma once

// Laurent polynomials and rational functions in one variable Y over an exact
// field K.  In the refined (q, y) series, Y stands for a fixed root y^(1/G);
// the grid G lives on the bivariate series, not here.
//
// Rational functions are kept reduced (numerator and denominator coprime,
// denominator an ordinary polynomial with nonzero constant term and content
// 1).  Quotients of refined theta functions genuinely need this
// representation: they are not Laurent polynomials.
//
// The gcd over Q runs on primitive integer polynomials with pseudo-division
// and content stripping; plain monic Euclid over Q blows up coefficient
// entropy badly enough to dominate the whole refinement pipeline.

#include "vw/puiseux.hpp"

#include <vector>

namespace vw {

template <class K>
struct LaurentPoly {
    using Ops = scalar_ops<K>;
    long long lo = 0;
    std::vector<K> c;  // coefficient of Y^(lo + i); c.front(), c.back() nonzero when nonempty

    LaurentPoly() = default;
    static LaurentPoly zero() { return {}; }
    static LaurentPoly from_scalar(const K& x) {
        LaurentPoly p;
        if (!Ops::is_zero(x)) p.c = {x};
        return p;
    }
    static LaurentPoly monomial(const K& x, long long e) {
        LaurentPoly p = from_scalar(x);
        if (!p.c.empty()) p.lo = e;
        return p;
    }

    bool is_zero() const { return c.empty(); }
    long long hi() const { return lo + (long long)c.size() - 1; }  // only when nonzero
    long long degree() const { return (long long)c.size() - 1; }

    void normalize() {
        size_t b = 0, e = c.size();
        while (b < e && Ops::is_zero(c[b])) ++b;
        while (e > b && Ops::is_zero(c[e - 1])) --e;
        if (b == e) {
            c.clear();
            lo = 0;
            return;
        }
        if (b > 0 || e < c.size()) {
            std::vector<K> nc(c.begin() + b, c.begin() + e);
            c = std::move(nc);
            lo += (long long)b;
        }
    }

    K at(long long e) const {
        if (c.empty() || e < lo || e > hi()) return Ops::zero();
        return c[e - lo];
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long long nlo = std::min(a.lo, b.lo), nhi = std::max(a.hi(), b.hi());
        LaurentPoly r;
        r.lo = nlo;
        r.c.assign(nhi - nlo + 1, Ops::zero());
        for (size_t i = 0; i < a.c.size(); ++i) r.c[a.lo - nlo + i] = r.c[a.lo - nlo + i] + a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[b.lo - nlo + i] = r.c[b.lo - nlo + i] + b.c[i];
        r.normalize();
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        LaurentPoly r;
        r.lo = a.lo + b.lo;
        r.c.assign(a.c.size() + b.c.size() - 1, Ops::zero());
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (Ops::is_zero(a.c[i])) continue;
            for (size_t j = 0; j < b.c.size(); ++j) {
                if (Ops::is_zero(b.c[j])) continue;
                r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
            }
        }
        r.normalize();
        return r;
    }
    LaurentPoly scaled(const K& s) const {
        if (Ops::is_zero(s)) return zero();
        LaurentPoly r = *this;
        for (auto& x : r.c) x = x * s;
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.lo == b.lo && a.c == b.c; }

    LaurentPoly y_inverted() const {  // Y -> 1/Y
        if (is_zero()) return zero();
        LaurentPoly r;
        r.lo = -hi();
        r.c.assign(c.rbegin(), c.rend());
        return r;
    }
    LaurentPoly stretched(long long k) const {  // Y -> Y^k, k >= 1
        if (is_zero() || k == 1) return *this;
        LaurentPoly r;
        r.lo = lo * k;
        r.c.assign((c.size() - 1) * k + 1, Ops::zero());
        for (size_t i = 0; i < c.size(); ++i) r.c[i * k] = c[i];
        return r;
    }
    K eval_one() const {  // Y = 1
        K acc = Ops::zero();
        for (const auto& x : c) acc = acc + x;
        return acc;
    }
};

namespace detail {

// --- rational content ------------------------------------------------------

inline Rat coeff_content(const Rat& x) { return x < 0 ? -x : x; }
inline Rat coeff_content(const Cyclotomic& x) {
    Int g = 0, l = 1;
    for (const auto& r : x.coords()) {
        if (r == 0) continue;
        g = gcd(g, rat_num(r) < 0 ? Int(-rat_num(r)) : rat_num(r));
        l = lcm(l, rat_den(r));
    }
    if (g == 0) return Rat(0);
    return Rat(g, l);
}

template <class K>
Rat poly_content(const std::vector<K>& c) {
    Int L = 1;
    std::vector<Rat> vals;
    for (const auto& x : c) {
        Rat cc = coeff_content(x);
        if (cc == 0) continue;
        vals.push_back(cc);
        L = lcm(L, rat_den(cc));
    }
    if (vals.empty()) return Rat(1);
    Int G = 0;
    for (const auto& v : vals) G = gcd(G, rat_num(v) * (L / rat_den(v)));
    return Rat(G, L);
}

// --- gcd over Q via primitive integer pseudo-remainders --------------------

inline std::vector<Int> to_primitive(const std::vector<Rat>& p) {
    Int l = 1;
    for (const auto& x : p) l = lcm(l, rat_den(x));
    std::vector<Int> out(p.size());
    Int g = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        out[i] = rat_num(p[i]) * (l / rat_den(p[i]));
        g = gcd(g, out[i] < 0 ? Int(-out[i]) : out[i]);
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

inline void trim_int(std::vector<Int>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline void make_primitive(std::vector<Int>& p) {
    Int g = 0;
    for (const auto& x : p) g = gcd(g, x < 0 ? Int(-x) : x);
    if (g > 1)
        for (auto& x : p) x /= g;
}

// pseudo-remainder: lead(b)^(deg a - deg b + 1) * a mod b, exact over Z
inline std::vector<Int> pseudo_rem(std::vector<Int> a, const std::vector<Int>& b) {
    trim_int(a);
    while (a.size() >= b.size() && !a.empty()) {
        Int f = a.back();
        size_t k = a.size() - b.size();
        for (auto& x : a) x *= b.back();
        for (size_t j = 0; j < b.size(); ++j) a[k + j] -= f * b[j];
        trim_int(a);
    }
    return a;
}

inline std::vector<Rat> poly_gcd_q(const std::vector<Rat>& pa, const std::vector<Rat>& pb) {
    std::vector<Int> a = to_primitive(pa), b = to_primitive(pb);
    trim_int(a);
    trim_int(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        auto r = pseudo_rem(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    std::vector<Rat> g(a.size());
    for (size_t i = 0; i < a.size(); ++i) g[i] = Rat(a[i]);
    if (!g.empty() && g.back() < 0)
        for (auto& x : g) x = -x;
    return g;
}

// generic field gcd (content-stripped to slow down entropy growth)
template <class K>
std::vector<K> poly_rem(std::vector<K> a, const std::vector<K>& b) {
    using Ops = scalar_ops<K>;
    auto trim = [](std::vector<K>& p) {
        while (!p.empty() && Ops::is_zero(p.back())) p.pop_back();
    };
    trim(a);
    K binv = Ops::inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
        K f = a.back() * binv;
        size_t k = a.size() - b.size();
        for (size_t j = 0; j + 1 < b.size(); ++j) a[k + j] = a[k + j] - f * b[j];
        a.pop_back();
        trim(a);
    }
    return a;
}

template <class K>
std::vector<K> poly_gcd(std::vector<K> a, std::vector<K> b) {
    using Ops = scalar_ops<K>;
    auto trim = [](std::vector<K>& p) {
        while (!p.empty() && Ops::is_zero(p.back())) p.pop_back();
    };
    auto strip = [](std::vector<K>& p) {
        Rat c = poly_content(p);
        if (c != 0 && c != 1)
            for (auto& x : p) x = Ops::mul_rat(x, Rat(1) / c);
    };
    trim(a);
    trim(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        auto r = poly_rem(a, b);
        strip(r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        K inv = Ops::inv(a.back());
        for (auto& x : a) x = x * inv;
    }
    return a;
}

inline std::vector<Rat> poly_gcd_dispatch(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    return poly_gcd_q(a, b);
}
template <class K>
std::vector<K> poly_gcd_dispatch(const std::vector<K>& a, const std::vector<K>& b) {
    return poly_gcd(a, b);
}

template <class K>
std::pair<std::vector<K>, std::vector<K>> poly_divmod_exact(std::vector<K> a, const std::vector<K>& b) {
    using Ops = scalar_ops<K>;
    auto trim = [](std::vector<K>& p) {
        while (!p.empty() && Ops::is_zero(p.back())) p.pop_back();
    };
    trim(a);
    std::vector<K> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Ops::zero());
    K binv = Ops::inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
        K f = a.back() * binv;
        size_t k = a.size() - b.size();
        q[k] = f;
        for (size_t j = 0; j < b.size(); ++j) a[k + j] = a[k + j] - f * b[j];
        trim(a);
    }
    return {q, a};
}

}  // namespace detail

template <class K>
class RatFunc {
  public:
    using Ops = scalar_ops<K>;
    using LP = LaurentPoly<K>;

    RatFunc() : num_(LP::zero()), den_(LP::from_scalar(Ops::one())) {}
    explicit RatFunc(const K& x) : num_(LP::from_scalar(x)), den_(LP::from_scalar(Ops::one())) {}
    explicit RatFunc(const LP& p) : num_(p), den_(LP::from_scalar(Ops::one())) {}
    RatFunc(const LP& n, const LP& d) : num_(n), den_(d) {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        reduce();
    }
    static RatFunc monomial(const K& x, long long e) { return RatFunc(LP::monomial(x, e)); }

    const LP& num() const { return num_; }
    const LP& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.is_polynomial() && b.is_polynomial() && a.den_ == b.den_) {
            RatFunc r;
            r.num_ = a.num_ + b.num_;
            r.den_ = a.den_;
            return r;
        }
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        if (a.is_polynomial() && b.is_polynomial()) {
            RatFunc r;
            r.num_ = a.num_ * b.num_;
            r.den_ = a.den_ * b.den_;  // a scalar: cheap renormalization only
            r.renormalize_unit();
            return r;
        }
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    RatFunc inverse() const {
        if (is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(den_, num_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return a.num_ == b.num_;
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    RatFunc scaled_rat(const Rat& s) const {
        if (s == 0) return RatFunc();
        RatFunc r = *this;
        for (auto& x : r.num_.c) x = Ops::mul_rat(x, s);
        return r;
    }

    RatFunc y_inverted() const {
        RatFunc r;
        r.num_ = num_.y_inverted();
        r.den_ = den_.y_inverted();
        r.renormalize_unit();
        return r;
    }
    RatFunc stretched(long long k) const {
        RatFunc r;
        r.num_ = num_.stretched(k);
        r.den_ = den_.stretched(k);
        return r;
    }
    K eval_one() const {  // Y = 1
        K d = den_.eval_one();
        if (Ops::is_zero(d)) throw std::domain_error("RatFunc: pole at y = 1");
        return num_.eval_one() * Ops::inv(d);
    }

  private:
    LP num_, den_;

    // denominator: lowest exponent 0, content 1, orientation fixed
    void renormalize_unit() {
        num_.lo -= den_.lo;
        den_.lo = 0;
        if (den_.c.empty()) return;
        Rat c = detail::poly_content(den_.c);
        if (sign_flip(den_.c.back())) c = -c;
        if (c != 1 && c != 0) {
            Rat inv = Rat(1) / c;
            for (auto& x : den_.c) x = Ops::mul_rat(x, inv);
            for (auto& x : num_.c) x = Ops::mul_rat(x, inv);
        }
    }
    static bool sign_flip(const Rat& lead) { return lead < 0; }
    static bool sign_flip(const Cyclotomic& lead) {
        for (const auto& r : lead.coords())
            if (r != 0) return r < 0;
        return false;
    }

    void reduce() {
        if (num_.is_zero()) {
            den_ = LP::from_scalar(Ops::one());
            return;
        }
        if (num_.c.size() > 1 && den_.c.size() > 1) {
            auto g = detail::poly_gcd_dispatch(num_.c, den_.c);
            if (g.size() > 1) {
                num_.c = detail::poly_divmod_exact(num_.c, g).first;
                den_.c = detail::poly_divmod_exact(den_.c, g).first;
                num_.normalize();
                den_.normalize();
            }
        }
        renormalize_unit();
    }
};

template <class K>
struct scalar_ops<RatFunc<K>> {
    using RF = RatFunc<K>;
    static RF zero() { return RF(); }
    static RF one() { return RF(scalar_ops<K>::one()); }
    static bool is_zero(const RF& x) { return x.is_zero(); }
    static RF inv(const RF& x) { return x.inverse(); }
    static RF mul_rat(const RF& x, const Rat& s) { return x.scaled_rat(s); }
    static RF phase(const RF& x, const Rat& a) {
        return x * RF(scalar_ops<K>::phase(scalar_ops<K>::one(), a));
    }
    static std::string str(const RF& x) {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < x.num().c.size(); ++i) {
            if (i) os << ",";
            os << scalar_ops<K>::str(x.num().c[i]);
        }
        os << "]Y^" << x.num().lo << "/[";
        for (size_t i = 0; i < x.den().c.size(); ++i) {
            if (i) os << ",";
            os << scalar_ops<K>::str(x.den().c[i]);
        }
        os << "]";
        return os.str();
    }
};

}  // namespace vw
