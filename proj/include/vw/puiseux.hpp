#pragma once

// Truncated sparse Puiseux series: finitely many terms c_e q^e with exact
// rational exponents e whose denominators divide a declared grid D, plus a
// truncation order O.  Terms with exponent >= O are unknown; a series with
// no order (order() == nullopt) is exact, i.e. all omitted coefficients are
// genuinely zero.
//
// Binary operations compute the tightest sound order: products shift the
// partner's order by the valuation, inversion of c q^v (1 + u) is valid to
// O - 2v, square roots to O - v/2.  Nothing here ever compares coefficients
// beyond the valid order.
//
// The coefficient type K is a field accessed through scalar_ops<K>; the
// instantiations used are exact rationals, cyclotomic numbers, and rational
// functions of y^(1/2) (for the K-theoretic refinement).

#include "vw/cyclotomic.hpp"
#include "vw/rational.hpp"

#include <map>
#include <optional>
#include <sstream>

namespace vw {

template <class K>
struct scalar_ops;

template <>
struct scalar_ops<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& x) { return x == 0; }
    static Rat inv(const Rat& x) { return Rat(1) / x; }
    static Rat mul_rat(const Rat& x, const Rat& s) { return x * s; }
    // multiply by exp(2 pi i a); only +-1 representable over Q
    static Rat phase(const Rat& x, const Rat& a) {
        Rat b = a - Rat(rat_floor(a));
        if (b == 0) return x;
        if (b == Rat(1, 2)) return -x;
        throw std::domain_error("rational series cannot carry a non-real phase; promote to cyclotomic");
    }
    static std::string str(const Rat& x) { return rat_str(x); }
};

template <>
struct scalar_ops<Cyclotomic> {
    static Cyclotomic zero() { return Cyclotomic::zero(); }
    static Cyclotomic one() { return Cyclotomic::one(); }
    static bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
    static Cyclotomic inv(const Cyclotomic& x) { return x.inverse(); }
    static Cyclotomic mul_rat(const Cyclotomic& x, const Rat& s) { return x * s; }
    static Cyclotomic phase(const Cyclotomic& x, const Rat& a) { return x * Cyclotomic::unit_phase(a); }
    static std::string str(const Cyclotomic& x) { return x.str(); }
};

template <class K>
class Puiseux {
  public:
    using Ops = scalar_ops<K>;

    Puiseux() : grid_(1) {}

    static Puiseux zero_exact() { return Puiseux(); }
    static Puiseux zero_to(const Rat& order, long long grid = 1) {
        Puiseux s;
        s.grid_ = grid;
        s.order_ = order;
        return s;
    }
    static Puiseux monomial(const K& c, const Rat& e, std::optional<Rat> order = std::nullopt) {
        Puiseux s;
        s.grid_ = static_cast<long long>(rat_den(e));
        s.order_ = order;
        if (!Ops::is_zero(c) && s.in_range(e)) s.t_[e] = c;
        return s;
    }
    static Puiseux one() { return monomial(Ops::one(), Rat(0)); }
    static Puiseux constant(const K& c) { return monomial(c, Rat(0)); }
    static Puiseux from_terms(std::map<Rat, K> terms, long long grid, std::optional<Rat> order) {
        Puiseux s;
        s.grid_ = grid;
        s.order_ = order;
        for (auto it = terms.begin(); it != terms.end();) {
            if (Ops::is_zero(it->second))
                it = terms.erase(it);
            else
                ++it;
        }
        s.t_ = std::move(terms);
        s.drop_out_of_range();
        return s;
    }

    long long grid() const { return grid_; }
    const std::optional<Rat>& order() const { return order_; }
    const std::map<Rat, K>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_exact() const { return !order_.has_value(); }

    Rat valuation() const {
        if (t_.empty()) throw std::domain_error("valuation of zero series");
        return t_.begin()->first;
    }
    const K& leading_coeff() const {
        if (t_.empty()) throw std::domain_error("leading coefficient of zero series");
        return t_.begin()->second;
    }

    // Stored coefficient or zero; throws if e is beyond the valid order.
    K coeff(const Rat& e) const {
        if (order_ && e >= *order_) throw std::domain_error("coefficient_at: exponent beyond truncation order");
        auto it = t_.find(e);
        return it == t_.end() ? Ops::zero() : it->second;
    }

    Puiseux truncated(const Rat& order) const {
        Puiseux s = *this;
        s.order_ = order_ ? std::min(*order_, order) : order;
        s.drop_out_of_range();
        return s;
    }

    Puiseux with_grid(long long g) const {
        Puiseux s = *this;
        s.grid_ = lcm_ll(s.grid_, g);
        return s;
    }

    template <class F>
    auto map_coeffs(F&& f) const -> Puiseux<std::decay_t<decltype(f(std::declval<K>()))>> {
        using K2 = std::decay_t<decltype(f(std::declval<K>()))>;
        Puiseux<K2> s;
        s.set_shape(grid_, order_);
        for (const auto& [e, c] : t_) {
            K2 v = f(c);
            if (!scalar_ops<K2>::is_zero(v)) s.raw_terms()[e] = v;
        }
        return s;
    }

    friend Puiseux operator+(const Puiseux& a, const Puiseux& b) {
        Puiseux s;
        s.grid_ = lcm_ll(a.grid_, b.grid_);
        s.order_ = min_order(a.order_, b.order_);
        s.t_ = a.t_;
        for (const auto& [e, c] : b.t_) {
            auto it = s.t_.find(e);
            if (it == s.t_.end())
                s.t_[e] = c;
            else {
                it->second = it->second + c;
                if (Ops::is_zero(it->second)) s.t_.erase(it);
            }
        }
        s.drop_out_of_range();
        return s;
    }
    friend Puiseux operator-(const Puiseux& a, const Puiseux& b) { return a + (-b); }
    Puiseux operator-() const {
        Puiseux s = *this;
        for (auto& [e, c] : s.t_) c = -c;
        return s;
    }

    friend Puiseux operator*(const Puiseux& a, const Puiseux& b) {
        Puiseux s;
        s.grid_ = lcm_ll(a.grid_, b.grid_);
        s.order_ = mul_order(a, b);
        if (a.t_.empty() || b.t_.empty()) return s;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                Rat e = ea + eb;
                if (s.order_ && e >= *s.order_) continue;
                K v = ca * cb;
                if (Ops::is_zero(v)) continue;
                auto it = s.t_.find(e);
                if (it == s.t_.end())
                    s.t_[e] = v;
                else {
                    it->second = it->second + v;
                    if (Ops::is_zero(it->second)) s.t_.erase(it);
                }
            }
        return s;
    }

    Puiseux scaled(const K& c) const {
        Puiseux s = *this;
        if (Ops::is_zero(c)) {
            s.t_.clear();
            return s;
        }
        for (auto& [e, v] : s.t_) v = v * c;
        // scaling by an exact nonzero field element cannot create zeros
        return s;
    }
    Puiseux scaled_rat(const Rat& c) const {
        Puiseux s = *this;
        if (c == 0) {
            s.t_.clear();
            return s;
        }
        for (auto& [e, v] : s.t_) v = Ops::mul_rat(v, c);
        return s;
    }

    // q^e * (*this)
    Puiseux shifted(const Rat& e) const {
        Puiseux s;
        s.grid_ = lcm_ll(grid_, (long long)rat_den(e));
        s.order_ = order_ ? std::optional<Rat>(*order_ + e) : std::nullopt;
        for (const auto& [x, c] : t_) s.t_[x + e] = c;
        return s;
    }

    // Multiplicative inverse; `order` must be supplied for exact
    // non-monomial input (the inverse is an infinite series).
    Puiseux recip(std::optional<Rat> order = std::nullopt) const {
        if (t_.empty()) throw std::domain_error("inversion of the zero series");
        Rat v = valuation();
        if (t_.size() == 1 && is_exact() && !order) {
            return monomial(Ops::inv(t_.begin()->second), -v);
        }
        std::optional<Rat> target;  // order of the result
        if (order_) target = *order_ - 2 * v;
        if (order) target = target ? std::min(*target, *order) : *order;
        if (!target) throw std::domain_error("recip of exact series requires an explicit order");
        // u := self / (c q^v) = 1 + ..., invert by back-substitution, then shift
        long long D = effective_grid();
        long long len = steps(*target + v, D);  // result exponents live in [-v, target)
        if (len <= 0) return zero_to(*target, D);
        std::vector<K> u(len, Ops::zero()), w(len, Ops::zero());
        K c0 = t_.begin()->second;
        K c0inv = Ops::inv(c0);
        for (const auto& [e, c] : t_) {
            long long idx = steps(e - v, D);
            if (idx < len) u[idx] = c * c0inv;
        }
        w[0] = Ops::one();
        for (long long n = 1; n < len; ++n) {
            K acc = Ops::zero();
            for (long long j = 0; j < n; ++j) {
                if (Ops::is_zero(w[j]) || Ops::is_zero(u[n - j])) continue;
                acc = acc + w[j] * u[n - j];
            }
            w[n] = -acc;
        }
        Puiseux s;
        s.grid_ = D;
        s.order_ = target;
        for (long long n = 0; n < len; ++n) {
            if (Ops::is_zero(w[n])) continue;
            s.t_[Rat(n, 1) / Rat(D) - v] = w[n] * c0inv;
        }
        return s;
    }

    Puiseux pow(long long n) const {
        if (n == 0) return one();
        if (n < 0) return recip().pow(-n);
        Puiseux acc = one(), base = *this;
        unsigned long long k = (unsigned long long)n;
        while (k) {
            if (k & 1) acc = acc * base;
            base = (k >>= 1) ? base * base : base;
        }
        return acc;
    }

    // Square root with caller-supplied branch: root * root must equal the
    // leading coefficient.  The valuation must be even on the grid.
    Puiseux sqrt(const K& leading_root, std::optional<Rat> order = std::nullopt) const {
        if (t_.empty()) throw std::domain_error("sqrt of zero series");
        Rat v = valuation();
        long long eg = effective_grid();
        if (rat_num(v * eg) % 2 != 0) eg *= 2;  // make q^(v/2) representable
        K c0 = t_.begin()->second;
        if (!(leading_root * leading_root == c0))
            throw std::domain_error("sqrt: branch root squared does not match leading coefficient");
        std::optional<Rat> target;
        if (order_) target = *order_ - v / 2;
        if (order) target = target ? std::min(*target, *order) : *order;
        if (!target) throw std::domain_error("sqrt of exact series requires an order");
        long long D = eg;
        Rat half_v = v / 2;
        long long len = steps(*target - half_v, D);
        if (len <= 0) return zero_to(*target, D);
        // normalize to 1 + u, take sqrt by coefficient recursion, rescale
        std::vector<K> u(len, Ops::zero()), w(len, Ops::zero());
        K c0inv = Ops::inv(c0);
        for (const auto& [e, c] : t_) {
            long long idx = steps(e - v, D);
            if (idx < len) u[idx] = c * c0inv;
        }
        w[0] = Ops::one();
        K two = Ops::one() + Ops::one();
        K twoinv = Ops::inv(two);
        for (long long n = 1; n < len; ++n) {
            K acc = Ops::zero();
            for (long long j = 1; j < n; ++j) {
                if (Ops::is_zero(w[j]) || Ops::is_zero(w[n - j])) continue;
                acc = acc + w[j] * w[n - j];
            }
            w[n] = (u[n] - acc) * twoinv;
        }
        Puiseux s;
        s.grid_ = D;
        s.order_ = target;
        for (long long n = 0; n < len; ++n) {
            if (Ops::is_zero(w[n])) continue;
            s.t_[Rat(n, 1) / Rat(D) + half_v] = w[n] * leading_root;
        }
        return s;
    }

    // log of a series with constant leading term 1.
    Puiseux log(std::optional<Rat> order = std::nullopt) const {
        check_unit_leading("log");
        std::optional<Rat> target = order_ ? order_ : std::optional<Rat>();
        if (order) target = target ? std::min(*target, *order) : *order;
        if (!target) throw std::domain_error("log of exact series requires an order");
        long long D = effective_grid();
        long long len = steps(*target, D);
        std::vector<K> u(len, Ops::zero()), w(len, Ops::zero());
        for (const auto& [e, c] : t_) {
            long long idx = steps(e, D);
            if (idx >= 0 && idx < len) u[idx] = c;
        }
        // w = log u via n w_n = n u_n - sum_{j<n} j w_j u_{n-j}
        for (long long n = 1; n < len; ++n) {
            K acc = Ops::mul_rat(u[n], Rat(n));
            for (long long j = 1; j < n; ++j) {
                if (Ops::is_zero(w[j]) || Ops::is_zero(u[n - j])) continue;
                acc = acc - Ops::mul_rat(w[j] * u[n - j], Rat(j));
            }
            w[n] = Ops::mul_rat(acc, Rat(1, n));
        }
        Puiseux s;
        s.grid_ = D;
        s.order_ = target;
        for (long long n = 1; n < len; ++n)
            if (!Ops::is_zero(w[n])) s.t_[Rat(n, 1) / Rat(D)] = w[n];
        return s;
    }

    // exp of a series with positive valuation.
    Puiseux exp(std::optional<Rat> order = std::nullopt) const {
        if (!t_.empty() && valuation() <= 0) throw std::domain_error("exp requires positive valuation");
        std::optional<Rat> target = order_ ? order_ : std::optional<Rat>();
        if (order) target = target ? std::min(*target, *order) : *order;
        if (!target) throw std::domain_error("exp of exact series requires an order");
        long long D = effective_grid();
        long long len = steps(*target, D);
        if (len <= 0) return zero_to(*target, D);
        std::vector<K> u(len, Ops::zero()), w(len, Ops::zero());
        for (const auto& [e, c] : t_) {
            long long idx = steps(e, D);
            if (idx >= 0 && idx < len) u[idx] = c;
        }
        w[0] = Ops::one();
        // n w_n = sum_{j=1..n} j u_j w_{n-j}
        for (long long n = 1; n < len; ++n) {
            K acc = Ops::zero();
            for (long long j = 1; j <= n; ++j) {
                if (Ops::is_zero(u[j]) || Ops::is_zero(w[n - j])) continue;
                acc = acc + Ops::mul_rat(u[j] * w[n - j], Rat(j));
            }
            w[n] = Ops::mul_rat(acc, Rat(1, n));
        }
        Puiseux s;
        s.grid_ = D;
        s.order_ = target;
        for (long long n = 0; n < len; ++n)
            if (!Ops::is_zero(w[n])) s.t_[Rat(n, 1) / Rat(D)] = w[n];
        return s;
    }

    // q^e -> exp(2 pi i rho e) q^(scale e).  With rho = 0 this is the
    // substitution q -> q^scale; with scale = 1 it realizes tau -> tau + rho.
    Puiseux rescale_phase(const Rat& scale, const Rat& rho) const {
        if (scale <= 0) throw std::invalid_argument("rescale_phase: scale must be positive");
        Puiseux s;
        s.grid_ = lcm_ll(grid_ * (long long)rat_den(scale), 1);
        s.order_ = order_ ? std::optional<Rat>(*order_ * scale) : std::nullopt;
        for (const auto& [e, c] : t_) {
            K v = Ops::phase(c, rho * e);
            if (!Ops::is_zero(v)) s.t_[e * scale] = v;
        }
        return s;
    }

    friend bool operator==(const Puiseux& a, const Puiseux& b) {
        return a.order_ == b.order_ && a.t_ == b.t_;
    }

    // Compare coefficients on [min exponent, order); both series must be
    // valid at least to `order`.
    static bool agree_to(const Puiseux& a, const Puiseux& b, const Rat& order) {
        if ((a.order_ && *a.order_ < order) || (b.order_ && *b.order_ < order))
            throw std::domain_error("agree_to: series order insufficient for requested comparison");
        auto it = a.t_.begin();
        auto jt = b.t_.begin();
        while (it != a.t_.end() && it->first < order && jt != b.t_.end() && jt->first < order) {
            if (it->first != jt->first || !(it->second == jt->second)) return false;
            ++it;
            ++jt;
        }
        if (it != a.t_.end() && it->first < order) return false;
        if (jt != b.t_.end() && jt->first < order) return false;
        return true;
    }

    // First exponent < order where the two differ, if any.
    static std::optional<Rat> first_difference(const Puiseux& a, const Puiseux& b, const Rat& order) {
        Puiseux d = a - b;
        for (const auto& [e, c] : d.terms())
            if (e < order) return e;
        if (d.order() && *d.order() < order)
            throw std::domain_error("first_difference: order insufficient");
        return std::nullopt;
    }

    std::string str(size_t max_terms = 12) const {
        std::ostringstream os;
        size_t n = 0;
        for (const auto& [e, c] : t_) {
            if (n++ >= max_terms) {
                os << " + ...";
                break;
            }
            if (n > 1) os << " + ";
            os << "(" << Ops::str(c) << ")q^(" << rat_str(e) << ")";
        }
        if (t_.empty()) os << "0";
        if (order_) os << " + O(q^(" << rat_str(*order_) << "))";
        return os.str();
    }

    // internal access for map_coeffs
    void set_shape(long long g, std::optional<Rat> o) {
        grid_ = g;
        order_ = o;
    }
    std::map<Rat, K>& raw_terms() { return t_; }

  private:
    long long grid_;
    std::optional<Rat> order_;
    std::map<Rat, K> t_;

    bool in_range(const Rat& e) const { return !order_ || e < *order_; }
    // smallest grid the stored support actually needs; dense recursions use
    // this instead of the declared grid (which lcm-inflates under products)
    long long effective_grid() const {
        long long g = 1;
        for (const auto& [e, c] : t_) g = lcm_ll(g, (long long)rat_den(e));
        return g;
    }
    void drop_out_of_range() {
        if (!order_) return;
        for (auto it = t_.begin(); it != t_.end();) {
            if (it->first >= *order_)
                it = t_.erase(it);
            else
                ++it;
        }
    }
    static std::optional<Rat> min_order(const std::optional<Rat>& a, const std::optional<Rat>& b) {
        if (!a) return b;
        if (!b) return a;
        return std::min(*a, *b);
    }
    // lower bound on the valuation for order bookkeeping
    static Rat a_val_bound(const Puiseux& s) {
        if (!s.t_.empty()) return s.t_.begin()->first;
        if (s.order_) return *s.order_;
        return Rat(0);
    }
    static std::optional<Rat> mul_order(const Puiseux& a, const Puiseux& b) {
        if (a.is_exact() && a.t_.empty()) return std::nullopt;  // exact zero
        if (b.is_exact() && b.t_.empty()) return std::nullopt;
        std::optional<Rat> o;
        if (a.order_) o = *a.order_ + a_val_bound(b);
        if (b.order_) {
            Rat cand = *b.order_ + a_val_bound(a);
            o = o ? std::min(*o, cand) : cand;
        }
        return o;
    }
    // number of grid points k/D with 0 <= k/D < width
    static long long steps(const Rat& width, long long D) {
        Int n = rat_ceil(width * D);
        if (n <= 0) return 0;
        return static_cast<long long>(n);
    }
    void check_unit_leading(const char* who) const {
        if (t_.empty() || !(t_.begin()->first == Rat(0)) || !(t_.begin()->second == Ops::one()))
            throw std::domain_error(std::string(who) + " requires leading term 1");
    }
};

// Roots of a X^2 + b X + c = 0.  X_plus is (-b + sqrt(b^2 - 4ac)) / (2a)
// where the square root takes the caller's branch for its leading
// coefficient; X_minus is the other root, computed as c / (a X_plus) so the
// Vieta product is exact by construction.
template <class K>
std::pair<Puiseux<K>, Puiseux<K>> solve_quadratic(const Puiseux<K>& a, const Puiseux<K>& b,
                                                  const Puiseux<K>& c, const K& branch_root) {
    auto disc = b * b - a * c.scaled_rat(Rat(4));
    auto root = disc.sqrt(branch_root);
    auto ainv = a.recip();
    auto half = Rat(1, 2);
    auto xp = (-b + root).scaled_rat(half) * ainv;
    auto xm = (-b - root).scaled_rat(half) * ainv;
    return {xp, xm};
}

using QSeries = Puiseux<Rat>;
using CSeries = Puiseux<Cyclotomic>;

inline CSeries promote(const QSeries& s) {
    return s.map_coeffs([](const Rat& c) { return Cyclotomic(c); });
}

// Coefficient-wise Galois action zeta -> zeta^k.
inline CSeries galois(const CSeries& s, long long k) {
    return s.map_coeffs([&](const Cyclotomic& c) { return c.galois(k); });
}

inline bool all_rational(const CSeries& s) {
    for (const auto& [e, c] : s.terms())
        if (!c.is_rational()) return false;
    return true;
}

inline QSeries demote(const CSeries& s) {
    return s.map_coeffs([](const Cyclotomic& c) { return c.rational_part(); });
}

}  // namespace vw
