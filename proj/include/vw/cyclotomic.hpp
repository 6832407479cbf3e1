#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// An element is stored as its coordinate vector in the power basis
// 1, zeta, ..., zeta^{phi(N)-1} of Q(zeta_N) = Q[x]/(Phi_N(x)).  Arithmetic
// reduces exponents mod N first (zeta^N = 1) and then reduces the degree
// below phi(N) with precomputed remainders x^j mod Phi_N.  Elements of
// different conductors are combined by embedding into the lcm conductor,
// zeta_N = zeta_M^{M/N}.
//
// The fields actually exercised here are small: Q(i), Q(zeta_3), Q(zeta_5),
// Q(zeta_8) (contains sqrt 2), Q(zeta_12) (sqrt 3), Q(zeta_20), Q(zeta_24),
// and lcms of these.  sqrt 5 = 2(zeta_5 + zeta_5^-1) + 1.

#include "vw/rational.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace vw {

namespace detail {

// Phi_N as integer coefficient vector, degree phi(N); monic.
// Computed as (x^N - 1) / prod_{d | N, d < N} Phi_d, all divisions exact.
inline const std::vector<Int>& cyclotomic_poly(long long n) {
    static std::map<long long, std::vector<Int>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::function<std::vector<Int>(long long)> build = [&](long long m) -> std::vector<Int> {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        std::vector<Int> num(m + 1, 0);
        num[0] = -1;
        num[m] = 1;  // x^m - 1
        for (long long d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            auto phi_d = build(d);
            // exact long division num / phi_d
            std::vector<Int> q(num.size() - phi_d.size() + 1, 0);
            std::vector<Int> r = num;
            for (long long k = (long long)q.size() - 1; k >= 0; --k) {
                Int c = r[k + phi_d.size() - 1];  // phi_d is monic
                q[k] = c;
                if (c != 0)
                    for (size_t j = 0; j < phi_d.size(); ++j) r[k + j] -= c * phi_d[j];
            }
            num = q;
        }
        cache[m] = num;
        return num;
    };
    build(n);
    return cache.at(n);
}

// x^j mod Phi_N for j in [phi(N), N), as integer coefficient rows.
inline const std::vector<std::vector<Int>>& reduction_rows(long long n) {
    static std::map<long long, std::vector<std::vector<Int>>> cache;
    static std::mutex mu;
    const auto& phi = cyclotomic_poly(n);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    long long deg = (long long)phi.size() - 1;
    std::vector<std::vector<Int>> rows;
    // x^deg = -(phi - x^deg)
    std::vector<Int> cur(deg, 0);
    for (long long i = 0; i < deg; ++i) cur[i] = -phi[i];
    rows.push_back(cur);
    for (long long j = deg + 1; j < n; ++j) {
        std::vector<Int> nxt(deg, 0);
        // multiply cur by x, then fold the overflow term through row 0
        Int top = cur[deg - 1];
        for (long long i = deg - 1; i >= 1; --i) nxt[i] = cur[i - 1];
        nxt[0] = 0;
        if (top != 0)
            for (long long i = 0; i < deg; ++i) nxt[i] += top * rows[0][i];
        rows.push_back(nxt);
        cur = nxt;
    }
    cache[n] = rows;
    return cache.at(n);
}

}  // namespace detail

class Cyclotomic {
  public:
    Cyclotomic() : cond_(1), c_(1, Rat(0)) {}
    explicit Cyclotomic(const Rat& r) : cond_(1), c_(1, r) {}
    explicit Cyclotomic(long long r) : cond_(1), c_(1, Rat(r)) {}

    static Cyclotomic zero() { return Cyclotomic(); }
    static Cyclotomic one() { return Cyclotomic(Rat(1)); }
    static Cyclotomic rational(const Rat& r) { return Cyclotomic(r); }

    // zeta_N^k
    static Cyclotomic zeta(long long n, long long k = 1) {
        if (n <= 0) throw std::invalid_argument("zeta: conductor must be positive");
        k %= n;
        if (k < 0) k += n;
        Cyclotomic z;
        z.cond_ = n;
        z.c_.assign(euler_phi(n), Rat(0));
        std::vector<Rat> poly(n, Rat(0));
        poly[k] = 1;
        z.assign_reduced(poly);
        return z;
    }

    // exp(2 pi i a) for rational a, as an exact root of unity.
    static Cyclotomic unit_phase(const Rat& a) {
        Int den = rat_den(a);
        Int num = rat_num(a) % den;
        if (num < 0) num += den;
        return zeta(static_cast<long long>(den), static_cast<long long>(num));
    }

    static Cyclotomic i() { return zeta(4); }
    static Cyclotomic sqrt2() { return zeta(8) + zeta(8, 7); }
    static Cyclotomic sqrt3() { return zeta(12) + zeta(12, 11); }
    static Cyclotomic sqrt5() { return Cyclotomic(Rat(1)) + (zeta(5) + zeta(5, 4)) * Rat(2); }
    static Cyclotomic golden_ratio() { return (Cyclotomic(Rat(1)) + sqrt5()) / Cyclotomic(Rat(2)); }

    long long conductor() const { return cond_; }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    Rat rational_part() const {
        if (!is_rational()) throw std::domain_error("rational_part: element is not rational");
        return c_[0];
    }

    Cyclotomic embedded(long long m) const {
        if (m % cond_ != 0) throw std::invalid_argument("embedded: target conductor not a multiple");
        if (m == cond_) return *this;
        long long step = m / cond_;
        std::vector<Rat> poly(m, Rat(0));
        for (size_t j = 0; j < c_.size(); ++j) poly[(j * step) % m] += c_[j];
        Cyclotomic out;
        out.cond_ = m;
        out.c_.assign(euler_phi(m), Rat(0));
        out.assign_reduced(poly);
        return out;
    }

    // Ring automorphism zeta -> zeta^k, gcd(k, N) = 1.
    Cyclotomic galois(long long k) const {
        long long kk = k % cond_;
        if (kk < 0) kk += cond_;
        if (std::gcd(kk, cond_) != 1) throw std::invalid_argument("galois: exponent not coprime to conductor");
        std::vector<Rat> poly(cond_, Rat(0));
        for (size_t j = 0; j < c_.size(); ++j) poly[(j * kk) % cond_] += c_[j];
        Cyclotomic out;
        out.cond_ = cond_;
        out.c_.assign(c_.size(), Rat(0));
        out.assign_reduced(poly);
        return out;
    }

    Cyclotomic conj() const { return galois(cond_ - 1 == 0 ? 1 : cond_ - 1); }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = aligned(a, b);
        for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
        return x;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = aligned(a, b);
        for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
        return x;
    }
    Cyclotomic operator-() const {
        Cyclotomic out = *this;
        for (auto& x : out.c_) x = -x;
        return out;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.cond_ == 1 || b.cond_ == 1) {  // scalar fast path
            const Cyclotomic& s = (a.cond_ == 1) ? a : b;
            Cyclotomic out = (a.cond_ == 1) ? b : a;
            for (auto& x : out.c_) x *= s.c_[0];
            return out;
        }
        auto [x, y] = aligned(a, b);
        long long n = x.cond_;
        std::vector<Rat> poly(n, Rat(0));
        for (size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i] == 0) continue;
            for (size_t j = 0; j < y.c_.size(); ++j) {
                if (y.c_[j] == 0) continue;
                poly[(i + j) % n] += x.c_[i] * y.c_[j];
            }
        }
        Cyclotomic out;
        out.cond_ = n;
        out.c_.assign(x.c_.size(), Rat(0));
        out.assign_reduced(poly);
        return out;
    }
    Cyclotomic operator*(const Rat& s) const {
        Cyclotomic out = *this;
        for (auto& x : out.c_) x *= s;
        return out;
    }

    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("Cyclotomic: division by zero");
        if (is_rational()) return Cyclotomic(Rat(1) / c_[0]);
        // extended Euclid in Q[x]: s * a + t * Phi_N = gcd = const, so 1/a = s / gcd
        const auto& phi_int = detail::cyclotomic_poly(cond_);
        std::vector<Rat> r0(phi_int.size());
        for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rat(phi_int[i]);
        std::vector<Rat> r1(c_.begin(), c_.end());
        trim(r1);
        std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};
        while (!(r1.size() == 1 && r1[0] == 0)) {
            auto [q, rem] = poly_divmod(r0, r1);
            // (s0, s1) <- (s1, s0 - q * s1)
            std::vector<Rat> s2 = s0;
            s2.resize(std::max(s0.size(), q.size() + s1.size() - 1), Rat(0));
            for (size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
            }
            trim(s2);
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
        }
        // r0 is the gcd, a nonzero constant since Phi_N is irreducible
        if (r0.size() != 1) throw std::logic_error("Cyclotomic::inverse: non-constant gcd");
        Cyclotomic out;
        out.cond_ = cond_;
        out.c_.assign(c_.size(), Rat(0));
        std::vector<Rat> poly(cond_, Rat(0));
        for (size_t i = 0; i < s0.size() && i < poly.size(); ++i) poly[i] = s0[i] / r0[0];
        out.assign_reduced(poly);
        return out;
    }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.cond_ == b.cond_) return a.c_ == b.c_;
        auto [x, y] = aligned(a, b);
        return x.c_ == y.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Re-express in the smallest cyclotomic subfield Q(zeta_d), d | N, that
    // contains the element.  Used to keep conductors from creeping upward.
    Cyclotomic reduced() const {
        if (cond_ == 1) return *this;
        for (long long d = 1; d < cond_; ++d) {
            if (cond_ % d != 0) continue;
            auto r = try_into_conductor(d);
            if (r) return *r;
        }
        return *this;
    }

    // Attempt to write the element with conductor d | N.
    std::optional<Cyclotomic> try_into_conductor(long long d) const {
        if (cond_ % d != 0) throw std::invalid_argument("try_into_conductor: d must divide N");
        long long phid = euler_phi(d);
        // basis images of zeta_d^i in Q(zeta_N), then solve coordinates
        std::vector<Cyclotomic> basis;
        for (long long i = 0; i < phid; ++i) basis.push_back(zeta(d, i).embedded(cond_));
        long long phin = (long long)c_.size();
        // Gaussian elimination on (phin x phid) with rhs c_
        std::vector<std::vector<Rat>> m(phin, std::vector<Rat>(phid + 1, Rat(0)));
        for (long long j = 0; j < phid; ++j)
            for (long long i = 0; i < phin; ++i) m[i][j] = basis[j].c_[i];
        for (long long i = 0; i < phin; ++i) m[i][phid] = c_[i];
        std::vector<long long> pivot_col(phin, -1);
        long long row = 0;
        for (long long col = 0; col < phid && row < phin; ++col) {
            long long pr = -1;
            for (long long r = row; r < phin; ++r)
                if (m[r][col] != 0) {
                    pr = r;
                    break;
                }
            if (pr < 0) continue;
            std::swap(m[row], m[pr]);
            Rat inv = Rat(1) / m[row][col];
            for (long long j = col; j <= phid; ++j) m[row][j] *= inv;
            for (long long r = 0; r < phin; ++r) {
                if (r == row || m[r][col] == 0) continue;
                Rat f = m[r][col];
                for (long long j = col; j <= phid; ++j) m[r][j] -= f * m[row][j];
            }
            pivot_col[row] = col;
            ++row;
        }
        for (long long r = row; r < phin; ++r)
            if (m[r][phid] != 0) return std::nullopt;  // inconsistent: not in subfield
        Cyclotomic out;
        out.cond_ = d;
        out.c_.assign(phid, Rat(0));
        for (long long r = 0; r < row; ++r)
            if (pivot_col[r] >= 0) out.c_[pivot_col[r]] = m[r][phid];
        return out;
    }

    // Numeric embedding zeta_N -> exp(2 pi i / N).  Only for branch selection
    // and diagnostics; exact values never depend on it.
    std::complex<double> numeric() const {
        std::complex<double> acc = 0;
        for (size_t j = 0; j < c_.size(); ++j) {
            if (c_[j] == 0) continue;
            double v = static_cast<double>(rat_num(c_[j])) / static_cast<double>(rat_den(c_[j]));
            double ang = 2.0 * 3.14159265358979323846 * double(j) / double(cond_);
            acc += v * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return acc;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (size_t j = 0; j < c_.size(); ++j) {
            if (c_[j] == 0) continue;
            if (!first) os << " + ";
            os << rat_str(c_[j]);
            if (j > 0) os << "*z" << cond_ << "^" << j;
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

  private:
    long long cond_;
    std::vector<Rat> c_;  // length phi(cond_)

    static void trim(std::vector<Rat>& p) {
        while (p.size() > 1 && p.back() == 0) p.pop_back();
    }

    static std::pair<std::vector<Rat>, std::vector<Rat>> poly_divmod(std::vector<Rat> num,
                                                                     const std::vector<Rat>& den) {
        std::vector<Rat> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 1, Rat(0));
        while (num.size() >= den.size() && !(num.size() == 1 && num[0] == 0)) {
            size_t k = num.size() - den.size();
            Rat c = num.back() / den.back();
            q[k] += c;
            for (size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
            trim(num);
            if (num.size() == 1 && num[0] == 0) break;
        }
        return {q, num};
    }

    // poly has length cond_ (exponents already reduced mod N); fold into the
    // power basis using the precomputed remainder rows.
    void assign_reduced(const std::vector<Rat>& poly) {
        long long deg = (long long)c_.size();
        for (long long i = 0; i < deg && i < (long long)poly.size(); ++i) c_[i] = poly[i];
        if ((long long)poly.size() <= deg) return;
        const auto& rows = detail::reduction_rows(cond_);
        for (long long j = deg; j < (long long)poly.size(); ++j) {
            const Rat& coef = poly[j];
            if (coef == 0) continue;
            const auto& row = rows[j - deg];
            for (long long i = 0; i < deg; ++i)
                if (row[i] != 0) c_[i] += coef * Rat(row[i]);
        }
    }

    static std::pair<Cyclotomic, Cyclotomic> aligned(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.cond_ == b.cond_) return {a, b};
        long long m = lcm_ll(a.cond_, b.cond_);
        return {a.embedded(m), b.embedded(m)};
    }
};

inline Cyclotomic operator*(const Rat& s, const Cyclotomic& a) { return a * s; }

// sqrt of a rational whose squarefree part divides 30 (i.e. a product of
// 2, 3, 5); these are exactly the radicals the universal series need.
inline std::optional<Cyclotomic> sqrt_rational_radical(const Rat& r) {
    if (r == 0) return Cyclotomic::zero();
    Rat a = r < 0 ? -r : r;
    Int n = rat_num(a) * rat_den(a);  // sqrt(a) = sqrt(n)/den
    Int s = 1, m = n;
    for (Int p : {Int(2), Int(3), Int(5)}) {
        while (m % (p * p) == 0) {
            m /= p * p;
            s *= p;
        }
    }
    // remaining square part with larger prime factors
    Int root = isqrt_floor(m);
    for (Int d = 2; d * d <= root + 1; ++d) {
        while (m % (d * d) == 0) {
            m /= d * d;
            s *= d;
        }
    }
    Cyclotomic out = Cyclotomic(Rat(s, rat_den(a)));
    Int mm = m;
    if (mm % 2 == 0) {
        out = out * Cyclotomic::sqrt2();
        mm /= 2;
    }
    if (mm % 3 == 0) {
        out = out * Cyclotomic::sqrt3();
        mm /= 3;
    }
    if (mm % 5 == 0) {
        out = out * Cyclotomic::sqrt5();
        mm /= 5;
    }
    if (mm != 1) return std::nullopt;
    if (r < 0) out = out * Cyclotomic::i();
    return out;
}

}  // namespace vw
