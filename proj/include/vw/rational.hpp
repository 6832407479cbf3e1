#pragma once

// Exact integer / rational scalars used throughout the library, plus a few
// number-theoretic helpers (gcd chains, integer square roots, Euler phi).
// All arithmetic in this project is exact; no floating point is used except
// for branch *selection* (see cyclotomic.hpp), never for values.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vw {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline Rat rat(long long n, long long d = 1) { return Rat(Int(n), Int(d)); }

// x^e for integer e (negative allowed; x must be nonzero then).
inline Rat rat_pow(const Rat& x, long long e) {
    if (e == 0) return Rat(1);
    bool neg = e < 0;
    unsigned long long k = neg ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Rat base = x, acc = Rat(1);
    if (neg) {
        if (x == 0) throw std::domain_error("rat_pow: 0 to negative power");
        base = Rat(rat_den(x), rat_num(x));
    }
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

inline Int int_pow(Int x, unsigned long long e) {
    Int acc = 1;
    while (e) {
        if (e & 1) acc *= x;
        x *= x;
        e >>= 1;
    }
    return acc;
}

// floor(sqrt(n)) for n >= 0.
inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt_floor: negative");
    if (n == 0) return 0;
    Int x = 1;
    x <<= (msb(n) / 2 + 1);  // initial overestimate
    while (true) {
        Int y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

inline std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = isqrt_floor(n);
    if (r * r == n) return r;
    return std::nullopt;
}

inline std::optional<Rat> exact_sqrt(const Rat& x) {
    if (x < 0) return std::nullopt;
    auto n = exact_sqrt(rat_num(x));
    if (!n) return std::nullopt;
    auto d = exact_sqrt(rat_den(x));
    if (!d) return std::nullopt;
    return Rat(*n, *d);
}

inline long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }
inline long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

inline long long euler_phi(long long n) {
    long long result = n, m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// "p/q" or "p"; also accepts a leading sign.
inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash)), d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    return Rat(n, d);
}

inline std::string rat_str(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

inline Int rat_floor(const Rat& r) {
    Int q = rat_num(r) / rat_den(r);
    if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r)) --q;
    return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

}  // namespace vw
