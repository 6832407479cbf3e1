#pragma once

// Universal series of the vertical and horizontal generating functions.
//
// For rank r the set consists of one series C_I per subset I of {1,...,r-1},
// with C_I = C_0 prod_{i<=j in I} C_ij.  The closed forms for r = 2..5 are
// algebraic expressions in lattice theta ratios t_{A_{r-1},l} and continued
// fractions:
//
//   r=2:  C_0 = 1, C_{1} = t_{A_1,1}
//   r=3:  X^2 - t(t + 3t(q,1)) X + (t + 3t(q,1)) = 0 (refined; t(q,1) = t
//         unrefined gives X^2 - 4t^2 X + 4t), C_0 = t X_-, C_{12} = t X_+
//   r=4:  built from J (= u(q^2)^4 unrefined) and Z with
//         Z + 1/Z = J^(1/2) + J^(-1/2) + 2 J(q,1)^(1/2) + 2 J(q,1)^(-1/2)
//   r=5:  built from the Rogers-Ramanujan fraction r(q), beta_1, beta_2 and
//         three quadratics for X, Y, Z
//
// The horizontal set (the image under tau -> -1/tau) uses the same recipes
// with t_{A,l} -> t_{A^v,l}, u(q^2) -> v(q), r(q) -> s(q).  Square-root
// branches are the canonical positive ones; every choice is logged and the
// leading terms are checked against
//
//   C_0 : 1,   C_ii : binom(r,i)^{-1} q^(i(i-r)/2r),
//   C_ij : j(r-i)/((j-i)r) q^(i(j-r)/r)  (i < j)
//
// for vertical sets.  Ranks 6 and 7 have no closed-form solution; they are
// handled as relation checks against tabulated data (rank 7 data must be
// supplied externally, none ships with the library).

#include "vw/fixtures.hpp"
#include "vw/modular.hpp"

#include <sstream>

namespace vw {

// ---------------------------------------------------------------------------
// branch square roots with canonical (positive) orientation
// ---------------------------------------------------------------------------

inline std::optional<Cyclotomic> cyclo_sqrt(const Cyclotomic& c);

namespace detail {

// write c = a * one + b * gen, if possible
inline std::optional<std::pair<Rat, Rat>> in_quadratic_span(const Cyclotomic& c, const Cyclotomic& gen) {
    long long m = lcm_ll(c.conductor(), gen.conductor());
    auto cc = c.embedded(m), gg = gen.embedded(m);
    // solve over the power basis: cc = a * 1 + b * gg
    size_t n = cc.coords().size();
    Rat a, b;
    // find a coordinate where gg is nonzero away from index 0
    size_t piv = n;
    for (size_t i = 1; i < n; ++i)
        if (gg.coords()[i] != 0) {
            piv = i;
            break;
        }
    if (piv == n) {  // gen rational: degenerate
        return std::nullopt;
    }
    b = cc.coords()[piv] / gg.coords()[piv];
    a = cc.coords()[0] - b * gg.coords()[0];
    if (Cyclotomic(a) + gg * b == cc) return std::make_pair(a, b);
    return std::nullopt;
}

// sqrt of a + b sqrt(d) staying inside Q(sqrt(d)); needs a^2 - d b^2 square
inline std::optional<Cyclotomic> sqrt_in_quadratic(const Rat& a, const Rat& b, long long d,
                                                   const Cyclotomic& sqrt_d) {
    Rat disc = a * a - Rat(d) * b * b;
    auto sd = exact_sqrt(disc);
    if (!sd) return std::nullopt;
    for (const Rat& z : {Rat((a + *sd) / 2), Rat((a - *sd) / 2)}) {
        auto x = exact_sqrt(z);
        if (!x || *x == 0) continue;
        Rat y = b / (2 * *x);
        auto cand = Cyclotomic(*x) + sqrt_d * y;
        if (cand * cand == Cyclotomic(a) + sqrt_d * b) return cand;
    }
    return std::nullopt;
}

inline Cyclotomic sqrt_5_plus_2s5() {  // sqrt(5 + 2 sqrt5) = -(i/2)(e5 - e5^-1)(1 + sqrt5)
    auto e5 = Cyclotomic::zeta(20, 4);
    auto d = e5 - e5.galois(19);
    return Cyclotomic::i().embedded(20) * Rat(-1, 2) * d * (Cyclotomic::one() + Cyclotomic::sqrt5());
}
inline Cyclotomic sqrt_5_minus_2s5() {  // sqrt(5 - 2 sqrt5) = (i/2)(e5^2 - e5^-2)(1 - sqrt5)
    auto e5 = Cyclotomic::zeta(20, 4);
    auto e52 = e5 * e5;
    auto d = e52 - e52.galois(19);
    return Cyclotomic::i().embedded(20) * Rat(1, 2) * d * (Cyclotomic::one() - Cyclotomic::sqrt5());
}

}  // namespace detail

// Exact square root of a cyclotomic number for the classes showing up in the
// universal series: rationals times radicals of 2, 3, 5, elements of
// quadratic fields Q(sqrt d), and Q(sqrt5)-multiples of 5 +- 2 sqrt5.
// Returns the root with positive real embedding when one exists.
inline std::optional<Cyclotomic> cyclo_sqrt(const Cyclotomic& c) {
    auto orient = [](Cyclotomic r) {
        auto z = r.numeric();
        if (z.real() < -1e-9 || (std::abs(z.real()) <= 1e-9 && z.imag() < 0)) return -r;
        return r;
    };
    if (c.is_zero()) return Cyclotomic::zero();
    if (c.is_rational()) {
        auto r = sqrt_rational_radical(c.rational_part());
        if (r) return orient(*r);
        return std::nullopt;
    }
    struct QuadCase {
        Cyclotomic gen;
        long long d;
    };
    const QuadCase cases[] = {{Cyclotomic::sqrt5(), 5}, {Cyclotomic::sqrt2(), 2}, {Cyclotomic::sqrt3(), 3}};
    for (const auto& qc : cases) {
        auto ab = detail::in_quadratic_span(c, qc.gen);
        if (!ab) continue;
        auto r = detail::sqrt_in_quadratic(ab->first, ab->second, qc.d, qc.gen);
        if (r) return orient(*r);
        if (qc.d == 5) {
            // try c = m (5 +- 2 sqrt5) with m in Q(sqrt5)
            for (int sign : {+1, -1}) {
                auto factor = Cyclotomic(Rat(5)) + Cyclotomic::sqrt5() * Rat(2 * sign);
                auto m = c / factor;
                auto mab = detail::in_quadratic_span(m, Cyclotomic::sqrt5());
                std::optional<Cyclotomic> mroot;
                if (mab)
                    mroot = detail::sqrt_in_quadratic(mab->first, mab->second, 5, Cyclotomic::sqrt5());
                else if (m.is_rational())
                    mroot = sqrt_rational_radical(m.rational_part());
                if (mroot) {
                    auto rootfac = sign > 0 ? detail::sqrt_5_plus_2s5() : detail::sqrt_5_minus_2s5();
                    auto cand = *mroot * rootfac;
                    if (cand * cand == c) return orient(cand);
                }
            }
        }
    }
    // last resort: sqrt(-c) * i
    auto neg = cyclo_sqrt(-c);
    if (neg) return orient(*neg * Cyclotomic::i());
    return std::nullopt;
}

// canonical branch roots of series leading coefficients -------------------

inline Rat leading_root_of(const QSeries& s) {
    auto r = exact_sqrt(s.leading_coeff());
    if (!r) throw std::domain_error("leading coefficient is not a rational square");
    return *r;
}
inline Cyclotomic leading_root_of(const CSeries& s) {
    auto r = cyclo_sqrt(s.leading_coeff());
    if (!r) throw std::domain_error("leading coefficient has no recognized cyclotomic square root");
    return *r;
}
inline RatFunc<Rat> leading_root_of(const QYSeries::Series& s) {
    auto r = sqrt_ratfunc(s.leading_coeff());
    if (!r) throw std::domain_error("leading y-coefficient is not a square");
    // orient: positive value at y = 1 (matches the unrefined branch)
    Rat at1 = r->eval_one();
    if (at1 < 0) return -*r;
    return *r;
}
inline RatFunc<Cyclotomic> leading_root_of(const CYSeries::Series& s) {
    // square root of num and den over the cyclotomic coefficient field
    auto poly_root = [](const LaurentPoly<Cyclotomic>& p) -> std::optional<LaurentPoly<Cyclotomic>> {
        if (p.is_zero()) return LaurentPoly<Cyclotomic>::zero();
        if (p.lo % 2 != 0 || p.c.size() % 2 == 0) return std::nullopt;
        auto lead = cyclo_sqrt(p.c.back());
        if (!lead) return std::nullopt;
        size_t n = (p.c.size() - 1) / 2;
        std::vector<Cyclotomic> g(n + 1, Cyclotomic::zero());
        g[n] = *lead;
        auto inv2gn = (g[n] * Rat(2)).inverse();
        for (long long k = (long long)n - 1; k >= 0; --k) {
            Cyclotomic acc = p.c[k + n];
            for (size_t j = (size_t)k + 1; j < n; ++j) acc = acc - g[j] * g[k + n - j];
            g[k] = acc * inv2gn;
        }
        LaurentPoly<Cyclotomic> r;
        r.lo = p.lo / 2;
        r.c = g;
        r.normalize();
        if (!(r * r == p)) return std::nullopt;
        return r;
    };
    const auto& lc = s.leading_coeff();
    auto n = poly_root(lc.num());
    auto d = poly_root(lc.den());
    if (!n || !d) throw std::domain_error("refined leading coefficient is not a square");
    RatFunc<Cyclotomic> r(*n, *d);
    auto at1 = r.eval_one().numeric();
    if (at1.real() < -1e-9 || (std::abs(at1.real()) <= 1e-9 && at1.imag() < 0)) return -r;
    return r;
}

// series square root on the canonical branch
inline QSeries branch_sqrt(const QSeries& s) { return s.sqrt(leading_root_of(s)); }
inline CSeries branch_sqrt(const CSeries& s) { return s.sqrt(leading_root_of(s)); }
inline QYSeries branch_sqrt(const QYSeries& s) { return {s.s.sqrt(leading_root_of(s.s)), s.yg}; }
inline CYSeries branch_sqrt(const CYSeries& s) { return {s.s.sqrt(leading_root_of(s.s)), s.yg}; }

namespace detail {
template <class S>
S scale4(const S& s) {
    return s.scaled_rat(Rat(4));
}
template <class K>
BiSeries<K> scale4(const BiSeries<K>& s) {
    return {s.s.scaled_rat(Rat(4)), s.yg};
}
template <class S>
std::string describe_leading(const S& s) {
    std::ostringstream os;
    os << "q^(" << rat_str(s.valuation()) << ")";
    return os.str();
}
template <class K>
std::string describe_leading(const BiSeries<K>& s) {
    std::ostringstream os;
    os << "q^(" << rat_str(s.s.valuation()) << ")";
    return os.str();
}
}  // namespace detail

// X^2 + b X + c = 0 with the canonical square-root branch; X_minus is
// derived from the Vieta product so X_plus X_minus = c holds exactly.
template <class S>
std::pair<S, S> quadratic_roots(const S& b, const S& c, std::vector<std::string>* log = nullptr,
                                const char* who = "quadratic") {
    auto disc = b * b - detail::scale4(c);
    auto root = branch_sqrt(disc);
    if (log) log->push_back(std::string(who) + ": sqrt(disc) leading at " + detail::describe_leading(root));
    auto xp = (-b + root).scaled_rat(Rat(1, 2));
    auto xm = c * xp.recip();
    return {xp, xm};
}

// ---------------------------------------------------------------------------
// UniversalSet
// ---------------------------------------------------------------------------

inline unsigned subset_mask(std::initializer_list<int> xs) {
    unsigned m = 0;
    for (int x : xs) m |= 1u << (x - 1);
    return m;
}
inline long long subset_weight(unsigned mask) {  // ||I|| = sum of elements
    long long w = 0;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) w += i + 1;
    return w;
}

template <class S>
struct UniversalSet {
    int rank = 0;
    bool horizontal = false;
    bool refined = false;
    std::map<unsigned, S> C;            // subset bitmask over {1,..,r-1}
    std::map<std::string, S> parts;     // named constituents (X+, Z, beta1, ...)
    std::vector<std::string> branch_log;

    const S& subset(unsigned mask) const { return C.at(mask); }
    const S& c0() const { return C.at(0); }

    S cij(int i, int j) const {
        if (i > j) std::swap(i, j);
        unsigned mi = 1u << (i - 1), mj = 1u << (j - 1);
        if (i == j) return C.at(mi) * C.at(0).recip();
        return C.at(mi | mj) * C.at(0) * (C.at(mi) * C.at(mj)).recip();
    }
};

// leading monomials of the vertical universal series
inline Rat universal_lead_exp(int r, int i, int j) {
    if (i == 0) return Rat(0);  // C_0
    if (i == j) return Rat((long long)i * (i - r), 2 * r);
    return Rat((long long)i * (j - r), r);
}
inline Rat universal_lead_coeff(int r, int i, int j) {
    if (i == 0) return Rat(1);
    if (i == j) {  // 1 / binom(r, i)
        Int num = 1, den = 1;
        for (int k = 0; k < i; ++k) {
            num *= r - k;
            den *= k + 1;
        }
        return Rat(den, num);
    }
    return Rat((long long)j * (r - i), (long long)(j - i) * r);
}

// ---------------------------------------------------------------------------
// rank-by-rank recipes (shared by all four flavors)
// ---------------------------------------------------------------------------

template <class S>
UniversalSet<S> make_rank2(const S& t1) {
    UniversalSet<S> u;
    u.rank = 2;
    u.C[0] = S::one();
    u.C[1] = t1;
    u.parts["t1"] = t1;
    return u;
}

// t: theta ratio (refined or not); ty1: the same ratio with y = 1
template <class S>
UniversalSet<S> make_rank3(const S& t, const S& ty1) {
    UniversalSet<S> u;
    u.rank = 3;
    auto csum = t + ty1.scaled_rat(Rat(3));
    auto b = -(t * csum);
    auto [xp, xm] = quadratic_roots(b, csum, &u.branch_log, "rank3 X");
    u.C[subset_mask({})] = t * xm;
    u.C[subset_mask({1})] = t;
    u.C[subset_mask({2})] = t;
    u.C[subset_mask({1, 2})] = t * xp;
    u.parts["t1"] = t;
    u.parts["X+"] = xp;
    u.parts["X-"] = xm;
    return u;
}

// J4: octic building block to the 4th power (u(q^2)^4, v^4, or J(q,y));
// Jh: its square root; Jh1: the square root of its y = 1 reduction
template <class S>
UniversalSet<S> make_rank4(const S& t1, const S& t2, const S& J4, const S& Jh, const S& Jh1) {
    UniversalSet<S> u;
    u.rank = 4;
    auto one = S::one();
    auto A = Jh + Jh.recip() + (Jh1 + Jh1.recip()).scaled_rat(Rat(2));
    auto [z, zi] = quadratic_roots(-A, one, &u.branch_log, "rank4 Z");
    auto t2i = t2.recip();
    auto j4i = J4.recip();
    auto zdiff = z - zi;
    u.C[subset_mask({})] = zdiff * (t2i * j4i - zi).recip();
    u.C[subset_mask({1, 3})] = (-zdiff) * (t2i * j4i - z).recip();
    u.C[subset_mask({1})] = (J4 + one) * t1;
    u.C[subset_mask({3})] = u.C[subset_mask({1})];
    u.C[subset_mask({1, 2})] = (one + j4i) * t1;
    u.C[subset_mask({2, 3})] = u.C[subset_mask({1, 2})];
    u.C[subset_mask({2})] = zdiff * (t2i * z - J4).recip();
    u.C[subset_mask({1, 2, 3})] = (-zdiff) * (t2i * zi - J4).recip();
    u.parts["t1"] = t1;
    u.parts["t2"] = t2;
    u.parts["Z"] = z;
    u.parts["Zinv"] = zi;
    u.parts["J4"] = J4;
    return u;
}

template <class S>
UniversalSet<S> make_rank5(const S& t1, const S& t2, const S& R) {
    UniversalSet<S> u;
    u.rank = 5;
    auto one = S::one();
    auto r5 = R.pow(5);
    auto r5i = R.pow(-5);
    auto beta1 = (t1 * (r5i.scaled_rat(Rat(3)) + one.scaled_rat(Rat(2)) - r5.scaled_rat(Rat(8))))
                     .scaled_rat(Rat(1, 25));
    auto beta2 = (t2 * (r5i.scaled_rat(Rat(8)) + one.scaled_rat(Rat(2)) - r5.scaled_rat(Rat(3))))
                     .scaled_rat(Rat(1, 25));
    auto f1 = r5i.scaled_rat(Rat(3)) + one;  // 3 r^-5 + 1
    auto f2 = one - r5.scaled_rat(Rat(3));   // 1 - 3 r^5
    auto bX = -(beta1 * (beta1 * t1.recip() - one) * f1).scaled_rat(Rat(4, 5));
    auto cX = (beta1 * beta1 * f1).scaled_rat(Rat(4, 5));
    auto [xp, xm] = quadratic_roots(bX, cX, &u.branch_log, "rank5 X");
    auto bY = -(beta2 * (beta2 * t2.recip() - one) * f2).scaled_rat(Rat(4, 5));
    auto cY = (beta2 * beta2 * f2).scaled_rat(Rat(4, 5));
    auto [yp, ym] = quadratic_roots(bY, cY, &u.branch_log, "rank5 Y");
    auto bZ = -(r5i.scaled_rat(Rat(8)) - one.scaled_rat(Rat(13)) - r5.scaled_rat(Rat(8)))
                   .scaled_rat(Rat(6, 25));
    auto [z, zi] = quadratic_roots(bZ, one, &u.branch_log, "rank5 Z");
    auto bb_i = (beta1 * beta2).recip();
    auto sq = [&](const S& v, const char* who) {
        auto r = branch_sqrt(v);
        u.branch_log.push_back(std::string(who) + ": canonical sqrt, leading at " +
                               detail::describe_leading(r));
        return r;
    };
    u.C[subset_mask({})] = sq(z * xm * xm * ym * ym * bb_i, "C_empty");
    u.C[subset_mask({1})] = xm;
    u.C[subset_mask({4})] = xm;
    u.C[subset_mask({2})] = ym;
    u.C[subset_mask({3})] = ym;
    u.C[subset_mask({1, 2})] = beta2;
    u.C[subset_mask({3, 4})] = beta2;
    u.C[subset_mask({1, 3})] = beta1;
    u.C[subset_mask({2, 4})] = beta1;
    u.C[subset_mask({2, 3})] = sq(xp * xp * ym * ym * zi * bb_i, "C_23");
    u.C[subset_mask({1, 4})] = sq(xm * xm * yp * yp * zi * bb_i, "C_14");
    u.C[subset_mask({1, 2, 3})] = xp;
    u.C[subset_mask({2, 3, 4})] = xp;
    u.C[subset_mask({1, 2, 4})] = yp;
    u.C[subset_mask({1, 3, 4})] = yp;
    u.C[subset_mask({1, 2, 3, 4})] = sq(z * xp * xp * yp * yp * bb_i, "C_1234");
    u.parts["t1"] = t1;
    u.parts["t2"] = t2;
    u.parts["beta1"] = beta1;
    u.parts["beta2"] = beta2;
    u.parts["X+"] = xp;
    u.parts["X-"] = xm;
    u.parts["Y+"] = yp;
    u.parts["Y-"] = ym;
    u.parts["Z"] = z;
    u.parts["Zinv"] = zi;
    return u;
}

// ---------------------------------------------------------------------------
// public builders
// ---------------------------------------------------------------------------

namespace detail {
template <class U>
void check_set_order(const U& u, const Rat& order) {
    for (const auto& [mask, s] : u.C) {
        (void)mask;
        if (s.order() && *s.order() < order)
            throw std::runtime_error("universal set build lost too much order; increase the margin");
    }
}
// Internal extra order for the constituent series.  Vertical constituents
// carry large negative valuations (X_+ sits at q^(-17/5) for rank 5), so the
// inversions inside the recipes consume real order; horizontal constituents
// are power series and lose order only through the vanishing of the
// discriminant at q = 0.
inline Rat build_margin(int r, bool horizontal) {
    if (horizontal) {
        switch (r) {
            case 2: return Rat(2);
            case 3: return Rat(4);
            case 4: return Rat(4);
            default: return Rat(8);
        }
    }
    switch (r) {
        case 2: return Rat(3);
        case 3: return Rat(6);
        case 4: return Rat(10);
        default: return Rat(20);
    }
}
// The refined recipes lose less order than their unrefined counterparts
// (margins checked by check_set_order), and the rational-function
// coefficient arithmetic grows superlinearly with internal order, so keep
// these tight.
inline Rat build_margin_refined(int r, bool horizontal) {
    if (horizontal) return r == 4 ? Rat(5) : Rat(3);
    switch (r) {
        case 2: return Rat(2);
        case 3: return Rat(4);
        default: return Rat(5);  // rank-4 C_{123} keeps order O - 9/2
    }
}
}  // namespace detail

inline UniversalSet<QSeries> build_vertical(int r, const Rat& order) {
    Rat O = order + detail::build_margin(r, false);
    UniversalSet<QSeries> u;
    switch (r) {
        case 2:
            u = make_rank2(t_a(1, 1, O));
            break;
        case 3: {
            auto t = t_a(2, 1, O);
            u = make_rank3(t, t);
            break;
        }
        case 4: {
            auto u2 = octic_u_squared(O).rescale_phase(Rat(2), Rat(0)).truncated(O);  // u(q^2)^2
            auto j4 = (u2 * u2).truncated(O);
            u = make_rank4(t_a(3, 1, O), t_a(3, 2, O), j4, u2, u2);
            break;
        }
        case 5:
            u = make_rank5(t_a(4, 1, O), t_a(4, 2, O), rogers_r(O));
            break;
        default:
            throw std::invalid_argument("build_vertical: closed forms exist for ranks 2..5 only");
    }
    detail::check_set_order(u, order);
    return u;
}

inline UniversalSet<CSeries> build_horizontal(int r, const Rat& order) {
    Rat O = order + detail::build_margin(r, true);
    UniversalSet<CSeries> u;
    switch (r) {
        case 2:
            u = make_rank2(t_dual(1, 1, O));
            break;
        case 3: {
            auto t = t_dual(2, 1, O);
            u = make_rank3(t, t);
            break;
        }
        case 4: {
            auto v = octic_v(O);
            auto v2 = promote((v * v).truncated(O));
            auto v4 = (v2 * v2).truncated(O);
            u = make_rank4(t_dual(3, 1, O), t_dual(3, 2, O), v4, v2, v2);
            break;
        }
        case 5:
            u = make_rank5(t_dual(4, 1, O), t_dual(4, 2, O), rogers_s(O));
            break;
        default:
            throw std::invalid_argument("build_horizontal: closed forms exist for ranks 2..5 only");
    }
    u.horizontal = true;
    detail::check_set_order(u, order);
    return u;
}

inline UniversalSet<QYSeries> build_vertical_refined(int r, const Rat& order) {
    Rat O = order + detail::build_margin_refined(r, false);
    UniversalSet<QYSeries> u;
    switch (r) {
        case 2:
            u = make_rank2(t_a_refined(1, 1, O));
            break;
        case 3:
            u = make_rank3(t_a_refined(2, 1, O), QYSeries::from_q(t_a(2, 1, O), 1));
            break;
        case 4: {
            auto u2 = octic_u_squared(O).rescale_phase(Rat(2), Rat(0)).truncated(O);
            auto jh1 = QYSeries::from_q(u2, 1);
            u = make_rank4(t_a_refined(3, 1, O), t_a_refined(3, 2, O), j_octic(O), j_octic_sqrt(O), jh1);
            break;
        }
        default:
            throw std::invalid_argument("no refined closed form exists beyond rank 4");
    }
    u.refined = true;
    detail::check_set_order(u, order);
    return u;
}

inline UniversalSet<CYSeries> build_horizontal_refined(int r, const Rat& order) {
    Rat O = order + detail::build_margin_refined(r, true);
    UniversalSet<CYSeries> u;
    switch (r) {
        case 2:
            u = make_rank2(t_dual_refined(1, 1, O));
            break;
        case 3:
            u = make_rank3(t_dual_refined(2, 1, O), CYSeries::from_q(t_dual(2, 1, O), 1));
            break;
        case 4: {
            auto v = octic_v(O);
            auto v2 = promote((v * v).truncated(O));
            auto jh1 = CYSeries::from_q(v2, 1);
            u = make_rank4(t_dual_refined(3, 1, O), t_dual_refined(3, 2, O), promote_y(j_octic_dual(O)),
                           promote_y(j_octic_dual_sqrt(O)), jh1);
            break;
        }
        default:
            throw std::invalid_argument("no refined closed form exists beyond rank 4");
    }
    u.horizontal = true;
    u.refined = true;
    detail::check_set_order(u, order);
    return u;
}

// ---------------------------------------------------------------------------
// normalization and fixtures
// ---------------------------------------------------------------------------

inline QSeries fixture_series(int rank, const std::string& name) {
    auto canon = [&](std::string n) {
        if (n.size() == 3 && n[0] == 'C') {
            int i = n[1] - '0', j = n[2] - '0';
            if (i > j) std::swap(i, j);
            if (i + j > rank) {  // C_ij = C_{r-j, r-i}
                int ni = rank - j, nj = rank - i;
                i = ni;
                j = nj;
            }
            n = std::string("C") + char('0' + i) + char('0' + j);
        }
        return n;
    };
    std::string key = canon(name);
    for (const auto& row : fixture_rows()) {
        if (row.rank != rank || key != row.name) continue;
        std::istringstream is(row.coeffs);
        std::map<Rat, Rat> terms;
        std::string tok;
        long long k = 0;
        while (is >> tok) terms[Rat(k++)] = rat_parse(tok);
        return QSeries::from_terms(std::move(terms), 1, Rat(row.valid_order));
    }
    throw std::out_of_range("no fixture for rank " + std::to_string(rank) + " series " + name);
}

inline Rat fixture_order(int rank) {
    for (const auto& row : fixture_rows())
        if (row.rank == rank) return Rat(row.valid_order);
    throw std::out_of_range("no fixtures for rank " + std::to_string(rank));
}

// divide by the tabulated leading monomial; error if the leading term deviates
inline QSeries normalize_universal(const UniversalSet<QSeries>& u, int i, int j) {
    QSeries s = (i == 0) ? u.c0() : u.cij(i, j);
    Rat le = universal_lead_exp(u.rank, i, j);
    Rat lc = universal_lead_coeff(u.rank, i, j);
    if (s.valuation() != le || s.leading_coeff() != lc)
        throw std::domain_error("leading term does not match the universal leading-term table");
    return s.shifted(-le).scaled_rat(Rat(1) / lc);
}

// Bbar from the built set: C_0 = (Theta_{A_{r-1},0} / eta^r) B, B = q^(r/24) Bbar
inline QSeries normalized_b(const UniversalSet<QSeries>& u, const Rat& order) {
    int r = u.rank;
    Rat O = order + Rat(r, 24) + 1;
    auto th = theta_a(r - 1, 0, O);
    auto etar = eta(Rat(1), O).pow(r);
    auto b = u.c0() * etar * th.recip();
    return b.shifted(Rat(-r, 24)).truncated(order);
}

// the universal chi-series Abar = prod (1 - q^(rn))^(-12)
inline QSeries normalized_a(int r, const Rat& order) { return eta_bar(Rat(r), order).pow(-12).truncated(order); }

}  // namespace vw
