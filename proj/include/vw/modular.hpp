#pragma once

// The named modular and combinatorial series:
//
//   eta(q^s)          = q^(s/24) prod (1 - q^(sn)), by the pentagonal number
//                       sum (a product route exists as a cross-check)
//   Theta_{A_m,l}     = sum over v in Z^m of q^(<v - l*lam, v - l*lam>/2),
//                       lam = (1/(m+1))(m, m-1, ..., 1); A_m Gram matrix is
//                       tridiagonal (2 on the diagonal, -1 off)
//   Theta_{A_m^v,l}   = sum over the dual lattice (inverse Gram) with the
//                       character exp(2 pi i <v, l e_1>^v)
//   t_{A,l}           = Theta_{A,0} / Theta_{A,l}, and the dual ratios
//   u, c, r, s, v     = Ramanujan's octic and cubic continued fractions, the
//                       Rogers-Ramanujan fraction, and their images under
//                       tau -> -1/tau
//   j_3 ... j_7       = eta-quotient Hauptmoduln of Gamma_0(level)
//   phi_{-2,1}        = the weak Jacobi form of weight -2, index 1
//   J(q,y)            = u(q^2)^4/4 times a phi quotient, J(q,1) = u(q^2)^4
//
// Refined thetas carry y^(<v - l lam, M^(-1)(1,..,1)>) so that each
// Theta_{A,l}(q,y) is individually invariant under y -> 1/y; at y = 1 they
// reduce to the unrefined series.  Lattice enumeration uses an exact
// rational Fincke-Pohst walk, complete for all vectors with norm <= bound.

#include "vw/biseries.hpp"

#include <cassert>

namespace vw {

// ---------------------------------------------------------------------------
// Dedekind eta and friends
// ---------------------------------------------------------------------------

// prod_{n>=1} (1 - q^(sn)) truncated below `order`, by Euler's pentagonal sum.
inline QSeries eta_bar(const Rat& scale, const Rat& order) {
    QSeries s = QSeries::zero_to(order, (long long)rat_den(scale));
    for (long long k = 0;; ++k) {
        bool any = false;
        for (long long sign : {1LL, -1LL}) {
            long long kk = sign * k;
            if (kk == 0 && sign < 0) continue;
            Rat e = scale * Rat(kk * (3 * kk - 1), 2);
            if (e < order) {
                any = true;
                s = s + QSeries::monomial(Rat((kk % 2 == 0) ? 1 : -1), e, order);
            }
        }
        if (!any && k > 0) break;
    }
    return s;
}

inline QSeries eta(const Rat& scale, const Rat& order) {
    return eta_bar(scale, order - scale / 24).shifted(scale / 24);
}

// direct product route, for cross-checking the pentagonal sum
inline QSeries eta_bar_by_product(const Rat& scale, const Rat& order) {
    QSeries acc = QSeries::one().truncated(order);
    for (long long n = 1; scale * n < order; ++n) {
        acc = acc * (QSeries::one() - QSeries::monomial(Rat(1), scale * n, order));
    }
    return acc;
}

inline QSeries delta(const Rat& scale, const Rat& order) {
    return eta_bar(scale, order - scale).pow(24).truncated(order - scale).shifted(scale);
}

// prod_i eta(q^(s_i))^(e_i), valid at least to `order`
inline QSeries eta_quotient(const std::vector<std::pair<Rat, long long>>& factors, const Rat& order) {
    Rat margin(2);
    for (const auto& [s, e] : factors)
        if (e < 0) margin += Rat(-2 * e) * s / 24;
    QSeries acc = QSeries::one();
    for (const auto& [s, e] : factors) {
        QSeries f = eta(s, order + margin);
        acc = acc * f.pow(e);
    }
    auto trimmed = acc.truncated(order);
    assert(!trimmed.order() || *trimmed.order() >= order);
    return trimmed;
}

// ---------------------------------------------------------------------------
// Lattices and theta functions
// ---------------------------------------------------------------------------

using Mat = std::vector<std::vector<Rat>>;

inline Mat a_lattice_gram(int m) {
    Mat g(m, std::vector<Rat>(m, Rat(0)));
    for (int i = 0; i < m; ++i) {
        g[i][i] = 2;
        if (i + 1 < m) g[i][i + 1] = g[i + 1][i] = -1;
    }
    return g;
}

inline Mat mat_inverse(Mat a) {
    int n = (int)a.size();
    Mat inv(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int p = col;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) throw std::domain_error("mat_inverse: singular");
        std::swap(a[p], a[col]);
        std::swap(inv[p], inv[col]);
        Rat d = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// checks positive definiteness via leading principal minors while building
// the d_i / mu_ij data of Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2
struct QuadForm {
    std::vector<Rat> d;
    Mat mu;  // mu[i][j], j > i
    int n;

    explicit QuadForm(Mat a) : n((int)a.size()) {
        d.assign(n, Rat(0));
        mu.assign(n, std::vector<Rat>(n, Rat(0)));
        for (int i = 0; i < n; ++i) {
            d[i] = a[i][i];
            if (d[i] <= 0) throw std::domain_error("QuadForm: matrix not positive definite");
            for (int j = i + 1; j < n; ++j) mu[i][j] = a[i][j] / d[i];
            for (int k = i + 1; k < n; ++k)
                for (int l = i + 1; l < n; ++l) a[k][l] -= a[i][k] * a[i][l] / d[i];
        }
    }
};

// All v in Z^n with (v - c)^T G (v - c) <= bound, visited exactly once.
template <class Visit>
void enumerate_lattice(const Mat& gram, const std::vector<Rat>& center, const Rat& bound, Visit&& visit) {
    QuadForm qf{gram};
    int n = qf.n;
    std::vector<Rat> v(n, Rat(0));  // integer entries as rationals
    // walk from coordinate n-1 down to 0; partial[i] = sum of completed squares
    std::function<void(int, const Rat&)> rec = [&](int i, const Rat& remaining) {
        if (i < 0) {
            std::vector<long long> vi(n);
            for (int k = 0; k < n; ++k) vi[k] = (long long)rat_num(v[k]);
            // recompute the norm from scratch (cheap, avoids bookkeeping drift)
            Rat acc(0);
            for (int a = 0; a < n; ++a) {
                Rat row(0);
                for (int b = 0; b < n; ++b) row += gram[a][b] * (v[b] - center[b]);
                acc += (v[a] - center[a]) * row;
            }
            visit(vi, acc);
            return;
        }
        // need d_i (z_i + t_i)^2 <= remaining, z_i = v_i - c_i,
        // t_i = sum_{j>i} mu_ij z_j
        Rat t(0);
        for (int j = i + 1; j < n; ++j) t += qf.mu[i][j] * (v[j] - center[j]);
        Rat rhs = remaining / qf.d[i];
        // v_i in [c_i - t - sqrt(rhs), c_i - t + sqrt(rhs)]; bound sqrt safely
        Rat mid = center[i] - t;
        Int lo_i, hi_i;
        {
            Int num = rat_num(rhs), den = rat_den(rhs);
            Int s = isqrt_floor(num * den);  // floor(sqrt(num*den)) <= sqrt(rhs)*den
            Rat sq = Rat(s + 1, den);        // >= sqrt(rhs) - 1/den, safe upper pad
            lo_i = rat_ceil(mid - sq) - 1;
            hi_i = rat_floor(mid + sq) + 1;
        }
        for (Int x = lo_i; x <= hi_i; ++x) {
            Rat z = Rat(x) - mid;
            Rat used = qf.d[i] * z * z;
            if (used > remaining) continue;
            v[i] = Rat(x);
            rec(i - 1, remaining - used);
        }
        v[i] = 0;
    };
    rec(n - 1, bound);
}

inline std::vector<Rat> a_glue_vector(int m) {  // (1/(m+1)) (m, m-1, ..., 1)
    std::vector<Rat> lam(m);
    for (int i = 0; i < m; ++i) lam[i] = Rat(m - i, m + 1);
    return lam;
}

// Theta_{A_m, l}(q): sum over v of q^(<v - l lam, v - l lam>/2)
inline QSeries theta_a(int m, long long ell, const Rat& order) {
    Mat g = a_lattice_gram(m);
    auto lam = a_glue_vector(m);
    std::vector<Rat> c(m);
    for (int i = 0; i < m; ++i) c[i] = lam[i] * ell;
    std::map<Rat, Rat> acc;
    enumerate_lattice(g, c, order * 2, [&](const std::vector<long long>&, const Rat& norm) {
        Rat e = norm / 2;
        if (e < order) acc[e] += 1;
    });
    return QSeries::from_terms(std::move(acc), 2 * (m + 1), order);
}

// Theta_{A_m^v, l}(q): dual lattice with character exp(2 pi i <v, l e_1>^v)
inline CSeries theta_dual(int m, long long ell, const Rat& order) {
    Mat gi = mat_inverse(a_lattice_gram(m));
    std::vector<Rat> c(m, Rat(0));
    std::map<Rat, Cyclotomic> acc;
    enumerate_lattice(gi, c, order * 2, [&](const std::vector<long long>& v, const Rat& norm) {
        Rat e = norm / 2;
        if (e >= order) return;
        Rat pairing(0);  // <v, e_1>^v = (M^-1 v)_1
        for (int j = 0; j < m; ++j) pairing += gi[0][j] * v[j];
        auto& slot = acc[e];
        slot = slot + Cyclotomic::unit_phase(pairing * ell);
    });
    return CSeries::from_terms(std::move(acc), 2 * (m + 1), order);
}

// refined versions; the y-weight of a lattice vector is
// <v - l lam, M^-1 (1,..,1)> = sum_i v_i - l m / 2, which makes each
// Theta_{A,l}(q,y) invariant under y -> 1/y and equal to the plain series
// at y = 1
inline QYSeries theta_a_refined(int m, long long ell, const Rat& order) {
    Mat g = a_lattice_gram(m);
    auto lam = a_glue_vector(m);
    std::vector<Rat> c(m);
    for (int i = 0; i < m; ++i) c[i] = lam[i] * ell;
    std::map<Rat, RatFunc<Rat>> acc;
    enumerate_lattice(g, c, order * 2, [&](const std::vector<long long>& v, const Rat& norm) {
        Rat e = norm / 2;
        if (e >= order) return;
        long long sum = 0;
        for (int j = 0; j < m; ++j) sum += v[j];
        long long ypow2 = 2 * sum - ell * m;  // exponent of Y = y^(1/2)
        auto& slot = acc[e];
        slot = slot + RatFunc<Rat>::monomial(Rat(1), ypow2);
    });
    return {QYSeries::Series::from_terms(std::move(acc), 2 * (m + 1), order), 2};
}

inline CYSeries theta_dual_refined(int m, long long ell, const Rat& order) {
    Mat gi = mat_inverse(a_lattice_gram(m));
    std::vector<Rat> c(m, Rat(0));
    std::map<Rat, RatFunc<Cyclotomic>> acc;
    enumerate_lattice(gi, c, order * 2, [&](const std::vector<long long>& v, const Rat& norm) {
        Rat e = norm / 2;
        if (e >= order) return;
        Rat pairing(0), ysum(0);  // <v, e_1>^v and <v, (1,..,1)>^v
        for (int j = 0; j < m; ++j) {
            pairing += gi[0][j] * v[j];
            for (int k = 0; k < m; ++k) ysum += gi[j][k] * v[j];
        }
        Rat ypow = ysum * (m + 1);  // exponent of Y = y^(1/(m+1))
        if (!is_integer(ypow)) throw std::logic_error("dual refined theta: y-exponent off grid");
        auto& slot = acc[e];
        slot = slot + RatFunc<Cyclotomic>::monomial(Cyclotomic::unit_phase(pairing * ell),
                                                    (long long)rat_num(ypow));
    });
    return {CYSeries::Series::from_terms(std::move(acc), 2 * (m + 1), order), m + 1};
}

// t_{A_m,l} = Theta_{A,0}/Theta_{A,l}; enumerates enough to be valid to `order`.
inline QSeries t_a(int m, long long ell, const Rat& order) {
    auto lam = a_glue_vector(m);
    Rat lam_norm(0);  // <lam,lam> = m/(m+1)
    lam_norm = Rat(m, m + 1);
    Rat v = lam_norm * ell * ell / 2;  // a valuation bound for Theta_{A,l}
    Rat inner = order + 2 * v + 1;
    auto th0 = theta_a(m, 0, inner);
    auto thl = theta_a(m, ell, inner);
    return (th0 * thl.recip()).truncated(order);
}

inline CSeries t_dual(int m, long long ell, const Rat& order) {
    auto th0 = theta_dual(m, 0, order + 1);
    auto thl = theta_dual(m, ell, order + 1);
    return (th0 * thl.recip()).truncated(order);
}

inline QYSeries t_a_refined(int m, long long ell, const Rat& order) {
    Rat v = Rat(m, m + 1) * ell * ell / 2;
    Rat inner = order + 2 * v + 1;
    auto th0 = theta_a_refined(m, 0, inner);
    auto thl = theta_a_refined(m, ell, inner);
    return (th0 * thl.recip()).truncated(order);
}

inline CYSeries t_dual_refined(int m, long long ell, const Rat& order) {
    auto th0 = theta_dual_refined(m, 0, order + 1);
    auto thl = theta_dual_refined(m, ell, order + 1);
    return (th0 * thl.recip()).truncated(order);
}

// ---------------------------------------------------------------------------
// Continued fractions
// ---------------------------------------------------------------------------

// u(q)^2 = 2 (eta(q) eta(q^4)^2 / eta(q^2)^3)^2   (octic fraction, squared)
inline QSeries octic_u_squared(const Rat& order) {
    auto base = eta_quotient({{Rat(1), 1}, {Rat(4), 2}, {Rat(2), -3}}, order);
    return (base * base).scaled_rat(Rat(2)).truncated(order);
}

// u(q) itself lives in sqrt(2) Q[[q^(1/8)]]
inline CSeries octic_u(const Rat& order) {
    auto base = eta_quotient({{Rat(1), 1}, {Rat(4), 2}, {Rat(2), -3}}, order);
    return promote(base).scaled(Cyclotomic::sqrt2()).truncated(order);
}

// v(q) = eta(q^(1/2)) eta(q^(1/8))^2 / eta(q^(1/4))^3, the octic fraction
// at -1/tau; rational coefficients on the q^(1/8) grid
inline QSeries octic_v(const Rat& order) {
    return eta_quotient({{Rat(1, 2), 1}, {Rat(1, 8), 2}, {Rat(1, 4), -3}}, order);
}

namespace detail {
// K_d = 1/(1 + a_1/(1 + a_2/(1 + ... + a_d))) evaluated bottom-up
inline QSeries cf_convergent(const std::function<QSeries(long long, const Rat&)>& term, long long depth,
                             const Rat& order) {
    QSeries t = QSeries::one().truncated(order);
    for (long long k = depth; k >= 1; --k) {
        t = QSeries::one().truncated(order) + term(k, order) * t.recip();
    }
    return t.recip();
}
}  // namespace detail

// depth-stabilized continued fraction: increases depth until two consecutive
// depths (and depth+2) agree on every coefficient below `order`
inline QSeries stabilized_cf(const std::function<QSeries(long long, const Rat&)>& term, const Rat& head,
                             const Rat& order, long long max_depth = 64) {
    Rat inner = order - head;
    QSeries prev = detail::cf_convergent(term, 1, inner);
    for (long long d = 2; d <= max_depth; ++d) {
        QSeries cur = detail::cf_convergent(term, d, inner);
        if (QSeries::agree_to(prev, cur, inner)) {
            QSeries nxt = detail::cf_convergent(term, d + 1, inner);
            if (QSeries::agree_to(cur, nxt, inner)) return cur.shifted(head).truncated(order);
        }
        prev = cur;
    }
    throw std::runtime_error("continued fraction did not stabilize; deeper convergents required");
}

// Ramanujan's cubic continued fraction c(q) = q^(1/3)/(1 + (q+q^2)/(1 + ...))
inline QSeries cubic_c(const Rat& order) {
    auto term = [](long long n, const Rat& ord) {
        return QSeries::monomial(Rat(1), Rat(n), ord) + QSeries::monomial(Rat(1), Rat(2 * n), ord);
    };
    return stabilized_cf(term, Rat(1, 3), order);
}

// Rogers-Ramanujan continued fraction r(q) = q^(1/5)/(1 + q/(1 + q^2/(1 + ...)))
inline QSeries rogers_r(const Rat& order) {
    auto term = [](long long n, const Rat& ord) { return QSeries::monomial(Rat(1), Rat(n), ord); };
    return stabilized_cf(term, Rat(1, 5), order);
}

// s(q) = (1 - phi r(q)) / (phi + r(q)), phi the golden ratio
inline CSeries rogers_s(const Rat& order) {
    auto r = promote(rogers_r(order + 1));
    auto phi = CSeries::constant(Cyclotomic::golden_ratio());
    auto num = CSeries::one() - phi * r;
    auto den = phi + r;
    return (num * den.recip()).truncated(order);
}

// ---------------------------------------------------------------------------
// Hauptmoduln of Gamma_0(level), level = 3..7
// ---------------------------------------------------------------------------

inline QSeries hauptmodul(int level, const Rat& order) {
    switch (level) {
        case 3:
            return eta_quotient({{Rat(1), 12}, {Rat(3), -12}}, order);
        case 4:
            return eta_quotient({{Rat(1), 8}, {Rat(4), -8}}, order);
        case 5:
            return eta_quotient({{Rat(1), 6}, {Rat(5), -6}}, order);
        case 6:
            return eta_quotient({{Rat(1), 5}, {Rat(3), 1}, {Rat(2), -1}, {Rat(6), -5}}, order);
        case 7:
            return eta_quotient({{Rat(1), 4}, {Rat(7), -4}}, order);
        default:
            throw std::invalid_argument("hauptmodul: level must be in 3..7");
    }
}

// ---------------------------------------------------------------------------
// Weak Jacobi form phi_{-2,1} and the octic-Jacobi hybrid J(q,y)
// ---------------------------------------------------------------------------

// regular factor of phi: prod (1 - y^sy q^(sq n))^2 (1 - y^-sy q^(sq n))^2 / (1 - q^(sq n))^4
inline QYSeries phi_regular(const Rat& sq, const Rat& sy, const Rat& order) {
    long long yg = 2 * (long long)rat_den(sy);
    long long ypow = 2 * (long long)rat_num(sy);  // y^sy = Y^ypow
    QYSeries acc = QYSeries::from_q(QSeries::one().truncated(order), yg);
    for (long long n = 1; sq * n < order; ++n) {
        auto f1 = QYSeries::from_q(QSeries::one().truncated(order), yg) -
                  QYSeries::monomial(Rat(1), sq * n, Rat(ypow, yg), order);
        auto f2 = QYSeries::from_q(QSeries::one().truncated(order), yg) -
                  QYSeries::monomial(Rat(1), sq * n, Rat(-ypow, yg), order);
        acc = acc * f1 * f1 * f2 * f2;
    }
    auto etapow = eta_bar(sq, order).pow(-4);
    return acc * QYSeries::from_q(etapow, yg);
}

// phi_{-2,1}(q^sq, y^sy) = (y^(sy/2) - y^(-sy/2))^2 * phi_regular
inline QYSeries phi_weak_jacobi(const Rat& sq, const Rat& sy, const Rat& order) {
    long long yg = 2 * (long long)rat_den(sy);
    long long half = (long long)rat_num(sy);  // y^(sy/2) = Y^half
    auto pref = QYSeries::monomial(Rat(1), Rat(0), Rat(half, yg)) -
                QYSeries::monomial(Rat(1), Rat(0), Rat(-half, yg));
    return pref * pref * phi_regular(sq, sy, order);
}

// J = (u(q^2)^4 / 4) (y + 1/y)^2 REG(q^2,y^2) REG(q^8,y^4)^2 / (REG(q^4,y^2)^2 REG(q^4,y^4));
// the (y^...- y^-...) prefactors of the four phi factors cancel to (y + 1/y)^2.
inline QYSeries j_octic(const Rat& order) {
    auto u2 = octic_u_squared(order + 1).rescale_phase(Rat(2), Rat(0));  // u(q^2)^2
    auto u4 = (u2 * u2).truncated(order);
    auto pref = QYSeries::monomial(Rat(1), Rat(0), Rat(1)) + QYSeries::monomial(Rat(1), Rat(0), Rat(-1));
    auto num = phi_regular(Rat(2), Rat(2), order) * phi_regular(Rat(8), Rat(4), order).pow(2);
    auto den = phi_regular(Rat(4), Rat(2), order).pow(2) * phi_regular(Rat(4), Rat(4), order);
    return QYSeries::from_q(u4.scaled_rat(Rat(1, 4)), 1) * pref * pref * num * den.recip();
}

// J^(1/2) = (u(q^2)^2 / 2) (y + 1/y) sqrt(REG ratio), principal branch
inline QYSeries j_octic_sqrt(const Rat& order) {
    auto u2 = octic_u_squared(order + 1).rescale_phase(Rat(2), Rat(0));
    auto pref = QYSeries::monomial(Rat(1), Rat(0), Rat(1)) + QYSeries::monomial(Rat(1), Rat(0), Rat(-1));
    auto num = phi_regular(Rat(2), Rat(2), order) * phi_regular(Rat(8), Rat(4), order).pow(2);
    auto den = phi_regular(Rat(4), Rat(2), order).pow(2) * phi_regular(Rat(4), Rat(4), order);
    auto ratio = num * den.recip();
    auto root = ratio.sqrt(RatFunc<Rat>(Rat(1)));
    return QYSeries::from_q(u2.scaled_rat(Rat(1, 2)), 1) * pref * root;
}

// image of J under tau -> -1/tau, z -> z/tau: v(q)^4 times the phi quotient
// at scales (1/2, 1), (1/8, 1/2), (1/4, 1), (1/4, 1/2); prefactors cancel to 1.
inline QYSeries j_octic_dual(const Rat& order) {
    auto v = octic_v(order + 1);
    auto v4 = (v * v * v * v).truncated(order);
    auto num = phi_regular(Rat(1, 2), Rat(1), order) * phi_regular(Rat(1, 8), Rat(1, 2), order).pow(2);
    auto den = phi_regular(Rat(1, 4), Rat(1), order) * phi_regular(Rat(1, 4), Rat(1, 2), order).pow(2);
    return QYSeries::from_q(v4, 1) * num * den.recip();
}

inline QYSeries j_octic_dual_sqrt(const Rat& order) {
    auto v = octic_v(order + 1);
    auto v2 = (v * v).truncated(order);
    auto num = phi_regular(Rat(1, 2), Rat(1), order) * phi_regular(Rat(1, 8), Rat(1, 2), order).pow(2);
    auto den = phi_regular(Rat(1, 4), Rat(1), order) * phi_regular(Rat(1, 4), Rat(1, 2), order).pow(2);
    auto root = (num * den.recip()).sqrt(RatFunc<Rat>(Rat(1)));
    return QYSeries::from_q(v2, 1) * root;
}

// ---------------------------------------------------------------------------
// Discrete theta identities
// ---------------------------------------------------------------------------

struct CheckReport {
    bool ok = true;
    std::string detail;
};

// Theta_{A_m^v,0} = sum_{l=0}^m Theta_{A_m,l}
inline CheckReport theta_keysum_check(int m, const Rat& order, bool refined = false) {
    CheckReport rep;
    if (!refined) {
        auto lhs = theta_dual(m, 0, order);
        CSeries rhs = CSeries::zero_to(order, 1);
        for (int l = 0; l <= m; ++l) rhs = rhs + promote(theta_a(m, l, order));
        rep.ok = CSeries::agree_to(lhs, rhs, order);
    } else {
        auto lhs = theta_dual_refined(m, 0, order);
        CYSeries rhs;
        rhs.s = CYSeries::Series::zero_to(order, 1);
        rhs.yg = 1;
        for (int l = 0; l <= m; ++l) rhs = rhs + promote_y(theta_a_refined(m, l, order));
        rep.ok = CYSeries::agree_to(lhs, rhs, order);
    }
    if (!rep.ok) rep.detail = "keysum mismatch for rank " + std::to_string(m);
    return rep;
}

// Theta_{A_m^v,l}(tau + 2k) = sum_n eps_{m+1}^(n(l - nk)) Theta_{A_m,n};
// tau -> tau + 2k acts as the exponentwise phase exp(4 pi i k e).
inline CheckReport theta_shift_check(int m, long long k, long long ell, const Rat& order,
                                     bool refined = false) {
    CheckReport rep;
    long long N = m + 1;
    if (!refined) {
        auto lhs = theta_dual(m, ell, order).rescale_phase(Rat(1), Rat(2 * k));
        CSeries rhs = CSeries::zero_to(order, 1);
        for (long long n = 0; n <= m; ++n) {
            auto phase = Cyclotomic::zeta(N, ((n * (ell - n * k)) % N + N) % N);
            rhs = rhs + promote(theta_a(m, n, order)).scaled(phase);
        }
        rep.ok = CSeries::agree_to(lhs, rhs, order);
    } else {
        auto lhs = theta_dual_refined(m, ell, order).rescale_phase(Rat(1), Rat(2 * k));
        CYSeries rhs;
        rhs.s = CYSeries::Series::zero_to(order, 1);
        rhs.yg = 1;
        for (long long n = 0; n <= m; ++n) {
            auto phase = Cyclotomic::zeta(N, ((n * (ell - n * k)) % N + N) % N);
            rhs = rhs + promote_y(theta_a_refined(m, n, order)).scaled(RatFunc<Cyclotomic>(phase));
        }
        rep.ok = CYSeries::agree_to(lhs, rhs, order);
    }
    if (!rep.ok)
        rep.detail = "shift identity failed: rank " + std::to_string(m) + " k=" + std::to_string(k) +
                     " l=" + std::to_string(ell);
    return rep;
}

}  // namespace vw
