#pragma once

// Assembly of the SU(r) partition function for a concrete surface.
//
// A surface enters only through numerical data: chi(O_S), the intersection
// form on a finite-rank sublattice of H^2 containing the canonical class K,
// c_1, and the Seiberg-Witten basic classes with their invariants.  The
// vertical series is
//
//   Z^(1^r) = ((-1)^(r-1) / (r Delta(q^r)^(1/2)))^chi (Theta_{A_{r-1},0}/eta^r)^(-K^2)
//             * C_0^(K^2) sum_beta delta_{c1, sum i beta_i} prod SW(beta_i)
//                          prod C_ij^(beta_i . beta_j)
//
// and the horizontal side is the root-of-unity average
//
//   Z^(r) = r^(-1) q^(-chi/2r + r K^2/24) sum_{k=0}^{r-1}
//             eps_r^(k((r-1)c1^2 + (r^2-1)chi)) psi(eps_r^k q^(1/2r)).
//
// The average runs over r terms k = 0..r-1 (a k = r term would repeat
// k = 0); the standard root-of-unity filter with the 1/r prefactor needs
// exactly r summands.  Delta(q^r)^(1/2) is realized as eta(q^r)^12, exact by
// definition and branch-free.

#include "vw/universal_checks.hpp"

namespace vw {

inline Cyclotomic cyc_pow(const Cyclotomic& base, long long e) {
    if (e == 0) return Cyclotomic::one();
    Cyclotomic b = e < 0 ? base.inverse() : base;
    unsigned long long k = e < 0 ? -e : e;
    Cyclotomic acc = Cyclotomic::one();
    while (k) {
        if (k & 1) acc = acc * b;
        b = (k >>= 1) ? b * b : b;
    }
    return acc;
}

inline RatFunc<Rat> pow_ratfunc(const RatFunc<Rat>& b, long long e) {
    RatFunc<Rat> acc(Rat(1));
    RatFunc<Rat> base = e < 0 ? b.inverse() : b;
    unsigned long long k = e < 0 ? -e : e;
    while (k) {
        if (k & 1) acc = acc * base;
        base = (k >>= 1) ? base * base : base;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// SurfaceSpec
// ---------------------------------------------------------------------------

struct SurfaceSpec {
    long long chi = 2;
    int m = 1;                                 // rank of the working sublattice
    std::vector<std::vector<long long>> gram;  // m x m intersection form
    std::vector<long long> K;                  // canonical class
    std::vector<std::pair<std::vector<long long>, long long>> basic;  // (beta, SW(beta))
    std::optional<long long> b2;
    std::optional<long long> signature;

    long long pair(const std::vector<long long>& a, const std::vector<long long>& b) const {
        long long acc = 0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) acc += a[i] * gram[i][j] * b[j];
        return acc;
    }
    long long k_squared() const { return pair(K, K); }
};

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool ok() const { return errors.empty(); }
};

inline ValidationReport surface_validate(const SurfaceSpec& s) {
    ValidationReport rep;
    if ((int)s.K.size() != s.m || (int)s.gram.size() != s.m)
        rep.errors.push_back("dimension mismatch between gram, K, and rank");
    for (const auto& [beta, sw] : s.basic) {
        (void)sw;
        if (s.pair(beta, beta) != s.pair(beta, s.K))
            rep.warnings.push_back("basic class with beta.beta != beta.K");
    }
    // duality: K - beta must be basic with SW(K - beta) = (-1)^chi SW(beta)
    long long sign = (s.chi % 2 == 0) ? 1 : -1;
    for (const auto& [beta, sw] : s.basic) {
        std::vector<long long> dual(s.m);
        for (int i = 0; i < s.m; ++i) dual[i] = s.K[i] - beta[i];
        bool found = false;
        for (const auto& [bv, sw2] : s.basic)
            if (bv == dual) {
                found = true;
                if (sw2 != sign * sw)
                    rep.errors.push_back("Seiberg-Witten duality violated: SW(K - beta) != (-1)^chi SW(beta)");
            }
        if (!found) rep.errors.push_back("basic class without its dual K - beta");
    }
    return rep;
}

// Minimal-general-type shape: basic classes {0, K} with SW = 1, (-1)^chi.
// The working lattice [[k2, 1], [1, 0]] holds K = (1,0) with K^2 = k2; the
// class (0, n) pairs with K to n, so K.c1 is freely tunable.
inline SurfaceSpec minimal_general_type(long long chi, long long k2) {
    SurfaceSpec s;
    s.chi = chi;
    s.m = 2;
    s.gram = {{k2, 1}, {1, 0}};
    s.K = {1, 0};
    s.basic = {{{0, 0}, 1}, {{1, 0}, (chi % 2 == 0) ? 1 : -1}};
    return s;
}

// K-trivial shape used for the Euler-characteristic cross-check (basic
// classes {0} with SW 1; vertical assembly on such specs is not certified).
inline SurfaceSpec k3_type() {
    SurfaceSpec s;
    s.chi = 2;
    s.m = 1;
    s.gram = {{-2}};
    s.K = {0};
    s.basic = {{{0}, 1}};
    s.b2 = 22;
    s.signature = -16;
    return s;
}

// Blow-up: append an exceptional class E with E^2 = -1, K -> K + E, and
// double the basic classes as {beta, beta + E} with unchanged invariants.
inline SurfaceSpec blow_up(const SurfaceSpec& s) {
    SurfaceSpec t;
    t.chi = s.chi;
    t.m = s.m + 1;
    t.gram.assign(t.m, std::vector<long long>(t.m, 0));
    for (int i = 0; i < s.m; ++i)
        for (int j = 0; j < s.m; ++j) t.gram[i][j] = s.gram[i][j];
    t.gram[s.m][s.m] = -1;
    t.K = s.K;
    t.K.push_back(1);
    for (const auto& [beta, sw] : s.basic) {
        auto b0 = beta;
        b0.push_back(0);
        t.basic.push_back({b0, sw});
        auto b1 = beta;
        b1.push_back(1);
        t.basic.push_back({b1, sw});
    }
    if (s.b2) t.b2 = *s.b2 + 1;
    if (s.signature) t.signature = *s.signature - 1;
    return t;
}

inline std::vector<long long> with_exceptional(const std::vector<long long>& c1, long long ell) {
    auto v = c1;
    v.push_back(-ell);
    return v;
}

// ---------------------------------------------------------------------------
// Phi, Psi and the partition function pieces
// ---------------------------------------------------------------------------

namespace detail {
// all (r-1)-tuples of indices into the basic class list
inline void for_each_tuple(int len, int base, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> idx(len, 0);
    while (true) {
        f(idx);
        int p = 0;
        while (p < len && ++idx[p] == base) idx[p++] = 0;
        if (p == len) break;
    }
}
}  // namespace detail

// Phi = C_0^(K^2) sum_beta delta_{c1, sum i beta_i} prod_i SW(beta_i)
//       prod_{i<=j} C_ij^(beta_i beta_j); the empty sum is the zero series
template <class S>
S phi_series(const UniversalSet<S>& C, const SurfaceSpec& spec, const std::vector<long long>& c1) {
    int r = C.rank;
    long long k2 = spec.k_squared();
    std::map<std::pair<int, int>, S> cij;
    for (int i = 1; i < r; ++i)
        for (int j = i; j < r; ++j) cij[{i, j}] = C.cij(i, j);
    S acc = S::zero_exact();
    detail::for_each_tuple(r - 1, (int)spec.basic.size(), [&](const std::vector<int>& idx) {
        for (int c = 0; c < spec.m; ++c) {  // delta: c1 - sum i beta_i in r H^2
            long long x = c1[c];
            for (int i = 1; i < r; ++i) x -= i * spec.basic[idx[i - 1]].first[c];
            if (x % r != 0) return;
        }
        Rat sw(1);
        for (int i = 1; i < r; ++i) sw *= spec.basic[idx[i - 1]].second;
        if (sw == 0) return;
        S term = C.c0().pow(k2);
        for (int i = 1; i < r; ++i)
            for (int j = i; j < r; ++j) {
                long long e = spec.pair(spec.basic[idx[i - 1]].first, spec.basic[idx[j - 1]].first);
                if (e != 0) term = term * cij.at({i, j}).pow(e);
            }
        acc = acc + term.scaled_rat(sw);
    });
    return acc;
}

struct AssemblyResult {
    CSeries series;
    Rat grading_offset = Rat(0);  // exponent of the q-power prefactor, if split off
};

// Psi = D_0^(K^2) sum prod eps_r^(i beta_i c1) SW(beta_i) prod D_ij^(beta_i beta_j)
inline CSeries psi_raw(const UniversalSet<CSeries>& D, const SurfaceSpec& spec,
                       const std::vector<long long>& c1) {
    int r = D.rank;
    long long k2 = spec.k_squared();
    std::map<std::pair<int, int>, CSeries> dij;
    for (int i = 1; i < r; ++i)
        for (int j = i; j < r; ++j) dij[{i, j}] = D.cij(i, j);
    CSeries acc = CSeries::zero_exact();
    detail::for_each_tuple(r - 1, (int)spec.basic.size(), [&](const std::vector<int>& idx) {
        long long phase = 0;
        Rat sw(1);
        for (int i = 1; i < r; ++i) {
            phase += i * spec.pair(spec.basic[idx[i - 1]].first, c1);
            sw *= spec.basic[idx[i - 1]].second;
        }
        if (sw == 0) return;
        CSeries term = D.c0().pow(k2);
        for (int i = 1; i < r; ++i)
            for (int j = i; j < r; ++j) {
                long long e = spec.pair(spec.basic[idx[i - 1]].first, spec.basic[idx[j - 1]].first);
                if (e != 0) term = term * dij.at({i, j}).pow(e);
            }
        acc = acc + term.scaled(Cyclotomic::zeta(r, ((phase % r) + r) % r)).scaled_rat(sw);
    });
    return acc;
}

// prefactored psi: r^(2 + K^2 - chi) Delta-bar(q^(1/r))^(-chi/2)
//                  (Theta_{A^v_{r-1},0} / eta-bar^r)^(-K^2) * psi_raw;
// grading offset -chi/2r + r K^2/24 recorded separately.  The normalized and
// raw prefactors agree exactly after multiplying by q^offset.
inline AssemblyResult psi_series(const UniversalSet<CSeries>& D, const SurfaceSpec& spec,
                                 const std::vector<long long>& c1, const Rat& order,
                                 bool with_prefactors) {
    AssemblyResult out;
    auto raw = psi_raw(D, spec, c1);
    if (!with_prefactors) {
        out.series = raw.truncated(order);
        return out;
    }
    int r = D.rank;
    long long k2 = spec.k_squared();
    Rat O = order + 2;
    auto dbar_half = eta_bar(Rat(1, r), O).pow(-12);  // Delta-bar(q^(1/r))^(-1/2)
    auto theta = theta_dual(r - 1, 0, O);
    auto ebar_r = eta_bar(Rat(1), O).pow(r);
    auto pref = promote(dbar_half.pow(spec.chi)) * (theta * promote(ebar_r).recip()).pow(-k2);
    out.series = (pref * raw).scaled_rat(rat_pow(Rat(r), 2 + k2 - spec.chi)).truncated(order);
    out.grading_offset = Rat(-spec.chi, 2 * r) + Rat((long long)r * k2, 24);
    return out;
}

// vertical generating series (complete, no offset split)
inline AssemblyResult z_vertical(const UniversalSet<QSeries>& C, const SurfaceSpec& spec,
                                 const std::vector<long long>& c1, const Rat& order) {
    int r = C.rank;
    long long k2 = spec.k_squared();
    Rat O = order + Rat((long long)r * spec.chi, 2) + Rat(2 * std::abs(k2)) + 2;
    auto phi = phi_series(C, spec, c1);
    auto eta_r12 = eta(Rat(r), O).pow(-12 * spec.chi);  // Delta(q^r)^(-chi/2)
    auto theta = theta_a(r - 1, 0, O);
    auto etar = eta(Rat(1), O).pow(r);
    auto series = eta_r12 * (theta * etar.recip()).pow(-k2) * phi;
    Rat sign = ((r - 1) * spec.chi) % 2 == 0 ? Rat(1) : Rat(-1);
    series = series.scaled_rat(sign * rat_pow(Rat(r), -spec.chi));
    AssemblyResult out;
    out.series = promote(series.truncated(order));
    return out;
}

// horizontal generating series Z^(r), offset applied
inline AssemblyResult z_horizontal(const UniversalSet<CSeries>& D, const SurfaceSpec& spec,
                                   const std::vector<long long>& c1, const Rat& order) {
    int r = D.rank;
    long long c1sq = spec.pair(c1, c1);
    auto psi = psi_series(D, spec, c1, order + 1, /*with_prefactors=*/true);
    long long weight = (((r - 1) * c1sq + ((long long)r * r - 1) * spec.chi) % r + r) % r;
    CSeries acc = CSeries::zero_exact();
    for (long long k = 0; k < r; ++k) {
        auto twisted = psi.series.rescale_phase(Rat(1), Rat(2 * k));
        acc = acc + twisted.scaled(Cyclotomic::zeta(r, (k * weight) % r));
    }
    AssemblyResult out;
    out.series = acc.shifted(psi.grading_offset).scaled_rat(Rat(1, r)).truncated(order);
    return out;
}

// Z^SU(r) = r^(-1) Z^(1^r) + r^(-1) Z^(r); complete data exists for r = 2, 3, 5
inline AssemblyResult z_full(int r, const SurfaceSpec& spec, const std::vector<long long>& c1,
                             const Rat& order) {
    if (r != 2 && r != 3 && r != 5)
        throw std::invalid_argument(
            "full SU(r) assembly needs rank 2, 3 or 5: for r = 4 the fixed-locus component indexed "
            "by the partition (2,2) has no known universal expression, and no closed forms exist "
            "beyond rank 5");
    long long k2 = std::abs(spec.k_squared());
    Rat margin = Rat(2) + Rat(2 * k2);
    auto C = build_vertical(r, order + margin);
    auto D = build_horizontal(r, order + margin);
    auto v = z_vertical(C, spec, c1, order);
    auto h = z_horizontal(D, spec, c1, order);
    AssemblyResult out;
    out.series = (v.series + h.series).scaled_rat(Rat(1, r)).truncated(order);
    return out;
}

// ---------------------------------------------------------------------------
// virtual Euler characteristic predictions
// ---------------------------------------------------------------------------

struct EvirPrediction {
    long long c2;
    Cyclotomic value;
    bool rational;
    bool integral;
};

// coefficient of q^(c2 - (r-1)c1^2/2r - r chi/2 + r K^2/24) of the
// prefactored horizontal expression, per c2
inline std::vector<EvirPrediction> evir_predictions(const UniversalSet<CSeries>& D, const SurfaceSpec& spec,
                                                    const std::vector<long long>& c1, long long c2_min,
                                                    long long c2_max) {
    int r = D.rank;
    long long c1sq = spec.pair(c1, c1);
    auto expo = [&](long long c2) {
        return Rat(c2) - Rat((r - 1) * c1sq, 2 * r) - Rat((long long)r * spec.chi, 2) +
               Rat((long long)r * spec.k_squared(), 24);
    };
    Rat offset = Rat(-spec.chi, 2 * r) + Rat((long long)r * spec.k_squared(), 24);
    Rat need = expo(c2_max) - offset + 1;
    auto psi = psi_series(D, spec, c1, need, /*with_prefactors=*/true);
    auto full = psi.series.shifted(psi.grading_offset);
    std::vector<EvirPrediction> out;
    for (long long c2 = c2_min; c2 <= c2_max; ++c2) {
        auto v = full.coeff(expo(c2));
        bool rational = v.is_rational();
        bool integral = rational && is_integer(v.rational_part());
        out.push_back({c2, v, rational, integral});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Donaldson leading terms (vd = 0)
// ---------------------------------------------------------------------------

inline Cyclotomic donaldson_from_constants(const UniversalSet<CSeries>& D, const SurfaceSpec& spec,
                                           const std::vector<long long>& c1) {
    int r = D.rank;
    long long k2 = spec.k_squared();
    Cyclotomic acc = Cyclotomic::zero();
    std::map<std::pair<int, int>, Cyclotomic> dij0;
    for (int i = 1; i < r; ++i)
        for (int j = i; j < r; ++j) dij0[{i, j}] = D.cij(i, j).coeff(Rat(0));
    Cyclotomic d00 = D.c0().coeff(Rat(0));
    detail::for_each_tuple(r - 1, (int)spec.basic.size(), [&](const std::vector<int>& idx) {
        long long phase = 0;
        Rat sw(1);
        for (int i = 1; i < r; ++i) {
            phase += i * spec.pair(spec.basic[idx[i - 1]].first, c1);
            sw *= spec.basic[idx[i - 1]].second;
        }
        if (sw == 0) return;
        Cyclotomic term = cyc_pow(d00, k2);
        for (int i = 1; i < r; ++i)
            for (int j = i; j < r; ++j) {
                long long e = spec.pair(spec.basic[idx[i - 1]].first, spec.basic[idx[j - 1]].first);
                if (e != 0) term = term * cyc_pow(dij0.at({i, j}), e);
            }
        acc = acc + term * Cyclotomic::zeta(r, ((phase % r) + r) % r) * sw;
    });
    return acc * rat_pow(Rat(r), 2 + k2 - spec.chi);
}

// closed-form evaluations, written with beta-tilde = 2 beta - K.  The rank-5
// bases (3 - sqrt5)/2 and (7 - 3 sqrt5)/2 are the -2nd and -4th powers of
// the golden ratio, so quarter-integral tilde-exponents still land on
// integral powers of phi.
inline Cyclotomic donaldson_closed_form(int r, const SurfaceSpec& spec, const std::vector<long long>& c1) {
    long long k2 = spec.k_squared();
    Rat front = rat_pow(Rat(r), 2 - spec.chi + k2);
    auto tilde_pair = [&](const std::vector<long long>& a, const std::vector<long long>& b) {
        std::vector<long long> ta(spec.m), tb(spec.m);
        for (int i = 0; i < spec.m; ++i) {
            ta[i] = 2 * a[i] - spec.K[i];
            tb[i] = 2 * b[i] - spec.K[i];
        }
        return spec.pair(ta, tb);
    };
    auto int_of = [](const Rat& e, const char* who) {
        if (!is_integer(e)) throw std::domain_error(std::string(who) + ": non-integral exponent");
        return (long long)rat_num(e);
    };
    Cyclotomic acc = Cyclotomic::zero();
    if (r == 2) {
        for (const auto& [b, sw] : spec.basic) {
            long long bc = spec.pair(b, c1);
            acc = acc + Cyclotomic(Rat(sw * ((bc % 2 == 0) ? 1 : -1)));
        }
    } else if (r == 3) {
        detail::for_each_tuple(2, (int)spec.basic.size(), [&](const std::vector<int>& idx) {
            const auto& [b1, s1] = spec.basic[idx[0]];
            const auto& [b2, s2] = spec.basic[idx[1]];
            long long ph = spec.pair(b1, c1) + 2 * spec.pair(b2, c1);
            Rat e = Rat(tilde_pair(b1, b1) + 2 * tilde_pair(b1, b2) + tilde_pair(b2, b2), 4);
            acc = acc + Cyclotomic::zeta(3, ((ph % 3) + 3) % 3) *
                            Cyclotomic(rat_pow(Rat(2), int_of(e, "donaldson r=3"))) * Rat(s1 * s2);
        });
    } else if (r == 4) {
        auto base = Cyclotomic(Rat(1)) - Cyclotomic::sqrt2() * Rat(1, 2);  // 1 - sqrt2/2
        detail::for_each_tuple(3, (int)spec.basic.size(), [&](const std::vector<int>& idx) {
            const auto& [b1, s1] = spec.basic[idx[0]];
            const auto& [b2, s2] = spec.basic[idx[1]];
            const auto& [b3, s3] = spec.basic[idx[2]];
            long long ph = -spec.pair(b1, c1) + 2 * spec.pair(b2, c1) - 3 * spec.pair(b3, c1);
            Rat e2 = Rat(k2) + Rat(tilde_pair(b1, b1) + tilde_pair(b1, b3) + tilde_pair(b2, b1) +
                                       tilde_pair(b2, b3),
                                   4);
            Rat e3 = Rat(tilde_pair(b2, b1) + tilde_pair(b2, b3), 2);
            acc = acc + Cyclotomic::zeta(4, ((ph % 4) + 4) % 4) *
                            Cyclotomic(rat_pow(Rat(2), int_of(e2, "donaldson r=4"))) *
                            cyc_pow(base, int_of(e3, "donaldson r=4")) * Rat(s1 * s2 * s3);
        });
    } else if (r == 5) {
        auto phi_inv = Cyclotomic::golden_ratio().inverse();
        auto front5 = Cyclotomic(Rat(20)) + Cyclotomic::sqrt5() * Rat(8);
        detail::for_each_tuple(4, (int)spec.basic.size(), [&](const std::vector<int>& idx) {
            std::vector<const std::vector<long long>*> b(4);
            Rat sw(1);
            long long ph = 0;
            for (int i = 0; i < 4; ++i) {
                b[i] = &spec.basic[idx[i]].first;
                sw *= spec.basic[idx[i]].second;
                ph += (i + 1) * spec.pair(*b[i], c1);
            }
            if (sw == 0) return;
            auto tp = [&](int i, int j) { return tilde_pair(*b[i], *b[j]); };
            Rat e2 = Rat(tp(0, 3), 2) + Rat(tp(1, 2), 2) -
                     Rat(tp(0, 0) + tp(1, 1) + tp(2, 2) + tp(3, 3), 4);
            Rat e_phi2 = Rat(tp(0, 0) + tp(3, 3) + tp(0, 3) - tp(0, 2) - tp(1, 2) - tp(1, 3), 4);
            Rat e_phi4 = Rat(tp(1, 1) + tp(2, 2) - tp(0, 1) - tp(2, 3), 4);
            Rat phi_e = 2 * e_phi2 + 4 * e_phi4;  // phi^-(phi_e)
            acc = acc + Cyclotomic::zeta(5, ((ph % 5) + 5) % 5) * cyc_pow(front5, k2) *
                            Cyclotomic(rat_pow(Rat(2), int_of(e2, "donaldson r=5"))) *
                            cyc_pow(phi_inv, int_of(phi_e, "donaldson r=5")) * sw;
        });
    } else {
        throw std::invalid_argument("donaldson closed forms exist for ranks 2..5");
    }
    return acc * front;
}

// ---------------------------------------------------------------------------
// flux sums
// ---------------------------------------------------------------------------

inline int legendre_symbol(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    long long r = 1, base = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == 1 ? 1 : (r == p - 1 ? -1 : 0);
}

// sum over x in (Z_r)^b2 of e^(2 pi i (x.c)/r)
inline Cyclotomic flux_sum_plain_brute(long long r, const std::vector<std::vector<long long>>& gram,
                                       const std::vector<long long>& c) {
    int n = (int)gram.size();
    Cyclotomic acc = Cyclotomic::zero();
    std::vector<long long> x(n, 0);
    while (true) {
        long long dot = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) dot += x[i] * gram[i][j] * c[j];
        acc = acc + Cyclotomic::zeta(r, ((dot % r) + r) % r);
        int p = 0;
        while (p < n && ++x[p] == r) x[p++] = 0;
        if (p == n) break;
    }
    return acc;
}

inline Cyclotomic flux_sum_plain_closed(long long r, long long b2,
                                        const std::vector<std::vector<long long>>& gram,
                                        const std::vector<long long>& c) {
    // c = 0 in (Z_r)^b2 means gram . c = 0 mod r (the pairing with every x)
    int n = (int)gram.size();
    for (int i = 0; i < n; ++i) {
        long long row = 0;
        for (int j = 0; j < n; ++j) row += gram[i][j] * c[j];
        if (row % r != 0) return Cyclotomic::zero();
    }
    return Cyclotomic(rat_pow(Rat(r), b2));
}

// second identity: sum_x e^(2 pi i (x c)/r) e^(pi i (r-1) m x^2 / r)
inline Cyclotomic flux_sum_quadratic_brute(long long r, long long m,
                                           const std::vector<std::vector<long long>>& gram,
                                           const std::vector<long long>& c) {
    int n = (int)gram.size();
    Cyclotomic acc = Cyclotomic::zero();
    std::vector<long long> x(n, 0);
    while (true) {
        long long dot = 0, xsq = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                dot += x[i] * gram[i][j] * c[j];
                xsq += x[i] * gram[i][j] * x[j];
            }
        long long num = ((2 * dot + (r - 1) * m * xsq) % (2 * r) + 2 * r) % (2 * r);
        acc = acc + Cyclotomic::zeta(2 * r, num);
        int p = 0;
        while (p < n && ++x[p] == r) x[p++] = 0;
        if (p == n) break;
    }
    return acc;
}

// eps(m)^b2 r^(b2/2) e^(-pi i (r-1)^2 sigma/8) e^(pi i (r-1) n c^2 / r), mn = -1 mod r
inline Cyclotomic flux_sum_quadratic_closed(long long r, long long m, long long b2, long long sigma,
                                            long long c_sq) {
    if (r <= 2 || r % 2 == 0) throw std::invalid_argument("flux sums need an odd prime rank");
    long long n = -1;
    for (long long k = 1; k < r; ++k)
        if ((m * k) % r == r - 1) n = k;
    if (n < 0) throw std::invalid_argument("flux sum: m not invertible mod r");
    long long eps_arg = (m % 2 == 0) ? m / 2 : (m + r) / 2;
    int eps = legendre_symbol(eps_arg, r);
    Cyclotomic val = Cyclotomic(rat_pow(Rat(r), b2 / 2));
    if (b2 % 2) val = val * sqrt_rational_radical(Rat(r)).value();
    if (eps == -1 && b2 % 2) val = -val;
    long long ph16 = ((-(r - 1) * (r - 1) * sigma) % 16 + 16) % 16;
    val = val * Cyclotomic::zeta(16, ph16);
    long long ph2r = (((r - 1) * n * c_sq) % (2 * r) + 2 * r) % (2 * r);
    val = val * Cyclotomic::zeta(2 * r, ph2r);
    return val;
}

// ---------------------------------------------------------------------------
// rank-5 polynomial identities in Q(eps_5, sqrt5)[R]
// ---------------------------------------------------------------------------

// the four product identities behind the Moebius action on the
// Rogers-Ramanujan fraction at shifted arguments; all four expand to the
// zero polynomial
inline std::vector<bool> rank5_polynomial_identities() {
    using P = LaurentPoly<Cyclotomic>;
    auto phi = Cyclotomic::golden_ratio();
    auto e5 = Cyclotomic::zeta(5);
    auto ep = [&](int k) { return cyc_pow(e5, k); };
    auto lin = [&](const Cyclotomic& a, const Cyclotomic& b) {  // a + b R
        return P::from_scalar(a) + P::monomial(Cyclotomic::one(), 1).scaled(b);
    };
    // A_k = phi(phi + R) + eps^k (1 - phi R) and B_k = phi + R - phi eps^k (1 - phi R)
    auto A = [&](int k) { return lin(phi * phi + ep(k), phi - ep(k) * phi); };
    auto B = [&](int k) { return lin(phi - phi * ep(k), Cyclotomic::one() + phi * phi * ep(k)); };
    std::vector<bool> ok;
    ok.push_back((A(2) * lin(-phi, -ep(2)) - (B(2) * lin(Cyclotomic::one(), -phi * ep(2))).scaled(ep(3))).is_zero());
    ok.push_back((A(4) * lin(Cyclotomic::one(), -phi * ep(1)) - (B(4) * lin(phi, ep(1))).scaled(ep(4))).is_zero());
    ok.push_back((A(1) * lin(Cyclotomic::one(), -phi * ep(4)) - (B(1) * lin(phi, ep(4))).scaled(ep(1))).is_zero());
    ok.push_back((A(3) * lin(-phi, -ep(3)) - (B(3) * lin(Cyclotomic::one(), -phi * ep(3))).scaled(ep(2))).is_zero());
    return ok;
}

// The Galois action eps_5 -> eps_5^k permutes the identity set: it maps
// every factor of the four identities to a scalar multiple of another
// identity's factor (the golden ratio moves along, phi -> 1 - phi, which is
// why the instance labels get relabeled rather than fixed).
inline bool rank5_identities_galois_consistent() {
    using P = LaurentPoly<Cyclotomic>;
    auto phi = Cyclotomic::golden_ratio();
    auto e5 = Cyclotomic::zeta(5);
    auto ep = [&](long long k) { return cyc_pow(e5, ((k % 5) + 5) % 5); };
    auto lin = [&](const Cyclotomic& a, const Cyclotomic& b) {
        return P::from_scalar(a) + P::monomial(Cyclotomic::one(), 1).scaled(b);
    };
    auto A = [&](long long k) { return lin(phi * phi + ep(k), phi - ep(k) * phi); };
    auto B = [&](long long k) { return lin(phi - phi * ep(k), Cyclotomic::one() + phi * phi * ep(k)); };
    auto gal = [](const P& p, long long k) {
        P out = p;
        for (auto& c : out.c) c = c.galois(k);
        return out;
    };
    auto prop = [](const P& x, const P& y) {
        if (x.is_zero() || y.is_zero() || x.c.size() != y.c.size() || x.lo != y.lo) return false;
        auto r = x.c.back() * y.c.back().inverse();
        return x == y.scaled(r);
    };
    // the A / B factors appearing in the four identities
    std::vector<P> factors;
    for (long long k : {1, 2, 3, 4}) {
        factors.push_back(A(k));
        factors.push_back(B(k));
    }
    for (long long j : {2, 3, 4}) {  // the nontrivial Galois exponents mod 5
        for (const auto& f : factors) {
            auto img = gal(f, j);
            bool matched = false;
            for (const auto& g : factors) matched = matched || prop(img, g);
            if (!matched) return false;
        }
    }
    return true;
}

// shifted prefactored horizontal series whose coefficients are the virtual
// Euler characteristic predictions
inline CSeries evir_series(const UniversalSet<CSeries>& D, const SurfaceSpec& spec,
                           const std::vector<long long>& c1, const Rat& order) {
    Rat offset = Rat(-spec.chi, 2 * D.rank) + Rat((long long)D.rank * spec.k_squared(), 24);
    auto psi = psi_series(D, spec, c1, order - offset, /*with_prefactors=*/true);
    return psi.series.shifted(psi.grading_offset);
}

// ---------------------------------------------------------------------------
// refined vertical assembly
// ---------------------------------------------------------------------------

// prod_n (1 - y^sy q^(sq n))(1 - y^-sy q^(sq n)) / (1 - q^(sq n))^2: the
// square root of the regular part of phi_{-2,1}
inline QYSeries phi_regular_sqrt(const Rat& sq, const Rat& sy, const Rat& order) {
    long long yg = 2 * (long long)rat_den(sy);
    long long ypow = 2 * (long long)rat_num(sy);
    QYSeries acc = QYSeries::from_q(QSeries::one().truncated(order), yg);
    for (long long n = 1; sq * n < order; ++n) {
        auto f1 = QYSeries::from_q(QSeries::one().truncated(order), yg) -
                  QYSeries::monomial(Rat(1), sq * n, Rat(ypow, yg), order);
        auto f2 = QYSeries::from_q(QSeries::one().truncated(order), yg) -
                  QYSeries::monomial(Rat(1), sq * n, Rat(-ypow, yg), order);
        acc = acc * f1 * f2;
    }
    return acc * QYSeries::from_q(eta_bar(sq, order).pow(-2), yg);
}

// Z^(1^r)(q,y) including the (y^(1/2) - y^(-1/2))^chi factor.  The reduced
// rational function (Y - 1/Y)/(Y^r - Y^-r) is regular at y = 1 with value
// 1/r, so the y = 1 specialization recovers the unrefined vertical series
// with its 1/r^chi prefactor.
inline QYSeries refined_z_vertical(const UniversalSet<QYSeries>& C, const SurfaceSpec& spec,
                                   const std::vector<long long>& c1, const Rat& order) {
    int r = C.rank;
    if (r == 5) throw std::invalid_argument("no rank-5 refinement is known");
    long long k2 = spec.k_squared();
    Rat O = order + Rat((long long)r * spec.chi, 2) + Rat(2 * std::abs(k2)) + 2;
    auto phi = phi_series(C, spec, c1);
    RatFunc<Rat> ynum = RatFunc<Rat>::monomial(Rat(1), 1) - RatFunc<Rat>::monomial(Rat(1), -1);
    RatFunc<Rat> yden = RatFunc<Rat>::monomial(Rat(1), r) - RatFunc<Rat>::monomial(Rat(1), -r);
    auto yratio = ynum * yden.inverse();
    auto regsq = phi_regular_sqrt(Rat(r), Rat(r), O);
    auto eta_r12 = QYSeries::from_q(eta(Rat(r), O).pow(12 * spec.chi), 2);
    auto front = (regsq.pow(spec.chi) * eta_r12).recip().scaled(pow_ratfunc(yratio, spec.chi));
    auto theta = theta_a_refined(r - 1, 0, O);
    auto etar = QYSeries::from_q(eta(Rat(1), O).pow(r), 2);
    auto series = front * (theta * etar.recip()).pow(-k2) * phi;
    Rat sign = ((r - 1) * spec.chi) % 2 == 0 ? Rat(1) : Rat(-1);
    return series.scaled_rat(sign).truncated(order);
}

}  // namespace vw
