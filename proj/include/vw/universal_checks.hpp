#pragma once

// Verification suites for the universal series:
//
//   * reconstruction: C_I = C_0 prod_{i<=j in I} C_ij for every subset
//   * mirror symmetry C_ij = C_{r-j,r-i}
//   * subset sums  sum_I eps_r^(l ||I||) C_I^{-1} = Theta_{A^v,l} / Theta_{A,0}
//   * blow-up      (1/r) sum_I eps_r^(l ||I||) D_I^{-1} = Theta_{A,l} / Theta_{A^v,0}
//   * the extra rank-5 relation needed for the blow-up set at l = 1, 2
//   * the rank-6 and rank-7 Hauptmodul relation sets against tabulated data
//   * cross-rank nesting C^(rs)_{is,js}(q) = C^(r)_{ij}(q^s)
//   * Galois permutations of the horizontal constituents
//   * comparison of normalized closed forms against the reference tables

#include "vw/universal.hpp"

namespace vw {

inline UniversalSet<CSeries> promote_set(const UniversalSet<QSeries>& u) {
    UniversalSet<CSeries> v;
    v.rank = u.rank;
    v.horizontal = u.horizontal;
    v.refined = u.refined;
    for (const auto& [m, s] : u.C) v.C[m] = promote(s);
    for (const auto& [n, s] : u.parts) v.parts[n] = promote(s);
    v.branch_log = u.branch_log;
    return v;
}

template <class S>
CheckReport verify_reconstruction(const UniversalSet<S>& u, const Rat& order) {
    CheckReport rep;
    int r = u.rank;
    for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
        S prod = u.c0();
        for (int i = 1; i <= r - 1; ++i)
            for (int j = i; j <= r - 1; ++j)
                if ((mask >> (i - 1) & 1) && (mask >> (j - 1) & 1)) prod = prod * u.cij(i, j);
        if (!S::agree_to(prod, u.subset(mask), order)) {
            rep.ok = false;
            rep.detail = "C_I product reconstruction failed for mask " + std::to_string(mask);
            return rep;
        }
    }
    return rep;
}

template <class S>
CheckReport verify_symmetry(const UniversalSet<S>& u, const Rat& order) {
    CheckReport rep;
    int r = u.rank;
    for (int i = 1; i <= r - 1; ++i)
        for (int j = i; j <= r - 1; ++j) {
            if (!S::agree_to(u.cij(i, j), u.cij(r - j, r - i), order)) {
                rep.ok = false;
                rep.detail = "C_" + std::to_string(i) + std::to_string(j) + " != C_" +
                             std::to_string(r - j) + std::to_string(r - i);
                return rep;
            }
        }
    return rep;
}

// sum over subsets of eps_r^(l ||I||) C_I^(-1); shared by the subset-sum and
// blow-up checks
inline CSeries subset_phase_sum(const UniversalSet<CSeries>& u, long long ell) {
    int r = u.rank;
    CSeries acc = CSeries::zero_exact();
    for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
        auto phase = Cyclotomic::zeta(r, (ell * subset_weight(mask)) % r);
        acc = acc + u.subset(mask).recip().scaled(phase);
    }
    return acc;
}

inline CheckReport verify_subset_sum(const UniversalSet<CSeries>& u, long long ell, const Rat& order) {
    CheckReport rep;
    int m = u.rank - 1;
    auto lhs = subset_phase_sum(u, ell);
    auto rhs = theta_dual(m, ell, order + 1) * promote(theta_a(m, 0, order + 1)).recip();
    rep.ok = CSeries::agree_to(lhs.truncated(order), rhs.truncated(order), order);
    if (!rep.ok) rep.detail = "subset sum failed at l = " + std::to_string(ell);
    return rep;
}
inline CheckReport verify_subset_sum(const UniversalSet<QSeries>& u, long long ell, const Rat& order) {
    return verify_subset_sum(promote_set(u), ell, order);
}

// refined analog with (q, y) theta functions
inline CheckReport verify_subset_sum_refined(const UniversalSet<CYSeries>& u, long long ell,
                                             const Rat& order) {
    CheckReport rep;
    int r = u.rank, m = r - 1;
    CYSeries acc;
    acc.s = CYSeries::Series::zero_exact();
    acc.yg = 1;
    for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
        auto phase = Cyclotomic::zeta(r, (ell * subset_weight(mask)) % r);
        acc = acc + u.subset(mask).recip().scaled(RatFunc<Cyclotomic>(phase));
    }
    auto rhs = theta_dual_refined(m, ell, order + 1) * promote_y(theta_a_refined(m, 0, order + 1)).recip();
    rep.ok = CYSeries::agree_to(acc.truncated(order), rhs.truncated(order), order);
    if (!rep.ok) rep.detail = "refined subset sum failed at l = " + std::to_string(ell);
    return rep;
}

inline UniversalSet<CYSeries> promote_set_y(const UniversalSet<QYSeries>& u) {
    UniversalSet<CYSeries> v;
    v.rank = u.rank;
    v.horizontal = u.horizontal;
    v.refined = u.refined;
    for (const auto& [m, s] : u.C) v.C[m] = promote_y(s);
    for (const auto& [n, s] : u.parts) v.parts[n] = promote_y(s);
    return v;
}

// (1/r) sum_I eps_r^(l ||I||) D_I^(-1) = Theta_{A_{r-1},l} / Theta_{A_{r-1}^v,0}
inline CheckReport verify_blowup(const UniversalSet<CSeries>& hor, long long ell, const Rat& order) {
    CheckReport rep;
    int r = hor.rank, m = r - 1;
    auto lhs = subset_phase_sum(hor, ell).scaled_rat(Rat(1, r));
    auto rhs = promote(theta_a(m, ell, order + 1)) * theta_dual(m, 0, order + 1).recip();
    rep.ok = CSeries::agree_to(lhs.truncated(order), rhs.truncated(order), order);
    if (!rep.ok) rep.detail = "blow-up relation failed at l = " + std::to_string(ell);
    return rep;
}

// Z^(1/2)((X+Y-)^-1 + (X-Y+)^-1) + Z^(-1/2)((X+Y+)^-1 + (X-Y-)^-1) = (b1 b2)^(-1/2)
// The square roots pick up sqrt(3), so the check runs over cyclotomic scalars
// even for the vertical set.
inline CheckReport verify_rank5_extra(const UniversalSet<CSeries>& u, const Rat& order) {
    CheckReport rep;
    const auto& xp = u.parts.at("X+");
    const auto& xm = u.parts.at("X-");
    const auto& yp = u.parts.at("Y+");
    const auto& ym = u.parts.at("Y-");
    auto zh = branch_sqrt(u.parts.at("Z"));
    auto zhi = zh.recip();
    auto lhs = zh * ((xp * ym).recip() + (xm * yp).recip()) + zhi * ((xp * yp).recip() + (xm * ym).recip());
    auto rhs = branch_sqrt(u.parts.at("beta1") * u.parts.at("beta2")).recip();
    rep.ok = CSeries::agree_to(lhs.truncated(order), rhs.truncated(order), order);
    if (!rep.ok) rep.detail = "rank-5 auxiliary blow-up relation failed";
    return rep;
}
inline CheckReport verify_rank5_extra(const UniversalSet<QSeries>& u, const Rat& order) {
    return verify_rank5_extra(promote_set(u), order);
}

// ---------------------------------------------------------------------------
// rank 6 and rank 7: relation sets against tabulated expansions
// ---------------------------------------------------------------------------

// materialize the (unnormalized) C_I family of a rank from normalized tables
inline UniversalSet<QSeries> set_from_table(int rank, const std::map<std::string, QSeries>& normalized,
                                            const Rat& order) {
    UniversalSet<QSeries> u;
    u.rank = rank;
    std::map<std::pair<int, int>, QSeries> cij;
    for (int i = 1; i < rank; ++i)
        for (int j = i; j < rank; ++j) {
            int ci = i, cj = j;
            if (ci + cj > rank) {
                ci = rank - j;
                cj = rank - i;
            }
            std::string key = std::string("C") + char('0' + ci) + char('0' + cj);
            auto it = normalized.find(key);
            if (it == normalized.end()) throw std::out_of_range("missing table entry " + key);
            cij[{i, j}] = it->second.shifted(universal_lead_exp(rank, i, j))
                              .scaled_rat(universal_lead_coeff(rank, i, j));
        }
    // C_0 from Bbar: C_0 = (Theta/eta^r) q^(r/24) Bbar
    auto itb = normalized.find("B");
    if (itb == normalized.end()) throw std::out_of_range("missing table entry B");
    Rat O = order + 2;
    auto c0 = theta_a(rank - 1, 0, O) * eta(Rat(1), O).pow(rank).recip() *
              itb->second.shifted(Rat(rank, 24));
    u.C[0] = c0.truncated(order);
    for (unsigned mask = 1; mask < (1u << (rank - 1)); ++mask) {
        QSeries acc = u.C[0];
        for (int i = 1; i < rank; ++i)
            for (int j = i; j < rank; ++j)
                if ((mask >> (i - 1) & 1) && (mask >> (j - 1) & 1)) acc = acc * cij[{i, j}];
        u.C[mask] = acc.truncated(order);
    }
    for (int i = 1; i < rank; ++i)
        for (int j = i; j < rank; ++j)
            u.parts[std::string("C") + char('0' + i) + char('0' + j)] = cij[{i, j}];
    return u;
}

inline std::map<std::string, QSeries> rank6_table(const Rat& order) {
    std::map<std::string, QSeries> t;
    for (const char* n : {"B", "C11", "C22", "C33", "C12", "C13", "C14", "C15", "C23", "C24"})
        t[n] = fixture_series(6, n).truncated(order);
    return t;
}

// the sixteen rank-6 relations: mirror symmetry (true in the tables by
// construction), four subset sums, and six Hauptmodul relations in j_6
inline std::vector<std::pair<std::string, CheckReport>> verify_rank6_set(const Rat& order) {
    std::vector<std::pair<std::string, CheckReport>> out;
    auto table = rank6_table(order + 4);
    auto u = set_from_table(6, table, order + 3);
    auto pass = [&](const std::string& name, bool ok, const std::string& why = "") {
        out.push_back({name, CheckReport{ok, ok ? "" : why}});
    };
    pass("rank6 symmetry", verify_symmetry(u, order).ok, "mirror symmetry");
    for (long long ell = 0; ell <= 3; ++ell) {
        auto rep = verify_subset_sum(u, ell, order);
        pass("rank6 subset sum l=" + std::to_string(ell), rep.ok, rep.detail);
    }
    Rat O = order + 4;
    auto j6 = hauptmodul(6, O);
    auto& C = u.parts;
    auto c23 = C.at("C23");
    auto c13 = C.at("C13");
    auto c12 = C.at("C12");
    auto c14 = C.at("C14");
    auto c24 = C.at("C24");
    auto c33 = C.at("C33");
    // C24 = 4 t_{A_2,1}(q^2)
    {
        auto rhs = t_a(2, 1, order / 2 + 1).rescale_phase(Rat(2), Rat(0)).scaled_rat(Rat(4));
        pass("rank6 C24 = 4 t_{A_2,1}(q^2)", QSeries::agree_to(c24.truncated(order), rhs.truncated(order), order),
             "nesting value");
    }
    // C13^-1 C23^-1 C33^-1 = 8 eta(q^3)^6 eta(q^12)^12 / eta(q^6)^18
    {
        auto lhs = (c13 * c23 * c33).recip();
        auto rhs = eta_quotient({{Rat(3), 6}, {Rat(12), 12}, {Rat(6), -18}}, order).scaled_rat(Rat(8));
        pass("rank6 C13 C23 C33 eta-quotient", QSeries::agree_to(lhs.truncated(order), rhs, order),
             "eta quotient relation");
    }
    // C23 + C23^-1 = 2 j6 + 14
    {
        auto lhs = c23 + c23.recip();
        auto rhs = j6.scaled_rat(Rat(2)) + QSeries::constant(Rat(14));
        pass("rank6 C23 + C23^-1", QSeries::agree_to(lhs.truncated(order), rhs.truncated(order), order), "j6 relation");
    }
    // C12 C14 + (C12 C14)^-1 = (50 j6^3 + 1206 j6^2 + 9504 j6 + 24192) / (27 (j6+8)^2)
    {
        auto p = c12 * c14;
        auto lhs = p + p.recip();
        auto num = j6.pow(3).scaled_rat(Rat(50)) + j6.pow(2).scaled_rat(Rat(1206)) +
                   j6.scaled_rat(Rat(9504)) + QSeries::constant(Rat(24192));
        auto den = (j6 + QSeries::constant(Rat(8))).pow(2).scaled_rat(Rat(27));
        auto rhs = num * den.recip();
        pass("rank6 C12 C14 rational relation",
             QSeries::agree_to(lhs.truncated(order), rhs.truncated(order), order), "j6 relation");
    }
    // C12 C14^-1 C24 = 2 j6 + 16
    {
        auto lhs = c12 * c14.recip() * c24;
        auto rhs = j6.scaled_rat(Rat(2)) + QSeries::constant(Rat(16));
        pass("rank6 C12 C14^-1 C24", QSeries::agree_to(lhs.truncated(order), rhs.truncated(order), order),
             "j6 relation");
    }
    // C13 + C13^-1 = (5 j6^2 + 84 j6 + 360) / (4 (j6+9)^(3/2))
    {
        auto lhs = c13 + c13.recip();
        auto num = j6.pow(2).scaled_rat(Rat(5)) + j6.scaled_rat(Rat(84)) + QSeries::constant(Rat(360));
        auto root = branch_sqrt(j6 + QSeries::constant(Rat(9)));
        auto rhs = num * root.pow(3).scaled_rat(Rat(4)).recip();
        pass("rank6 C13 + C13^-1 (three-halves power)",
             QSeries::agree_to(lhs.truncated(order), rhs.truncated(order), order), "j6 relation");
    }
    return out;
}

// Rank 7: same engine, but no expansion data ships with the library (the
// sources provide none).  Supply the normalized table (B, C11..C36) from an
// external file to run it.
inline std::vector<std::pair<std::string, CheckReport>> verify_rank7_set(
    const std::map<std::string, QSeries>& table, const Rat& order) {
    std::vector<std::pair<std::string, CheckReport>> out;
    if (table.empty()) {
        out.push_back({"rank7 relation set",
                       CheckReport{false,
                                   "no rank-7 expansion data available: the reference tables stop at rank 6; "
                                   "supply external data to run this suite"}});
        return out;
    }
    auto u = set_from_table(7, table, order + 3);
    auto pass = [&](const std::string& name, const CheckReport& rep) { out.push_back({name, rep}); };
    pass("rank7 symmetry", verify_symmetry(u, order));
    for (long long ell = 0; ell <= 3; ++ell)
        pass("rank7 subset sum l=" + std::to_string(ell), verify_subset_sum(u, ell, order));
    Rat O = order + 4;
    auto j7 = hauptmodul(7, O);
    auto poly = [&](std::initializer_list<Rat> coeffs) {  // c0 + c1 j7 + c2 j7^2 + ...
        QSeries acc = QSeries::zero_exact();
        long long k = 0;
        for (const Rat& c : coeffs) acc = acc + j7.pow(k++).scaled_rat(c);
        return acc;
    };
    {
        auto lhs = u.subset(subset_mask({1, 2, 4}));
        auto rhs = poly({Rat(49), Rat(8)}).pow(2) * poly({Rat(343), Rat(49), Rat(1)});
        rhs = rhs.scaled_rat(Rat(1, 117649));  // 7^6
        CheckReport rep;
        rep.ok = QSeries::agree_to(lhs.truncated(order), rhs.truncated(order), order);
        pass("rank7 C_{124} Hauptmodul value", rep);
    }
    {
        auto lhs = u.parts.at("C16") * u.parts.at("C25") * u.parts.at("C34");
        auto rhs = poly({Rat(64), Rat(192, 7), Rat(960, 343)});
        CheckReport rep;
        rep.ok = QSeries::agree_to(lhs.truncated(order), rhs.truncated(order), order);
        pass("rank7 C16 C25 C34", rep);
    }
    {
        auto lhs = u.parts.at("C12") * u.parts.at("C13").recip() * u.parts.at("C14") *
                   u.parts.at("C23").recip() * u.parts.at("C15").recip() * u.parts.at("C24");
        auto cube = poly({Rat(49), Rat(8)}).pow(3);
        auto rhs = cube * (cube + j7.pow(3).scaled_rat(Rat(28))).recip();
        CheckReport rep;
        rep.ok = QSeries::agree_to(lhs.truncated(order), rhs.truncated(order), order);
        pass("rank7 six-factor relation", rep);
    }
    return out;
}

// C^(6)_{24}(q) = C^(3)_{12}(q^2), checked on normalized tables and against
// the built rank-3 set
inline CheckReport verify_nesting_6_3(const Rat& order) {
    CheckReport rep;
    auto c24 = fixture_series(6, "C24");
    auto built3 = build_vertical(3, order / 2 + 1);
    auto c12n = normalize_universal(built3, 1, 2);
    auto sub = c12n.rescale_phase(Rat(2), Rat(0));
    rep.ok = QSeries::agree_to(c24.truncated(order), sub.truncated(order), order) &&
             QSeries::agree_to(fixture_series(3, "C12").rescale_phase(Rat(2), Rat(0)).truncated(order),
                               c24.truncated(order), order);
    if (!rep.ok) rep.detail = "nesting C24^(6)(q) != C12^(3)(q^2)";
    return rep;
}

// ---------------------------------------------------------------------------
// fixtures and Galois checks
// ---------------------------------------------------------------------------

struct FixtureComparison {
    std::string name;
    bool ok;
    Rat checked_order;
};

// normalized closed forms against the reference tables (vertical, r = 2..5)
inline std::vector<FixtureComparison> compare_fixtures(int r, std::optional<Rat> up_to = std::nullopt) {
    Rat ford = fixture_order(r);
    Rat order = up_to ? std::min(*up_to, ford) : ford;
    auto u = build_vertical(r, order + 1);
    std::vector<FixtureComparison> out;
    auto push = [&](const std::string& name, const QSeries& lhs, const QSeries& rhs) {
        out.push_back({name, QSeries::agree_to(lhs.truncated(order), rhs.truncated(order), order), order});
    };
    push("A", normalized_a(r, order), fixture_series(r, "A").truncated(order));
    push("B", normalized_b(u, order), fixture_series(r, "B").truncated(order));
    for (int i = 1; i < r; ++i)
        for (int j = i; j < r; ++j) {
            if (i + j > r) continue;  // mirror of a stored row
            std::string nm = std::string("C") + char('0' + i) + char('0' + j);
            push(nm, normalize_universal(u, i, j), fixture_series(r, nm).truncated(order));
        }
    return out;
}

inline CSeries galois_series(const CSeries& s, long long k) { return galois(s, k); }

// sigma / tau generator actions on the horizontal constituents
inline std::vector<std::pair<std::string, bool>> galois_permutation_checks(int r, const Rat& order) {
    auto u = build_horizontal(r, order);
    std::vector<std::pair<std::string, bool>> out;
    auto eq = [&](const CSeries& a, const CSeries& b) { return CSeries::agree_to(a, b, order); };
    if (r == 3) {
        // sigma: sqrt3 -> -sqrt3 fixing i (k = 5 mod 12); tau: conjugation (k = 11)
        out.push_back({"sigma swaps X+ and X-", eq(galois_series(u.parts.at("X+"), 5), u.parts.at("X-"))});
        out.push_back({"sigma swaps X- and X+", eq(galois_series(u.parts.at("X-"), 5), u.parts.at("X+"))});
        out.push_back({"tau fixes X+", eq(galois_series(u.parts.at("X+"), 11), u.parts.at("X+"))});
    } else if (r == 4) {
        // sigma: sqrt2 -> -sqrt2 fixing i (k = 5 mod 8); tau: conjugation (k = 7)
        out.push_back({"sigma maps Z to 1/Z", eq(galois_series(u.parts.at("Z"), 5), u.parts.at("Zinv"))});
        out.push_back({"tau fixes Z", eq(galois_series(u.parts.at("Z"), 7), u.parts.at("Z"))});
    } else if (r == 5) {
        // sigma: e5 -> e5^2 fixing i (k = 17 mod 20); tau: conjugation (k = 11)
        out.push_back({"sigma X+ -> Y-", eq(galois_series(u.parts.at("X+"), 17), u.parts.at("Y-"))});
        out.push_back({"sigma X- -> Y+", eq(galois_series(u.parts.at("X-"), 17), u.parts.at("Y+"))});
        out.push_back({"sigma Y+ -> X+", eq(galois_series(u.parts.at("Y+"), 17), u.parts.at("X+"))});
        out.push_back({"sigma Y- -> X-", eq(galois_series(u.parts.at("Y-"), 17), u.parts.at("X-"))});
        out.push_back({"sigma Z -> 1/Z", eq(galois_series(u.parts.at("Z"), 17), u.parts.at("Zinv"))});
        out.push_back({"tau X+ -> X-", eq(galois_series(u.parts.at("X+"), 11), u.parts.at("X-"))});
        out.push_back({"tau Y+ -> Y-", eq(galois_series(u.parts.at("Y+"), 11), u.parts.at("Y-"))});
        out.push_back({"tau fixes Z", eq(galois_series(u.parts.at("Z"), 11), u.parts.at("Z"))});
    }
    return out;
}

}  // namespace vw
