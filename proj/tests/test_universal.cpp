#include <catch2/catch_amalgamated.hpp>

#include "vw/universal_checks.hpp"

using namespace vw;

TEST_CASE("rank 2 vertical set") {
    auto u = build_vertical(2, Rat(8));
    CHECK(QSeries::agree_to(u.c0(), QSeries::one(), Rat(8)));
    CHECK(QSeries::agree_to(u.subset(1), t_a(1, 1, Rat(8)), Rat(8)));
    CHECK(verify_reconstruction(u, Rat(8)).ok);
    // normalization against the leading-term table: C11 lead (1/2) q^(-1/4)
    auto c11 = u.cij(1, 1);
    CHECK(c11.valuation() == Rat(-1, 4));
    CHECK(c11.leading_coeff() == Rat(1, 2));
    auto norm = normalize_universal(u, 1, 1);
    CHECK(norm.coeff(Rat(0)) == 1);
    CHECK(norm.coeff(Rat(1)) == 2);
    CHECK(norm.coeff(Rat(2)) == -1);
}

TEST_CASE("rank 3 vertical: Vieta and dominant balance") {
    auto u = build_vertical(3, Rat(6));
    auto t = u.parts.at("t1");
    const auto& xp = u.parts.at("X+");
    const auto& xm = u.parts.at("X-");
    CHECK(xp.valuation() == Rat(-2, 3));
    CHECK(xp.leading_coeff() == Rat(4, 9));
    CHECK(xm.valuation() == Rat(1, 3));
    CHECK(xm.leading_coeff() == Rat(3));
    // Vieta: X+ + X- = 4t^2, X+ X- = 4t
    CHECK(QSeries::agree_to(xp + xm, (t * t).scaled_rat(Rat(4)), Rat(5)));
    CHECK(QSeries::agree_to(xp * xm, t.scaled_rat(Rat(4)), Rat(5)));
    // C12 = C_{12} C_0 / (C_1 C_2) = X+ X- / (t * t) * t ... = 4 t by Vieta
    CHECK(QSeries::agree_to(u.cij(1, 2), t.scaled_rat(Rat(4)), Rat(5)));
    CHECK(verify_reconstruction(u, Rat(6)).ok);
    CHECK(verify_symmetry(u, Rat(6)).ok);
}

TEST_CASE("fixture comparison ranks 2 and 3") {
    for (auto& cmp : compare_fixtures(2)) {
        INFO("rank 2 series " << cmp.name);
        CHECK(cmp.ok);
    }
    for (auto& cmp : compare_fixtures(3)) {
        INFO("rank 3 series " << cmp.name);
        CHECK(cmp.ok);
    }
}

TEST_CASE("subset sums, ranks 2 and 3") {
    for (int r : {2, 3}) {
        auto u = build_vertical(r, Rat(9));
        for (long long ell = 0; ell <= r / 2; ++ell) {
            INFO("r = " << r << ", l = " << ell);
            CHECK(verify_subset_sum(u, ell, Rat(8)).ok);
        }
    }
}

TEST_CASE("horizontal sets and blow-up relations, ranks 2 and 3") {
    for (int r : {2, 3}) {
        auto h = build_horizontal(r, Rat(7));
        CHECK(verify_reconstruction(h, Rat(7)).ok);
        for (long long ell = 0; ell <= r / 2; ++ell) {
            INFO("r = " << r << ", l = " << ell);
            CHECK(verify_blowup(h, ell, Rat(6)).ok);
        }
    }
}

TEST_CASE("horizontal rank 3 constants and Galois") {
    auto h = build_horizontal(3, Rat(4));
    // Donaldson constants: D_0(0) = 2, D_11(0) = 1/2, D_12(0) = 4
    CHECK(h.c0().coeff(Rat(0)) == Cyclotomic(Rat(2)));
    CHECK(h.cij(1, 1).coeff(Rat(0)) == Cyclotomic(Rat(1, 2)));
    CHECK(h.cij(1, 2).coeff(Rat(0)) == Cyclotomic(Rat(4)));
    for (auto& [name, ok] : galois_permutation_checks(3, Rat(3))) {
        INFO(name);
        CHECK(ok);
    }
}

TEST_CASE("refined sets reduce at y = 1 and are y-symmetric") {
    for (int r : {2, 3}) {
        auto ref = build_vertical_refined(r, Rat(4));
        auto un = build_vertical(r, Rat(4));
        for (const auto& [mask, s] : ref.C) {
            INFO("rank " << r << " mask " << mask);
            CHECK(QSeries::agree_to(s.y_one(), un.subset(mask), Rat(4)));
            CHECK(QYSeries::agree_to(s, s.y_inverted(), Rat(4)));
        }
        CHECK(verify_reconstruction(ref, Rat(4)).ok);
    }
}

TEST_CASE("rank 6 nesting against rank 3") { CHECK(verify_nesting_6_3(Rat(10)).ok); }
