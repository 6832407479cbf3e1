#include <catch2/catch_amalgamated.hpp>

#include "vw/surface.hpp"

using namespace vw;

namespace {
std::vector<long long> c1_with_kc1(long long n) { return {0, n}; }  // in the minimal_general_type lattice
}

TEST_CASE("surface validation") {
    auto s = minimal_general_type(3, 9);
    auto rep = surface_validate(s);
    CHECK(rep.ok());
    CHECK(s.k_squared() == 9);
    // listing beta without K - beta is an error
    SurfaceSpec bad = s;
    bad.basic.pop_back();
    CHECK(!surface_validate(bad).ok());
    // K = 0, chi even: basic {0} is self-dual
    CHECK(surface_validate(k3_type()).ok());
}

TEST_CASE("phi for rank 2 and 3 on minimal general type") {
    auto s = minimal_general_type(3, 2);
    auto C2 = build_vertical(2, Rat(6));
    // c1 = 0: only the beta = 0 term survives (K is not 2-divisible here)
    auto phi0 = phi_series(C2, s, {0, 0});
    CHECK(QSeries::agree_to(phi0, QSeries::one(), Rat(5)));
    // c1 = K: (-1)^chi t_{A_1,1}^(K^2)
    auto phiK = phi_series(C2, s, s.K);
    auto expect = t_a(1, 1, Rat(8)).pow(s.k_squared()).scaled_rat(Rat(-1));
    CHECK(QSeries::agree_to(phiK, expect, Rat(4)));
    // rank 3, c1 not congruent to 0, +-K mod 3: empty sum
    auto C3 = build_vertical(3, Rat(6));
    auto phi3 = phi_series(C3, s, {0, 1});
    CHECK(phi3.is_zero());
    // delta filter is invariant under c1 -> c1 + 3 gamma
    auto phi3b = phi_series(C3, s, {3, 1});
    CHECK(phi3b.is_zero());
    auto phi30 = phi_series(C3, s, {0, 0});
    auto phi33 = phi_series(C3, s, {3, 0});
    CHECK(QSeries::agree_to(phi30, phi33, Rat(4)));
}

TEST_CASE("psi for rank 2 and prefactor normalization identity") {
    auto s = minimal_general_type(3, 2);
    auto D2 = build_horizontal(2, Rat(8));
    for (long long kc1 : {0LL, 1LL}) {
        auto psi = psi_series(D2, s, c1_with_kc1(kc1), Rat(5), false);
        auto tdual = t_dual(1, 1, Rat(8));
        Rat sgn = ((s.chi + kc1) % 2 == 0) ? Rat(1) : Rat(-1);
        auto expect = CSeries::one() + tdual.pow(s.k_squared()).scaled_rat(sgn);
        CHECK(CSeries::agree_to(psi.series, expect.truncated(Rat(5)), Rat(5)));
    }
    // q^offset (normalized prefactors) = unnormalized prefactors
    int r = 2;
    Rat O(4);
    auto lhs = (promote(eta_bar(Rat(1, r), O + 2).pow(-12 * s.chi)) *
                (promote(eta_bar(Rat(1), O + 2).pow(r)) * theta_dual(r - 1, 0, O + 2).recip())
                    .pow(s.k_squared()))
                   .shifted(Rat(-s.chi, 2 * r) + Rat((long long)r * s.k_squared(), 24));
    auto rhs = promote(eta(Rat(1, r), O + 2).pow(-12 * s.chi)) *
               (promote(eta(Rat(1), O + 2).pow(r)) * theta_dual(r - 1, 0, O + 2).recip()).pow(s.k_squared());
    CHECK(CSeries::agree_to(lhs, rhs, O));
    // psi unchanged under c1 -> c1 + r gamma
    auto p1 = psi_series(D2, s, {0, 1}, Rat(4), false);
    auto p2 = psi_series(D2, s, {2, 1}, Rat(4), false);
    CHECK(CSeries::agree_to(p1.series, p2.series, Rat(4)));
}

TEST_CASE("vertical assembly on a K-trivial spec") {
    // chi = 2, K^2 = 0, basic {0}: Z^(1 2) = Delta(q^2)^(-1) / 4
    auto s = k3_type();
    auto C2 = build_vertical(2, Rat(4));
    auto z = z_vertical(C2, s, {0}, Rat(3));
    auto expect = promote(delta(Rat(2), Rat(5) + 2).pow(-1).scaled_rat(Rat(1, 4)));
    CHECK(CSeries::agree_to(z.series, expect.truncated(Rat(3)), Rat(3)));
    CHECK(z.series.coeff(Rat(-2)) == Cyclotomic(Rat(1, 4)));
    // grading: exponents of Z^(1^r) lie on the lattice predicted by the
    // virtual dimension: 2r(e + r chi/2 - r K^2/24) must be integral
    auto s2 = minimal_general_type(3, 2);
    auto z2 = z_vertical(C2, s2, {0, 0}, Rat(3));
    for (const auto& [e, c] : z2.series.terms()) {
        Rat v = 4 * (e + Rat(2 * 3, 2) - Rat(2 * 2, 24));
        CHECK(is_integer(v));
    }
}

TEST_CASE("horizontal average and the root-of-unity filter") {
    auto s = k3_type();
    auto D2 = build_horizontal(2, Rat(6));
    auto z = z_horizontal(D2, s, {0}, Rat(2));
    // support lies on half-integer exponents >= -1/2
    for (const auto& [e, c] : z.series.terms()) {
        CHECK(is_integer(e * 2));
        CHECK(e >= Rat(-1, 2));
    }
    // the filter on a single monomial q^(n/2r): retained iff
    // n + (r-1)c1^2 + (r^2-1)chi = 0 mod r
    for (int r : {2, 3, 5}) {
        for (long long n = 0; n < 2 * r; ++n) {
            long long w = ((r * r - 1) * 7) % r;  // some chi = 7, c1^2 = 0
            CSeries mono = CSeries::monomial(Cyclotomic::one(), Rat(n, 2 * r), Rat(3));
            CSeries acc = CSeries::zero_to(Rat(3), 2 * r);
            for (long long k = 0; k < r; ++k)
                acc = acc + mono.rescale_phase(Rat(1), Rat(2 * k))
                                .scaled(Cyclotomic::zeta(r, (k * w) % r));
            bool kept = !acc.is_zero();
            CHECK(kept == ((n + w) % r == 0));
        }
    }
}

TEST_CASE("full assembly ranks and errors") {
    auto s = minimal_general_type(3, 1);
    auto z = z_full(2, s, {0, 0}, Rat(2));
    CHECK(!z.series.is_zero());
    CHECK_THROWS(z_full(4, s, {0, 0}, Rat(2)));
    CHECK_THROWS(z_full(6, s, {0, 0}, Rat(2)));
}

TEST_CASE("Euler characteristic predictions on the K-trivial spec") {
    // the prediction series equals Delta(q^(1/r))^(-1), whose coefficients
    // 1, 24, 324, 3200, ... sit at the virtual-dimension steps of 1/r
    std::vector<Rat> expect = {Rat(1), Rat(24), Rat(324), Rat(3200)};
    for (int r : {2, 3}) {
        auto D = build_horizontal(r, Rat(4));
        auto s = k3_type();
        auto full = evir_series(D, s, {0}, Rat(2));
        for (size_t n = 0; n < 4; ++n) {
            Rat e = Rat((long long)n - 1, r);
            CHECK(full.coeff(e) == Cyclotomic(expect[n]));
        }
        auto dinv = promote(delta(Rat(1, r), Rat(2) + 2 * r).pow(-1));
        CHECK(CSeries::agree_to(full, dinv.truncated(Rat(2)), Rat(2)));
        // integer-c2 extraction picks out the same coefficients
        auto preds = evir_predictions(D, s, std::vector<long long>{0}, r, r + 1);
        for (auto& p : preds) {
            CHECK(p.rational);
            CHECK(p.integral);
        }
    }
}

TEST_CASE("Donaldson leading terms") {
    // r = 2, K c1 odd: 2^(2 - chi + K^2) (1 + (-1)^(chi+1))
    for (long long chi : {2LL, 3LL}) {
        auto s = minimal_general_type(chi, 2);
        auto v = donaldson_closed_form(2, s, c1_with_kc1(1));
        Rat expect = rat_pow(Rat(2), 2 - chi + s.k_squared()) * (1 + ((chi + 1) % 2 == 0 ? 1 : -1));
        CHECK(v == Cyclotomic(expect));
    }
    // closed forms match the constants route for ranks 2..5
    for (int r : {2, 3, 4, 5}) {
        auto D = build_horizontal(r, Rat(2));
        for (long long kc1 : {0LL, 1LL}) {
            auto s = minimal_general_type(3, 2);
            auto a = donaldson_from_constants(D, s, c1_with_kc1(kc1));
            auto b = donaldson_closed_form(r, s, c1_with_kc1(kc1));
            INFO("r = " << r << " kc1 = " << kc1);
            CHECK(a == b);
        }
    }
}

TEST_CASE("flux sums") {
    // first identity, r = 3, b2 = 2
    std::vector<std::vector<long long>> id2 = {{1, 0}, {0, 1}};
    CHECK(flux_sum_plain_brute(3, id2, {0, 0}) == Cyclotomic(Rat(9)));
    CHECK(flux_sum_plain_brute(3, id2, {1, 0}) == Cyclotomic::zero());
    CHECK(flux_sum_plain_closed(3, 2, id2, {0, 0}) == Cyclotomic(Rat(9)));
    CHECK(flux_sum_plain_closed(3, 2, id2, {1, 0}) == Cyclotomic::zero());
    // second identity: brute force equals closed form over several setups
    for (long long r : {3LL, 5LL}) {
        for (int b2 = 1; b2 <= 3; ++b2) {
            for (int neg = 0; neg <= b2; ++neg) {
                std::vector<std::vector<long long>> gram(b2, std::vector<long long>(b2, 0));
                for (int i = 0; i < b2; ++i) gram[i][i] = i < neg ? -1 : 1;
                long long sigma = b2 - 2 * neg;
                for (long long m = 1; m < r; ++m) {
                    std::vector<long long> c(b2, 0);
                    for (int i = 0; i < b2; ++i) c[i] = (i * 2 + m) % r;
                    long long csq = 0;
                    for (int i = 0; i < b2; ++i) csq += gram[i][i] * c[i] * c[i];
                    auto bf = flux_sum_quadratic_brute(r, m, gram, c);
                    auto cf = flux_sum_quadratic_closed(r, m, b2, sigma, csq);
                    INFO("r=" << r << " b2=" << b2 << " neg=" << neg << " m=" << m);
                    CHECK(bf == cf);
                }
            }
        }
    }
}

TEST_CASE("rank-5 polynomial identities") {
    auto oks = rank5_polynomial_identities();
    REQUIRE(oks.size() == 4);
    for (bool ok : oks) CHECK(ok);
    CHECK(rank5_identities_galois_consistent());
}

TEST_CASE("psi rationality for rank 3") {
    auto s = minimal_general_type(3, 2);
    auto D = build_horizontal(3, Rat(4));
    for (long long kc1 : {0LL, 1LL, 2LL}) {
        auto psi = psi_series(D, s, c1_with_kc1(kc1), Rat(3), false);
        INFO("kc1 = " << kc1);
        CHECK(all_rational(psi.series));
    }
}

TEST_CASE("blow-up of psi at surface level, rank 2") {
    auto s = minimal_general_type(3, 3);
    auto st = blow_up(s);
    CHECK(surface_validate(st).ok());
    Rat O(4);
    auto D = build_horizontal(2, O + 2);
    for (long long ell : {0LL, 1LL}) {
        auto lhs = psi_series(D, st, with_exceptional({0, 1}, ell), O, true);
        auto factor = promote(theta_a(1, ell, O + 2)) * promote(eta_bar(Rat(1), O + 2).pow(2)).recip();
        auto rhs = factor * psi_series(D, s, {0, 1}, O + 1, true).series;
        INFO("ell = " << ell);
        CHECK(CSeries::agree_to(lhs.series, rhs.truncated(O), O));
    }
}

TEST_CASE("refined vertical assembly reduces at y = 1") {
    auto s = minimal_general_type(3, 1);
    Rat O(3);
    auto Cref = build_vertical_refined(2, O + 2);
    auto Cun = build_vertical(2, O + 2);
    auto zr = refined_z_vertical(Cref, s, {0, 0}, O);
    auto zu = z_vertical(Cun, s, {0, 0}, O);
    CHECK(QSeries::agree_to(zr.y_one(), demote(zu.series), O));
    CHECK(QYSeries::agree_to(zr, zr.y_inverted(), O));
    // rank-5 refinement does not exist
    CHECK_THROWS(build_vertical_refined(5, Rat(3)));
}
