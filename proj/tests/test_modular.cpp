#include <catch2/catch_amalgamated.hpp>

#include "vw/modular.hpp"

using namespace vw;

TEST_CASE("eta expansions") {
    auto e = eta(Rat(1), Rat(4));
    CHECK(e.valuation() == Rat(1, 24));
    CHECK(e.coeff(Rat(1) + Rat(1, 24)) == -1);
    CHECK(e.coeff(Rat(2) + Rat(1, 24)) == -1);
    CHECK(e.coeff(Rat(3) + Rat(1, 24)) == 0);
    CHECK(eta(Rat(2), Rat(2)).valuation() == Rat(1, 12));
    // Delta / q = 1 - 24q + 252q^2 - 1472q^3
    auto d = delta(Rat(1), Rat(5)).shifted(Rat(-1));
    CHECK(d.coeff(Rat(0)) == 1);
    CHECK(d.coeff(Rat(1)) == -24);
    CHECK(d.coeff(Rat(2)) == 252);
    CHECK(d.coeff(Rat(3)) == -1472);
}

TEST_CASE("pentagonal sum agrees with raw product to order 50") {
    CHECK(QSeries::agree_to(eta_bar(Rat(1), Rat(50)), eta_bar_by_product(Rat(1), Rat(50)), Rat(50)));
}

TEST_CASE("theta series of small A lattices") {
    auto t10 = theta_a(1, 0, Rat(12));
    CHECK(t10.coeff(Rat(0)) == 1);
    CHECK(t10.coeff(Rat(1)) == 2);
    CHECK(t10.coeff(Rat(4)) == 2);
    CHECK(t10.coeff(Rat(9)) == 2);
    CHECK(t10.coeff(Rat(2)) == 0);
    auto t11 = theta_a(1, 1, Rat(12));  // 2q^(1/4)(1 + q^2 + q^6 + ...)
    CHECK(t11.valuation() == Rat(1, 4));
    CHECK(t11.coeff(Rat(1, 4)) == 2);
    CHECK(t11.coeff(Rat(9, 4)) == 2);
    CHECK(t11.coeff(Rat(25, 4)) == 2);
    auto t20 = theta_a(2, 0, Rat(8));
    CHECK(t20.coeff(Rat(0)) == 1);
    CHECK(t20.coeff(Rat(1)) == 6);
    CHECK(t20.coeff(Rat(3)) == 6);
    CHECK(t20.coeff(Rat(4)) == 6);
    CHECK(t20.coeff(Rat(7)) == 12);
    CHECK(t20.coeff(Rat(2)) == 0);
}

TEST_CASE("theta shift and negation symmetry") {
    for (int m : {1, 2, 3}) {
        for (long long l : {1LL, 2LL}) {
            auto a = theta_a(m, l, Rat(6));
            CHECK(a == theta_a(m, -l, Rat(6)));
            CHECK(a == theta_a(m, l + m + 1, Rat(6)));
        }
        // unrefined coefficients count lattice vectors: nonnegative integers
        auto th = theta_a(m, 1, Rat(6));
        for (const auto& [e, c] : th.terms()) {
            CHECK(c > 0);
            CHECK(is_integer(c));
        }
    }
}

TEST_CASE("t ratios") {
    auto t = t_a(1, 1, Rat(3));
    CHECK(t.valuation() == Rat(-1, 4));
    CHECK(t.leading_coeff() == Rat(1, 2));
    auto t2 = t_a(2, 1, Rat(3));
    CHECK(t2.valuation() == Rat(-1, 3));
    CHECK(t2.leading_coeff() == Rat(1, 3));
    CHECK(t_a(3, 0, Rat(3)) == QSeries::one().truncated(Rat(3)));
}

TEST_CASE("keysum and shifted theta identities") {
    for (int m : {1, 2, 3}) CHECK(theta_keysum_check(m, Rat(8)).ok);
    CHECK(theta_shift_check(1, 0, 0, Rat(8)).ok);  // k = 0 reduces to keysum
    CHECK(theta_shift_check(2, 1, 1, Rat(6)).ok);
    CHECK(theta_shift_check(3, 2, 1, Rat(5)).ok);
    CHECK(theta_keysum_check(1, Rat(6), /*refined=*/true).ok);
    CHECK(theta_keysum_check(2, Rat(5), /*refined=*/true).ok);
    CHECK(theta_shift_check(2, 1, 1, Rat(4), /*refined=*/true).ok);
}

TEST_CASE("continued fractions") {
    auto u = octic_u(Rat(2));
    CHECK(u.valuation() == Rat(1, 8));
    CHECK(u.leading_coeff() == Cyclotomic::sqrt2());
    auto r = rogers_r(Rat(5) + Rat(1, 5));
    CHECK(r.valuation() == Rat(1, 5));
    CHECK(r.coeff(Rat(1, 5)) == 1);
    CHECK(r.coeff(Rat(1) + Rat(1, 5)) == -1);
    CHECK(r.coeff(Rat(2) + Rat(1, 5)) == 1);
    CHECK(r.coeff(Rat(3) + Rat(1, 5)) == 0);
    CHECK(r.coeff(Rat(4) + Rat(1, 5)) == -1);
    auto c = cubic_c(Rat(3));
    CHECK(c.valuation() == Rat(1, 3));
    CHECK(c.leading_coeff() == 1);
    // s(q) starts at the golden-ratio constant 1/phi = phi - 1
    auto s = rogers_s(Rat(2));
    CHECK(s.coeff(Rat(0)) == Cyclotomic::golden_ratio() - Cyclotomic::one());
}

TEST_CASE("octic fraction and Hauptmodul identities") {
    Rat O(15);
    auto u2 = octic_u_squared(O + 3);
    // u^-2 = t_{A_1,1}
    CHECK(QSeries::agree_to(u2.pow(-1), t_a(1, 1, O), O));
    // 16 u^-8 - 16 = j_4
    auto lhs = u2.pow(-4).scaled_rat(Rat(16)) - QSeries::constant(Rat(16));
    CHECK(QSeries::agree_to(lhs, hauptmodul(4, O), O));
    CHECK(hauptmodul(4, Rat(2)).valuation() == Rat(-1));
    // c identities
    auto c = cubic_c(O + 2);
    CHECK(QSeries::agree_to(c.pow(-1) + (c * c).scaled_rat(Rat(4)), t_a(2, 1, O).scaled_rat(Rat(3)), O));
    auto j3lhs = c.pow(-3) - QSeries::constant(Rat(15)) + c.pow(3).scaled_rat(Rat(48)) +
                 c.pow(6).scaled_rat(Rat(64));
    CHECK(QSeries::agree_to(j3lhs, hauptmodul(3, O), O));
    // r^-5 - 11 - r^5 = j_5
    auto r = rogers_r(O + 2);
    auto j5lhs = r.pow(-5) - QSeries::constant(Rat(11)) - r.pow(5);
    CHECK(QSeries::agree_to(j5lhs, hauptmodul(5, O), O));
}

TEST_CASE("weak Jacobi form phi_{-2,1}") {
    auto phi = phi_weak_jacobi(Rat(1), Rat(1), Rat(5));
    // q^0 coefficient is y - 2 + 1/y
    auto c0 = phi.s.coeff(Rat(0));
    auto expect = RatFunc<Rat>::monomial(Rat(1), 2) + RatFunc<Rat>::monomial(Rat(1), -2) -
                  RatFunc<Rat>::monomial(Rat(2), 0);
    CHECK(c0 == expect);
    // y -> 1 kills it; y <-> 1/y fixes it
    CHECK(phi.y_one().is_zero());
    CHECK(QYSeries::agree_to(phi, phi.y_inverted(), Rat(5)));
}

TEST_CASE("J(q,y) basics") {
    Rat O(8);
    auto J = j_octic(O);
    auto u2 = octic_u_squared(Rat(2) * O).rescale_phase(Rat(2), Rat(0));  // u(q^2)^2
    auto u4 = (u2 * u2).truncated(O);
    CHECK(QSeries::agree_to(J.y_one(), u4, O));
    CHECK(QYSeries::agree_to(J, J.y_inverted(), O));
    CHECK(J.s.valuation() == Rat(1));
    auto Js = j_octic_sqrt(O);
    CHECK(QYSeries::agree_to(Js * Js, J, O));
    // dual J at y = 1 is v^4
    auto Jd = j_octic_dual(Rat(2));
    auto v = octic_v(Rat(2));
    CHECK(QSeries::agree_to(Jd.y_one(), (v * v * v * v).truncated(Rat(2)), Rat(2)));
}

TEST_CASE("refined thetas specialize and symmetrize") {
    for (int m : {1, 2, 3}) {
        auto ref = theta_a_refined(m, 1, Rat(5));
        CHECK(QSeries::agree_to(ref.y_one(), theta_a(m, 1, Rat(5)), Rat(5)));
        CHECK(QYSeries::agree_to(ref, ref.y_inverted(), Rat(5)));
    }
    auto dref = theta_dual_refined(2, 1, Rat(4));
    auto dun = theta_dual(2, 1, Rat(4));
    CHECK(CSeries::agree_to(dref.y_one(), dun, Rat(4)));
    CHECK(CYSeries::agree_to(dref, dref.y_inverted(), Rat(4)));
}
