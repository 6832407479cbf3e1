#include <catch2/catch_amalgamated.hpp>

#include "vw/puiseux.hpp"

#include <random>

using namespace vw;

namespace {
QSeries q_mono(long long c, const Rat& e) { return QSeries::monomial(Rat(c), e); }

QSeries random_series(std::mt19937& rng, long long grid, const Rat& order) {
    std::uniform_int_distribution<int> coef(-4, 4);
    QSeries s = QSeries::zero_to(order, grid);
    Rat e(-2, 1);
    while (e < order) {
        int c = coef(rng);
        if (c != 0) s = s + QSeries::monomial(Rat(c), e, order);
        e += Rat(1, grid);
    }
    return s;
}
}  // namespace

TEST_CASE("polynomial identities") {
    auto one = QSeries::one();
    auto q = q_mono(1, Rat(1));
    CHECK((one + q) * (one - q) == one - q * q);
    CHECK((one + q).pow(3) == one + q.scaled_rat(Rat(3)) + (q * q).scaled_rat(Rat(3)) + q * q * q);
}

TEST_CASE("geometric series inversion") {
    auto one = QSeries::one();
    auto q = q_mono(1, Rat(1));
    auto inv = (one - q).recip(Rat(3));
    CHECK(inv.coeff(Rat(0)) == 1);
    CHECK(inv.coeff(Rat(1)) == 1);
    CHECK(inv.coeff(Rat(2)) == 1);
    CHECK(inv.order().value() == Rat(3));
    CHECK_THROWS(inv.coeff(Rat(3)));
}

TEST_CASE("negative powers with fractional valuation") {
    // (q^(1/4)(1+q))^(-2) = q^(-1/2)(1 - 2q + 3q^2 - ...)
    auto s = (q_mono(1, Rat(1, 4)) + q_mono(1, Rat(5, 4))).truncated(Rat(5));
    auto p = s.pow(-2);
    CHECK(p.valuation() == Rat(-1, 2));
    CHECK(p.coeff(Rat(-1, 2)) == 1);
    CHECK(p.coeff(Rat(1, 2)) == -2);
    CHECK(p.coeff(Rat(3, 2)) == 3);
}

TEST_CASE("square roots") {
    auto one = QSeries::one();
    auto q = q_mono(1, Rat(1));
    auto s = one - q.scaled_rat(Rat(2)) + q * q;  // (1-q)^2
    CHECK(s.sqrt(Rat(1), Rat(6)) == (one - q).truncated(Rat(6)));
    // sqrt(q^(1/2)(1+q)) = q^(1/4)(1 + q/2 - q^2/8 + ...)
    auto t = (q_mono(1, Rat(1, 2)) + q_mono(1, Rat(3, 2))).truncated(Rat(4));
    auto r = t.sqrt(Rat(1));
    CHECK(r.valuation() == Rat(1, 4));
    CHECK(r.coeff(Rat(5, 4)) == Rat(1, 2));
    CHECK(r.coeff(Rat(9, 4)) == Rat(-1, 8));
    CHECK(QSeries::agree_to(r * r, t, r.order().value()));
    // negated branch
    auto rm = t.sqrt(Rat(-1));
    CHECK(rm == -r);
}

TEST_CASE("order bookkeeping under products and inverses") {
    auto a = (q_mono(1, Rat(0)) + q_mono(1, Rat(1))).truncated(Rat(5));   // 1+q+O(q^5)
    auto b = (q_mono(1, Rat(-1)) + q_mono(2, Rat(0))).truncated(Rat(3));  // q^-1+2+O(q^3)
    auto p = a * b;
    CHECK(p.order().value() == Rat(3));  // min(5 + (-1), 3 + 0)
    auto inv = b.recip();
    CHECK(inv.order().value() == Rat(5));  // 3 - 2*(-1)
    CHECK(QSeries::agree_to(inv * b, QSeries::one(), Rat(4)));  // min(5 - 1, 3 + 1)
}

TEST_CASE("ring axioms on random truncated series") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        auto a = random_series(rng, 2, Rat(4));
        auto b = random_series(rng, 2, Rat(4));
        auto c = random_series(rng, 2, Rat(4));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("recip is an involution on unit-leading series") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        auto a = QSeries::one() + random_series(rng, 1, Rat(5)).shifted(Rat(3)).truncated(Rat(5));
        auto back = a.recip().recip();
        CHECK(QSeries::agree_to(a, back, back.order().value()));
    }
}

TEST_CASE("log and exp are mutually inverse") {
    std::mt19937 rng(3);
    auto u = random_series(rng, 1, Rat(6)).shifted(Rat(3)).truncated(Rat(6));  // valuation >= 1
    auto s = QSeries::one() + u;
    CHECK(QSeries::agree_to(s.log().exp(), s, Rat(6)));
    auto w = u;  // positive valuation
    CHECK(QSeries::agree_to(w.exp().log(), w, Rat(6)));
}

TEST_CASE("rescale and phase") {
    // (q^(1/2) + q, scale 1, rho 1) -> -q^(1/2) + q
    auto s = promote(q_mono(1, Rat(1, 2)) + q_mono(1, Rat(1)));
    auto t = s.rescale_phase(Rat(1), Rat(1));
    CHECK(t.coeff(Rat(1, 2)) == Cyclotomic(Rat(-1)));
    CHECK(t.coeff(Rat(1)) == Cyclotomic(Rat(1)));
    // identity at rho=0, scale=1
    CHECK(s.rescale_phase(Rat(1), Rat(0)) == s);
    // substitution q -> q^2
    auto u = q_mono(3, Rat(1, 3)).rescale_phase(Rat(2), Rat(0));
    CHECK(u.coeff(Rat(2, 3)) == 3);
    // composing phases adds rho
    auto p1 = s.rescale_phase(Rat(1), Rat(1, 3)).rescale_phase(Rat(1), Rat(1, 5));
    auto p2 = s.rescale_phase(Rat(1), Rat(8, 15));
    CHECK(p1 == p2);
    // q^(1/4) picks up e^(pi i k) under rho = 2k
    auto v = promote(q_mono(1, Rat(1, 4))).rescale_phase(Rat(1), Rat(2));
    CHECK(v.coeff(Rat(1, 4)) == -Cyclotomic::one());
}

TEST_CASE("galois commutes with series arithmetic") {
    auto z = Cyclotomic::zeta(12);
    auto a = CSeries::monomial(z + Cyclotomic(Rat(2)), Rat(1, 2)) + CSeries::monomial(z * z, Rat(2));
    auto b = CSeries::monomial(z.inverse(), Rat(0)) + CSeries::monomial(Cyclotomic(Rat(3)), Rat(1));
    CHECK(galois(a * b, 5) == galois(a, 5) * galois(b, 5));
    CHECK(galois(a + b, 7) == galois(a, 7) + galois(b, 7));
}

TEST_CASE("solve_quadratic style Vieta check") {
    // X^2 - (2+q)X + (1+q) = 0 has roots 1+q and 1
    auto one = QSeries::one();
    auto q = q_mono(1, Rat(1)).truncated(Rat(8));
    auto b = -(one + one + q);
    auto c = one + q;
    auto disc = b * b - c.scaled_rat(Rat(4));  // q^2
    auto root = disc.sqrt(Rat(1));
    auto xp = (-b + root).scaled_rat(Rat(1, 2));
    auto xm = (-b - root).scaled_rat(Rat(1, 2));
    CHECK(QSeries::agree_to(xp, one + q, Rat(7)));
    CHECK(QSeries::agree_to(xm, one, Rat(7)));
    CHECK(QSeries::agree_to(xp + xm, -b, Rat(7)));
    CHECK(QSeries::agree_to(xp * xm, c, Rat(7)));
}
