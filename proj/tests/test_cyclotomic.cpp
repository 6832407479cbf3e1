#include <catch2/catch_amalgamated.hpp>

#include "vw/cyclotomic.hpp"

using namespace vw;

TEST_CASE("basic roots of unity") {
    auto i = Cyclotomic::i();
    CHECK(i * i == Cyclotomic(Rat(-1)));
    auto z3 = Cyclotomic::zeta(3);
    CHECK(z3 + z3 * z3 == Cyclotomic(Rat(-1)));
    CHECK(Cyclotomic::zeta(5, 1) * Cyclotomic::zeta(5, 4) == Cyclotomic::one());
}

TEST_CASE("named radicals square correctly") {
    CHECK(Cyclotomic::sqrt2() * Cyclotomic::sqrt2() == Cyclotomic(Rat(2)));
    CHECK(Cyclotomic::sqrt3() * Cyclotomic::sqrt3() == Cyclotomic(Rat(3)));
    CHECK(Cyclotomic::sqrt5() * Cyclotomic::sqrt5() == Cyclotomic(Rat(5)));
    auto phi = Cyclotomic::golden_ratio();
    CHECK(phi * phi == phi + Cyclotomic::one());  // x^2 = x + 1
    // (zeta_12 + zeta_12^-1)^2 = 3
    auto c = Cyclotomic::zeta(12) + Cyclotomic::zeta(12, 11);
    CHECK(c * c == Cyclotomic(Rat(3)));
}

TEST_CASE("mixed conductor arithmetic") {
    auto a = Cyclotomic::sqrt2() + Cyclotomic::sqrt3();  // conductor 24
    CHECK(a.conductor() == 24);
    CHECK(a * a == Cyclotomic(Rat(5)) + Cyclotomic::sqrt2() * Cyclotomic::sqrt3() * Rat(2));
    CHECK((a - Cyclotomic::sqrt3()) == Cyclotomic::sqrt2().embedded(24));
}

TEST_CASE("division and inverse") {
    auto z = Cyclotomic::zeta(8) + Cyclotomic(Rat(2));
    auto w = z.inverse();
    CHECK(z * w == Cyclotomic::one());
    CHECK_THROWS(Cyclotomic::zero().inverse());
    auto phi = Cyclotomic::golden_ratio();
    CHECK(Cyclotomic::one() / phi == phi - Cyclotomic::one());  // 1/phi = phi - 1
}

TEST_CASE("galois action") {
    // complex conjugation on 2 + 3i
    auto a = Cyclotomic(Rat(2)) + Cyclotomic::i() * Rat(3);
    CHECK(a.galois(3) == Cyclotomic(Rat(2)) - Cyclotomic::i() * Rat(3));
    // 2 cos(pi/6) -> 2 cos(5 pi/6)
    auto c = Cyclotomic::zeta(12) + Cyclotomic::zeta(12, 11);
    CHECK(c.galois(5) == -c);
    // rationals fixed
    CHECK(Cyclotomic(Rat(7, 3)).galois(1) == Cyclotomic(Rat(7, 3)));
    // automorphism property on a product
    auto x = Cyclotomic::zeta(12) + Cyclotomic(Rat(1));
    auto y = Cyclotomic::zeta(12, 7) * Rat(2) - Cyclotomic(Rat(3));
    CHECK((x * y).galois(7) == x.galois(7) * y.galois(7));
    CHECK_THROWS(x.galois(6));
}

TEST_CASE("sqrt5 identities in Q(zeta_5, i)") {
    auto e5 = Cyclotomic::zeta(20, 4);  // zeta_5 inside conductor 20
    auto s5 = Cyclotomic::sqrt5().embedded(20);
    auto d = e5 - e5.inverse();
    CHECK((d * d * Rat(-2) - Cyclotomic(Rat(5))) == s5);  // sqrt5 = -2(e5-e5^-1)^2 - 5
    // sqrt(5 + 2 sqrt5) = -(i/2)(e5 - e5^-1)(1 + sqrt5)
    auto lhs = Cyclotomic::i().embedded(20) * Rat(-1, 2) * d * (Cyclotomic::one() + s5);
    CHECK(lhs * lhs == Cyclotomic(Rat(5)) + s5 * Rat(2));
    // sqrt(5 - 2 sqrt5) = (i/2)(e5^2 - e5^-2)(1 - sqrt5)
    auto d2 = e5 * e5 - (e5 * e5).inverse();
    auto lhs2 = Cyclotomic::i().embedded(20) * Rat(1, 2) * d2 * (Cyclotomic::one() - s5);
    CHECK(lhs2 * lhs2 == Cyclotomic(Rat(5)) - s5 * Rat(2));
}

TEST_CASE("conductor reduction") {
    auto a = Cyclotomic::zeta(12, 4);  // = zeta_3
    auto r = a.reduced();
    CHECK(r.conductor() == 3);
    CHECK(r == a);
    auto b = Cyclotomic::zeta(24) * Cyclotomic::zeta(24, 23);  // = 1
    CHECK(b.reduced().conductor() == 1);
    CHECK(b.is_rational());
    CHECK(b.rational_part() == 1);
}

TEST_CASE("rational radical sqrt helper") {
    auto r = sqrt_rational_radical(Rat(12));
    REQUIRE(r.has_value());
    CHECK((*r) * (*r) == Cyclotomic(Rat(12)));
    auto r2 = sqrt_rational_radical(Rat(9, 4));
    REQUIRE(r2.has_value());
    CHECK(r2->is_rational());
    CHECK(r2->rational_part() == Rat(3, 2));
    auto r3 = sqrt_rational_radical(Rat(2000) * (Rat(5)));  // 10000 = 100^2
    REQUIRE(r3.has_value());
    CHECK(sqrt_rational_radical(Rat(7)) == std::nullopt);
    auto rn = sqrt_rational_radical(Rat(-3));
    REQUIRE(rn.has_value());
    CHECK((*rn) * (*rn) == Cyclotomic(Rat(-3)));
}

TEST_CASE("numeric embedding orients branches") {
    CHECK(Cyclotomic::sqrt2().numeric().real() > 1.41);
    CHECK(Cyclotomic::sqrt5().numeric().real() > 2.23);
    CHECK(std::abs(Cyclotomic::i().numeric().imag() - 1.0) < 1e-12);
}
