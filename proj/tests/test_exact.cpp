#include <random>

#include "doctest.h"

#include "homspec/exact.hpp"

using namespace homspec;

TEST_CASE("bigint arithmetic and division") {
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("98765432109876543210");
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r >= BigInt(0));
    CHECK((a * b).to_string() == "12193263113702179522496570642237463801111263526900");
    CHECK(BigInt::gcd(BigInt(462), BigInt(1071)) == BigInt(21));
    CHECK(BigInt::isqrt(BigInt::from_string("1000000000000000000000000")).to_string() ==
          "1000000000000");
    CHECK(BigInt::isqrt(BigInt(99)) == BigInt(9));
    CHECK((-a) % b == -(a % b));
}

TEST_CASE("rational canonical form") {
    Rational r(6, -4);
    CHECK(r.to_string() == "-3/2");
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(2, 4) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 3) * Rational(3) == Rational(1));
    CHECK(Rational::from_string("22/7") == Rational(22, 7));
    CHECK(Rational::from_string("-5") == Rational(-5));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(3, 5) == Rational(0));
}

TEST_CASE("quadext arithmetic stays in one field") {
    QuadExt x(Rational(4), Rational(3), 2);  // 4 + 3 sqrt 2
    QuadExt y(Rational(1), Rational(-1), 2);
    CHECK((x * y).to_string() == "(-2 - 1*sqrt(2))");
    CHECK((x / x) == QuadExt(Rational(1)));
    CHECK(QuadExt(Rational(0), Rational(1), 8) == QuadExt(Rational(0), Rational(2), 2));
    CHECK(QuadExt(Rational(0), Rational(1), 9).is_rational());
    CHECK(QuadExt::sqrt_of(Rational(72)).to_string() == "(0 + 6*sqrt(2))");
    CHECK(QuadExt::sqrt_of(Rational(9, 4)) == QuadExt(Rational(3, 2)));
    CHECK_THROWS_AS(QuadExt(Rational(1)) + QuadExt(Rational(0), Rational(1), 3) +
                        QuadExt(Rational(0), Rational(1), 5),
                    std::domain_error);
}

TEST_CASE("quadext exact sign agrees with 200-digit decimal evaluation") {
    std::mt19937 rng(20250808);
    std::uniform_int_distribution<long long> num(-40, 40), den(1, 12);
    std::uniform_int_distribution<long long> rad(2, 50);
    int zeros = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        Rational a(num(rng), den(rng));
        Rational b(num(rng), den(rng));
        long long d = rad(rng);
        QuadExt v(a, b, d);
        int exact = v.sign();
        // decimal evaluation: floor(v * 10^200) >= 0 iff v >= 0, exactly
        BigInt pos = v.scaled_floor(200);
        BigInt neg = (-v).scaled_floor(200);
        int decimal = (pos.sign() >= 0 && neg.sign() >= 0) ? 0 : (pos.sign() >= 0 ? 1 : -1);
        CAPTURE(trial);
        CHECK(exact == decimal);
        if (exact == 0) ++zeros;
    }
    CHECK(zeros >= 0);
}

TEST_CASE("quadext field axioms on random samples") {
    std::mt19937 rng(977);
    std::uniform_int_distribution<long long> num(-9, 9), den(1, 5);
    auto rnd = [&](long long d) {
        return QuadExt(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), d);
    };
    for (long long d : {2LL, 5LL, 6LL}) {
        for (int i = 0; i < 200; ++i) {
            QuadExt x = rnd(d), y = rnd(d), z = rnd(d);
            CHECK((x + y) * z == x * z + y * z);
            CHECK(x * y == y * x);
            CHECK((x - y) + y == x);
            if (!y.is_zero()) CHECK((x / y) * y == x);
            CHECK(QuadExt::cmp(x, y) == -QuadExt::cmp(y, x));
        }
    }
}

TEST_CASE("cross-field comparison") {
    QuadExt s2 = QuadExt::sqrt_of(Rational(2));
    QuadExt s3 = QuadExt::sqrt_of(Rational(3));
    CHECK(QuadExt::cmp_cross(s2, s3) < 0);
    CHECK(QuadExt::cmp_cross(s3, s2) > 0);
    // sqrt(2) + 1 > sqrt(3) + 0.7
    QuadExt x = s2 + QuadExt(Rational(1));
    QuadExt y = s3 + QuadExt(Rational(7, 10));
    CHECK(QuadExt::cmp_cross(x, y) < 0);  // 2.414 < 2.432
    CHECK(QuadExt::cmp_cross(y, x) > 0);
    // equal values in different presentations: sqrt(8) vs 2 sqrt(2)
    CHECK(QuadExt::cmp_cross(QuadExt::sqrt_of(Rational(8)),
                             QuadExt(Rational(0), Rational(2), 2)) == 0);
    // rational vs radical
    CHECK(QuadExt::cmp_cross(QuadExt(Rational(3, 2)), s2) > 0);
}
