#include "doctest.h"

#include "homspec/spherical.hpp"

using namespace homspec;

TEST_CASE("type A predicate cases") {
    CHECK(is_spherical_a(2, {2, 1}, 0));
    CHECK_FALSE(is_spherical_a(2, {1, 0}, 0));
    CHECK(is_spherical_a(2, {2, 1}, 2));
    CHECK_FALSE(is_spherical_a(2, {2, 1}, 4));
    CHECK_FALSE(is_spherical_a(2, {2, 1}, 1));  // odd fiber weight
    CHECK(is_spherical_a(2, {2, 1}, 0)->k == 1);
    // n = 3: (2,1,1) with fiber 0 or 2
    CHECK(is_spherical_a(3, {2, 1, 1}, 0));
    CHECK(is_spherical_a(3, {2, 1, 1}, 2));
    CHECK_FALSE(is_spherical_a(3, {2, 1, 1}, 4));
    CHECK_FALSE(is_spherical_a(3, {3, 1, 0}, 0));  // sum not divisible by 4
    // n = 4: middle entry must equal k
    CHECK(is_spherical_a(4, {2, 1, 1, 1}, 0));
    CHECK_FALSE(is_spherical_a(4, {2, 2, 0, 0}, 0));
    CHECK_THROWS_AS(is_spherical_a(2, {0, 1}, 0), std::domain_error);
    CHECK(is_spherical_a(2, {0, 0}, 0)->is_trivial());
}

TEST_CASE("type B/D predicate and multiplicity") {
    auto r = is_spherical_bd(7, {1, 1, 0}, 2);
    REQUIRE(r);
    CHECK(r->branch_mult == 1);
    auto r2 = is_spherical_bd(6, {3, 1, 0}, 2);
    REQUIRE(r2);
    CHECK(r2->branch_mult == 3);
    CHECK_FALSE(is_spherical_bd(7, {1, 0, 0}, 2));  // z2 < fiber/2
    CHECK_FALSE(is_spherical_bd(7, {1, 1, 1}, 2));  // z3 != 0
    CHECK_FALSE(is_spherical_bd(7, {1, 1, 0}, 1));  // odd fiber
    // m = 5 needs z2 = fiber/2 exactly
    CHECK(is_spherical_bd(5, {2, 1}, 2));
    CHECK_FALSE(is_spherical_bd(5, {2, 1}, 0));
    CHECK(is_spherical_bd(5, {0, 0}, 0)->is_trivial());
}

TEST_CASE("type C predicate") {
    CHECK(is_spherical_c(2, false, {1, 0}, 1));
    CHECK_FALSE(is_spherical_c(2, true, {1, 0}, 1));  // parity
    CHECK(is_spherical_c(2, true, {2, 0}, 2));
    CHECK_FALSE(is_spherical_c(2, false, {1, 0}, 0));  // fiber must be z1 - z2
    CHECK_FALSE(is_spherical_c(3, false, {1, 1, 1}, 0));
    CHECK(is_spherical_c(3, false, {1, 1, 0}, 0));
}

TEST_CASE("real stiefel predicate") {
    CHECK(is_spherical_stiefel_real(5, {1, 0}, 1));
    CHECK(is_spherical_stiefel_real(5, {1, 0}, -1));
    CHECK(is_spherical_stiefel_real(5, {1, 1}, 0));
    CHECK_FALSE(is_spherical_stiefel_real(5, {1, 1}, 1));
    CHECK(is_spherical_stiefel_real(3, {2}, 0));
    CHECK_FALSE(is_spherical_stiefel_real(3, {1}, 0));  // parity
    CHECK(is_spherical_stiefel_real(3, {1}, 1));
    // m = 4 allows negative z2
    CHECK(is_spherical_stiefel_real(4, {2, -1}, 1));
    CHECK_FALSE(is_spherical_stiefel_real(4, {2, -1}, 2));  // parity and bound
    CHECK_FALSE(is_spherical_stiefel_real(6, {1, 1, 1}, 0));
}

TEST_CASE("complex stiefel predicate") {
    CHECK(is_spherical_stiefel_complex(2, {1, 0}, 1, -1));
    CHECK_FALSE(is_spherical_stiefel_complex(2, {1, 1}, 0, 0));
    CHECK(is_spherical_stiefel_complex(3, {1, 1, 0}, 0, -2));
    CHECK_FALSE(is_spherical_stiefel_complex(2, {1, 0}, 1, 1));  // u1 weight must be <= -su2
    CHECK_FALSE(is_spherical_stiefel_complex(2, {1, 0}, 2, -1));  // parity
    CHECK(is_spherical_stiefel_complex(2, {1, 1}, 0, -2));
    CHECK(is_spherical_stiefel_complex(4, {1, 1, 1, 0}, 0, 0));
    CHECK(is_spherical_stiefel_complex(4, {1, 1, 1, 0}, 0, 0)->k == 1);
}

TEST_CASE("enumerate_spherical completeness and ordering") {
    FamilyId cs(Family::SasakiCSphere, 2);
    Rational bound = casimir_base(cs, {1, 1});  // = 8
    auto reps = enumerate_spherical(cs, bound);
    // expect: trivial, (1,0|1), (1,1|0)
    REQUIRE(reps.size() == 3);
    CHECK(reps[0].is_trivial());
    CHECK(reps[1].base == std::vector<int>{1, 0});
    CHECK(reps[2].base == std::vector<int>{1, 1});
    // monotone completeness: bigger bound contains the smaller enumeration
    auto more = enumerate_spherical(cs, bound * Rational(3));
    for (const auto& r : reps) CHECK(std::count(more.begin(), more.end(), r) == 1);
    // duplicates never occur
    for (std::size_t i = 1; i < more.size(); ++i) CHECK_FALSE(more[i - 1] == more[i]);
    // tiny bound keeps only the trivial representation
    auto tiny = enumerate_spherical(cs, Rational(1, 2));
    REQUIRE(tiny.size() == 1);
    CHECK(tiny[0].is_trivial());
}

TEST_CASE("enumerate_spherical matches predicate sweep for sasaki-a(2)") {
    FamilyId a2(Family::SasakiA, 2);
    auto reps = enumerate_spherical(a2, Rational(20));
    long long direct = 0;
    for (int z1 = 0; z1 <= 10; ++z1)
        for (int z2 = 0; z2 <= z1; ++z2)
            for (int f = 0; f <= 2 * z1; ++f)
                if (auto r = is_spherical_a(2, {z1, z2}, f))
                    if (casimir_base(a2, r->base) <= Rational(20)) ++direct;
    CHECK(static_cast<long long>(reps.size()) == direct);
}
