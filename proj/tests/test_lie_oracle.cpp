#include "doctest.h"

#include "homspec/characters.hpp"
#include "homspec/partition.hpp"
#include "homspec/spin_branching.hpp"
#include "homspec/verify.hpp"

using namespace homspec;

TEST_CASE("littlewood-richardson pinned values") {
    CHECK(lr_coefficient({2, 1}, {1, 1}, {1}) == 1);
    CHECK(lr_coefficient({2, 1}, {1}, {1, 1}) == 1);
    CHECK(lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}) == 2);  // classic multiplicity-2 case
    CHECK(lr_coefficient({2, 2}, {1, 1}, {1, 1}) == 1);
    CHECK(lr_coefficient({1, 1, 1, 1}, {1, 1}, {1, 1}) == 1);
    CHECK(lr_coefficient({2, 1, 1}, {1, 1}, {1, 1}) == 1);
    CHECK(lr_coefficient({2, 2}, {1, 1}, {1}) == 0);  // size mismatch
    // empty-factor identity
    CHECK(lr_coefficient({3, 1}, {}, {3, 1}) == 1);
    CHECK(lr_coefficient({3, 1}, {}, {2, 2}) == 0);
}

TEST_CASE("rectangular tensor decomposition") {
    auto got = tensor_decompose_rect(1, 1, 1, 3);
    std::vector<Partition> want{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}};
    CHECK(got == want);
    CHECK(tensor_decompose_rect(0, 0, 0, 4) == std::vector<Partition>{{}});
    CHECK_THROWS_AS(tensor_decompose_rect(1, 0, 1, 3), std::domain_error);  // a+b != 2k
    CHECK_THROWS_AS(tensor_decompose_rect(0, 2, 1, 3), std::domain_error);  // a < b
}

TEST_CASE("gl branch step") {
    auto b = gl_branch_step({1, 0});
    REQUIRE(b.size() == 2);
    CHECK(b[0] == std::pair<std::vector<int>, int>({0}, 1));
    CHECK(b[1] == std::pair<std::vector<int>, int>({1}, 0));
    CHECK(gl_branch_step({0, 0, 0}).size() == 1);
    // (2,1,0) branches to the 4 interlacing weights; total dimension 8
    auto br = gl_branch_step({2, 1, 0});
    CHECK(br.size() == 4);
    long long total = 0;
    for (const auto& [x, w] : br) {
        (void)w;
        total += weyl_dimension({GroupType::A, 1}, {x[0] - x[1]});
    }
    CHECK(total == 8);
    CHECK_THROWS_AS(gl_branch_step({0, 1}), std::domain_error);
}

TEST_CASE("spin branch step") {
    // SO(5) (1,1) -> SO(4): weights (1,-1),(1,0),(1,1)
    auto so5 = spin_branch_step(5, {1, 1});
    REQUIRE(so5.size() == 3);
    CHECK(so5[0] == std::vector<int>{1, -1});
    CHECK(so5[1] == std::vector<int>{1, 0});
    CHECK(so5[2] == std::vector<int>{1, 1});
    // SO(4) (1,0) -> SO(3): {(0),(1)}
    auto so4 = spin_branch_step(4, {1, 0});
    REQUIRE(so4.size() == 2);
    CHECK(so4[0] == std::vector<int>{0});
    CHECK(so4[1] == std::vector<int>{1});
    // zero weight stays zero
    CHECK(spin_branch_step(7, {0, 0, 0}) == std::vector<std::vector<int>>{{0, 0, 0}});
    CHECK(spin_branch_step(6, {0, 0, 0}) == std::vector<std::vector<int>>{{0, 0}});
}

TEST_CASE("so4 invariant multiplicities") {
    CHECK(so4_invariant_mult(5, 2, 1, 1) == 1);
    CHECK(so4_invariant_mult(5, 2, 1, 2) == 0);
    CHECK(so4_invariant_mult(6, 3, 1, 1) == 3);  // z1 - z2 + 1
    CHECK(so4_invariant_mult(7, 1, 1, 1) == 1);
    // m = 7 closed form (z1-z2+1)(z1-x+2)(z2-x+1)/2
    CHECK(so4_invariant_mult(7, 3, 2, 1) == 2 * 4 * 2 / 2);
}

TEST_CASE("weyl dimensions") {
    CHECK(weyl_dimension({GroupType::A, 2}, {1, 0}) == 3);
    CHECK(weyl_dimension({GroupType::A, 2}, {2, 1}) == 8);
    CHECK(weyl_dimension({GroupType::C, 2}, {1, 1}) == 5);
    CHECK(weyl_dimension({GroupType::B, 2}, {1, 0}) == 5);
    CHECK(weyl_dimension({GroupType::D, 3}, {1, 0, 0}) == 6);
    CHECK(weyl_dimension({GroupType::D, 2}, {1, -1}) == 3);  // anti-self-dual so(4) factor
    CHECK(weyl_dimension({GroupType::B, 3}, {1, 1, 0}) == 21);
    for (GroupType t : {GroupType::A, GroupType::B, GroupType::C, GroupType::D})
        CHECK(weyl_dimension({t, 3}, {0, 0, 0}) == 1);
    CHECK_THROWS_AS(weyl_dimension({GroupType::A, 2}, {0, 1}), std::domain_error);
}

TEST_CASE("freudenthal casimir values") {
    // A_n closed form at n=2, (1,0) -> 8/3
    CHECK(casimir_freudenthal({GroupType::A, 2}, {1, 0}) == Rational(8, 3));
    // B/D: (z1(z1+m-2)+z2(z2+m-4))/2 at m=7, (1,0,0) -> 3
    CHECK(casimir_freudenthal({GroupType::B, 3}, {1, 0, 0}) == Rational(3));
    CHECK(casimir_freudenthal({GroupType::C, 2}, {1, 1}) == Rational(4));
    for (GroupType t : {GroupType::A, GroupType::B, GroupType::C, GroupType::D})
        CHECK(casimir_freudenthal({t, 3}, {0, 0, 0}) == Rational(0));
    // su(2) fiber normalizations
    CHECK(su2_casimir_a_series(2) == Rational(4));
    CHECK(su2_casimir_bd_series(2) == Rational(2));
}

TEST_CASE("sp character decomposition") {
    auto d = character_decompose_sp(2, {1, 0});
    REQUIRE(d.size() == 2);
    CHECK(d.at({{0}, 1}) == 1);
    CHECK(d.at({{1}, 0}) == 1);
    CHECK(character_decompose_sp(2, {0, 0}).at({{0}, 0}) == 1);
    // (1,1): contains ((0), z) iff z = 0, multiplicity 1
    auto d11 = character_decompose_sp(2, {1, 1});
    CHECK(d11.at({{0}, 0}) == 1);
    CHECK(d11.count({{0}, 1}) == 0);
    CHECK(d11.count({{0}, 2}) == 0);
    CHECK_THROWS_AS(character_decompose_sp(4, {1, 0, 0, 0}), std::domain_error);
    CHECK_THROWS_AS(character_decompose_sp(2, {7, 0}), std::domain_error);
    // dimension conservation over the full decomposition
    for (std::vector<int> w : {std::vector<int>{2, 1}, std::vector<int>{3, 2}}) {
        long long total = 0;
        for (const auto& [key, mult] : character_decompose_sp(2, w))
            total += mult * weyl_dimension({GroupType::C, 1}, key.first) * (key.second + 1);
        CHECK(total == weyl_dimension({GroupType::C, 2}, w));
    }
    for (std::vector<int> w : {std::vector<int>{2, 1, 1}, std::vector<int>{3, 1, 0}}) {
        long long total = 0;
        for (const auto& [key, mult] : character_decompose_sp(3, w))
            total += mult * weyl_dimension({GroupType::C, 2}, key.first) * (key.second + 1);
        CHECK(total == weyl_dimension({GroupType::C, 3}, w));
    }
}

TEST_CASE("so(2) x so(m-2) character decomposition spot oracle") {
    // V^{SO(m-2)} weights of rho_{SO(m)}(z1, z2) are z1-z2, z1-z2-2, ...,
    // each once, symmetric in sign
    for (int m : {5, 6, 7, 8}) {
        for (int z1 = 0; z1 <= (m < 8 ? 3 : 2); ++z1) {
            for (int z2 = 0; z2 <= z1; ++z2) {
                std::vector<int> w(m / 2, 0);
                w[0] = z1;
                w[1] = z2;
                auto d = character_decompose_so2(m, w);
                std::vector<int> zero((m - 2) / 2, 0);
                for (int f = -z1 - 1; f <= z1 + 1; ++f) {
                    auto it = d.find({zero, f});
                    long long got = it == d.end() ? 0 : it->second;
                    long long want = (std::abs(f) <= z1 - z2 && (f - (z1 - z2)) % 2 == 0) ? 1 : 0;
                    CAPTURE(m);
                    CAPTURE(z1);
                    CAPTURE(z2);
                    CAPTURE(f);
                    CHECK(got == want);
                }
            }
        }
    }
}

TEST_CASE("reciprocity pinned examples") {
    CHECK(reciprocity_check({2, 1}, {1}, {1, 1}, 1, 2));
    CHECK(reciprocity_check({2, 1}, {1, 1}, {1}, 2, 2));
    CHECK(reciprocity_check({1}, {1}, {1}, 1, 1));  // both sides zero, size mismatch
    CHECK_THROWS_AS(reciprocity_check({1, 1, 1}, {}, {1, 1, 1}, 1, 2), std::domain_error);
}

TEST_CASE("oracle sweeps stay clean at unit-test scale") {
    CHECK(sweep_lr(10).ok());  // symmetry c^l_{mn} = c^l_{nm} through |l| = 10
    CHECK(sweep_branching(2).ok());
    CHECK(sweep_spherical_a(3, 4).ok());
    CHECK(sweep_spherical_bd(7, 3).ok());
    CHECK(sweep_spherical_c(3).ok());
    CHECK(sweep_stiefel_real(6, 4).ok());
    CHECK(sweep_stiefel_complex(3, 3).ok());
    CHECK(sweep_blp22(3, 4).ok());
}
