#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "piq/similarity.hpp"

using namespace piq;

namespace {

Permutation random_permutation(i64 degree, std::mt19937_64& rng) {
    std::vector<i64> imgs(static_cast<size_t>(degree));
    std::iota(imgs.begin(), imgs.end(), 0);
    std::shuffle(imgs.begin(), imgs.end(), rng);
    return Permutation::from_images(std::move(imgs));
}

}  // namespace

TEST_SUITE_BEGIN("similarity");

TEST_CASE("generator pair of a pique") {
    PermPair pr = pique_perm_pair(LinearPique(Modulus(8), 1, 3));
    CHECK(pr.sigma == Permutation::identity(8));
    CHECK(pr.tau == automorphism_permutation(Unit(3, Modulus(8))));
}

TEST_CASE("known witnesses verify") {
    CHECK(verify_witness(parse_cycles("(3 7)", 8), LinearPique(Modulus(8), 1, 3),
                         LinearPique(Modulus(8), 1, 7)));
    CHECK(verify_witness(parse_cycles("(2 3)", 5), LinearPique(Modulus(5), 1, 2),
                         LinearPique(Modulus(5), 1, 3)));
    CHECK_FALSE(verify_witness(parse_cycles("(1 2)", 5), LinearPique(Modulus(5), 1, 2),
                               LinearPique(Modulus(5), 1, 3)));
    CHECK(verify_witness(Permutation::identity(8), LinearPique(Modulus(8), 5, 3),
                         LinearPique(Modulus(8), 5, 3)));
    CHECK_FALSE(verify_witness(Permutation::identity(5), LinearPique(Modulus(5), 1, 2),
                               LinearPique(Modulus(6), 1, 5)));
}

TEST_CASE("solver finds verified witnesses on easy pairs") {
    auto w = permutationally_similar(LinearPique(Modulus(5), 1, 2),
                                     LinearPique(Modulus(5), 1, 3));
    REQUIRE(w.has_value());
    CHECK(verify_witness(*w, LinearPique(Modulus(5), 1, 2), LinearPique(Modulus(5), 1, 3)));

    auto v = permutationally_similar(LinearPique(Modulus(8), 1, 3),
                                     LinearPique(Modulus(8), 1, 7));
    REQUIRE(v.has_value());
    CHECK(verify_witness(*v, LinearPique(Modulus(8), 1, 3), LinearPique(Modulus(8), 1, 7)));
}

TEST_CASE("solver rejects pairs with different characters") {
    CHECK_FALSE(permutationally_similar(LinearPique(Modulus(16), 5, 3),
                                        LinearPique(Modulus(16), 9, 7))
                    .has_value());
    CHECK_FALSE(permutationally_similar(LinearPique(Modulus(3), 1, 2),
                                        LinearPique(Modulus(3), 2, 1))
                    .has_value());
    CHECK_FALSE(permutationally_similar(LinearPique(Modulus(5), 1, 2),
                                        LinearPique(Modulus(7), 1, 2))
                    .has_value());
}

TEST_CASE("solver resolves the Z/16 diagonal pairs with verified witnesses") {
    // Pinned ground truth: these equal-character pairs are conjugate, and
    // the solver's witness must survive independent verification.
    auto w1 = permutationally_similar(LinearPique(Modulus(16), 5, 3),
                                      LinearPique(Modulus(16), 13, 11));
    REQUIRE(w1.has_value());
    CHECK(verify_witness(*w1, LinearPique(Modulus(16), 5, 3),
                         LinearPique(Modulus(16), 13, 11)));

    auto w2 = permutationally_similar(LinearPique(Modulus(16), 5, 11),
                                      LinearPique(Modulus(16), 13, 3));
    REQUIRE(w2.has_value());
    CHECK(verify_witness(*w2, LinearPique(Modulus(16), 5, 11),
                         LinearPique(Modulus(16), 13, 3)));

    // the hand-checked witness
    CHECK(verify_witness(parse_cycles("(3 11)(5 13)", 16), LinearPique(Modulus(16), 5, 3),
                         LinearPique(Modulus(16), 13, 11)));
}

TEST_CASE("solver is deterministic") {
    auto a = permutationally_similar(LinearPique(Modulus(16), 5, 3),
                                     LinearPique(Modulus(16), 13, 11));
    auto b = permutationally_similar(LinearPique(Modulus(16), 5, 3),
                                     LinearPique(Modulus(16), 13, 11));
    REQUIRE(a.has_value());
    CHECK(*a == *b);
}

TEST_CASE("solver agrees with brute force on pique pairs") {
    for (i64 n = 3; n <= 6; ++n) {
        auto units = unit_group(Modulus(n));
        std::vector<LinearPique> ps;
        for (const Unit& r : units)
            for (const Unit& l : units)
                ps.emplace_back(Modulus(n), r.value(), l.value());
        for (const LinearPique& a : ps)
            for (const LinearPique& b : ps) {
                PermPair pa = pique_perm_pair(a);
                PermPair pb = pique_perm_pair(b);
                auto fast = simultaneous_conjugacy(pa, pb);
                auto slow = brute_force_conjugacy(pa, pb);
                CHECK(fast.has_value() == slow.has_value());
                if (fast)
                    CHECK(verify_conjugacy(*fast, pa, pb));
            }
    }
}

TEST_CASE("solver agrees with brute force on random permutation pairs") {
    std::mt19937_64 rng(0x05);
    for (int trial = 0; trial < 120; ++trial) {
        i64 d = 2 + static_cast<i64>(rng() % 5);
        PermPair a{random_permutation(d, rng), random_permutation(d, rng)};
        Permutation pi = random_permutation(d, rng);
        PermPair b = trial % 2 == 0
                         ? PermPair{conjugate(a.sigma, pi), conjugate(a.tau, pi)}
                         : PermPair{random_permutation(d, rng), random_permutation(d, rng)};
        auto fast = simultaneous_conjugacy(a, b);
        auto slow = brute_force_conjugacy(a, b);
        CHECK(fast.has_value() == slow.has_value());
        if (fast)
            CHECK(verify_conjugacy(*fast, a, b));
        if (trial % 2 == 0)
            CHECK(fast.has_value());
    }
}

TEST_CASE("brute force enforces its degree bound") {
    PermPair a{Permutation::identity(9), Permutation::identity(9)};
    CHECK_THROWS_AS(brute_force_conjugacy(a, a), std::invalid_argument);
}

TEST_CASE("degree mismatches") {
    PermPair a{Permutation::identity(4), Permutation::identity(4)};
    PermPair b{Permutation::identity(5), Permutation::identity(5)};
    CHECK_THROWS_AS(simultaneous_conjugacy(a, b), std::invalid_argument);
}

TEST_CASE("witness assembly through the prime-power parts") {
    auto d12 = factorize(Modulus(12));
    Permutation composed = crt_compose_similarity(
        d12, {Permutation::identity(4), parse_cycles("(1 2)", 3)});
    CHECK(format_cycles(composed) == "(1 5)(2 10)(4 8)(7 11)");
    LinearPique p(Modulus(12), 1, 5);
    CHECK(verify_witness(composed, p, p));
    CHECK_THROWS_AS(crt_compose_similarity(d12, {Permutation::identity(4)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        crt_compose_similarity(d12, {Permutation::identity(3), Permutation::identity(4)}),
        std::invalid_argument);
}

TEST_CASE("equal characters with distant coefficients still conjugate off 2-power moduli") {
    LinearPique a(Modulus(45), 1, 2);
    LinearPique b(Modulus(45), 1, 32);
    REQUIRE(characters_equal(a, b));
    auto w = permutationally_similar(a, b);
    REQUIRE(w.has_value());
    CHECK(verify_witness(*w, a, b));
}

TEST_SUITE_END();
