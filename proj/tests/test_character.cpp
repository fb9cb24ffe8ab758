#include <numeric>
#include <random>

#include "doctest.h"
#include "piq/character.hpp"

using namespace piq;

namespace {

std::vector<i64> row(const LinearPique& p, const std::string& words) {
    std::vector<i64> out;
    for (const Word& w : parse_word_list(words))
        out.push_back(char_value(p, w));
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("character");

TEST_CASE("Z/3 character pairs over R and L") {
    CHECK(row(LinearPique(Modulus(3), 1, 1), "R,L") == std::vector<i64>{3, 3});
    CHECK(row(LinearPique(Modulus(3), 1, 2), "R,L") == std::vector<i64>{3, 1});
    CHECK(row(LinearPique(Modulus(3), 2, 1), "R,L") == std::vector<i64>{1, 3});
    CHECK(row(LinearPique(Modulus(3), 2, 2), "R,L") == std::vector<i64>{1, 1});
}

TEST_CASE("Z/8 character rows") {
    const std::string cols = "R,L,L2,RL";
    CHECK(row(LinearPique(Modulus(8), 1, 3), cols) == std::vector<i64>{8, 2, 8, 2});
    CHECK(row(LinearPique(Modulus(8), 1, 7), cols) == std::vector<i64>{8, 2, 8, 2});
    CHECK(row(LinearPique(Modulus(8), 5, 3), cols) == std::vector<i64>{4, 2, 8, 2});
    CHECK(row(LinearPique(Modulus(8), 5, 7), cols) == std::vector<i64>{4, 2, 8, 2});
}

TEST_CASE("Z/16 character rows") {
    const std::string cols = "RL,RL2,RL3,R,R2,R3,L2";
    auto p = [](i64 r, i64 l) { return LinearPique(Modulus(16), r, l); };
    std::vector<i64> a{2, 4, 2, 4, 8, 4, 8};
    std::vector<i64> b{2, 4, 2, 4, 8, 4, 16};
    std::vector<i64> c{2, 8, 2, 8, 16, 8, 16};
    std::vector<i64> d{4, 2, 4, 2, 8, 2, 16};
    std::vector<i64> e{8, 2, 8, 2, 16, 2, 16};
    CHECK(row(p(5, 3), cols) == a);
    CHECK(row(p(5, 11), cols) == a);
    CHECK(row(p(13, 3), cols) == a);
    CHECK(row(p(13, 11), cols) == a);
    CHECK(row(p(13, 7), cols) == b);
    CHECK(row(p(13, 15), cols) == b);
    CHECK(row(p(5, 7), cols) == b);
    CHECK(row(p(5, 15), cols) == b);
    CHECK(row(p(9, 7), cols) == c);
    CHECK(row(p(9, 15), cols) == c);
    CHECK(row(p(11, 7), cols) == d);
    CHECK(row(p(3, 15), cols) == d);
    CHECK(row(p(3, 7), cols) == d);
    CHECK(row(p(11, 15), cols) == d);
    CHECK(row(p(7, 15), cols) == e);
}

TEST_CASE("fix count equals gcd of (image - 1) with n") {
    std::mt19937_64 rng(0x04);
    for (i64 n : {8, 12, 16, 45}) {
        auto units = unit_group(Modulus(n));
        for (int trial = 0; trial < 40; ++trial) {
            i64 r = units[rng() % units.size()].value();
            i64 l = units[rng() % units.size()].value();
            LinearPique p(Modulus(n), r, l);
            Word w{static_cast<i64>(rng() % 7), static_cast<i64>(rng() % 7), ""};
            i64 u = word_eval(p, w).value();
            CHECK(char_value(p, w) == std::gcd(u - 1 + n, n));
        }
    }
}

TEST_CASE("grids are periodic in both exponents") {
    LinearPique p(Modulus(16), 5, 3);
    i64 e = 4;
    ExponentGrid small = character_grid(p, e, e);
    ExponentGrid big = character_grid(p, 2 * e, 2 * e);
    for (i64 a = 0; a < 2 * e; ++a)
        for (i64 b = 0; b < 2 * e; ++b)
            CHECK(big.values[static_cast<size_t>(a * 2 * e + b)] ==
                  small.values[static_cast<size_t>(a % e * e + b % e)]);
}

TEST_CASE("character equality") {
    CHECK(characters_equal(LinearPique(Modulus(5), 1, 2), LinearPique(Modulus(5), 1, 3)));
    CHECK_FALSE(
        characters_equal(LinearPique(Modulus(3), 1, 2), LinearPique(Modulus(3), 2, 1)));
    CHECK(characters_equal(LinearPique(Modulus(16), 5, 3),
                           LinearPique(Modulus(16), 13, 11)));
    CHECK(characters_equal(LinearPique(Modulus(16), 5, 11),
                           LinearPique(Modulus(16), 13, 3)));
    CHECK_FALSE(characters_equal(LinearPique(Modulus(16), 5, 3),
                                 LinearPique(Modulus(16), 9, 7)));
    CHECK_FALSE(
        characters_equal(LinearPique(Modulus(8), 1, 1), LinearPique(Modulus(16), 1, 1)));
    LinearPique p(Modulus(12), 7, 5);
    CHECK(characters_equal(p, p));
}

TEST_CASE("order profiles") {
    CHECK_FALSE(
        order_profile_equal(LinearPique(Modulus(3), 1, 2), LinearPique(Modulus(3), 2, 1)));
    CHECK(order_profile_equal(LinearPique(Modulus(16), 5, 3),
                              LinearPique(Modulus(16), 13, 11)));
    LinearPique p(Modulus(16), 9, 7);
    CHECK(order_profile_equal(p, p));
}

TEST_CASE("default word list") {
    auto ws = default_word_list(LinearPique(Modulus(8), 5, 3));
    REQUIRE(ws.size() == 4);
    CHECK(format_word(ws[0]) == "1");
    CHECK(format_word(ws[1]) == "L");
    CHECK(format_word(ws[2]) == "R");
    CHECK(format_word(ws[3]) == "RL");
}

TEST_CASE("table rendering") {
    LinearPique p(Modulus(8), 5, 3);
    CharacterTable t = character_table(p, parse_word_list("R,L,L2,RL"));
    REQUIRE(t.values == std::vector<i64>{4, 2, 8, 2});

    std::string text = render_table_text(t);
    CHECK(text.find("8:5:3") != std::string::npos);
    CHECK(text.find("\xcf\x87(RL)") != std::string::npos);

    std::string csv = render_table_csv(t);
    CHECK(csv.find("pique,chi(R),chi(L),chi(L2),chi(RL)") != std::string::npos);
    CHECK(csv.find("8:5:3,4,2,8,2") != std::string::npos);

    std::string json = render_table_json(t);
    CHECK(json.find("\"values\"") != std::string::npos);
}

TEST_SUITE_END();
