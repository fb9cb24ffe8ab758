#include "piq/character.hpp"

#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "table_text.hpp"

namespace piq {

namespace {

// Fix counts per unit value, filled on demand. One vector per call site
// keeps the hot grid loops O(1) per cell after the first visit of a unit.
struct FixCache {
    i64 n;
    std::vector<i64> memo;

    explicit FixCache(i64 n) : n(n), memo(static_cast<size_t>(n), -1) {}

    i64 operator()(i64 u) {
        i64& slot = memo[static_cast<size_t>(u)];
        if (slot < 0) {
            i64 count = 0;
            for (i64 x = 0; x < n; ++x)
                if (u * x % n == x)
                    ++count;
            slot = count;
        }
        return slot;
    }
};

}  // namespace

i64 char_value(const LinearPique& P, const Word& w) {
    return fixed_point_count(word_permutation(P, w));
}

CharacterTable character_table(const LinearPique& P, const std::vector<Word>& words) {
    CharacterTable t{P, words, {}};
    t.values.reserve(words.size());
    for (const Word& w : words)
        t.values.push_back(char_value(P, w));
    return t;
}

std::vector<Word> default_word_list(const LinearPique& P) {
    i64 or_ = unit_order(P.rho_unit());
    i64 ol = unit_order(P.lambda_unit());
    std::vector<Word> out;
    out.reserve(static_cast<size_t>(or_ * ol));
    for (i64 a = 0; a < or_; ++a)
        for (i64 b = 0; b < ol; ++b)
            out.push_back(Word{a, b, {}});
    return out;
}

ExponentGrid character_grid(const LinearPique& P, i64 la, i64 lb) {
    if (la < 1 || lb < 1)
        throw std::invalid_argument("character_grid: bounds must be >= 1");
    i64 n = P.modulus().value();
    FixCache fix(n);
    ExponentGrid g{la, lb, {}};
    g.values.reserve(static_cast<size_t>(la * lb));
    i64 rpow = 1;
    for (i64 a = 0; a < la; ++a) {
        i64 v = rpow;
        for (i64 b = 0; b < lb; ++b) {
            g.values.push_back(fix(v));
            v = v * P.lambda() % n;
        }
        rpow = rpow * P.rho() % n;
    }
    return g;
}

bool characters_equal(const LinearPique& A, const LinearPique& B) {
    if (A.modulus() != B.modulus())
        return false;
    i64 la = std::lcm(unit_order(A.rho_unit()), unit_order(B.rho_unit()));
    i64 lb = std::lcm(unit_order(A.lambda_unit()), unit_order(B.lambda_unit()));
    return character_grid(A, la, lb) == character_grid(B, la, lb);
}

bool order_profile_equal(const LinearPique& A, const LinearPique& B) {
    if (A.modulus() != B.modulus())
        return false;
    i64 n = A.modulus().value();
    i64 la = std::lcm(unit_order(A.rho_unit()), unit_order(B.rho_unit()));
    i64 lb = std::lcm(unit_order(A.lambda_unit()), unit_order(B.lambda_unit()));
    std::vector<i64> ord_a(static_cast<size_t>(n), -1);
    std::vector<i64> ord_b(static_cast<size_t>(n), -1);
    auto order_of = [n](std::vector<i64>& memo, i64 u, Modulus m) {
        i64& slot = memo[static_cast<size_t>(u)];
        if (slot < 0)
            slot = unit_order(Unit(u, m));
        return slot;
    };
    i64 ra = 1;
    i64 rb = 1;
    for (i64 a = 0; a < la; ++a) {
        i64 va = ra;
        i64 vb = rb;
        for (i64 b = 0; b < lb; ++b) {
            if (order_of(ord_a, va, A.modulus()) != order_of(ord_b, vb, B.modulus()))
                return false;
            va = va * A.lambda() % n;
            vb = vb * B.lambda() % n;
        }
        ra = ra * A.rho() % n;
        rb = rb * B.rho() % n;
    }
    return true;
}

namespace {

std::string chi_header(const Word& w, bool ascii) {
    return (ascii ? "chi(" : "\xcf\x87(") + format_word(w) + ")";
}

}  // namespace

std::string render_table_text(const CharacterTable& t) {
    detail::TextTable tt;
    tt.headers.push_back("pique");
    for (const Word& w : t.words)
        tt.headers.push_back(chi_header(w, false));
    std::vector<std::string> row{format_pique_literal(t.pique)};
    for (i64 v : t.values)
        row.push_back(std::to_string(v));
    tt.rows.push_back(std::move(row));
    return tt.to_text();
}

std::string render_table_csv(const CharacterTable& t) {
    detail::TextTable tt;
    tt.headers.push_back("pique");
    for (const Word& w : t.words)
        tt.headers.push_back(chi_header(w, true));
    std::vector<std::string> row{format_pique_literal(t.pique)};
    for (i64 v : t.values)
        row.push_back(std::to_string(v));
    tt.rows.push_back(std::move(row));
    return tt.to_csv();
}

std::string render_table_json(const CharacterTable& t) {
    nlohmann::json j;
    j["pique"] = {{"modulus", t.pique.modulus().value()},
                  {"rho", t.pique.rho()},
                  {"lambda", t.pique.lambda()}};
    j["words"] = nlohmann::json::array();
    j["values"] = t.values;
    for (const Word& w : t.words)
        j["words"].push_back(format_word(w));
    return j.dump(2);
}

}  // namespace piq
