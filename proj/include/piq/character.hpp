#pragma once

#include <string>
#include <vector>

#include "piq/pique.hpp"

// Permutation characters: chi(w) = number of fixed points of the
// permutation a word w induces. Two piques have equal characters iff
// their fix-count grids agree on exponents [0, lcm of the R-orders) x
// [0, lcm of the L-orders); both grids are periodic with periods
// dividing those bounds, so the finite comparison decides the whole
// function.

namespace piq {

i64 char_value(const LinearPique& P, const Word& w);

struct CharacterTable {
    LinearPique pique;
    std::vector<Word> words;
    std::vector<i64> values;  // aligned with words
};

CharacterTable character_table(const LinearPique& P, const std::vector<Word>& words);

// R^a L^b for 0 <= a < ord(rho), 0 <= b < ord(lambda), lexicographic (a,b).
std::vector<Word> default_word_list(const LinearPique& P);

struct ExponentGrid {
    i64 la = 0;
    i64 lb = 0;
    std::vector<i64> values;  // row-major, values[a*lb + b] = chi(R^a L^b)
    bool operator==(const ExponentGrid&) const = default;
};

ExponentGrid character_grid(const LinearPique& P, i64 la, i64 lb);

bool characters_equal(const LinearPique& A, const LinearPique& B);

// Same grid, comparing orders of the word images instead of fix counts.
bool order_profile_equal(const LinearPique& A, const LinearPique& B);

// Aligned two-line table with chi(word) headers / CSV / a JSON record.
std::string render_table_text(const CharacterTable& t);
std::string render_table_csv(const CharacterTable& t);
std::string render_table_json(const CharacterTable& t);

}  // namespace piq
