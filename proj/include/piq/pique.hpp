#pragma once

#include <string>
#include <vector>

#include "piq/modarith.hpp"
#include "piq/permutation.hpp"

// Z-linear piques: pointed idempotent quasigroups on Z/n with
// x*y = rho*x + lambda*y for units rho, lambda. 0 is the pointed
// idempotent. Words in the two generator maps R: x -> rho*x and
// L: x -> lambda*x reduce to exponent pairs because (Z/n)* is abelian.

namespace piq {

class LinearPique {
public:
    LinearPique(Modulus n, i64 rho, i64 lambda);

    Modulus modulus() const { return n_; }
    i64 rho() const { return rho_.value(); }
    i64 lambda() const { return lambda_.value(); }
    Unit rho_unit() const { return rho_; }
    Unit lambda_unit() const { return lambda_; }

    i64 mul(i64 x, i64 y) const;   // rho*x + lambda*y
    i64 rdiv(i64 x, i64 y) const;  // x/y: the z with mul(z, y) = x
    i64 ldiv(i64 x, i64 y) const;  // x\y: the z with mul(x, z) = y

    bool operator==(const LinearPique&) const = default;

private:
    Modulus n_;
    Unit rho_;
    Unit lambda_;
};

// Full Latin-square and division check, O(n^2). The construction already
// guarantees this; the check exists so tests need not trust it.
bool verify_quasigroup(const LinearPique& P);

LinearPique opposite(const LinearPique& P);

// A word R^r L^l. text, when nonempty, preserves the spelling it was
// parsed from for display.
struct Word {
    i64 r = 0;
    i64 l = 0;
    std::string text{};
};

// Token syntax: R, L2, RL3, R-1L2, also with carets (R^-1L^2),
// case-insensitive. Exponent 0 and repeated letters are allowed; "1"
// or the empty string is the empty word.
Word parse_word(const std::string& text);
std::vector<Word> parse_word_list(const std::string& comma_separated);
std::string format_word(const Word& w);

// rho^r * lambda^l as a unit of Z/n.
Unit word_eval(const LinearPique& P, const Word& w);
Permutation word_permutation(const LinearPique& P, const Word& w);

// The inner multiplication group <rho, lambda> <= (Z/n)*.
struct InnerGroup {
    std::vector<i64> elements;  // ascending, always contains 1
};
InnerGroup inner_group(const LinearPique& P);
bool inner_group_is_cyclic(const LinearPique& P);

// "n:rho:lambda", e.g. "16:5:3".
LinearPique parse_pique_literal(const std::string& text);
std::string format_pique_literal(const LinearPique& P);

}  // namespace piq
