#include "piq/pique.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace piq {

LinearPique::LinearPique(Modulus n, i64 rho, i64 lambda)
    : n_(n), rho_(rho, n), lambda_(lambda, n) {}

i64 LinearPique::mul(i64 x, i64 y) const {
    i64 n = n_.value();
    if (x < 0 || x >= n || y < 0 || y >= n)
        throw std::invalid_argument("mul: element out of range");
    return (rho() * x + lambda() * y) % n;
}

i64 LinearPique::rdiv(i64 x, i64 y) const {
    i64 n = n_.value();
    if (x < 0 || x >= n || y < 0 || y >= n)
        throw std::invalid_argument("rdiv: element out of range");
    i64 num = (x - lambda() * y) % n;
    if (num < 0)
        num += n;
    return num * mod_inverse(rho(), n) % n;
}

i64 LinearPique::ldiv(i64 x, i64 y) const {
    i64 n = n_.value();
    if (x < 0 || x >= n || y < 0 || y >= n)
        throw std::invalid_argument("ldiv: element out of range");
    i64 num = (y - rho() * x) % n;
    if (num < 0)
        num += n;
    return num * mod_inverse(lambda(), n) % n;
}

bool verify_quasigroup(const LinearPique& P) {
    i64 n = P.modulus().value();
    // Latin square: each row and column of the multiplication table is a
    // bijection, and the divisions invert multiplication on both sides.
    for (i64 x = 0; x < n; ++x) {
        std::vector<bool> row(static_cast<size_t>(n), false);
        std::vector<bool> col(static_cast<size_t>(n), false);
        for (i64 y = 0; y < n; ++y) {
            i64 r = P.mul(x, y);
            i64 c = P.mul(y, x);
            if (row[static_cast<size_t>(r)] || col[static_cast<size_t>(c)])
                return false;
            row[static_cast<size_t>(r)] = true;
            col[static_cast<size_t>(c)] = true;
            if (P.mul(P.rdiv(r, y), y) != r || P.rdiv(P.mul(x, y), y) != x)
                return false;
            if (P.mul(x, P.ldiv(x, c)) != c || P.ldiv(x, P.mul(x, y)) != y)
                return false;
        }
    }
    return P.mul(0, 0) == 0;
}

LinearPique opposite(const LinearPique& P) {
    return LinearPique(P.modulus(), P.lambda(), P.rho());
}

namespace {

// One token: letter R/L, optional '^', optional sign, optional digits.
void apply_token(Word& w, char letter, i64 exp) {
    if (letter == 'r' || letter == 'R')
        w.r += exp;
    else
        w.l += exp;
}

}  // namespace

Word parse_word(const std::string& raw) {
    size_t first = raw.find_first_not_of(" \t");
    std::string text =
        first == std::string::npos
            ? std::string{}
            : raw.substr(first, raw.find_last_not_of(" \t") - first + 1);
    Word w;
    w.text = text;
    if (text.empty() || text == "1")
        return w;  // the empty word
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c != 'R' && c != 'r' && c != 'L' && c != 'l')
            throw std::invalid_argument("parse_word: unexpected character '" +
                                        std::string(1, c) + "' in \"" + text + "\"");
        ++i;
        i64 exp = 1;
        if (i < text.size() && text[i] == '^')
            ++i;
        bool neg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
            neg = text[i] == '-';
            ++i;
        }
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            exp = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                exp = exp * 10 + (text[i] - '0');
                ++i;
            }
        } else if (neg) {
            throw std::invalid_argument("parse_word: sign without digits in \"" + text +
                                        "\"");
        }
        apply_token(w, c, neg ? -exp : exp);
        skip_ws();
    }
    return w;
}

std::vector<Word> parse_word_list(const std::string& comma_separated) {
    std::vector<Word> out;
    std::string token;
    std::istringstream in(comma_separated);
    while (std::getline(in, token, ','))
        out.push_back(parse_word(token));
    if (out.empty())
        throw std::invalid_argument("parse_word_list: no words");
    return out;
}

std::string format_word(const Word& w) {
    if (!w.text.empty())
        return w.text;
    if (w.r == 0 && w.l == 0)
        return "1";
    std::ostringstream out;
    if (w.r != 0) {
        out << 'R';
        if (w.r != 1)
            out << w.r;
    }
    if (w.l != 0) {
        out << 'L';
        if (w.l != 1)
            out << w.l;
    }
    return out.str();
}

Unit word_eval(const LinearPique& P, const Word& w) {
    i64 n = P.modulus().value();
    auto power = [n](i64 base, i64 exp) {
        if (exp >= 0)
            return mod_pow(base, exp, n);
        return mod_pow(mod_inverse(base, n), -exp, n);
    };
    i64 v = power(P.rho(), w.r) * power(P.lambda(), w.l) % n;
    return Unit(v, P.modulus());
}

Permutation word_permutation(const LinearPique& P, const Word& w) {
    return automorphism_permutation(word_eval(P, w));
}

InnerGroup inner_group(const LinearPique& P) {
    i64 n = P.modulus().value();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::queue<i64> queue;
    seen[1] = true;
    queue.push(1);
    while (!queue.empty()) {
        i64 v = queue.front();
        queue.pop();
        for (i64 g : {P.rho(), P.lambda()}) {
            i64 w = v * g % n;
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                queue.push(w);
            }
        }
    }
    InnerGroup out;
    for (i64 v = 0; v < n; ++v)
        if (seen[static_cast<size_t>(v)])
            out.elements.push_back(v);
    return out;
}

bool inner_group_is_cyclic(const LinearPique& P) {
    InnerGroup g = inner_group(P);
    i64 size = static_cast<i64>(g.elements.size());
    for (i64 v : g.elements)
        if (unit_order(Unit(v, P.modulus())) == size)
            return true;
    return false;
}

LinearPique parse_pique_literal(const std::string& text) {
    std::istringstream in(text);
    std::string part;
    std::vector<i64> vals;
    while (std::getline(in, part, ':')) {
        size_t pos = 0;
        i64 v = 0;
        try {
            v = std::stoll(part, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad pique literal \"" + text +
                                        "\", want n:rho:lambda");
        }
        if (pos != part.size())
            throw std::invalid_argument("bad pique literal \"" + text +
                                        "\", want n:rho:lambda");
        vals.push_back(v);
    }
    if (vals.size() != 3)
        throw std::invalid_argument("bad pique literal \"" + text +
                                    "\", want n:rho:lambda");
    return LinearPique(Modulus(vals[0]), vals[1], vals[2]);
}

std::string format_pique_literal(const LinearPique& P) {
    std::ostringstream out;
    out << P.modulus().value() << ':' << P.rho() << ':' << P.lambda();
    return out.str();
}

}  // namespace piq
