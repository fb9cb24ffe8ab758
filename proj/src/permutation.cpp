#include "piq/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace piq {

Permutation Permutation::identity(i64 degree) {
    if (degree < 1)
        throw std::invalid_argument("permutation degree must be >= 1");
    std::vector<i64> imgs(static_cast<size_t>(degree));
    for (i64 x = 0; x < degree; ++x)
        imgs[static_cast<size_t>(x)] = x;
    return Permutation(std::move(imgs));
}

Permutation Permutation::from_images(std::vector<i64> images) {
    i64 n = static_cast<i64>(images.size());
    if (n < 1)
        throw std::invalid_argument("permutation degree must be >= 1");
    std::vector<bool> seen(images.size(), false);
    for (i64 y : images) {
        if (y < 0 || y >= n || seen[static_cast<size_t>(y)])
            throw std::invalid_argument("image array is not a bijection");
        seen[static_cast<size_t>(y)] = true;
    }
    return Permutation(std::move(images));
}

Permutation compose(const Permutation& f, const Permutation& g) {
    if (f.degree() != g.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<i64> imgs(static_cast<size_t>(f.degree()));
    for (i64 x = 0; x < f.degree(); ++x)
        imgs[static_cast<size_t>(x)] = g.apply(f.apply(x));
    return Permutation::from_images(std::move(imgs));
}

Permutation inverse(const Permutation& f) {
    std::vector<i64> imgs(static_cast<size_t>(f.degree()));
    for (i64 x = 0; x < f.degree(); ++x)
        imgs[static_cast<size_t>(f.apply(x))] = x;
    return Permutation::from_images(std::move(imgs));
}

Permutation conjugate(const Permutation& s, const Permutation& p) {
    if (s.degree() != p.degree())
        throw std::invalid_argument("conjugate: degree mismatch");
    std::vector<i64> imgs(static_cast<size_t>(s.degree()));
    for (i64 x = 0; x < s.degree(); ++x)
        imgs[static_cast<size_t>(p.apply(x))] = p.apply(s.apply(x));
    return Permutation::from_images(std::move(imgs));
}

std::vector<std::vector<i64>> cycle_decomposition(const Permutation& f) {
    std::vector<std::vector<i64>> cycles;
    std::vector<bool> seen(static_cast<size_t>(f.degree()), false);
    for (i64 x = 0; x < f.degree(); ++x) {
        if (seen[static_cast<size_t>(x)] || f.apply(x) == x) {
            seen[static_cast<size_t>(x)] = true;
            continue;
        }
        std::vector<i64> cyc;
        i64 y = x;
        while (!seen[static_cast<size_t>(y)]) {
            seen[static_cast<size_t>(y)] = true;
            cyc.push_back(y);
            y = f.apply(y);
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;  // leaders ascending by construction
}

i64 fixed_point_count(const Permutation& f) {
    i64 count = 0;
    for (i64 x = 0; x < f.degree(); ++x)
        if (f.apply(x) == x)
            ++count;
    return count;
}

std::vector<i64> cycle_type(const Permutation& f) {
    std::vector<i64> type(static_cast<size_t>(f.degree()), 0);
    std::vector<bool> seen(static_cast<size_t>(f.degree()), false);
    std::vector<i64> lengths;
    for (i64 x = 0; x < f.degree(); ++x) {
        if (seen[static_cast<size_t>(x)])
            continue;
        i64 len = 0;
        i64 y = x;
        while (!seen[static_cast<size_t>(y)]) {
            seen[static_cast<size_t>(y)] = true;
            ++len;
            y = f.apply(y);
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

Permutation automorphism_permutation(const Unit& u) {
    i64 n = u.modulus().value();
    std::vector<i64> imgs(static_cast<size_t>(n));
    for (i64 x = 0; x < n; ++x)
        imgs[static_cast<size_t>(x)] = u.value() * x % n;
    return Permutation::from_images(std::move(imgs));
}

std::string format_cycles(const Permutation& f) {
    auto cycles = cycle_decomposition(f);
    if (cycles.empty())
        return "(1)";
    std::ostringstream out;
    for (const auto& cyc : cycles) {
        out << '(';
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (i)
                out << ' ';
            out << cyc[i];
        }
        out << ')';
    }
    return out.str();
}

Permutation parse_cycles(const std::string& text, i64 degree) {
    if (degree < 1)
        throw std::invalid_argument("permutation degree must be >= 1");
    std::vector<i64> imgs(static_cast<size_t>(degree));
    for (i64 x = 0; x < degree; ++x)
        imgs[static_cast<size_t>(x)] = x;
    std::vector<bool> used(static_cast<size_t>(degree), false);

    if (text == "(1)")  // canonical identity text, valid at every degree
        return Permutation::from_images(std::move(imgs));

    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_ws();
    bool any = false;
    while (i < text.size()) {
        if (text[i] != '(')
            throw std::invalid_argument("parse_cycles: expected '(' at position " +
                                        std::to_string(i));
        ++i;
        std::vector<i64> cyc;
        for (;;) {
            skip_ws();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("parse_cycles: malformed cycle");
            i64 v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            if (v >= degree)
                throw std::invalid_argument("parse_cycles: element " + std::to_string(v) +
                                            " out of range for degree " +
                                            std::to_string(degree));
            if (used[static_cast<size_t>(v)])
                throw std::invalid_argument("parse_cycles: repeated element " +
                                            std::to_string(v));
            used[static_cast<size_t>(v)] = true;
            cyc.push_back(v);
        }
        if (cyc.empty())
            throw std::invalid_argument("parse_cycles: empty cycle");
        for (size_t j = 0; j < cyc.size(); ++j)
            imgs[static_cast<size_t>(cyc[j])] = cyc[(j + 1) % cyc.size()];
        any = true;
        skip_ws();
    }
    if (!any)
        throw std::invalid_argument("parse_cycles: no cycles in input");
    return Permutation::from_images(std::move(imgs));
}

}  // namespace piq
