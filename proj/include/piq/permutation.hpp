#pragma once

#include <string>
#include <vector>

#include "piq/modarith.hpp"

// Permutations of {0, ..., n-1} stored as image arrays, plus the cycle
// notation used throughout the reports: cycles of length >= 2, each
// rotated so its smallest element leads, sorted by leader, fixed points
// omitted, identity printed "(1)".

namespace piq {

class Permutation {
public:
    static Permutation identity(i64 degree);
    static Permutation from_images(std::vector<i64> images);

    i64 degree() const { return static_cast<i64>(images_.size()); }
    i64 apply(i64 x) const { return images_[static_cast<size_t>(x)]; }
    const std::vector<i64>& images() const { return images_; }
    bool operator==(const Permutation&) const = default;

private:
    explicit Permutation(std::vector<i64> images) : images_(std::move(images)) {}
    std::vector<i64> images_;
};

// Apply f first, then g: result(x) = g(f(x)).
Permutation compose(const Permutation& f, const Permutation& g);

Permutation inverse(const Permutation& f);

// The conjugate c of s by p, defined pointwise by c(p(x)) = p(s(x)).
Permutation conjugate(const Permutation& s, const Permutation& p);

std::vector<std::vector<i64>> cycle_decomposition(const Permutation& f);

i64 fixed_point_count(const Permutation& f);

// Cycle lengths including fixed points, ascending. Equal cycle types are
// necessary for conjugacy.
std::vector<i64> cycle_type(const Permutation& f);

// x -> u*x mod n, the automorphism of Z/n attached to a unit.
Permutation automorphism_permutation(const Unit& u);

std::string format_cycles(const Permutation& f);

// Inverse of format_cycles. Accepts any disjoint-cycle text; singleton
// cycles are no-ops, so "(1)" parses to the identity at every degree.
Permutation parse_cycles(const std::string& text, i64 degree);

}  // namespace piq
