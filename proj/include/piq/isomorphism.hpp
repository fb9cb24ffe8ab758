#pragma once

#include <optional>

#include "piq/pique.hpp"

// Isomorphism of piques. linear_isomorphic searches for an intertwining
// group automorphism u (u rho1 = rho2 u and u lambda1 = lambda2 u);
// pique_isomorphic is a general backtracking search over bijections with
// forced propagation through the multiplication tables, by default
// pointed (f(0) = 0). Neither assumes the other's answer.

namespace piq {

enum class IsoKind { linear, pointed, magma };

struct IsomorphismWitness {
    Permutation map;
    IsoKind kind;
};

std::optional<IsomorphismWitness> linear_isomorphic(const LinearPique& A,
                                                    const LinearPique& B);

struct IsoOptions {
    bool magma = false;  // drop the f(0) = 0 requirement
    i64 bound = 64;      // largest modulus the search accepts
};

// Lexicographically least witness (as an image array) or nullopt.
std::optional<IsomorphismWitness> pique_isomorphic(const LinearPique& A,
                                                   const LinearPique& B,
                                                   const IsoOptions& opt = {});

bool verify_isomorphism(const Permutation& f, const LinearPique& A,
                        const LinearPique& B, IsoKind kind);

// Cheap isomorphism invariants; any mismatch proves non-isomorphism
// without search.
struct Fingerprint {
    bool cube_constant = false;      // is (x*x)*x the same for all x?
    std::vector<i64> cube_values;    // multiset {(x*x)*x}, sorted
    std::vector<i64> square_values;  // multiset {x*x}, sorted
    i64 commuting_pairs = 0;         // |{(x,y): x*y = y*x}|
    bool operator==(const Fingerprint&) const = default;
};

Fingerprint identity_fingerprint(const LinearPique& P);

}  // namespace piq
