#pragma once

#include <optional>

#include "piq/character.hpp"
#include "piq/pique.hpp"

// Permutational similarity: a single pi in Sym(n) conjugating both
// generator permutations of one pique to those of another,
// pi(x sigma1) = pi(x) sigma2 and pi(x tau1) = pi(x) tau2.
//
// The solver never relies on linearity of the inputs: it works on bare
// permutation pairs via orbit decomposition, forced propagation from a
// base-point guess, and bipartite matching of orbits. Every witness any
// caller sees has passed the pointwise verifier.

namespace piq {

struct PermPair {
    Permutation sigma;
    Permutation tau;
};

// The generator pair (R, L) of a pique as permutations.
PermPair pique_perm_pair(const LinearPique& P);

bool verify_conjugacy(const Permutation& pi, const PermPair& a, const PermPair& b);
bool verify_witness(const Permutation& pi, const LinearPique& A, const LinearPique& B);

// Deterministic witness or nullopt. Quick-rejects on the cycle types of
// sigma, tau and sigma;tau, then matches orbits.
std::optional<Permutation> simultaneous_conjugacy(const PermPair& a, const PermPair& b);

std::optional<Permutation> permutationally_similar(const LinearPique& A, const LinearPique& B);

// Exhaustive scan of all degree! candidates in lexicographic order;
// degree <= 8 enforced. This is the oracle the main solver is tested
// against.
std::optional<Permutation> brute_force_conjugacy(const PermPair& a, const PermPair& b);

// Assemble a witness on Z/n from witnesses on the prime-power parts:
// x = (x_1, ..., x_s) maps to combine(b_1(x_1), ..., b_s(x_s)).
Permutation crt_compose_similarity(const CrtDecomposition& d,
                                   const std::vector<Permutation>& parts);

}  // namespace piq
