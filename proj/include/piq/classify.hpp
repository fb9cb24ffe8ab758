#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "piq/isomorphism.hpp"
#include "piq/similarity.hpp"

// Classification driver: enumerate the piques on Z/n, partition by
// permutation character, refine each character class into similarity
// classes with verified witnesses, and (within bounds) refine further
// into isomorphism classes. Every pairwise verdict is recorded; the
// partition is rebuilt from the verdict matrix and checked to be an
// equivalence, so an inconsistent solver fails loudly instead of being
// glossed over.
//
// The two sweep kernels (character keys, pairwise verdicts) exist in a
// serial reference version and an OpenMP version; results are identical
// by construction (each item is independent) and tests compare them.

namespace piq {

// All (rho, lambda) pairs ascending; with omit_opposites, one
// representative per {P, opposite(P)}, keeping the lex-smaller pair.
std::vector<LinearPique> enumerate_piques(Modulus n, bool omit_opposites = false);

struct AutomorphismRow {
    i64 unit;
    std::string cycles;
    i64 fixed_points;
};

std::vector<AutomorphismRow> automorphism_table(Modulus n);

struct PairVerdict {
    int a = 0;  // indices into the pique list
    int b = 0;
    bool similar = false;
    std::optional<Permutation> witness{};
};

struct CharacterClass {
    std::vector<int> members;
    std::vector<PairVerdict> pairs;  // all unordered member pairs
    std::vector<std::vector<int>> similarity_classes;
    std::vector<std::vector<int>> isomorphism_classes;  // empty if skipped
};

struct ClassificationReport {
    i64 modulus = 0;
    bool omit_opposites = false;
    bool with_isomorphism = false;
    std::vector<LinearPique> piques;
    std::vector<AutomorphismRow> automorphisms;
    std::vector<CharacterClass> classes;
    bool transitivity_ok = true;
};

struct ClassifyOptions {
    bool omit_opposites = false;
    int jobs = 1;                        // 0 = all cores, 1 = serial reference
    std::optional<bool> isomorphism{};   // default: on iff n <= iso_bound
    i64 iso_bound = 64;
};

ClassificationReport classify(Modulus n, const ClassifyOptions& opt = {});

// Canonical per-pique character key: the fix-count grid over
// [0, e) x [0, e), e = exponent of (Z/n)*. Keys are equal iff
// characters are equal.
std::vector<i64> character_key(const LinearPique& P, i64 exponent);
i64 unit_group_exponent(Modulus n);

std::vector<std::vector<i64>> character_keys_serial(const std::vector<LinearPique>& ps);
std::vector<std::vector<i64>> character_keys_parallel(const std::vector<LinearPique>& ps,
                                                      int jobs);

std::vector<PairVerdict> pair_verdicts_serial(const std::vector<LinearPique>& ps,
                                              const std::vector<std::pair<int, int>>& pairs);
std::vector<PairVerdict> pair_verdicts_parallel(const std::vector<LinearPique>& ps,
                                                const std::vector<std::pair<int, int>>& pairs,
                                                int jobs);

// Partition {0..count-1} from pairwise verdicts; *equivalence_ok is
// cleared if the verdicts are not symmetric/transitive.
std::vector<std::vector<int>> partition_from_verdicts(int count,
                                                      const std::vector<PairVerdict>& pairs,
                                                      bool* equivalence_ok);

std::string render_report_text(const ClassificationReport& r);
std::string render_report_csv(const ClassificationReport& r);
std::string render_report_json(const ClassificationReport& r);
std::string render_automorphisms_csv(const std::vector<AutomorphismRow>& rows);
std::string render_automorphisms_text(const std::vector<AutomorphismRow>& rows);

// Writes classify-<n>.txt/.csv/.json and automorphisms-<n>.csv into dir;
// returns the file names written.
std::vector<std::string> write_report_files(const ClassificationReport& r,
                                            const std::string& dir);

}  // namespace piq
