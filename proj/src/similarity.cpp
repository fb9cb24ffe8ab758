#include "piq/similarity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace piq {

namespace {

void check_pair(const PermPair& p) {
    if (p.sigma.degree() != p.tau.degree())
        throw std::invalid_argument("PermPair: sigma and tau degrees differ");
}

// Orbits of <sigma, tau>, each sorted ascending, ordered by leader.
// Forward images suffice: on a finite set every inverse is a power.
std::vector<std::vector<i64>> orbits_of(const PermPair& p) {
    i64 n = p.sigma.degree();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<std::vector<i64>> out;
    for (i64 x = 0; x < n; ++x) {
        if (seen[static_cast<size_t>(x)])
            continue;
        std::vector<i64> orbit;
        std::vector<i64> stack{x};
        seen[static_cast<size_t>(x)] = true;
        while (!stack.empty()) {
            i64 y = stack.back();
            stack.pop_back();
            orbit.push_back(y);
            for (const Permutation* g : {&p.sigma, &p.tau}) {
                i64 z = g->apply(y);
                if (!seen[static_cast<size_t>(z)]) {
                    seen[static_cast<size_t>(z)] = true;
                    stack.push_back(z);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

// Length of the cycle through x, for candidate pruning.
std::vector<i64> cycle_length_at(const Permutation& f) {
    i64 n = f.degree();
    std::vector<i64> len(static_cast<size_t>(n), 0);
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (i64 x = 0; x < n; ++x) {
        if (seen[static_cast<size_t>(x)])
            continue;
        std::vector<i64> cyc;
        i64 y = x;
        while (!seen[static_cast<size_t>(y)]) {
            seen[static_cast<size_t>(y)] = true;
            cyc.push_back(y);
            y = f.apply(y);
        }
        for (i64 z : cyc)
            len[static_cast<size_t>(z)] = static_cast<i64>(cyc.size());
    }
    return len;
}

}  // namespace

PermPair pique_perm_pair(const LinearPique& P) {
    return {automorphism_permutation(P.rho_unit()),
            automorphism_permutation(P.lambda_unit())};
}

bool verify_conjugacy(const Permutation& pi, const PermPair& a, const PermPair& b) {
    check_pair(a);
    check_pair(b);
    if (pi.degree() != a.sigma.degree() || a.sigma.degree() != b.sigma.degree())
        return false;
    for (i64 x = 0; x < pi.degree(); ++x) {
        if (pi.apply(a.sigma.apply(x)) != b.sigma.apply(pi.apply(x)))
            return false;
        if (pi.apply(a.tau.apply(x)) != b.tau.apply(pi.apply(x)))
            return false;
    }
    return true;
}

bool verify_witness(const Permutation& pi, const LinearPique& A, const LinearPique& B) {
    if (A.modulus() != B.modulus())
        return false;
    return verify_conjugacy(pi, pique_perm_pair(A), pique_perm_pair(B));
}

std::optional<Permutation> simultaneous_conjugacy(const PermPair& a, const PermPair& b) {
    check_pair(a);
    check_pair(b);
    if (a.sigma.degree() != b.sigma.degree())
        throw std::invalid_argument("simultaneous_conjugacy: degree mismatch");
    i64 n = a.sigma.degree();

    // Conjugation preserves cycle type, also for the product sigma;tau.
    if (cycle_type(a.sigma) != cycle_type(b.sigma) ||
        cycle_type(a.tau) != cycle_type(b.tau) ||
        cycle_type(compose(a.sigma, a.tau)) != cycle_type(compose(b.sigma, b.tau)))
        return std::nullopt;

    auto orbs_a = orbits_of(a);
    auto orbs_b = orbits_of(b);
    if (orbs_a.size() != orbs_b.size())
        return std::nullopt;
    {
        std::vector<size_t> sa, sb;
        for (const auto& o : orbs_a)
            sa.push_back(o.size());
        for (const auto& o : orbs_b)
            sb.push_back(o.size());
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return std::nullopt;
    }

    auto len_sa = cycle_length_at(a.sigma);
    auto len_ta = cycle_length_at(a.tau);
    auto len_pa = cycle_length_at(compose(a.sigma, a.tau));
    auto len_sb = cycle_length_at(b.sigma);
    auto len_tb = cycle_length_at(b.tau);
    auto len_pb = cycle_length_at(compose(b.sigma, b.tau));

    std::vector<i64> img(static_cast<size_t>(n));
    std::vector<bool> used(static_cast<size_t>(n));

    // Forced propagation: guess the image of the orbit leader, then every
    // other image in the orbit is determined by chasing sigma and tau
    // edges; any clash refutes the guess.
    auto try_map = [&](const std::vector<i64>& o1,
                       i64 y0) -> std::optional<std::vector<std::pair<i64, i64>>> {
        std::fill(img.begin(), img.end(), -1);
        std::fill(used.begin(), used.end(), false);
        i64 x0 = o1.front();
        img[static_cast<size_t>(x0)] = y0;
        used[static_cast<size_t>(y0)] = true;
        std::vector<i64> stack{x0};
        std::vector<std::pair<i64, i64>> assignment{{x0, y0}};
        while (!stack.empty()) {
            i64 x = stack.back();
            stack.pop_back();
            i64 y = img[static_cast<size_t>(x)];
            for (const auto& [ga, gb] :
                 {std::pair{&a.sigma, &b.sigma}, std::pair{&a.tau, &b.tau}}) {
                i64 xn = ga->apply(x);
                i64 yn = gb->apply(y);
                i64& slot = img[static_cast<size_t>(xn)];
                if (slot >= 0) {
                    if (slot != yn)
                        return std::nullopt;
                } else {
                    if (used[static_cast<size_t>(yn)])
                        return std::nullopt;
                    slot = yn;
                    used[static_cast<size_t>(yn)] = true;
                    assignment.emplace_back(xn, yn);
                    stack.push_back(xn);
                }
            }
        }
        if (assignment.size() != o1.size())
            return std::nullopt;
        return assignment;
    };

    // One edge per compatible orbit pair, keeping the first bijection
    // found (candidates scanned ascending, so the result is determined).
    size_t t = orbs_a.size();
    std::map<std::pair<size_t, size_t>, std::vector<std::pair<i64, i64>>> edge;
    for (size_t i = 0; i < t; ++i) {
        i64 x0 = orbs_a[i].front();
        for (size_t j = 0; j < t; ++j) {
            if (orbs_a[i].size() != orbs_b[j].size())
                continue;
            for (i64 y : orbs_b[j]) {
                if (len_sa[static_cast<size_t>(x0)] != len_sb[static_cast<size_t>(y)] ||
                    len_ta[static_cast<size_t>(x0)] != len_tb[static_cast<size_t>(y)] ||
                    len_pa[static_cast<size_t>(x0)] != len_pb[static_cast<size_t>(y)])
                    continue;
                if (auto m = try_map(orbs_a[i], y)) {
                    edge[{i, j}] = std::move(*m);
                    break;
                }
            }
        }
    }

    // Perfect matching of orbits (Kuhn's augmenting paths).
    std::vector<int> match_b(t, -1);
    std::vector<bool> visited(t);
    auto augment = [&](auto&& self, size_t i) -> bool {
        for (size_t j = 0; j < t; ++j) {
            if (visited[j] || !edge.count({i, j}))
                continue;
            visited[j] = true;
            if (match_b[j] < 0 || self(self, static_cast<size_t>(match_b[j]))) {
                match_b[j] = static_cast<int>(i);
                return true;
            }
        }
        return false;
    };
    for (size_t i = 0; i < t; ++i) {
        std::fill(visited.begin(), visited.end(), false);
        if (!augment(augment, i))
            return std::nullopt;
    }

    std::vector<i64> result(static_cast<size_t>(n));
    for (size_t j = 0; j < t; ++j)
        for (auto [x, y] : edge[{static_cast<size_t>(match_b[j]), j}])
            result[static_cast<size_t>(x)] = y;
    Permutation pi = Permutation::from_images(std::move(result));
    if (!verify_conjugacy(pi, a, b))
        throw std::logic_error("simultaneous_conjugacy: produced witness failed verification");
    return pi;
}

std::optional<Permutation> permutationally_similar(const LinearPique& A,
                                                   const LinearPique& B) {
    if (A.modulus() != B.modulus())
        return std::nullopt;  // different carriers are never similar
    auto pi = simultaneous_conjugacy(pique_perm_pair(A), pique_perm_pair(B));
    if (pi && !verify_witness(*pi, A, B))
        throw std::logic_error("permutationally_similar: witness failed verification");
    return pi;
}

std::optional<Permutation> brute_force_conjugacy(const PermPair& a, const PermPair& b) {
    check_pair(a);
    check_pair(b);
    if (a.sigma.degree() != b.sigma.degree())
        throw std::invalid_argument("brute_force_conjugacy: degree mismatch");
    i64 n = a.sigma.degree();
    if (n > 8)
        throw std::invalid_argument("brute_force_conjugacy: degree > 8");
    std::vector<i64> imgs(static_cast<size_t>(n));
    std::iota(imgs.begin(), imgs.end(), 0);
    do {
        bool ok = true;
        for (i64 x = 0; x < n && ok; ++x) {
            ok = imgs[static_cast<size_t>(a.sigma.apply(x))] ==
                     b.sigma.apply(imgs[static_cast<size_t>(x)]) &&
                 imgs[static_cast<size_t>(a.tau.apply(x))] ==
                     b.tau.apply(imgs[static_cast<size_t>(x)]);
        }
        if (ok)
            return Permutation::from_images(imgs);
    } while (std::next_permutation(imgs.begin(), imgs.end()));
    return std::nullopt;
}

Permutation crt_compose_similarity(const CrtDecomposition& d,
                                   const std::vector<Permutation>& parts) {
    const auto& pps = d.parts();
    if (parts.size() != pps.size())
        throw std::invalid_argument("crt_compose_similarity: wrong part count");
    for (size_t i = 0; i < parts.size(); ++i)
        if (parts[i].degree() != pps[i].q)
            throw std::invalid_argument("crt_compose_similarity: part degree mismatch");
    i64 n = d.modulus().value();
    std::vector<i64> imgs(static_cast<size_t>(n));
    std::vector<i64> residues(parts.size());
    for (i64 x = 0; x < n; ++x) {
        for (size_t i = 0; i < parts.size(); ++i)
            residues[i] = parts[i].apply(x % pps[i].q);
        imgs[static_cast<size_t>(x)] = d.combine(residues);
    }
    return Permutation::from_images(std::move(imgs));
}

}  // namespace piq
