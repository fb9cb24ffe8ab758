#include "piq/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace piq {

std::optional<IsomorphismWitness> linear_isomorphic(const LinearPique& A,
                                                    const LinearPique& B) {
    if (A.modulus() != B.modulus())
        return std::nullopt;
    i64 n = A.modulus().value();
    for (const Unit& u : unit_group(A.modulus())) {
        // intertwining: u rho1 = rho2 u and u lambda1 = lambda2 u
        if (u.value() * A.rho() % n == B.rho() * u.value() % n &&
            u.value() * A.lambda() % n == B.lambda() * u.value() % n)
            return IsomorphismWitness{automorphism_permutation(u), IsoKind::linear};
    }
    return std::nullopt;
}

namespace {

// Backtracking over images in lexicographic order. After every tentative
// assignment, products of assigned elements force further images through
// f(x*y) = f(x) o f(y); a clash prunes the branch. Forced images are
// implied by the prefix, so the first complete map found is the
// lexicographically least witness.
class IsoSearch {
public:
    IsoSearch(const LinearPique& A, const LinearPique& B)
        : n_(A.modulus().value()),
          f_(static_cast<size_t>(n_), -1),
          used_(static_cast<size_t>(n_), false) {
        mul1_.resize(static_cast<size_t>(n_ * n_));
        mul2_.resize(static_cast<size_t>(n_ * n_));
        for (i64 x = 0; x < n_; ++x)
            for (i64 y = 0; y < n_; ++y) {
                mul1_[static_cast<size_t>(x * n_ + y)] = A.mul(x, y);
                mul2_[static_cast<size_t>(x * n_ + y)] = B.mul(x, y);
            }
    }

    std::optional<std::vector<i64>> run(bool pointed) {
        if (pointed) {
            if (!assign(0, 0) || !propagate(0))
                return std::nullopt;
        }
        if (search(0))
            return f_;
        return std::nullopt;
    }

private:
    bool assign(i64 x, i64 v) {
        i64& slot = f_[static_cast<size_t>(x)];
        if (slot >= 0)
            return slot == v;
        if (used_[static_cast<size_t>(v)])
            return false;
        slot = v;
        used_[static_cast<size_t>(v)] = true;
        order_.push_back(x);
        return true;
    }

    // Process order_[from..] against everything assigned; grows as it goes.
    bool propagate(size_t from) {
        for (size_t qi = from; qi < order_.size(); ++qi) {
            i64 x = order_[qi];
            i64 fx = f_[static_cast<size_t>(x)];
            for (size_t oj = 0; oj < order_.size(); ++oj) {
                i64 y = order_[oj];
                i64 fy = f_[static_cast<size_t>(y)];
                if (!assign(mul1_[static_cast<size_t>(x * n_ + y)],
                            mul2_[static_cast<size_t>(fx * n_ + fy)]))
                    return false;
                if (!assign(mul1_[static_cast<size_t>(y * n_ + x)],
                            mul2_[static_cast<size_t>(fy * n_ + fx)]))
                    return false;
            }
        }
        return true;
    }

    void undo(size_t checkpoint) {
        while (order_.size() > checkpoint) {
            i64 x = order_.back();
            order_.pop_back();
            used_[static_cast<size_t>(f_[static_cast<size_t>(x)])] = false;
            f_[static_cast<size_t>(x)] = -1;
        }
    }

    bool search(i64 from) {
        i64 x = from;
        while (x < n_ && f_[static_cast<size_t>(x)] >= 0)
            ++x;
        if (x == n_)
            return true;
        for (i64 v = 0; v < n_; ++v) {
            if (used_[static_cast<size_t>(v)])
                continue;
            size_t checkpoint = order_.size();
            if (assign(x, v) && propagate(checkpoint) && search(x + 1))
                return true;
            undo(checkpoint);
        }
        return false;
    }

    i64 n_;
    std::vector<i64> mul1_;
    std::vector<i64> mul2_;
    std::vector<i64> f_;
    std::vector<bool> used_;
    std::vector<i64> order_;
};

}  // namespace

std::optional<IsomorphismWitness> pique_isomorphic(const LinearPique& A,
                                                   const LinearPique& B,
                                                   const IsoOptions& opt) {
    if (A.modulus() != B.modulus())
        return std::nullopt;
    if (A.modulus().value() > opt.bound)
        throw std::invalid_argument("pique_isomorphic: modulus exceeds search bound " +
                                    std::to_string(opt.bound));
    IsoSearch search(A, B);
    auto f = search.run(!opt.magma);
    if (!f)
        return std::nullopt;
    IsoKind kind = opt.magma ? IsoKind::magma : IsoKind::pointed;
    IsomorphismWitness w{Permutation::from_images(*f), kind};
    if (!verify_isomorphism(w.map, A, B, kind))
        throw std::logic_error("pique_isomorphic: produced witness failed verification");
    return w;
}

bool verify_isomorphism(const Permutation& f, const LinearPique& A,
                        const LinearPique& B, IsoKind kind) {
    if (A.modulus() != B.modulus() || f.degree() != A.modulus().value())
        return false;
    i64 n = f.degree();
    for (i64 x = 0; x < n; ++x)
        for (i64 y = 0; y < n; ++y)
            if (f.apply(A.mul(x, y)) != B.mul(f.apply(x), f.apply(y)))
                return false;
    if (kind == IsoKind::pointed || kind == IsoKind::linear)
        if (f.apply(0) != 0)
            return false;
    if (kind == IsoKind::linear) {
        i64 u = f.apply(1);
        for (i64 x = 0; x < n; ++x)
            if (f.apply(x) != u * x % n)
                return false;
    }
    return true;
}

Fingerprint identity_fingerprint(const LinearPique& P) {
    i64 n = P.modulus().value();
    Fingerprint fp;
    fp.cube_values.reserve(static_cast<size_t>(n));
    fp.square_values.reserve(static_cast<size_t>(n));
    for (i64 x = 0; x < n; ++x) {
        i64 sq = P.mul(x, x);
        fp.square_values.push_back(sq);
        fp.cube_values.push_back(P.mul(sq, x));
    }
    fp.cube_constant = std::adjacent_find(fp.cube_values.begin(), fp.cube_values.end(),
                                          std::not_equal_to<>()) == fp.cube_values.end();
    std::sort(fp.cube_values.begin(), fp.cube_values.end());
    std::sort(fp.square_values.begin(), fp.square_values.end());
    for (i64 x = 0; x < n; ++x)
        for (i64 y = 0; y < n; ++y)
            if (P.mul(x, y) == P.mul(y, x))
                ++fp.commuting_pairs;
    return fp;
}

}  // namespace piq
