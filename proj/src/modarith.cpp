#include "piq/modarith.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace piq {

namespace {

i64 mod_reduce(i64 x, i64 n) {
    i64 r = x % n;
    return r < 0 ? r + n : r;
}

// Extended gcd: returns g and sets x with a*x = g (mod n-context use).
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    i64 x1 = 0;
    i64 y1 = 0;
    i64 g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

Modulus::Modulus(i64 n) : n_(n) {
    if (n < 2)
        throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(n));
}

Unit::Unit(i64 value, Modulus m) : v_(mod_reduce(value, m.value())), m_(m) {
    if (std::gcd(v_, m.value()) != 1)
        throw std::invalid_argument("not a unit mod " + std::to_string(m.value()) +
                                    ": " + std::to_string(value));
}

i64 mod_pow(i64 base, i64 exp, i64 n) {
    if (exp < 0)
        throw std::invalid_argument("mod_pow wants exp >= 0");
    i64 acc = 1 % n;
    i64 b = mod_reduce(base, n);
    while (exp > 0) {
        if (exp & 1)
            acc = acc * b % n;
        b = b * b % n;
        exp >>= 1;
    }
    return acc;
}

i64 mod_inverse(i64 a, i64 n) {
    i64 x = 0;
    i64 y = 0;
    i64 g = ext_gcd(mod_reduce(a, n), n, x, y);
    if (g != 1)
        throw std::invalid_argument("no inverse: gcd(" + std::to_string(a) + ", " +
                                    std::to_string(n) + ") = " + std::to_string(g));
    return mod_reduce(x, n);
}

std::vector<Unit> unit_group(Modulus n) {
    std::vector<Unit> out;
    for (i64 u = 1; u < n.value(); ++u)
        if (std::gcd(u, n.value()) == 1)
            out.emplace_back(u, n);
    return out;
}

i64 euler_phi(Modulus n) {
    i64 m = n.value();
    i64 phi = m;
    for (i64 p = 2; p * p <= m; ++p) {
        if (m % p)
            continue;
        phi -= phi / p;
        while (m % p == 0)
            m /= p;
    }
    if (m > 1)
        phi -= phi / m;
    return phi;
}

i64 unit_order(const Unit& u) {
    i64 n = u.modulus().value();
    i64 ord = 1;
    i64 v = u.value();
    while (v != 1) {
        v = v * u.value() % n;
        ++ord;
    }
    return ord;
}

CrtDecomposition::CrtDecomposition(Modulus n) : n_(n) {
    i64 m = n.value();
    for (i64 p = 2; p * p <= m; ++p) {
        if (m % p)
            continue;
        PrimePower pp{p, 0, 1};
        while (m % p == 0) {
            m /= p;
            pp.k += 1;
            pp.q *= p;
        }
        parts_.push_back(pp);
    }
    if (m > 1)
        parts_.push_back({m, 1, m});

    for (const PrimePower& pp : parts_) {
        i64 rest = n.value() / pp.q;
        // e = rest * (rest^-1 mod q) is 1 mod q and 0 mod every other part
        i64 e = rest * mod_inverse(rest, pp.q) % n.value();
        coeff_.push_back(e);
    }
}

std::vector<i64> CrtDecomposition::split(i64 x) const {
    if (x < 0 || x >= n_.value())
        throw std::invalid_argument("crt_split: residue out of range");
    std::vector<i64> out;
    out.reserve(parts_.size());
    for (const PrimePower& pp : parts_)
        out.push_back(x % pp.q);
    return out;
}

i64 CrtDecomposition::combine(const std::vector<i64>& residues) const {
    if (residues.size() != parts_.size())
        throw std::invalid_argument("crt_combine: wrong number of residues");
    i64 acc = 0;
    for (size_t i = 0; i < parts_.size(); ++i) {
        i64 r = residues[i];
        if (r < 0 || r >= parts_[i].q)
            throw std::invalid_argument("crt_combine: residue out of range");
        acc = (acc + r % n_.value() * coeff_[i]) % n_.value();
    }
    return acc;
}

CrtDecomposition factorize(Modulus n) {
    return CrtDecomposition(n);
}

i64 p_part(i64 m, i64 p) {
    if (m <= 0 || p < 2)
        throw std::invalid_argument("p_part wants m >= 1, p >= 2");
    i64 q = 1;
    while (m % p == 0) {
        m /= p;
        q *= p;
    }
    return q;
}

std::vector<i64> crt_split(const CrtDecomposition& d, i64 x) {
    return d.split(x);
}

i64 crt_combine(const CrtDecomposition& d, const std::vector<i64>& residues) {
    return d.combine(residues);
}

bool unit_group_is_cyclic(Modulus n) {
    i64 phi = euler_phi(n);
    for (const Unit& u : unit_group(n))
        if (unit_order(u) == phi)
            return true;
    return false;
}

}  // namespace piq
