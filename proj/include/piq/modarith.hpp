#pragma once

#include <cstdint>
#include <vector>

// Modular arithmetic on Z/n: unit groups, orders, factorization and CRT
// splitting. Everything here is desk scale (n up to ~1e5); algorithms are
// the obvious ones (trial division, exhaustive order search).

namespace piq {

using i64 = std::int64_t;

// A validated modulus n >= 2.
class Modulus {
public:
    explicit Modulus(i64 n);
    i64 value() const { return n_; }
    bool operator==(const Modulus&) const = default;

private:
    i64 n_;
};

// A residue coprime to its modulus, stored reduced to [0, n).
class Unit {
public:
    Unit(i64 value, Modulus m);
    i64 value() const { return v_; }
    Modulus modulus() const { return m_; }
    bool operator==(const Unit&) const = default;

private:
    i64 v_;
    Modulus m_;
};

struct PrimePower {
    i64 p;
    i64 k;
    i64 q;  // p^k
};

// Prime-power factorization of n with cached CRT recombination
// coefficients (one extended gcd per part, done at construction).
class CrtDecomposition {
public:
    explicit CrtDecomposition(Modulus n);
    Modulus modulus() const { return n_; }
    const std::vector<PrimePower>& parts() const { return parts_; }

    std::vector<i64> split(i64 x) const;
    i64 combine(const std::vector<i64>& residues) const;

private:
    Modulus n_;
    std::vector<PrimePower> parts_;
    std::vector<i64> coeff_;  // e_i = 1 mod q_i, 0 mod q_j (j != i)
};

i64 mod_pow(i64 base, i64 exp, i64 n);
i64 mod_inverse(i64 a, i64 n);  // throws unless gcd(a, n) = 1

// Units of Z/n in ascending order.
std::vector<Unit> unit_group(Modulus n);

i64 euler_phi(Modulus n);

// Multiplicative order of u in (Z/n)*.
i64 unit_order(const Unit& u);

CrtDecomposition factorize(Modulus n);

// Largest power of p dividing m (1 if p does not divide m).
i64 p_part(i64 m, i64 p);

std::vector<i64> crt_split(const CrtDecomposition& d, i64 x);
i64 crt_combine(const CrtDecomposition& d, const std::vector<i64>& residues);

// Exhaustive: true iff some unit has order phi(n).
bool unit_group_is_cyclic(Modulus n);

}  // namespace piq
