#pragma once

#include "quadff/bounds.hpp"
#include "quadff/polyring.hpp"
#include "quadff/zeta.hpp"

#include <map>
#include <vector>

namespace quadff {

// Degrees of the finite primes ramified in F_q(T)(sqrt d) — the irreducible
// factors of d — plus whether the infinite place ramifies (odd deg d).
struct RamifiedProfile {
    std::map<int, int> degree_counts;
    bool infinite_ramified = false;
};

RamifiedProfile ramified_profile(const Polynomial& d);

// Finite primes of degree n unramified in K: gamma_n minus the degree-n
// factors of d. The infinite place is never part of this count.
BigInt unramified_prime_count(const Polynomial& d, int n);

// Degree-n monic irreducibles p with p not dividing d that are representable
// as a unit multiple of x^2 - d y^2. Odd deg d only.
BigInt represented_prime_count(const Polynomial& d, int n);

struct CensusRow {
    int n = 0;
    BigInt gamma_n;   // all monic irreducibles of degree n
    BigInt eps_n;     // ramified finite primes of degree n
    BigInt pi_n;      // unramified primes of degree n
    BigInt pi_C_n;    // of those, representable by the form
    BigInt r;         // exact ideal class number, |G| = 2r
    BigRat predicted;   // pi_n / (2r)
    QuadExact rhs;      // effective Chebotarev error bound
    bool holds = false;      // |pi_C_n - predicted| <= rhs, exactly
    bool pi_lower_ok = false;  // pi_n >= the unramified-prime lower bound
    bool genus_clamped = false;
};

// Full empirical check of the effective Chebotarev inequality for the class
// of the identity: rows n = 1..n_max with exact verdicts. Requires odd deg d
// (ramified infinite place); r is always the exact class number, computed by
// point counting, never an upper bound.
std::vector<CensusRow> chebotarev_census(const Polynomial& d, int n_max,
                                         const PointCountOptions& opts = {},
                                         unsigned workers = 1);

}  // namespace quadff
