#pragma once

#include "quadff/quadexact.hpp"

namespace quadff {

// Upper bound for the ideal class number r of the ring of integers of
// F_q(T)(sqrt d), derived from the Hasse-Weil interval:
//   odd deg d:  (sqrt(q)+1)^(deg d - 1)
//   even deg d: 2 (sqrt(q)+1)^(deg d - 2) / deg d
QuadExact class_degree_upper_bound(int64_t q, int deg_d);

// Least n with q^n >= M^4, where M = 2 r ceil(deg_d / 2) + 2. For any r that
// bounds the ideal class number this bounds the degree of the smallest
// irreducible of the form x^2 - d y^2. All comparisons exact in Q(sqrt q).
int smallest_irreducible_degree_bound(int64_t q, int deg_d, const QuadExact& r);

struct ClassNumberLowerBound {
    QuadExact exact;       // (q^((deg d - 1)/4) - 2) / (deg d + 1); h_K exceeds this
    BigInt integer_bound;  // least integer strictly above `exact`: h_K >= integer_bound
};

// Lower bound for the divisor class number of F_q(T)(sqrt d), odd deg d only.
ClassNumberLowerBound class_number_lower_bound(int64_t q, int deg_d);

// Right-hand side of the effective Chebotarev inequality over the rational
// base field (genus 0):
//   2 g (|C|/|G|) q^(n/2)/n + 2 |C| q^(n/2)/n + (1 + |C|/n) |D|
// where g is the genus of the top field and |D| the degree of the different.
QuadExact chebotarev_error_bound(int64_t q, int n, const BigInt& genus_top,
                                 const BigInt& c_size, const BigInt& g_size,
                                 const BigInt& different_degree);

// Lower bound q^n/n - q^(n/2)/n - q^(n/3) - 2 r ceil(deg_d/2)/n for the
// number of degree-n finite primes unramified in the Hilbert class field.
// The cube-root term is rounded up to the next integer, which only lowers
// the returned value, so it stays a valid lower bound.
QuadExact prime_count_lower_bound(int64_t q, int n, int deg_d, const BigInt& r);

struct BoundReport {
    int64_t q = 0;
    int deg_d = 0;
    QuadExact r_used;
    QuadExact m;  // 2 r ceil(deg_d/2) + 2
    int degree_bound = 0;
    bool corollary_applicable = false;  // odd deg_d only
    QuadExact corollary_exact;
    BigInt corollary_integer;
};

BoundReport make_bound_report(int64_t q, int deg_d, const QuadExact& r);

}  // namespace quadff
