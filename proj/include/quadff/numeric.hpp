#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace quadff {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt big_pow(const BigInt& base, unsigned exp);

// Largest r with r^k <= x. Requires x >= 0, k >= 1.
BigInt iroot_floor(const BigInt& x, unsigned k);

// Smallest r with r^k >= x.
BigInt iroot_ceil(const BigInt& x, unsigned k);

bool is_perfect_square(const BigInt& x, BigInt* root = nullptr);

// floor(a/b) for exact rationals (toward minus infinity, not toward zero).
BigInt rat_floor(const BigRat& x);
BigInt rat_ceil(const BigRat& x);

// Prime factors of n, ascending, without multiplicity. n >= 1.
std::vector<uint64_t> prime_factors(uint64_t n);

// Divisors of n, ascending. n >= 1.
std::vector<uint64_t> divisors(uint64_t n);

// Moebius function of n >= 1.
int moebius(uint64_t n);

}  // namespace quadff
