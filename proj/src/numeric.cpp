#include "quadff/numeric.hpp"

#include "quadff/errors.hpp"

#include <algorithm>

namespace quadff {

BigInt big_pow(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        exp >>= 1u;
        if (exp) b *= b;
    }
    return r;
}

BigInt iroot_floor(const BigInt& x, unsigned k) {
    if (x < 0) throw std::invalid_argument("iroot_floor: negative argument");
    if (k == 0) throw std::invalid_argument("iroot_floor: zeroth root");
    if (x == 0 || x == 1 || k == 1) return x;
    // Binary search on r in [0, 2^(ceil(bits/k))].
    unsigned bits = static_cast<unsigned>(msb(x)) + 1;
    BigInt hi = BigInt(1) << (bits / k + 1);
    BigInt lo = 0;
    while (lo < hi) {  // invariant: lo^k <= x < (hi+1)^k
        BigInt mid = (lo + hi + 1) / 2;
        if (big_pow(mid, k) <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

BigInt iroot_ceil(const BigInt& x, unsigned k) {
    BigInt f = iroot_floor(x, k);
    return big_pow(f, k) == x ? f : f + 1;
}

bool is_perfect_square(const BigInt& x, BigInt* root) {
    if (x < 0) return false;
    BigInt r = iroot_floor(x, 2);
    if (r * r != x) return false;
    if (root) *root = r;
    return true;
}

BigInt rat_floor(const BigRat& x) {
    BigInt n = numerator(x), d = denominator(x);  // d > 0 canonical
    BigInt q = n / d, r = n % d;
    if (r != 0 && n < 0) q -= 1;
    return q;
}

BigInt rat_ceil(const BigRat& x) {
    return -rat_floor(-x);
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    if (n == 0) throw std::invalid_argument("prime_factors: zero");
    std::vector<uint64_t> out;
    for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<uint64_t> divisors(uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisors: zero");
    std::vector<uint64_t> out;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int moebius(uint64_t n) {
    if (n == 0) throw std::invalid_argument("moebius: zero");
    int sign = 1;
    for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            sign = -sign;
        }
    }
    if (n > 1) sign = -sign;
    return sign;
}

}  // namespace quadff
