#pragma once

#include "quadff/numeric.hpp"

#include <cstdint>
#include <string>

namespace quadff {

// Exact element of Q(sqrt(r)): value = a + b*sqrt(r) with rational a, b and a
// non-square integer radicand r > 1. Rationals carry r = 0, b = 0. Perfect
// square radicands are folded into the rational part on construction, so the
// representation is unique and comparisons are exact.
class QuadExact {
public:
    QuadExact() : a_(0), b_(0), r_(0) {}
    QuadExact(const BigRat& a) : a_(a), b_(0), r_(0) {}  // NOLINT: implicit by design
    QuadExact(int64_t a) : a_(a), b_(0), r_(0) {}        // NOLINT
    QuadExact(const BigRat& a, const BigRat& b, int64_t r);
    static QuadExact sqrt_of(int64_t r);

    const BigRat& rational_part() const { return a_; }
    const BigRat& radical_part() const { return b_; }
    int64_t radicand() const { return r_; }
    bool is_rational() const { return r_ == 0; }

    QuadExact operator+(const QuadExact& o) const;
    QuadExact operator-(const QuadExact& o) const;
    QuadExact operator*(const QuadExact& o) const;
    QuadExact operator-() const;
    // division by a nonzero rational
    QuadExact operator/(const BigRat& d) const;
    QuadExact pow(unsigned e) const;

    // exact sign: -1, 0, +1
    int sign() const;
    // exact three-way comparison
    static int compare(const QuadExact& x, const QuadExact& y);
    bool operator==(const QuadExact& o) const { return compare(*this, o) == 0; }
    bool operator!=(const QuadExact& o) const { return compare(*this, o) != 0; }
    bool operator<(const QuadExact& o) const { return compare(*this, o) < 0; }
    bool operator<=(const QuadExact& o) const { return compare(*this, o) <= 0; }
    bool operator>(const QuadExact& o) const { return compare(*this, o) > 0; }
    bool operator>=(const QuadExact& o) const { return compare(*this, o) >= 0; }

    BigInt floor() const;
    BigInt ceil() const;
    double to_double() const;
    // "a", "b*sqrt(r)", or "a + b*sqrt(r)" / "a - b*sqrt(r)" with exact
    // rationals rendered as fractions
    std::string str() const;

private:
    BigRat a_, b_;
    int64_t r_;
    void fold();
};

// sqrt(q)^n exactly: integer for even n, (q^((n-1)/2)) * sqrt(q) for odd n.
QuadExact half_integer_power(int64_t q, unsigned n);

}  // namespace quadff
