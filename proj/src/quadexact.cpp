#include "quadff/quadexact.hpp"

#include "quadff/errors.hpp"

#include <cmath>
#include <sstream>

namespace quadff {

QuadExact::QuadExact(const BigRat& a, const BigRat& b, int64_t r) : a_(a), b_(b), r_(r) {
    if (r < 0) throw std::invalid_argument("negative radicand");
    fold();
}

void QuadExact::fold() {
    if (b_ == 0) {
        r_ = 0;
        return;
    }
    if (r_ == 0) {
        b_ = 0;
        return;
    }
    BigInt root;
    if (is_perfect_square(BigInt(r_), &root)) {
        a_ += b_ * BigRat(root);
        b_ = 0;
        r_ = 0;
    }
}

QuadExact QuadExact::sqrt_of(int64_t r) { return QuadExact(BigRat(0), BigRat(1), r); }

namespace {

int64_t joint_radicand(const QuadExact& x, const QuadExact& y) {
    if (x.radicand() == 0) return y.radicand();
    if (y.radicand() == 0 || x.radicand() == y.radicand()) return x.radicand();
    throw std::invalid_argument("mixing distinct radicands");
}

}  // namespace

QuadExact QuadExact::operator+(const QuadExact& o) const {
    return QuadExact(a_ + o.a_, b_ + o.b_, joint_radicand(*this, o));
}

QuadExact QuadExact::operator-(const QuadExact& o) const {
    return QuadExact(a_ - o.a_, b_ - o.b_, joint_radicand(*this, o));
}

QuadExact QuadExact::operator*(const QuadExact& o) const {
    int64_t r = joint_radicand(*this, o);
    return QuadExact(a_ * o.a_ + b_ * o.b_ * BigRat(r), a_ * o.b_ + b_ * o.a_, r);
}

QuadExact QuadExact::operator-() const { return QuadExact(-a_, -b_, r_); }

QuadExact QuadExact::operator/(const BigRat& d) const {
    if (d == 0) throw std::invalid_argument("division by zero");
    return QuadExact(a_ / d, b_ / d, r_);
}

QuadExact QuadExact::pow(unsigned e) const {
    QuadExact r(BigRat(1));
    QuadExact b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

int QuadExact::sign() const {
    int sa = a_ == 0 ? 0 : (a_ > 0 ? 1 : -1);
    if (b_ == 0) return sa;
    int sb = b_ > 0 ? 1 : -1;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against b^2 r; sign follows the larger side
    BigRat lhs = a_ * a_, rhs = b_ * b_ * BigRat(r_);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

int QuadExact::compare(const QuadExact& x, const QuadExact& y) {
    QuadExact d(x.a_ - y.a_, x.b_ - y.b_, joint_radicand(x, y));
    return d.sign();
}

BigInt QuadExact::floor() const {
    if (b_ == 0) return rat_floor(a_);
    // binary search on integers n with n <= a + b sqrt(r) < n + 1, bracketed
    // by the integer bounds s <= sqrt(r) <= s+1 oriented by the sign of b
    BigRat s_lo(iroot_floor(BigInt(r_), 2)), s_hi = s_lo + 1;
    BigInt lo = rat_floor(a_ + b_ * (b_ > 0 ? s_lo : s_hi)) - 1;
    BigInt hi = rat_ceil(a_ + b_ * (b_ > 0 ? s_hi : s_lo)) + 1;
    internal_check(QuadExact(BigRat(lo)) <= *this && *this < QuadExact(BigRat(hi)),
                   "floor bracket does not contain the value");
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        if (QuadExact(BigRat(mid)) <= *this)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

BigInt QuadExact::ceil() const {
    BigInt f = floor();
    return *this == QuadExact(BigRat(f)) ? f : f + 1;
}

double QuadExact::to_double() const {
    double v = static_cast<double>(a_);
    if (b_ != 0) v += static_cast<double>(b_) * std::sqrt(static_cast<double>(r_));
    return v;
}

namespace {

std::string rat_str(const BigRat& x) {
    std::ostringstream os;
    if (denominator(x) == 1)
        os << numerator(x);
    else
        os << numerator(x) << '/' << denominator(x);
    return os.str();
}

}  // namespace

std::string QuadExact::str() const {
    if (b_ == 0) return rat_str(a_);
    std::ostringstream os;
    BigRat babs = b_ > 0 ? b_ : BigRat(-b_);
    std::string radical = (babs == 1 ? "" : rat_str(babs) + "*") + "sqrt(" + std::to_string(r_) + ")";
    if (a_ == 0) {
        if (b_ < 0) os << '-';
        os << radical;
    } else {
        os << rat_str(a_) << (b_ > 0 ? " + " : " - ") << radical;
    }
    return os.str();
}

QuadExact half_integer_power(int64_t q, unsigned n) {
    if (q <= 0) throw std::invalid_argument("base must be positive");
    BigInt whole = big_pow(q, n / 2);
    if (n % 2 == 0) return QuadExact(BigRat(whole));
    return QuadExact(BigRat(0), BigRat(whole), q);
}

}  // namespace quadff
