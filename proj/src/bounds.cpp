#include "quadff/bounds.hpp"

#include "quadff/errors.hpp"

namespace quadff {

namespace {

int ceil_half(int deg_d) { return (deg_d + 1) / 2; }

void require_q(int64_t q) {
    if (q < 3) throw std::invalid_argument("q must be an odd prime power >= 3");
}

}  // namespace

QuadExact class_degree_upper_bound(int64_t q, int deg_d) {
    require_q(q);
    if (deg_d < 1) throw std::invalid_argument("deg d must be >= 1");
    QuadExact base = QuadExact::sqrt_of(q) + QuadExact(1);
    if (deg_d % 2 == 1) return base.pow(static_cast<unsigned>(deg_d - 1));
    return base.pow(static_cast<unsigned>(deg_d - 2)) * QuadExact(BigRat(2)) / BigRat(deg_d);
}

int smallest_irreducible_degree_bound(int64_t q, int deg_d, const QuadExact& r) {
    require_q(q);
    if (deg_d < 1) throw std::invalid_argument("deg d must be >= 1");
    if (r < QuadExact(1)) throw std::invalid_argument("class number bound must be >= 1");
    QuadExact m = r * QuadExact(BigRat(2 * ceil_half(deg_d))) + QuadExact(2);
    QuadExact m4 = m.pow(4);
    BigInt qn = 1;
    for (int n = 1;; ++n) {
        qn *= q;
        if (QuadExact(BigRat(qn)) >= m4) return n;
        internal_check(n < 1000000, "degree bound search diverged");
    }
}

ClassNumberLowerBound class_number_lower_bound(int64_t q, int deg_d) {
    require_q(q);
    if (deg_d < 1 || deg_d % 2 == 0)
        throw std::invalid_argument("class number lower bound needs odd deg d");
    QuadExact power = half_integer_power(q, static_cast<unsigned>((deg_d - 1) / 2));
    QuadExact exact = (power - QuadExact(2)) / BigRat(deg_d + 1);
    return ClassNumberLowerBound{exact, exact.floor() + 1};
}

QuadExact chebotarev_error_bound(int64_t q, int n, const BigInt& genus_top,
                                 const BigInt& c_size, const BigInt& g_size,
                                 const BigInt& different_degree) {
    require_q(q);
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (g_size < 1) throw std::invalid_argument("group order must be >= 1");
    if (genus_top < 0 || c_size < 0 || different_degree < 0)
        throw std::invalid_argument("negative input");
    QuadExact qhalf = half_integer_power(q, static_cast<unsigned>(n));
    QuadExact term1 = qhalf * QuadExact(BigRat(2 * genus_top * c_size, g_size * n));
    QuadExact term2 = qhalf * QuadExact(BigRat(2 * c_size, BigInt(n)));
    QuadExact term3 = QuadExact(BigRat(different_degree * (n + c_size), BigInt(n)));
    return term1 + term2 + term3;
}

QuadExact prime_count_lower_bound(int64_t q, int n, int deg_d, const BigInt& r) {
    require_q(q);
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (deg_d < 1) throw std::invalid_argument("deg d must be >= 1");
    if (r < 1) throw std::invalid_argument("class number must be >= 1");
    BigInt qn = big_pow(q, static_cast<unsigned>(n));
    QuadExact main(BigRat(qn, BigInt(n)));
    QuadExact half = half_integer_power(q, static_cast<unsigned>(n)) / BigRat(n);
    QuadExact cube(BigRat(iroot_ceil(qn, 3)));
    QuadExact ram(BigRat(2 * r * ceil_half(deg_d), BigInt(n)));
    return main - half - cube - ram;
}

BoundReport make_bound_report(int64_t q, int deg_d, const QuadExact& r) {
    BoundReport rep;
    rep.q = q;
    rep.deg_d = deg_d;
    rep.r_used = r;
    rep.m = r * QuadExact(BigRat(2 * ceil_half(deg_d))) + QuadExact(2);
    rep.degree_bound = smallest_irreducible_degree_bound(q, deg_d, r);
    rep.corollary_applicable = deg_d % 2 == 1;
    if (rep.corollary_applicable) {
        ClassNumberLowerBound c = class_number_lower_bound(q, deg_d);
        rep.corollary_exact = c.exact;
        rep.corollary_integer = c.integer_bound;
    }
    return rep;
}

}  // namespace quadff
