#pragma once

#include "quadff/numeric.hpp"
#include "quadff/polyring.hpp"
#include "quadff/quadfield.hpp"

#include <vector>

namespace quadff {

struct PointCountOptions {
    // Largest field counted through the precomputed character table; above
    // this the per-element Euler criterion is used instead.
    uint64_t table_threshold = uint64_t(1) << 24;
    // Hard cap on the field size of any single count.
    uint64_t point_budget = uint64_t(1) << 28;
    unsigned workers = 1;
    bool allow_simd = true;
    uint64_t seed = 1;
};

// Number of projective points of the smooth model of y^2 = d(x) over
// F_{q^i}: the affine count sum_x (1 + chi(d(x))) plus the points at
// infinity (1 for odd deg d, 2 for even deg d with square leading
// coefficient). Inert d is rejected. The result is checked against the Weil
// interval |q^i + 1 - N_i| <= 2 g sqrt(q^i) exactly, by squaring.
BigInt count_points(const Polynomial& d, unsigned i, const PointCountOptions& opts = {});

// N_1..N_k in one call.
std::vector<BigInt> count_points_up_to(const Polynomial& d, unsigned k,
                                       const PointCountOptions& opts = {});

// Numerator of the zeta function of the curve, degree 2g with integer
// coefficients ascending. c[0] = 1, c[2g-k] = q^(g-k) c[k], L(1) = h >= 1.
struct LPolynomial {
    std::vector<BigInt> c;
    unsigned genus() const { return static_cast<unsigned>((c.size() - 1) / 2); }
    BigInt at_one() const;
};

// Assembles L from N_1..N_g by Newton's identities on the power sums
// S_i = q^i + 1 - N_i, then the functional equation for the top half.
// Throws InternalCheckError on a non-integral Newton coefficient (a wrong
// count) and when any LPolynomial invariant fails.
LPolynomial l_polynomial(const BigInt& q, unsigned genus, const std::vector<BigInt>& counts);

// N_i implied by an assembled L-polynomial, any i >= 1.
BigInt predicted_point_count(const LPolynomial& lpoly, const BigInt& q, unsigned i);

struct ClassNumberResult {
    QuadExtension ext;
    std::vector<BigInt> counts;  // N_1..N_g
    LPolynomial lpoly;
    BigInt h;             // divisor class number h_K = L(1)
    bool self_checked;    // N_{g+1} was recounted and matched the prediction
};

// h_K for K = F_q(T)(sqrt d), d squarefree nonconstant and non-Inert. The
// N_{g+1} self-check runs whenever the field fits the point budget; a
// mismatch is an InternalCheckError. The Hasse-Weil membership of h is
// checked exactly.
ClassNumberResult divisor_class_number_full(const Polynomial& d, const PointCountOptions& opts = {});
BigInt divisor_class_number(const Polynomial& d, const PointCountOptions& opts = {});

}  // namespace quadff
