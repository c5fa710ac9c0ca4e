#pragma once

#include "quadff/ffield.hpp"

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quadff {

// Degree of the zero polynomial. Strictly below every true degree; arithmetic
// on it goes through deg_add / deg_max, never plain +.
inline constexpr int kZeroDeg = std::numeric_limits<int>::min() / 2;

// Dense polynomial over F_q. Coefficients ascending; invariant: either empty
// (the zero polynomial) or the last coefficient is nonzero.
struct Polynomial {
    FieldSpec field;
    std::vector<FieldElement> coeffs;

    int degree() const { return coeffs.empty() ? kZeroDeg : static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    const FieldElement& leading() const;
    // Coefficient of T^i, zero-extended beyond the degree.
    FieldElement coeff(int i) const;
};

int deg_add(int a, int b);  // degree of a product
int deg_max(int a, int b);

Polynomial poly_zero(const FieldSpec& k);
Polynomial poly_one(const FieldSpec& k);
Polynomial poly_T(const FieldSpec& k);
Polynomial poly_constant(const FieldSpec& k, const FieldElement& c);
// Integer coefficients ascending, reduced mod p into the prime subfield.
Polynomial poly_from_ints(const FieldSpec& k, const std::vector<int64_t>& coeffs);
Polynomial poly_from_coeffs(const FieldSpec& k, std::vector<FieldElement> coeffs);
// c * T^e
Polynomial poly_monomial(const FieldSpec& k, const FieldElement& c, int e);

bool poly_equal(const Polynomial& f, const Polynomial& g);
// Canonical order: degree first, then coefficients from the highest power
// down, each by canonical element rank. Total order on each ring.
int poly_compare(const Polynomial& f, const Polynomial& g);

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_sub(const Polynomial& f, const Polynomial& g);
Polynomial poly_neg(const Polynomial& f);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul_scalar(const Polynomial& f, const FieldElement& c);
// Quotient and remainder; deg rem < deg g. Throws std::invalid_argument when
// g is zero.
std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& f, const Polynomial& g);
Polynomial poly_mod(const Polynomial& f, const Polynomial& g);
// Monic gcd; gcd(0, 0) = 0.
Polynomial poly_gcd(Polynomial f, Polynomial g);
Polynomial poly_derivative(const Polynomial& f);
Polynomial poly_monic(const Polynomial& f);
FieldElement poly_eval(const Polynomial& f, const FieldElement& x);
// base^e mod modulus, e >= 0 arbitrary size.
Polynomial poly_powmod(const Polynomial& base, const BigInt& e, const Polynomial& modulus);

// Rabin's test. Degree <= 0 returns false; degree 1 returns true.
// Throws std::invalid_argument on the zero polynomial.
bool poly_is_irreducible(const Polynomial& f);

bool poly_is_squarefree(const Polynomial& f);

// Exact square root of a perfect-square polynomial, monic-normalized input
// not required. Returns the root with canonical-smaller leading coefficient
// orientation (root is determined up to sign).
std::optional<Polynomial> poly_sqrt(const Polynomial& f);

struct Factorization {
    FieldElement unit;                              // leading unit, nonzero
    std::vector<std::pair<Polynomial, int>> parts;  // monic irreducible, multiplicity;
                                                    // sorted in canonical polynomial order
};

// Complete factorization; deterministic for a fixed seed. Nonzero input.
Factorization poly_factor(const Polynomial& f, uint64_t seed = 1);

// Roots in the coefficient field, ascending canonical order, without
// multiplicity.
std::vector<FieldElement> poly_roots(const Polynomial& f, uint64_t seed = 1);

// Number of monic irreducibles of degree n over F_q (Gauss / Moebius count).
BigInt count_monic_irreducibles(const BigInt& q, unsigned n);

// Quadratic-residue symbol of d modulo a monic irreducible prime:
// +1 if d is a nonzero square mod prime, -1 if a non-square, 0 if prime | d.
// Throws std::invalid_argument when prime is not monic irreducible.
int residue_symbol(const Polynomial& d, const Polynomial& prime);

// Enumerates polynomials of exact degree `degree` over k in canonical order,
// restartable at any index. Monic variant fixes the leading coefficient.
class PolyEnumerator {
public:
    PolyEnumerator(const FieldSpec& k, int degree, bool monic);
    uint64_t count() const { return count_; }
    Polynomial at(uint64_t index) const;

private:
    FieldSpec field_;
    int degree_;
    bool monic_;
    uint64_t count_;
};

// Field homomorphism F_{p^m} -> F_{p^(m*i)} determined by sending the source
// generator to a fixed root of the source modulus; the canonical (smallest)
// root, so embeddings are deterministic.
class FieldEmbedding {
public:
    // Throws std::invalid_argument unless from.degree() divides to.degree()
    // with equal characteristic.
    FieldEmbedding(const FieldSpec& from, const FieldSpec& to, uint64_t seed = 1);
    const FieldSpec& from() const { return from_; }
    const FieldSpec& to() const { return to_; }
    const FieldElement& generator_image() const { return gen_image_; }
    FieldElement apply(const FieldElement& x) const;

private:
    FieldSpec from_, to_;
    FieldElement gen_image_;
};

// Coefficientwise image of f under the embedding.
Polynomial poly_map(const FieldEmbedding& e, const Polynomial& f);

// Canonical rendering: terms by descending exponent, "*" between coefficient
// and power, extension coefficients parenthesized in the generator symbol.
std::string poly_render(const Polynomial& f, const std::string& var = "T",
                        const std::string& gen = "a");

}  // namespace quadff
