#pragma once

#include "quadff/numeric.hpp"

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace quadff {

// Element of F_{p^m} as a coefficient vector over F_p in the power basis of
// the field's generator. Length is always exactly m; entries lie in [0, p).
using FieldElement = boost::container::small_vector<uint32_t, 12>;

// Immutable description of F_{p^m} = F_p[a]/(modulus(a)). Cheap to copy
// (shared payload). Two specs describe the same field for arithmetic purposes
// only if characteristic, degree and modulus all agree.
class FieldSpec {
public:
    // Canonical field of order p^m: modulus is the first monic irreducible of
    // degree m over F_p in the canonical polynomial order.
    static FieldSpec make(uint32_t p, unsigned m);

    // Explicit modulus, coefficients ascending, length m+1, monic,
    // irreducible over F_p. Throws std::invalid_argument otherwise.
    static FieldSpec make_with_modulus(uint32_t p, const std::vector<uint32_t>& modulus);

    uint32_t characteristic() const;
    unsigned degree() const;
    const std::vector<uint32_t>& modulus() const;
    const BigInt& cardinality() const;
    // Cardinality as uint64_t; throws BudgetError if it does not fit.
    uint64_t cardinality_u64() const;

    bool same_field(const FieldSpec& other) const;

    // Quadratic character table indexed by element rank: chi[0] = 0,
    // chi[rank] = +1 for nonzero squares, -1 for non-squares. Built once per
    // spec on first use; throws BudgetError if cardinality > max_entries.
    // The returned vector has 4 bytes of zero padding past the end so gather
    // loads reading slightly beyond q stay in bounds.
    const std::vector<int8_t>& quadratic_character_table(uint64_t max_entries) const;

private:
    struct Data;
    std::shared_ptr<const Data> d_;
    explicit FieldSpec(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
};

FieldElement ff_zero(const FieldSpec& k);
FieldElement ff_one(const FieldSpec& k);
// Constant embedded from Z (reduced mod p; negatives allowed).
FieldElement ff_from_int(const FieldSpec& k, int64_t v);
// The generator a of the power basis (equals T mod modulus). For m = 1 this
// is the residue of the modulus' root, i.e. -modulus[0].
FieldElement ff_generator(const FieldSpec& k);

bool ff_is_zero(const FieldElement& x);

FieldElement ff_add(const FieldSpec& k, const FieldElement& x, const FieldElement& y);
FieldElement ff_sub(const FieldSpec& k, const FieldElement& x, const FieldElement& y);
FieldElement ff_neg(const FieldSpec& k, const FieldElement& x);
FieldElement ff_mul(const FieldSpec& k, const FieldElement& x, const FieldElement& y);
// Throws std::invalid_argument on zero divisor.
FieldElement ff_inv(const FieldSpec& k, const FieldElement& x);
FieldElement ff_div(const FieldSpec& k, const FieldElement& x, const FieldElement& y);
// e >= 0. ff_pow(k, x, 0) = 1 for every x, including x = 0.
FieldElement ff_pow(const FieldSpec& k, const FieldElement& x, const BigInt& e);

// Euler-criterion test, no table: x^((q-1)/2). Zero counts as a square.
bool ff_is_square(const FieldSpec& k, const FieldElement& x);
// chi(x) in {-1, 0, +1} via Euler's criterion.
int ff_chi(const FieldSpec& k, const FieldElement& x);
// Square root if one exists (Tonelli-Shanks; deterministic non-residue scan
// in canonical element order). sqrt(0) = 0. Of the two roots of a nonzero
// square, returns the one smaller in canonical element order.
std::optional<FieldElement> ff_sqrt(const FieldSpec& k, const FieldElement& x);

// Canonical rank: sum c_j p^j. Inverse of ff_element_at. Requires the
// cardinality to fit in uint64_t.
uint64_t ff_rank(const FieldSpec& k, const FieldElement& x);
FieldElement ff_element_at(const FieldSpec& k, uint64_t rank);
// Canonical element order: compare ranks. Returns <0, 0, >0.
int ff_compare(const FieldElement& x, const FieldElement& y);

}  // namespace quadff
