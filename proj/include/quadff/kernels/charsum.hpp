#pragma once

#include "quadff/ffield.hpp"
#include "quadff/polyring.hpp"

#include <cstdint>
#include <vector>

namespace quadff::kernels {

// Precompiled program for the character sum  sum_x chi(d(x))  over a range of
// field elements in canonical rank order. Everything is flattened to machine
// integers: elements are digit vectors over F_p, modular reduction goes
// through precomputed fold rows for a^n..a^(2n-2), and d is evaluated by a
// square-and-multiply gap chain over its nonzero terms. Both kernels execute
// this same program, so their sums agree exactly.
struct CharSumPlan {
    explicit CharSumPlan(FieldSpec f) : field(std::move(f)) {}

    FieldSpec field;  // owns the character table the kernels index into
    uint32_t p = 0;   // characteristic
    unsigned n = 0;   // extension degree over F_p
    uint64_t q = 0;   // p^n

    // fold[t][k] = coefficient of a^k in a^(n+t) mod modulus, 0 <= t < n-1
    std::vector<std::vector<uint32_t>> fold;

    // d = (...(c_0 x^{gap_1} + c_1) x^{gap_2} + c_2 ...) x^{tail_exp},
    // exponents strictly descending. All coefficient digit vectors length n.
    struct Step {
        unsigned gap = 0;
        std::vector<uint32_t> coeff;
    };
    std::vector<uint32_t> lead_coeff;
    std::vector<Step> steps;
    unsigned tail_exp = 0;
    // highest bit index used by any gap or by tail_exp; 0 when no
    // multiplications occur at all (constant d)
    unsigned max_pow_bit = 0;
    bool any_mults = false;

    const int8_t* chi = nullptr;  // indexed by rank; q + 4 entries
};

// Compiles d (nonzero, over `ext`) and ext's character table into a plan.
// Requires odd p < 2^15; throws BudgetError when the table would exceed
// chi_table_max entries.
CharSumPlan build_plan(const FieldSpec& ext, const Polynomial& d, uint64_t chi_table_max);

enum class Backend { Scalar, Avx2 };
const char* backend_name(Backend b);

// Compile-time and runtime gates, separately inspectable for tests.
bool avx2_compiled();
bool cpu_has_avx2();
// 16-lane u16 arithmetic is exact for this plan: n (p-1)^2 <= 65535 keeps
// every intermediate column sum in 16 bits, q < 2^31 keeps gather indices
// valid.
bool avx2_fits(const CharSumPlan& plan);
bool avx2_supports(const CharSumPlan& plan);
Backend select_backend(const CharSumPlan& plan, bool allow_simd);

// Exact sum of chi(d(x)) over lo <= rank(x) < hi.
int64_t char_sum_range_scalar(const CharSumPlan& plan, uint64_t lo, uint64_t hi);
// Throws InternalCheckError when the plan is unsupported or the kernel was
// not compiled in.
int64_t char_sum_range_avx2(const CharSumPlan& plan, uint64_t lo, uint64_t hi);
int64_t char_sum_range(const CharSumPlan& plan, uint64_t lo, uint64_t hi, Backend b);

// Full-field sum partitioned over `workers` contiguous rank ranges. The
// reduction is an integer sum, so the result is independent of worker count
// and backend.
int64_t char_sum_all(const CharSumPlan& plan, unsigned workers, bool allow_simd);

}  // namespace quadff::kernels
