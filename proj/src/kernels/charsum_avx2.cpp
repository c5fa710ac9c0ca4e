#include "quadff/kernels/charsum.hpp"

#include "quadff/errors.hpp"

#if defined(QUADFF_HAVE_AVX2_BUILD)

// std::vector<__m256i> trips -Wignored-attributes (alignment is preserved by
// aligned operator new; only template-argument attribute matching is at issue)
#pragma GCC diagnostic ignored "-Wignored-attributes"

#include <immintrin.h>

#include <vector>

namespace quadff::kernels {

namespace {

// 16 lanes of u16 digits. Valid whenever n (p-1)^2 <= 65535: a product column
// sums at most n products of two reduced digits, and the fold pass adds at
// most (n-1) more products to an already-reduced column, so no lane ever
// wraps. Reduction mod p is Barrett with one conditional subtract; with
// M = floor(2^16/p) the remainder estimate is below 2p.
struct VecCtx {
    unsigned n;
    __m256i vp;
    __m256i vbar;
    std::vector<__m256i> t;     // 2n-1 product columns
    std::vector<__m256i> pow2;  // (max_pow_bit+1) rows of n digits
    std::vector<__m256i> acc;   // n
    std::vector<__m256i> x;     // n digit odometers
    std::vector<std::vector<std::pair<unsigned, __m256i>>> fold;  // nonzero fold entries
    std::vector<__m256i> lead, step_coeff;

    VecCtx(const CharSumPlan& plan)
        : n(plan.n),
          vp(_mm256_set1_epi16(static_cast<short>(plan.p))),
          vbar(_mm256_set1_epi16(static_cast<short>(65536u / plan.p))),
          t(2 * plan.n - 1),
          pow2((plan.max_pow_bit + 1) * plan.n),
          acc(plan.n),
          x(plan.n) {
        for (const auto& row : plan.fold) {
            std::vector<std::pair<unsigned, __m256i>> r;
            for (unsigned k = 0; k < n; ++k)
                if (row[k]) r.emplace_back(k, _mm256_set1_epi16(static_cast<short>(row[k])));
            fold.push_back(std::move(r));
        }
        for (unsigned k = 0; k < n; ++k)
            lead.push_back(_mm256_set1_epi16(static_cast<short>(plan.lead_coeff[k])));
        for (const auto& st : plan.steps)
            for (unsigned k = 0; k < n; ++k)
                step_coeff.push_back(_mm256_set1_epi16(static_cast<short>(st.coeff[k])));
    }
};

inline __m256i reduce(const VecCtx& c, __m256i v) {
    __m256i q = _mm256_mulhi_epu16(v, c.vbar);
    __m256i r = _mm256_sub_epi16(v, _mm256_mullo_epi16(q, c.vp));
    r = _mm256_min_epu16(r, _mm256_sub_epi16(r, c.vp));
    r = _mm256_min_epu16(r, _mm256_sub_epi16(r, c.vp));
    return r;
}

inline __m256i add_mod(const VecCtx& c, __m256i a, __m256i b) {
    __m256i s = _mm256_add_epi16(a, b);
    return _mm256_min_epu16(s, _mm256_sub_epi16(s, c.vp));
}

// out = a * b; aliasing with a or b is fine (columns staged in c.t)
void vmul(VecCtx& c, const __m256i* a, const __m256i* b, __m256i* out) {
    const unsigned n = c.n;
    __m256i zero = _mm256_setzero_si256();
    for (unsigned k = 0; k < 2 * n - 1; ++k) c.t[k] = zero;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            c.t[i + j] = _mm256_add_epi16(c.t[i + j], _mm256_mullo_epi16(a[i], b[j]));
    for (unsigned k = 0; k < 2 * n - 1; ++k) c.t[k] = reduce(c, c.t[k]);
    for (unsigned k = 2 * n - 2; k >= n; --k) {
        for (const auto& [idx, coef] : c.fold[k - n])
            c.t[idx] = _mm256_add_epi16(c.t[idx], _mm256_mullo_epi16(c.t[k], coef));
        if (k == n) break;
    }
    for (unsigned k = 0; k < n; ++k) out[k] = reduce(c, c.t[k]);
}

void mul_by_power(VecCtx& c, __m256i* v, unsigned e) {
    for (unsigned b = 0; e; ++b, e >>= 1)
        if (e & 1) vmul(c, v, &c.pow2[b * c.n], v);
}

}  // namespace

int64_t char_sum_range_avx2(const CharSumPlan& plan, uint64_t lo, uint64_t hi) {
    internal_check(lo <= hi && hi <= plan.q, "character sum range out of bounds");
    internal_check(avx2_supports(plan), "avx2 kernel invoked on an unsupported plan");
    const unsigned n = plan.n;
    const uint32_t p = plan.p;

    uint64_t chunk = (hi - lo) / 16;
    if (chunk == 0) return char_sum_range_scalar(plan, lo, hi);

    VecCtx c(plan);

    // lane l walks [lo + l*chunk, lo + (l+1)*chunk)
    for (unsigned j = 0; j < n; ++j) c.x[j] = _mm256_setzero_si256();
    for (unsigned l = 0; l < 16; ++l) {
        uint64_t r = lo + l * chunk;
        for (unsigned j = 0; j < n; ++j) {
            reinterpret_cast<uint16_t*>(&c.x[j])[l] = static_cast<uint16_t>(r % p);
            r /= p;
        }
    }

    __m256i acc_lo = _mm256_setzero_si256(), acc_hi = _mm256_setzero_si256();
    __m256i vp32 = _mm256_set1_epi32(static_cast<int>(p));

    for (uint64_t it = 0; it < chunk; ++it) {
        // evaluate d via the gap chain
        if (plan.any_mults) {
            for (unsigned j = 0; j < n; ++j) c.pow2[j] = c.x[j];
            for (unsigned b = 1; b <= plan.max_pow_bit; ++b)
                vmul(c, &c.pow2[(b - 1) * n], &c.pow2[(b - 1) * n], &c.pow2[b * n]);
        }
        for (unsigned k = 0; k < n; ++k) c.acc[k] = c.lead[k];
        for (size_t si = 0; si < plan.steps.size(); ++si) {
            mul_by_power(c, c.acc.data(), plan.steps[si].gap);
            for (unsigned k = 0; k < n; ++k)
                c.acc[k] = add_mod(c, c.acc[k], c.step_coeff[si * n + k]);
        }
        mul_by_power(c, c.acc.data(), plan.tail_exp);

        // rank per lane, then gather the character values
        __m256i idx_lo = _mm256_setzero_si256(), idx_hi = _mm256_setzero_si256();
        for (unsigned j = n; j-- > 0;) {
            __m256i d16 = c.acc[j];
            __m256i dlo = _mm256_cvtepu16_epi32(_mm256_castsi256_si128(d16));
            __m256i dhi = _mm256_cvtepu16_epi32(_mm256_extracti128_si256(d16, 1));
            idx_lo = _mm256_add_epi32(_mm256_mullo_epi32(idx_lo, vp32), dlo);
            idx_hi = _mm256_add_epi32(_mm256_mullo_epi32(idx_hi, vp32), dhi);
        }
        __m256i g_lo = _mm256_i32gather_epi32(reinterpret_cast<const int*>(plan.chi), idx_lo, 1);
        __m256i g_hi = _mm256_i32gather_epi32(reinterpret_cast<const int*>(plan.chi), idx_hi, 1);
        g_lo = _mm256_srai_epi32(_mm256_slli_epi32(g_lo, 24), 24);
        g_hi = _mm256_srai_epi32(_mm256_slli_epi32(g_hi, 24), 24);
        acc_lo = _mm256_add_epi32(acc_lo, g_lo);
        acc_hi = _mm256_add_epi32(acc_hi, g_hi);

        // advance all 16 odometers by one
        __m256i carry = _mm256_set1_epi16(-1);
        for (unsigned j = 0; j < n; ++j) {
            c.x[j] = _mm256_sub_epi16(c.x[j], carry);
            __m256i wrap = _mm256_cmpeq_epi16(c.x[j], c.vp);
            c.x[j] = _mm256_andnot_si256(wrap, c.x[j]);
            carry = wrap;
            if (_mm256_testz_si256(carry, carry)) break;
        }
    }

    alignas(32) int32_t lanes[16];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc_lo);
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes + 8), acc_hi);
    int64_t sum = 0;
    for (int32_t v : lanes) sum += v;

    return sum + char_sum_range_scalar(plan, lo + 16 * chunk, hi);
}

}  // namespace quadff::kernels

#else  // QUADFF_HAVE_AVX2_BUILD

namespace quadff::kernels {

int64_t char_sum_range_avx2(const CharSumPlan&, uint64_t, uint64_t) {
    throw InternalCheckError("avx2 kernel not compiled into this build");
}

}  // namespace quadff::kernels

#endif
