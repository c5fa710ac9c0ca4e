#include "quadff/kernels/charsum.hpp"

#include "quadff/errors.hpp"

#include <cstring>
#include <vector>

namespace quadff::kernels {

namespace {

// Scratch for one kernel invocation; no allocation inside the element loop.
struct Scratch {
    unsigned n;
    uint64_t p;
    std::vector<uint64_t> t;              // 2n-1 product columns
    std::vector<std::vector<uint32_t>> pow2;  // x^(2^j), j <= max_pow_bit
    std::vector<uint32_t> acc;
    std::vector<uint32_t> x;              // digit odometer, little-endian base p

    Scratch(const CharSumPlan& plan)
        : n(plan.n),
          p(plan.p),
          t(2 * plan.n - 1),
          pow2(plan.max_pow_bit + 1, std::vector<uint32_t>(plan.n)),
          acc(plan.n),
          x(plan.n) {}
};

// out = a * b in F_{p^n}; safe when out aliases a or b.
void fmul(const CharSumPlan& plan, Scratch& s, const uint32_t* a, const uint32_t* b,
          uint32_t* out) {
    const unsigned n = s.n;
    const uint64_t p = s.p;
    std::memset(s.t.data(), 0, s.t.size() * sizeof(uint64_t));
    for (unsigned i = 0; i < n; ++i) {
        uint64_t ai = a[i];
        if (ai == 0) continue;
        for (unsigned j = 0; j < n; ++j) s.t[i + j] += ai * b[j];
    }
    for (unsigned c = 2 * n - 2; c >= n; --c) {
        uint64_t v = s.t[c] % p;
        if (v) {
            const std::vector<uint32_t>& row = plan.fold[c - n];
            for (unsigned k = 0; k < n; ++k) s.t[k] += v * row[k];
        }
        if (c == n) break;
    }
    for (unsigned k = 0; k < n; ++k) out[k] = static_cast<uint32_t>(s.t[k] % p);
}

void mul_by_power(const CharSumPlan& plan, Scratch& s, uint32_t* v, unsigned e) {
    for (unsigned b = 0; e; ++b, e >>= 1)
        if (e & 1) fmul(plan, s, v, s.pow2[b].data(), v);
}

// rank of the quadratic character argument d(x)
uint64_t eval_rank(const CharSumPlan& plan, Scratch& s) {
    const unsigned n = s.n;
    const uint64_t p = s.p;
    if (plan.any_mults) {
        s.pow2[0] = s.x;
        for (unsigned j = 1; j <= plan.max_pow_bit; ++j)
            fmul(plan, s, s.pow2[j - 1].data(), s.pow2[j - 1].data(), s.pow2[j].data());
    }
    std::memcpy(s.acc.data(), plan.lead_coeff.data(), n * sizeof(uint32_t));
    for (const CharSumPlan::Step& st : plan.steps) {
        mul_by_power(plan, s, s.acc.data(), st.gap);
        for (unsigned k = 0; k < n; ++k) {
            uint32_t v = s.acc[k] + st.coeff[k];
            s.acc[k] = v >= p ? v - static_cast<uint32_t>(p) : v;
        }
    }
    mul_by_power(plan, s, s.acc.data(), plan.tail_exp);

    uint64_t rank = 0;
    for (unsigned j = n; j-- > 0;) rank = rank * p + s.acc[j];
    return rank;
}

}  // namespace

int64_t char_sum_range_scalar(const CharSumPlan& plan, uint64_t lo, uint64_t hi) {
    internal_check(lo <= hi && hi <= plan.q, "character sum range out of bounds");
    Scratch s(plan);
    uint64_t r = lo;
    for (unsigned j = 0; j < s.n; ++j) {
        s.x[j] = static_cast<uint32_t>(r % s.p);
        r /= s.p;
    }
    int64_t sum = 0;
    for (uint64_t i = lo; i < hi; ++i) {
        sum += plan.chi[eval_rank(plan, s)];
        for (unsigned j = 0; j < s.n; ++j) {
            if (++s.x[j] < s.p) break;
            s.x[j] = 0;
        }
    }
    return sum;
}

}  // namespace quadff::kernels
