#include "quadff/kernels/charsum.hpp"

#include "quadff/errors.hpp"

#include <bit>
#include <future>
#include <stdexcept>

namespace quadff::kernels {

CharSumPlan build_plan(const FieldSpec& ext, const Polynomial& d, uint64_t chi_table_max) {
    if (!d.field.same_field(ext)) throw std::invalid_argument("plan polynomial is over a different field");
    if (d.is_zero()) throw std::invalid_argument("plan polynomial is zero");
    if (ext.characteristic() >= (1u << 15))
        throw BudgetError("characteristic too large for the counting kernels");

    CharSumPlan plan(ext);
    plan.p = ext.characteristic();
    plan.n = ext.degree();
    plan.q = ext.cardinality_u64();
    plan.chi = ext.quadratic_character_table(chi_table_max).data();

    const uint32_t p = plan.p;
    const unsigned n = plan.n;

    // a^(n+t) mod modulus, built by one shift-and-fold per row
    const std::vector<uint32_t>& mod = ext.modulus();
    if (n >= 2) {
        std::vector<uint32_t> row(n);
        for (unsigned k = 0; k < n; ++k) row[k] = (p - mod[k] % p) % p;
        plan.fold.push_back(row);
        for (unsigned t = 1; t + 1 < n; ++t) {
            std::vector<uint32_t> next(n, 0);
            uint64_t top = row[n - 1];
            for (unsigned k = n - 1; k >= 1; --k) next[k] = row[k - 1];
            for (unsigned k = 0; k < n; ++k)
                next[k] = static_cast<uint32_t>((next[k] + top * plan.fold[0][k]) % p);
            plan.fold.push_back(next);
            row = next;
        }
    }

    // nonzero terms, exponent descending
    std::vector<std::pair<unsigned, std::vector<uint32_t>>> terms;
    for (int e = d.degree(); e >= 0; --e) {
        FieldElement c = d.coeff(e);
        if (ff_is_zero(c)) continue;
        terms.emplace_back(static_cast<unsigned>(e), std::vector<uint32_t>(c.begin(), c.end()));
    }
    plan.lead_coeff = terms[0].second;
    for (size_t j = 1; j < terms.size(); ++j)
        plan.steps.push_back({terms[j - 1].first - terms[j].first, terms[j].second});
    plan.tail_exp = terms.back().first;

    unsigned maxgap = plan.tail_exp;
    for (const auto& s : plan.steps) maxgap = std::max(maxgap, s.gap);
    plan.any_mults = maxgap > 0;
    plan.max_pow_bit = plan.any_mults ? (std::bit_width(maxgap) - 1) : 0;
    return plan;
}

const char* backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

bool avx2_compiled() {
#if defined(QUADFF_HAVE_AVX2_BUILD)
    return true;
#else
    return false;
#endif
}

bool cpu_has_avx2() {
#if defined(QUADFF_HAVE_AVX2_BUILD) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

bool avx2_fits(const CharSumPlan& plan) {
    uint64_t lane_max = uint64_t(plan.n) * (plan.p - 1) * (plan.p - 1);
    return lane_max <= 65535 && plan.q < (uint64_t(1) << 31);
}

bool avx2_supports(const CharSumPlan& plan) {
    return avx2_compiled() && cpu_has_avx2() && avx2_fits(plan);
}

Backend select_backend(const CharSumPlan& plan, bool allow_simd) {
    return (allow_simd && avx2_supports(plan)) ? Backend::Avx2 : Backend::Scalar;
}

int64_t char_sum_range(const CharSumPlan& plan, uint64_t lo, uint64_t hi, Backend b) {
    return b == Backend::Avx2 ? char_sum_range_avx2(plan, lo, hi)
                              : char_sum_range_scalar(plan, lo, hi);
}

int64_t char_sum_all(const CharSumPlan& plan, unsigned workers, bool allow_simd) {
    Backend backend = select_backend(plan, allow_simd);
    if (workers <= 1 || plan.q < 4096)
        return char_sum_range(plan, 0, plan.q, backend);

    if (workers > 256) workers = 256;
    std::vector<std::future<int64_t>> parts;
    parts.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        uint64_t lo = plan.q / workers * w + std::min<uint64_t>(plan.q % workers, w);
        uint64_t hi = plan.q / workers * (w + 1) + std::min<uint64_t>(plan.q % workers, w + 1);
        parts.push_back(std::async(std::launch::async, [&plan, lo, hi, backend] {
            return char_sum_range(plan, lo, hi, backend);
        }));
    }
    int64_t total = 0;
    for (auto& f : parts) total += f.get();
    return total;
}

}  // namespace quadff::kernels
