#include "quadff/zeta.hpp"

#include "quadff/errors.hpp"
#include "quadff/kernels/charsum.hpp"

#include <future>
#include <stdexcept>

namespace quadff {

namespace {

// Fallback affine character sum for fields past the table threshold: one
// Euler-criterion evaluation per element.
int64_t euler_char_sum(const Polynomial& d, uint64_t lo, uint64_t hi) {
    int64_t s = 0;
    for (uint64_t r = lo; r < hi; ++r)
        s += ff_chi(d.field, poly_eval(d, ff_element_at(d.field, r)));
    return s;
}

int64_t affine_char_sum(const Polynomial& d_ext, uint64_t q, const PointCountOptions& opts) {
    if (q <= opts.table_threshold) {
        kernels::CharSumPlan plan =
            kernels::build_plan(d_ext.field, d_ext, opts.table_threshold);
        return kernels::char_sum_all(plan, opts.workers, opts.allow_simd);
    }
    unsigned workers = std::max(1u, std::min(opts.workers, 256u));
    if (workers == 1 || q < 4096) return euler_char_sum(d_ext, 0, q);
    std::vector<std::future<int64_t>> parts;
    for (unsigned w = 0; w < workers; ++w) {
        uint64_t lo = q / workers * w + std::min<uint64_t>(q % workers, w);
        uint64_t hi = q / workers * (w + 1) + std::min<uint64_t>(q % workers, w + 1);
        parts.push_back(std::async(std::launch::async,
                                   [&d_ext, lo, hi] { return euler_char_sum(d_ext, lo, hi); }));
    }
    int64_t total = 0;
    for (auto& f : parts) total += f.get();
    return total;
}

}  // namespace

BigInt count_points(const Polynomial& d, unsigned i, const PointCountOptions& opts) {
    if (i < 1) throw std::invalid_argument("point counts start at i = 1");
    QuadExtension ext = classify(d);
    if (ext.infinite_place == InfinitePlace::Inert)
        throw HypothesisError("inert place at infinity: point counting unsupported");

    const FieldSpec& base = d.field;
    uint32_t p = base.characteristic();
    unsigned n = base.degree() * i;
    BigInt big_q = big_pow(BigInt(p), n);
    if (big_q > opts.point_budget)
        throw BudgetError("field of " + big_q.str() + " elements exceeds the point budget");
    uint64_t q = static_cast<uint64_t>(big_q);

    Polynomial d_ext = d;
    if (i > 1) {
        FieldSpec e = FieldSpec::make(p, n);
        FieldEmbedding emb(base, e, opts.seed);
        d_ext = poly_map(emb, d);
    }

    int64_t s = affine_char_sum(d_ext, q, opts);
    int64_t at_infinity = ext.deg_odd ? 1 : 2;
    BigInt count = BigInt(q) + s + at_infinity;

    // exact Weil membership: (q + 1 - N)^2 <= 4 g^2 q
    BigInt dev = BigInt(q) + 1 - count;
    BigInt g(ext.genus);
    internal_check(dev * dev <= 4 * g * g * q, "point count violates the Weil interval");
    return count;
}

std::vector<BigInt> count_points_up_to(const Polynomial& d, unsigned k,
                                       const PointCountOptions& opts) {
    std::vector<BigInt> counts;
    counts.reserve(k);
    for (unsigned i = 1; i <= k; ++i) counts.push_back(count_points(d, i, opts));
    return counts;
}

BigInt LPolynomial::at_one() const {
    BigInt s = 0;
    for (const BigInt& ck : c) s += ck;
    return s;
}

LPolynomial l_polynomial(const BigInt& q, unsigned genus, const std::vector<BigInt>& counts) {
    if (counts.size() < genus)
        throw std::invalid_argument("need point counts N_1..N_g to assemble the L-polynomial");

    // power sums of the inverse roots
    std::vector<BigInt> P(genus + 1);
    for (unsigned j = 1; j <= genus; ++j) P[j] = big_pow(q, j) + 1 - counts[j - 1];

    // Newton: k e_k = sum_{j=1..k} (-1)^(j-1) e_{k-j} P_j
    std::vector<BigInt> e(genus + 1);
    e[0] = 1;
    for (unsigned k = 1; k <= genus; ++k) {
        BigInt acc = 0;
        for (unsigned j = 1; j <= k; ++j) {
            BigInt term = e[k - j] * P[j];
            if (j % 2 == 0) term = -term;
            acc += term;
        }
        internal_check(acc % k == 0, "non-integral Newton coefficient in the L-polynomial");
        e[k] = acc / k;
    }

    LPolynomial lp;
    lp.c.assign(2 * genus + 1, BigInt(0));
    for (unsigned k = 0; k <= genus; ++k) lp.c[k] = (k % 2 == 0) ? e[k] : -e[k];
    for (unsigned k = 0; k + 1 <= genus; ++k) lp.c[2 * genus - k] = big_pow(q, genus - k) * lp.c[k];

    internal_check(lp.c[0] == 1, "L-polynomial must have constant term 1");
    for (unsigned k = 0; k <= genus; ++k)
        internal_check(lp.c[2 * genus - k] == big_pow(q, genus - k) * lp.c[k],
                       "L-polynomial functional equation fails");
    internal_check(lp.at_one() >= 1, "L(1) must be a positive class number");
    return lp;
}

BigInt predicted_point_count(const LPolynomial& lpoly, const BigInt& q, unsigned i) {
    if (i < 1) throw std::invalid_argument("point counts start at i = 1");
    unsigned deg = static_cast<unsigned>(lpoly.c.size()) - 1;

    std::vector<BigInt> e(deg + 1);
    for (unsigned k = 0; k <= deg; ++k) e[k] = (k % 2 == 0) ? lpoly.c[k] : -lpoly.c[k];

    // Newton forward: P_k = (-1)^(k-1) k e_k + sum_{j=1..k-1} (-1)^(j-1) e_j P_{k-j}
    std::vector<BigInt> P(i + 1);
    for (unsigned k = 1; k <= i; ++k) {
        BigInt acc = 0;
        if (k <= deg) {
            acc = BigInt(k) * e[k];
            if (k % 2 == 0) acc = -acc;
        }
        for (unsigned j = 1; j < k; ++j) {
            if (j > deg) break;
            BigInt term = e[j] * P[k - j];
            if (j % 2 == 0) term = -term;
            acc += term;
        }
        P[k] = acc;
    }
    return big_pow(q, i) + 1 - P[i];
}

ClassNumberResult divisor_class_number_full(const Polynomial& d, const PointCountOptions& opts) {
    QuadExtension ext = classify(d);
    if (ext.infinite_place == InfinitePlace::Inert)
        throw HypothesisError("inert place at infinity: class number path unsupported");

    unsigned g = static_cast<unsigned>(ext.genus);
    const BigInt& q = d.field.cardinality();

    ClassNumberResult res{ext, count_points_up_to(d, g, opts), LPolynomial{}, 0, false};
    res.lpoly = l_polynomial(q, g, res.counts);
    res.h = res.lpoly.at_one();

    auto [hw_lo, hw_hi] = hasse_weil_interval(static_cast<int64_t>(d.field.cardinality_u64()),
                                              ext.genus);
    QuadExact h_exact{BigRat(res.h)};
    internal_check(hw_lo <= h_exact && h_exact <= hw_hi,
                   "class number outside the Hasse-Weil interval");

    if (big_pow(q, g + 1) <= opts.point_budget) {
        BigInt direct = count_points(d, g + 1, opts);
        internal_check(direct == predicted_point_count(res.lpoly, q, g + 1),
                       "assembled L-polynomial mispredicts the next point count");
        res.self_checked = true;
    }
    return res;
}

BigInt divisor_class_number(const Polynomial& d, const PointCountOptions& opts) {
    return divisor_class_number_full(d, opts).h;
}

}  // namespace quadff
