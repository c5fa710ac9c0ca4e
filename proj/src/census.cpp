#include "quadff/census.hpp"

#include "quadff/errors.hpp"
#include "quadff/search.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <stdexcept>

namespace quadff {

RamifiedProfile ramified_profile(const Polynomial& d) {
    QuadExtension ext = classify(d);  // enforces squarefree, nonconstant
    RamifiedProfile prof;
    prof.infinite_ramified = ext.deg_odd;
    for (const auto& [factor, mult] : poly_factor(d).parts) {
        internal_check(mult == 1, "squarefree d factored with multiplicity");
        prof.degree_counts[factor.degree()] += 1;
    }
    return prof;
}

BigInt unramified_prime_count(const Polynomial& d, int n) {
    if (n < 1) throw std::invalid_argument("prime degrees start at 1");
    RamifiedProfile prof = ramified_profile(d);
    BigInt gamma = count_monic_irreducibles(d.field.cardinality(), static_cast<unsigned>(n));
    auto it = prof.degree_counts.find(n);
    BigInt eps = it == prof.degree_counts.end() ? 0 : it->second;
    return gamma - eps;
}

BigInt represented_prime_count(const Polynomial& d, int n) {
    if (n < 1) throw std::invalid_argument("prime degrees start at 1");
    if (d.degree() % 2 == 0)
        throw std::invalid_argument("the representability census needs odd deg d");
    BigInt count = 0;
    PolyEnumerator monics(d.field, n, true);
    for (uint64_t i = 0; i < monics.count(); ++i) {
        Polynomial p = monics.at(i);
        if (!poly_is_irreducible(p)) continue;
        if (poly_mod(d, p).is_zero()) continue;  // ramified primes are excluded
        if (represent(p, d)) ++count;
    }
    return count;
}

namespace {

CensusRow census_row(const Polynomial& d, int n, const BigInt& gamma, const BigInt& eps,
                     const BigInt& r, const HilbertData& hd, int64_t q) {
    CensusRow row;
    row.n = n;
    row.gamma_n = gamma;
    row.eps_n = eps;
    row.pi_n = gamma - eps;
    row.pi_C_n = represented_prime_count(d, n);
    row.r = r;
    row.predicted = BigRat(row.pi_n) / BigRat(2 * r);
    row.rhs = chebotarev_error_bound(q, n, hd.genus_L, 1, 2 * r, hd.different_L_F);
    row.genus_clamped = hd.genus_clamped;

    BigRat gap = BigRat(row.pi_C_n) - row.predicted;
    if (gap < 0) gap = -gap;
    row.holds = QuadExact(gap) <= row.rhs;

    QuadExact pi_bound = prime_count_lower_bound(q, n, d.degree(), r);
    row.pi_lower_ok = QuadExact(BigRat(row.pi_n)) >= pi_bound;

    internal_check(row.pi_C_n >= 0 && row.pi_C_n <= row.pi_n,
                   "represented primes must be a subset of the unramified primes");
    return row;
}

}  // namespace

std::vector<CensusRow> chebotarev_census(const Polynomial& d, int n_max,
                                         const PointCountOptions& opts, unsigned workers) {
    if (n_max < 1) throw std::invalid_argument("census needs n_max >= 1");
    QuadExtension ext = classify(d);
    if (ext.infinite_place != InfinitePlace::Ramified)
        throw HypothesisError("the census requires odd deg d (ramified infinite place)");

    BigInt h = divisor_class_number(d, opts);
    BigInt r = ideal_class_number(ext, h);
    internal_check(r == h, "odd-degree d must have ideal class number h_K");
    HilbertData hd = hilbert_data(ext, r);
    int64_t q = static_cast<int64_t>(d.field.cardinality_u64());

    RamifiedProfile prof = ramified_profile(d);
    std::vector<CensusRow> rows(static_cast<size_t>(n_max));

    auto run_row = [&](int n) {
        BigInt gamma = count_monic_irreducibles(d.field.cardinality(), static_cast<unsigned>(n));
        auto it = prof.degree_counts.find(n);
        BigInt eps = it == prof.degree_counts.end() ? 0 : it->second;
        rows[static_cast<size_t>(n - 1)] = census_row(d, n, gamma, eps, r, hd, q);
    };

    if (workers <= 1) {
        for (int n = 1; n <= n_max; ++n) run_row(n);
    } else {
        std::vector<std::future<void>> parts;
        std::atomic<int> next{1};
        unsigned lanes = std::min(workers, static_cast<unsigned>(n_max));
        for (unsigned w = 0; w < lanes; ++w)
            parts.push_back(std::async(std::launch::async, [&] {
                for (int n = next.fetch_add(1); n <= n_max; n = next.fetch_add(1)) run_row(n);
            }));
        for (auto& f : parts) f.get();
    }
    return rows;
}

}  // namespace quadff
