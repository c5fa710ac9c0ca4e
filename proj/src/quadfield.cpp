#include "quadff/quadfield.hpp"

#include "quadff/errors.hpp"

namespace quadff {

const char* infinite_place_name(InfinitePlace p) {
    switch (p) {
        case InfinitePlace::Ramified: return "ramified";
        case InfinitePlace::Split: return "split";
        case InfinitePlace::Inert: return "inert";
    }
    return "?";
}

QuadExtension classify(const Polynomial& d) {
    if (d.is_zero()) throw std::invalid_argument("d must be nonzero");
    if (d.degree() == 0)
        throw HypothesisError("constant d does not give a geometric quadratic extension");
    if (!poly_is_squarefree(d)) throw HypothesisError("d must be squarefree");
    QuadExtension ext{d.field, d, d.degree(), d.degree() % 2 == 1,
                      ff_is_square(d.field, d.leading()), InfinitePlace::Ramified, 1, 0};
    if (ext.deg_odd) {
        ext.infinite_place = InfinitePlace::Ramified;
    } else if (ext.lc_square) {
        ext.infinite_place = InfinitePlace::Split;
    } else {
        ext.infinite_place = InfinitePlace::Inert;
    }
    ext.delta = ext.infinite_place == InfinitePlace::Inert ? 2 : 1;
    ext.genus = (ext.deg_d + 1) / 2 - 1;
    return ext;
}

int different_degree(const QuadExtension& ext) {
    return ext.deg_d + (ext.deg_odd ? 1 : 0);
}

HilbertData hilbert_data(const QuadExtension& ext, const BigInt& r) {
    if (!ext.is_geometric())
        throw HypothesisError("Hilbert class field data requires a geometric extension");
    if (r < 1) throw std::invalid_argument("ideal class number must be >= 1");
    BigInt half = (ext.deg_d + 1) / 2;
    HilbertData data{r, r * (half - 2) + 1, 2 * r * half, false};
    if (data.genus_L < 0) {
        data.genus_L = 0;
        data.genus_clamped = true;
    }
    return data;
}

namespace {

// Polynomial part of sqrt(d) in F_q((1/T)): the unique s (up to sign, fixed
// by taking the canonical square root of the leading coefficient) with
// deg(d - s^2) < deg(d)/2. Requires even degree and square leading
// coefficient.
Polynomial laurent_sqrt_floor(const Polynomial& d) {
    const FieldSpec& k = d.field;
    int half = d.degree() / 2;
    auto lead = ff_sqrt(k, d.leading());
    internal_check(lead.has_value() && d.degree() % 2 == 0,
                   "truncated square root needs even degree and square leading coefficient");
    std::vector<FieldElement> s(static_cast<size_t>(half) + 1, ff_zero(k));
    s[static_cast<size_t>(half)] = *lead;
    FieldElement twice_lead_inv = ff_inv(k, ff_add(k, *lead, *lead));
    for (int i = half - 1; i >= 0; --i) {
        int tot = half + i;
        FieldElement acc = ff_zero(k);
        for (int a = i + 1; a <= half; ++a) {
            int b = tot - a;
            if (b <= i || b >= a) continue;
            acc = ff_add(k, acc, ff_mul(k, s[static_cast<size_t>(a)], s[static_cast<size_t>(b)]));
        }
        acc = ff_add(k, acc, acc);
        if (tot % 2 == 0 && tot / 2 > i) {
            const FieldElement& mid = s[static_cast<size_t>(tot / 2)];
            acc = ff_add(k, acc, ff_mul(k, mid, mid));
        }
        s[static_cast<size_t>(i)] = ff_mul(k, ff_sub(k, d.coeff(tot), acc), twice_lead_inv);
    }
    return poly_from_coeffs(k, std::move(s));
}

}  // namespace

FundamentalUnit fundamental_unit(const QuadExtension& ext, int step_cap) {
    if (ext.infinite_place != InfinitePlace::Split)
        throw HypothesisError("fundamental unit search requires the split infinite place");
    const FieldSpec& k = ext.field;
    const Polynomial& d = ext.d;
    Polynomial s = laurent_sqrt_floor(d);
    internal_check(poly_sub(d, poly_mul(s, s)).degree() < d.degree() / 2,
                   "truncated square root out of tolerance");

    // Quadratic-surd continued fraction: alpha_i = (P_i + sqrt d)/Q_i with
    //   a_i = quo(P_i + s, Q_i),  P_{i+1} = a_i Q_i - P_i,
    //   Q_{i+1} = (d - P_{i+1}^2)/Q_i  (exact),
    // stopping at the first constant Q_i (i >= 1), where the convergent
    // satisfies p^2 - d q^2 in F_q^x.
    Polynomial P = poly_zero(k), Q = poly_one(k);
    Polynomial a = s;  // a_0 = quo(0 + s, 1)
    Polynomial p_prev = poly_one(k), p_cur = a;
    Polynomial q_prev = poly_zero(k), q_cur = poly_one(k);
    for (int step = 1; step <= step_cap; ++step) {
        P = poly_sub(poly_mul(a, Q), P);
        auto [q_next, rem] = poly_divrem(poly_sub(d, poly_mul(P, P)), Q);
        internal_check(rem.is_zero(), "continued-fraction denominator does not divide");
        Q = q_next;
        internal_check(!Q.is_zero(), "continued-fraction denominator vanished");
        if (Q.degree() == 0) {
            Polynomial norm = poly_sub(poly_mul(p_cur, p_cur), poly_mul(d, poly_mul(q_cur, q_cur)));
            internal_check(norm.degree() == 0, "unit norm is not a constant");
            return FundamentalUnit{p_cur, q_cur, norm.coeff(0)};
        }
        a = poly_divrem(poly_add(P, s), Q).first;
        Polynomial p_next = poly_add(poly_mul(a, p_cur), p_prev);
        Polynomial q_next2 = poly_add(poly_mul(a, q_cur), q_prev);
        p_prev = std::move(p_cur);
        p_cur = std::move(p_next);
        q_prev = std::move(q_cur);
        q_cur = std::move(q_next2);
    }
    throw BudgetError("fundamental unit not found within the continued-fraction step cap");
}

BigInt ideal_class_number(const QuadExtension& ext, const BigInt& h_K, int unit_step_cap) {
    if (h_K < 1) throw std::invalid_argument("divisor class number must be >= 1");
    switch (ext.infinite_place) {
        case InfinitePlace::Ramified:
            return h_K;
        case InfinitePlace::Inert:
            return 2 * h_K;
        case InfinitePlace::Split: {
            FundamentalUnit u = fundamental_unit(ext, unit_step_cap);
            BigInt deg_g = u.g.degree();
            internal_check(deg_g >= 1, "fundamental unit with constant g");
            internal_check(h_K % deg_g == 0, "divisor class number not divisible by deg g");
            return h_K / deg_g;
        }
    }
    throw InternalCheckError("unhandled infinite place");
}

std::pair<QuadExact, QuadExact> hasse_weil_interval(int64_t q, int genus) {
    if (genus < 0) throw std::invalid_argument("genus must be >= 0");
    QuadExact sq = QuadExact::sqrt_of(q);
    unsigned e = 2 * static_cast<unsigned>(genus);
    return {(sq - QuadExact(1)).pow(e), (sq + QuadExact(1)).pow(e)};
}

}  // namespace quadff
