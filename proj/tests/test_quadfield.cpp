#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadff/errors.hpp"
#include "quadff/quadfield.hpp"

using namespace quadff;

namespace {
const FieldSpec F3 = FieldSpec::make(3, 1);
const FieldSpec F5 = FieldSpec::make(5, 1);

Polynomial reference_d19() {
    // T^19 + 3 T^8 + 2 over F_5
    std::vector<int64_t> c(20, 0);
    c[0] = 2;
    c[8] = 3;
    c[19] = 1;
    return poly_from_ints(F5, c);
}
}  // namespace

TEST_CASE("classification trichotomy") {
    QuadExtension ref = classify(reference_d19());
    CHECK(ref.infinite_place == InfinitePlace::Ramified);
    CHECK(ref.delta == 1);
    CHECK(ref.genus == 9);
    CHECK(ref.is_geometric());

    QuadExtension split = classify(poly_from_ints(F5, {1, 0, 1}));  // T^2+1
    CHECK(split.infinite_place == InfinitePlace::Split);
    CHECK(split.delta == 1);
    CHECK(split.genus == 0);

    QuadExtension inert = classify(poly_from_ints(F3, {1, 0, 2}));  // 2T^2+1
    CHECK(inert.infinite_place == InfinitePlace::Inert);
    CHECK(inert.delta == 2);
    CHECK_FALSE(inert.is_geometric());
}

TEST_CASE("classification rejects bad d") {
    CHECK_THROWS_AS(classify(poly_zero(F3)), std::invalid_argument);
    CHECK_THROWS_AS(classify(poly_one(F3)), HypothesisError);  // constant
    Polynomial sq = poly_mul(poly_from_ints(F3, {1, 1}), poly_from_ints(F3, {1, 1}));
    CHECK_THROWS_AS(classify(sq), HypothesisError);  // not squarefree
}

TEST_CASE("ramified iff odd degree, exhaustively over F_3 up to degree 6") {
    for (int deg = 1; deg <= 6; ++deg) {
        PolyEnumerator e(F3, deg, false);
        for (uint64_t i = 0; i < e.count(); ++i) {
            Polynomial d = e.at(i);
            if (!poly_is_squarefree(d)) continue;
            QuadExtension ext = classify(d);
            CHECK((ext.infinite_place == InfinitePlace::Ramified) == (deg % 2 == 1));
            CHECK((ext.delta == 1) ==
                  (ext.infinite_place != InfinitePlace::Inert));
            CHECK(ext.genus == (deg + 1) / 2 - 1);
        }
    }
}

TEST_CASE("different degree of K over F") {
    CHECK(different_degree(classify(reference_d19())) == 20);
    // even degree: no infinite contribution (3T^4+1 is inert but the
    // different of K/F is still well defined)
    CHECK(different_degree(classify(poly_from_ints(F5, {1, 0, 0, 0, 3}))) == 4);
    // consistency with the factor-sum route: d = T(T+1)(T+2) over F_5
    Polynomial d = poly_mul(poly_mul(poly_T(F5), poly_from_ints(F5, {1, 1})),
                            poly_from_ints(F5, {2, 1}));
    QuadExtension ext = classify(d);
    Factorization fac = poly_factor(d);
    int finite_sum = 0;
    for (const auto& [part, mult] : fac.parts) finite_sum += part.degree() * mult;
    CHECK(different_degree(ext) == finite_sum + 1);  // odd degree adds the infinite place
}

TEST_CASE("Hilbert class field data") {
    // r=1, deg d=3: genus_L = 1(2-2)+1 = 1 = genus_K
    QuadExtension c3 = classify(poly_from_ints(F3, {1, 2, 0, 1}));
    HilbertData h1 = hilbert_data(c3, 1);
    CHECK(h1.genus_L == 1);
    CHECK(h1.genus_L == c3.genus);
    CHECK(h1.different_L_F == 4);
    CHECK_FALSE(h1.genus_clamped);

    // deg d=19, r=1348408
    HilbertData big = hilbert_data(classify(reference_d19()), 1348408);
    CHECK(big.genus_L == BigInt(8) * 1348408 + 1);
    CHECK(big.genus_L == 10787265);
    CHECK(big.different_L_F == BigInt(2) * 1348408 * 10);

    // r=2, deg d=4 (need a geometric degree-4 d over F_3: lc square)
    QuadExtension c4 = classify(poly_from_ints(F3, {2, 1, 0, 0, 1}));
    HilbertData h2 = hilbert_data(c4, 2);
    CHECK(h2.genus_L == 1);
    CHECK(h2.different_L_F == 8);

    // Riemann-Hurwitz identity 2 g_L - 2 = 2r (g_K - 1) + |D_{L/K}| with
    // |D_{L/K}| = 0, re-derived independently
    for (const auto& [ext, r] : {std::pair<QuadExtension, BigInt>{c3, 5}, {c4, 3}, {classify(reference_d19()), 1348408}}) {
        HilbertData hd = hilbert_data(ext, r);
        if (!hd.genus_clamped)
            CHECK(2 * hd.genus_L - 2 == 2 * r * (BigInt(ext.genus) - 1));
    }

    // genus clamp engages for upper-bound r on a genus-0 field
    QuadExtension c2 = classify(poly_from_ints(F3, {2, 0, 1}));  // T^2+2, lc square, genus 0
    HilbertData clamped = hilbert_data(c2, 5);
    CHECK(clamped.genus_L == 0);
    CHECK(clamped.genus_clamped);

    CHECK_THROWS_AS(hilbert_data(classify(poly_from_ints(F3, {1, 0, 2})), 1), HypothesisError);
}

TEST_CASE("fundamental unit reference cases") {
    // q=5, d=T^2+1 -> (T, 1), norm -1
    FundamentalUnit u1 = fundamental_unit(classify(poly_from_ints(F5, {1, 0, 1})));
    CHECK(poly_equal(u1.g, poly_T(F5)));
    CHECK(poly_equal(u1.h, poly_one(F5)));
    CHECK(u1.norm_constant == ff_from_int(F5, -1));

    // q=3, d=T^2+T -> (T+2, 1), norm +1
    FundamentalUnit u2 = fundamental_unit(classify(poly_from_ints(F3, {0, 1, 1})));
    CHECK(poly_equal(u2.g, poly_from_ints(F3, {2, 1})));
    CHECK(poly_equal(u2.h, poly_one(F3)));
    CHECK(u2.norm_constant == ff_from_int(F3, 1));

    CHECK_THROWS_AS(fundamental_unit(classify(reference_d19())), HypothesisError);  // ramified
    CHECK_THROWS_AS(fundamental_unit(classify(poly_from_ints(F3, {1, 0, 2}))), HypothesisError);  // inert
}

TEST_CASE("fundamental unit: identity and minimality, exhaustive over split d of degree 2 and 4") {
    for (const FieldSpec* kp : {&F3, &F5}) {
        const FieldSpec& k = *kp;
        for (int deg : {2, 4}) {
            PolyEnumerator e(k, deg, false);
            for (uint64_t i = 0; i < e.count(); ++i) {
                Polynomial d = e.at(i);
                if (!poly_is_squarefree(d) || !ff_is_square(k, d.leading())) continue;
                QuadExtension ext = classify(d);
                REQUIRE(ext.infinite_place == InfinitePlace::Split);
                FundamentalUnit u = fundamental_unit(ext);
                // unit identity
                Polynomial norm = poly_sub(poly_mul(u.g, u.g), poly_mul(d, poly_mul(u.h, u.h)));
                CHECK(norm.degree() == 0);
                CHECK_FALSE(ff_is_zero(norm.coeff(0)));
                CHECK(u.g.degree() >= deg / 2);  // theory: deg g >= deg d / 2
                // minimality: a smaller unit g' + h' sqrt(d) would force
                // g'^2 mod d to be a nonzero constant c with (g'^2 - c)/d a
                // perfect square, so one divrem per candidate g' suffices.
                // The scan is exhaustive whenever the candidate space is
                // modest (all of F_3, and F_5 units of degree up to 5);
                // beyond that the identity and half-degree checks above
                // still ran.
                uint64_t candidates = 0;
                for (int dg = 1; dg < u.g.degree(); ++dg)
                    candidates += PolyEnumerator(k, dg, false).count();
                if (candidates > 20000) continue;
                bool smaller_exists = false;
                for (int dg = 1; dg < u.g.degree() && !smaller_exists; ++dg) {
                    PolyEnumerator ge(k, dg, false);
                    for (uint64_t gi = 0; gi < ge.count() && !smaller_exists; ++gi) {
                        Polynomial g = ge.at(gi);
                        auto [quot, rem] = poly_divrem(poly_mul(g, g), d);
                        if (rem.degree() != 0 || quot.is_zero()) continue;
                        if (poly_sqrt(quot).has_value()) smaller_exists = true;
                    }
                }
                CHECK_FALSE(smaller_exists);
            }
        }
    }
}

TEST_CASE("ideal class number trichotomy") {
    QuadExtension ram = classify(poly_from_ints(F3, {1, 2, 0, 1}));
    CHECK(ideal_class_number(ram, 7) == 7);
    QuadExtension inert = classify(poly_from_ints(F3, {1, 0, 2}));
    CHECK(ideal_class_number(inert, 7) == 14);
    QuadExtension split = classify(poly_from_ints(F5, {1, 0, 1}));
    CHECK(ideal_class_number(split, 1) == 1);  // deg g = 1
    CHECK_THROWS_AS(ideal_class_number(ram, 0), std::invalid_argument);
}

TEST_CASE("Hasse-Weil interval") {
    auto [lo0, hi0] = hasse_weil_interval(5, 0);
    CHECK(lo0 == QuadExact(1));
    CHECK(hi0 == QuadExact(1));
    auto [lo, hi] = hasse_weil_interval(5, 9);
    // frozen: floors 45 and 1514667986; the reference class number 1348408
    // sits inside
    CHECK(lo.floor() == 45);
    CHECK(hi.floor() == 1514667986);
    CHECK(lo < QuadExact(1348408));
    CHECK(QuadExact(1348408) < hi);
    CHECK_THROWS_AS(hasse_weil_interval(5, -1), std::invalid_argument);
}
