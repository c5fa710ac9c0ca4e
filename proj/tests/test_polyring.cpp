#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadff/errors.hpp"
#include "quadff/polyring.hpp"

using namespace quadff;

namespace {
const FieldSpec F3 = FieldSpec::make(3, 1);
const FieldSpec F5 = FieldSpec::make(5, 1);
}  // namespace

TEST_CASE("construction and normalization") {
    Polynomial f = poly_from_ints(F3, {1, 0, 0});  // trailing zeros trimmed
    CHECK(f.degree() == 0);
    CHECK(poly_zero(F3).degree() == kZeroDeg);
    CHECK(poly_from_ints(F3, {3, 6}).is_zero());
    CHECK(poly_from_ints(F3, {-1}).coeff(0) == ff_from_int(F3, 2));
}

TEST_CASE("ring identities hold across a sample grid") {
    // all polynomials of degree <= 2 over F_3
    std::vector<Polynomial> polys;
    polys.push_back(poly_zero(F3));
    for (int d = 0; d <= 2; ++d) {
        PolyEnumerator e(F3, d, false);
        for (uint64_t i = 0; i < e.count(); ++i) polys.push_back(e.at(i));
    }
    REQUIRE(polys.size() == 1 + 2 + 6 + 18);
    for (const auto& f : polys)
        for (const auto& g : polys) {
            CHECK(poly_equal(poly_add(f, g), poly_add(g, f)));
            CHECK(poly_equal(poly_mul(f, g), poly_mul(g, f)));
            CHECK(poly_equal(poly_sub(poly_add(f, g), g), f));
            CHECK(poly_mul(f, g).degree() == deg_add(f.degree(), g.degree()));
            if (!g.is_zero()) {
                auto [q, r] = poly_divrem(f, g);
                CHECK(poly_equal(poly_add(poly_mul(q, g), r), f));
                CHECK(r.degree() < g.degree());
            }
        }
}

TEST_CASE("division by zero polynomial throws") {
    CHECK_THROWS_AS(poly_divrem(poly_one(F3), poly_zero(F3)), std::invalid_argument);
}

TEST_CASE("gcd is monic and divides both") {
    Polynomial a = poly_from_ints(F5, {1, 1});        // T + 1
    Polynomial b = poly_from_ints(F5, {2, 3});        // 3T + 2
    Polynomial f = poly_mul(a, a);
    Polynomial g = poly_mul(a, b);
    Polynomial d = poly_gcd(f, g);
    CHECK(poly_equal(d, a));
    CHECK(poly_gcd(poly_zero(F5), poly_zero(F5)).is_zero());
    CHECK(poly_equal(poly_gcd(poly_zero(F5), b), poly_monic(b)));
}

TEST_CASE("derivative in characteristic p kills p-th powers") {
    // (T^3)' = 0 over F_3
    CHECK(poly_derivative(poly_from_ints(F3, {0, 0, 0, 1})).is_zero());
    // (T^2+T)' = 2T+1
    CHECK(poly_equal(poly_derivative(poly_from_ints(F3, {0, 1, 1})),
                     poly_from_ints(F3, {1, 2})));
}

TEST_CASE("irreducibility: known small cases over F_3") {
    CHECK(poly_is_irreducible(poly_from_ints(F3, {0, 1})));        // T
    CHECK(poly_is_irreducible(poly_from_ints(F3, {1, 0, 1})));     // T^2+1
    CHECK_FALSE(poly_is_irreducible(poly_from_ints(F3, {2, 0, 1})));  // T^2+2=(T+1)(T+2)
    CHECK(poly_is_irreducible(poly_from_ints(F3, {1, 2, 0, 1})));  // T^3+2T+1
    CHECK_FALSE(poly_is_irreducible(poly_from_ints(F3, {1})));     // unit
    CHECK_THROWS_AS(poly_is_irreducible(poly_zero(F3)), std::invalid_argument);
    // scaling by a unit does not change irreducibility
    CHECK(poly_is_irreducible(poly_from_ints(F3, {2, 4, 0, 2})));  // 2*(T^3+2T+1)
}

TEST_CASE("irreducibility agrees with the Moebius census") {
    // count degree-n monic irreducibles over F_3 by testing every candidate
    for (unsigned n = 1; n <= 5; ++n) {
        PolyEnumerator e(F3, static_cast<int>(n), true);
        BigInt found = 0;
        for (uint64_t i = 0; i < e.count(); ++i)
            if (poly_is_irreducible(e.at(i))) ++found;
        CHECK(found == count_monic_irreducibles(3, n));
    }
}

TEST_CASE("Moebius counts match the frozen table") {
    // gamma_n over F_3 for n = 1..7
    std::vector<int64_t> expect3{3, 3, 8, 18, 48, 116, 312};
    for (size_t i = 0; i < expect3.size(); ++i)
        CHECK(count_monic_irreducibles(3, static_cast<unsigned>(i + 1)) == expect3[i]);
    std::vector<int64_t> expect5{5, 10, 40, 150, 624, 2580};
    for (size_t i = 0; i < expect5.size(); ++i)
        CHECK(count_monic_irreducibles(5, static_cast<unsigned>(i + 1)) == expect5[i]);
}

TEST_CASE("powmod matches naive power for small cases") {
    Polynomial base = poly_from_ints(F5, {1, 1});
    Polynomial mod = poly_from_ints(F5, {2, 0, 0, 1});
    Polynomial naive = poly_one(F5);
    for (int i = 0; i < 13; ++i) naive = poly_mod(poly_mul(naive, base), mod);
    CHECK(poly_equal(poly_powmod(base, 13, mod), naive));
    CHECK(poly_equal(poly_powmod(base, 0, mod), poly_one(F5)));
}

TEST_CASE("factorization reassembles and is canonical") {
    // f = 2 * (T+1)^2 * (T^2+1) over F_3
    Polynomial a = poly_from_ints(F3, {1, 1});
    Polynomial b = poly_from_ints(F3, {1, 0, 1});
    Polynomial f = poly_mul_scalar(poly_mul(poly_mul(a, a), b), ff_from_int(F3, 2));
    Factorization fac = poly_factor(f, 7);
    CHECK(fac.unit == ff_from_int(F3, 2));
    REQUIRE(fac.parts.size() == 2);
    CHECK(poly_equal(fac.parts[0].first, a));
    CHECK(fac.parts[0].second == 2);
    CHECK(poly_equal(fac.parts[1].first, b));
    CHECK(fac.parts[1].second == 1);
}

TEST_CASE("factorization handles p-th powers (vanishing derivative)") {
    // (T^2+1)^3 over F_3 has zero derivative
    Polynomial b = poly_from_ints(F3, {1, 0, 1});
    Polynomial f = poly_mul(poly_mul(b, b), b);
    CHECK(poly_derivative(f).is_zero());
    Factorization fac = poly_factor(f);
    REQUIRE(fac.parts.size() == 1);
    CHECK(poly_equal(fac.parts[0].first, b));
    CHECK(fac.parts[0].second == 3);
    CHECK_FALSE(poly_is_squarefree(f));
}

TEST_CASE("factor results are identical across seeds") {
    Polynomial f = poly_from_ints(F5, {1, 2, 3, 4, 0, 1, 2});
    Factorization fa = poly_factor(f, 1);
    Factorization fb = poly_factor(f, 999);
    REQUIRE(fa.parts.size() == fb.parts.size());
    for (size_t i = 0; i < fa.parts.size(); ++i) {
        CHECK(poly_equal(fa.parts[i].first, fb.parts[i].first));
        CHECK(fa.parts[i].second == fb.parts[i].second);
    }
}

TEST_CASE("exhaustive factor check: every monic quartic over F_3 reassembles") {
    PolyEnumerator e(F3, 4, true);
    for (uint64_t i = 0; i < e.count(); ++i) {
        Polynomial f = e.at(i);
        Factorization fac = poly_factor(f, 3);
        // multiply-back is asserted inside poly_factor; check part invariants
        for (size_t j = 0; j < fac.parts.size(); ++j) {
            CHECK(poly_is_irreducible(fac.parts[j].first));
            CHECK(fac.parts[j].first.leading() == ff_one(F3));
            if (j > 0) CHECK(poly_compare(fac.parts[j - 1].first, fac.parts[j].first) < 0);
        }
    }
}

TEST_CASE("squarefree detection") {
    Polynomial a = poly_from_ints(F3, {1, 1});
    CHECK(poly_is_squarefree(a));
    CHECK(poly_is_squarefree(poly_from_ints(F3, {1, 2, 0, 1})));
    CHECK_FALSE(poly_is_squarefree(poly_mul(a, a)));
    CHECK(poly_is_squarefree(poly_one(F3)));
}

TEST_CASE("polynomial square root") {
    Polynomial s = poly_from_ints(F5, {3, 1, 2});  // 2T^2+T+3
    Polynomial f = poly_mul(s, s);
    auto r = poly_sqrt(f);
    REQUIRE(r.has_value());
    CHECK(poly_equal(poly_mul(*r, *r), f));
    // canonical orientation: leading coefficient not larger than its negation
    CHECK(ff_compare(r->leading(), ff_neg(F5, r->leading())) <= 0);
    CHECK_FALSE(poly_sqrt(poly_from_ints(F5, {0, 1})).has_value());      // odd degree
    CHECK_FALSE(poly_sqrt(poly_from_ints(F5, {1, 1, 1})).has_value());   // not a square
    CHECK(poly_sqrt(poly_zero(F5))->is_zero());
    // non-square leading coefficient
    CHECK_FALSE(poly_sqrt(poly_from_ints(F5, {0, 0, 2})).has_value());
}

TEST_CASE("roots") {
    // T^2 - 1 = (T-1)(T+1) over F_5: roots 1 and 4
    auto roots = poly_roots(poly_from_ints(F5, {-1, 0, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == ff_from_int(F5, 1));
    CHECK(roots[1] == ff_from_int(F5, 4));
    CHECK(poly_roots(poly_from_ints(F5, {2, 0, 1})).empty());  // T^2+2 has no roots mod 5
}

TEST_CASE("residue symbol matches the classical Legendre symbol on constants") {
    // prime T + 4 over F_5: residue field F_5 with T = 1; chi(2) = -1, chi(4) = +1
    Polynomial prime = poly_from_ints(F5, {4, 1});
    CHECK(residue_symbol(poly_from_ints(F5, {2}), prime) == -1);
    CHECK(residue_symbol(poly_from_ints(F5, {4}), prime) == 1);
    CHECK(residue_symbol(poly_from_ints(F5, {0, 5}), prime) == 0);  // zero polynomial mod anything
    // d = T: T mod (T+4) = 1, a square
    CHECK(residue_symbol(poly_T(F5), prime) == 1);
    // T^2+4 = (T+1)(T+4) is reducible, 2T+1 is not monic
    CHECK_THROWS_AS(residue_symbol(poly_T(F5), poly_from_ints(F5, {4, 0, 1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(residue_symbol(poly_T(F5), poly_from_ints(F5, {1, 2})),
                    std::invalid_argument);
}

TEST_CASE("residue symbol multiplicativity over a quadratic prime") {
    Polynomial prime = poly_from_ints(F3, {1, 0, 1});  // T^2+1 irreducible over F_3
    PolyEnumerator e(F3, 1, false);
    for (uint64_t i = 0; i < e.count(); ++i)
        for (uint64_t j = 0; j < e.count(); ++j) {
            Polynomial a = e.at(i), b = e.at(j);
            CHECK(residue_symbol(poly_mul(a, b), prime) ==
                  residue_symbol(a, prime) * residue_symbol(b, prime));
        }
}

TEST_CASE("enumerator is canonical, restartable, complete") {
    PolyEnumerator e(F3, 2, true);
    CHECK(e.count() == 9);
    for (uint64_t i = 0; i + 1 < e.count(); ++i)
        CHECK(poly_compare(e.at(i), e.at(i + 1)) < 0);
    CHECK(poly_equal(e.at(0), poly_from_ints(F3, {0, 0, 1})));
    CHECK(poly_equal(e.at(8), poly_from_ints(F3, {2, 2, 1})));
    PolyEnumerator all(F3, 1, false);
    CHECK(all.count() == 6);
    CHECK(poly_equal(all.at(0), poly_from_ints(F3, {0, 1})));
    CHECK(poly_equal(all.at(5), poly_from_ints(F3, {2, 2})));
    CHECK_THROWS_AS(all.at(6), std::invalid_argument);
}

TEST_CASE("embedding preserves arithmetic and fixes the prime field") {
    FieldSpec big = FieldSpec::make(3, 4);
    FieldEmbedding emb(FieldSpec::make(3, 2), big);
    FieldSpec small = emb.from();
    // homomorphism on all of F_9
    for (uint64_t i = 0; i < 9; ++i)
        for (uint64_t j = 0; j < 9; ++j) {
            FieldElement x = ff_element_at(small, i), y = ff_element_at(small, j);
            CHECK(emb.apply(ff_add(small, x, y)) == ff_add(big, emb.apply(x), emb.apply(y)));
            CHECK(emb.apply(ff_mul(small, x, y)) == ff_mul(big, emb.apply(x), emb.apply(y)));
        }
    CHECK(emb.apply(ff_one(small)) == ff_one(big));
    CHECK(emb.apply(ff_from_int(small, 2)) == ff_from_int(big, 2));
    // the generator image satisfies the source modulus
    Polynomial mod{big, {}};
    for (uint32_t c : small.modulus()) mod.coeffs.push_back(ff_from_int(big, c));
    CHECK(ff_is_zero(poly_eval(mod, emb.generator_image())));
    // squares remain squares under embedding
    for (uint64_t i = 0; i < 9; ++i) {
        FieldElement x = ff_element_at(small, i);
        if (ff_is_square(small, x)) CHECK(ff_is_square(big, emb.apply(x)));
    }
    CHECK_THROWS_AS(FieldEmbedding(FieldSpec::make(3, 2), FieldSpec::make(3, 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(FieldEmbedding(FieldSpec::make(3, 1), FieldSpec::make(5, 1)),
                    std::invalid_argument);
}

TEST_CASE("rendering round-trips through known strings") {
    CHECK(poly_render(poly_from_ints(F5, {3, 1, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1})) ==
          "T^19+3*T^8+T+3");
    CHECK(poly_render(poly_from_ints(F5, {0})) == "0");
    CHECK(poly_render(poly_from_ints(F5, {2})) == "2");
    CHECK(poly_render(poly_from_ints(F5, {0, 1})) == "T");
    CHECK(poly_render(poly_from_ints(F5, {0, 2})) == "2*T");
    CHECK(poly_render(poly_from_ints(F5, {1, 0, 1})) == "T^2+1");
    FieldSpec f9 = FieldSpec::make(3, 2);
    Polynomial g{f9, {ff_from_int(f9, 1), ff_generator(f9)}};
    CHECK(poly_render(g) == "(a)*T+1");
}
