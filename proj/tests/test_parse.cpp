#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quadff/errors.hpp"
#include "quadff/parse.hpp"

#include <random>
#include <vector>

using namespace quadff;

TEST_CASE("hand-written polynomials over a prime field") {
    FieldSpec f3 = FieldSpec::make(3, 1);

    CHECK(poly_equal(poly_parse(f3, "T^3+2*T+1"), poly_from_ints(f3, {1, 2, 0, 1})));
    CHECK(poly_equal(poly_parse(f3, "T^3 - T + 1"), poly_from_ints(f3, {1, 2, 0, 1})));
    CHECK(poly_equal(poly_parse(f3, "2T^2 + 2T"), poly_from_ints(f3, {0, 2, 2})));
    CHECK(poly_equal(poly_parse(f3, "  T  "), poly_from_ints(f3, {0, 1})));
    CHECK(poly_equal(poly_parse(f3, "-T^2+4"), poly_from_ints(f3, {1, 0, 2})));
    CHECK(poly_equal(poly_parse(f3, "T+T+1"), poly_from_ints(f3, {1, 2})));
    CHECK(poly_equal(poly_parse(f3, "7"), poly_from_ints(f3, {1})));
    CHECK(poly_equal(poly_parse(f3, "0"), poly_zero(f3)));
    CHECK(poly_equal(poly_parse(f3, "3*T^2"), poly_zero(f3)));  // coefficient reduces to 0
    CHECK(poly_equal(poly_parse(f3, "T^1"), poly_from_ints(f3, {0, 1})));

    // A huge literal only ever exists reduced mod p.
    CHECK(poly_equal(poly_parse(f3, "123456789012345678901234567890123456788"),
                     poly_from_ints(f3, {2})));

    FieldSpec f5 = FieldSpec::make(5, 1);
    std::vector<int64_t> c(20, 0);
    c[0] = 2;
    c[8] = 3;
    c[19] = 1;
    CHECK(poly_equal(poly_parse(f5, "T^19+3*T^8+2"), poly_from_ints(f5, c)));
}

TEST_CASE("extension-field coefficients") {
    FieldSpec f27 = FieldSpec::make(3, 3);
    FieldElement a = ff_generator(f27);
    FieldElement a2 = ff_mul(f27, a, a);

    Polynomial f = poly_parse(f27, "(2*a^2+a+1)*T^2+(a)*T+2");
    REQUIRE(f.degree() == 2);
    FieldElement lead = ff_add(f27, ff_mul(f27, ff_from_int(f27, 2), a2),
                               ff_add(f27, a, ff_one(f27)));
    CHECK(f.coeff(2) == lead);
    CHECK(f.coeff(1) == a);
    CHECK(f.coeff(0) == ff_from_int(f27, 2));

    CHECK(poly_equal(poly_parse(f27, "(a^2-a)*T"),
                     poly_parse(f27, "(a^2+2*a)*T")));
    CHECK(poly_equal(poly_parse(f27, "(0)*T^5+T"), poly_parse(f27, "T")));

    // Prime-subfield coefficients never need parentheses.
    CHECK(poly_equal(poly_parse(f27, "2*T+1"),
                     poly_add(poly_mul_scalar(poly_T(f27), ff_from_int(f27, 2)),
                              poly_one(f27))));
}

TEST_CASE("malformed input is rejected with a position") {
    FieldSpec f3 = FieldSpec::make(3, 1);
    FieldSpec f9 = FieldSpec::make(3, 2);

    auto offset_of = [](auto fn) -> size_t {
        try {
            fn();
        } catch (const ParseError& e) {
            return e.position;
        }
        return size_t(-1);
    };

    CHECK(offset_of([&] { poly_parse(f3, "T^"); }) == 2);
    CHECK(offset_of([&] { poly_parse(f3, "T^-1"); }) == 2);
    CHECK(offset_of([&] { poly_parse(f3, "2*"); }) == 2);
    CHECK(offset_of([&] { poly_parse(f3, ""); }) == 0);
    CHECK(offset_of([&] { poly_parse(f3, "T+*2"); }) == 2);
    CHECK(offset_of([&] { poly_parse(f3, "x+1"); }) == 0);
    CHECK(offset_of([&] { poly_parse(f3, "T 2"); }) == 2);
    CHECK(offset_of([&] { poly_parse(f3, "T^999999999"); }) == 2);
    CHECK(offset_of([&] { poly_parse(f3, "(1)*T"); }) == 0);    // no extension field
    CHECK(offset_of([&] { poly_parse(f9, "(a+1"); }) == 0);     // unbalanced
    CHECK(offset_of([&] { poly_parse(f9, "(a^2)*T"); }) == 1);  // past the basis
    CHECK_THROWS_AS(poly_parse(f9, "a^2+1", "a", "a"), std::invalid_argument);
}

TEST_CASE("render and parse round-trip on seeded random polynomials") {
    std::mt19937_64 rng(20260822);
    std::vector<FieldSpec> fields = {FieldSpec::make(3, 1), FieldSpec::make(5, 1),
                                     FieldSpec::make(3, 2), FieldSpec::make(3, 3),
                                     FieldSpec::make(5, 2), FieldSpec::make(251, 1)};
    int done = 0;
    for (const FieldSpec& k : fields) {
        uint64_t q = k.cardinality_u64();
        for (int trial = 0; trial < 84; ++trial) {
            int deg = int(rng() % 13) - 1;  // -1 renders the zero polynomial
            std::vector<FieldElement> coeffs;
            for (int i = 0; i <= deg; ++i) coeffs.push_back(ff_element_at(k, rng() % q));
            Polynomial f = poly_from_coeffs(k, std::move(coeffs));
            Polynomial back = poly_parse(k, poly_render(f));
            CHECK(poly_equal(back, f));
            ++done;
        }
    }
    CHECK(done == 504);
}
