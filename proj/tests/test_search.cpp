#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quadff/bounds.hpp"
#include "quadff/errors.hpp"
#include "quadff/search.hpp"
#include "quadff/zeta.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

using namespace quadff;

namespace {

Polynomial sparse19(const FieldSpec& f5, int64_t c0, int64_t c1, int64_t c2, int64_t c8,
                    int64_t c19) {
    std::vector<int64_t> c(20, 0);
    c[0] = c0;
    c[1] = c1;
    c[2] = c2;
    c[8] = c8;
    c[19] = c19;
    return poly_from_ints(f5, c);
}

bool same_result(const SearchResult& a, const SearchResult& b) {
    return a.degree == b.degree && poly_equal(a.value, b.value) && poly_equal(a.x, b.x) &&
           poly_equal(a.y, b.y) && poly_equal(a.monic_value, b.monic_value) && a.unit == b.unit &&
           a.exhaustive == b.exhaustive;
}

}  // namespace

TEST_CASE("degree profiles for deg d = 19") {
    DegreeProfile p19 = degree_profile(19, 19);
    CHECK(p19.feasible);
    CHECK(p19.y_exact);
    CHECK(p19.y_deg_lo == 0);
    CHECK(p19.y_deg_hi == 0);
    CHECK(p19.x_deg_lo == 0);
    CHECK(p19.x_deg_hi == 9);
    CHECK(p19.x_zero_allowed);

    CHECK_FALSE(degree_profile(19, 18).feasible);  // even n needs n > deg d
    CHECK_FALSE(degree_profile(19, 1).feasible);   // odd n needs n >= deg d

    DegreeProfile p20 = degree_profile(19, 20);
    CHECK(p20.feasible);
    CHECK(p20.x_exact);
    CHECK(p20.x_deg_lo == 10);
    CHECK(p20.x_deg_hi == 10);
    CHECK_FALSE(p20.x_zero_allowed);
    CHECK(p20.y_deg_lo == 0);
    CHECK(p20.y_deg_hi == 0);

    DegreeProfile p21 = degree_profile(19, 21);
    CHECK(p21.feasible);
    CHECK(p21.y_exact);
    CHECK(p21.y_deg_lo == 1);
    CHECK(p21.y_deg_hi == 1);
    CHECK(p21.x_deg_hi == 10);

    CHECK_THROWS_AS(degree_profile(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(degree_profile(3, 0), std::invalid_argument);
}

TEST_CASE("profiles are exact: brute force over a box agrees both ways") {
    FieldSpec f3 = FieldSpec::make(3, 1);
    Polynomial d = poly_from_ints(f3, {1, 2, 0, 1});

    // Backward containment: every pair with y != 0 lands inside the profile
    // of the degree it produces.
    for (uint64_t yr = 1; yr < 27; ++yr) {
        Polynomial y = poly_from_ints(
            f3, {int64_t(yr % 3), int64_t(yr / 3 % 3), int64_t(yr / 9 % 3)});
        for (uint64_t xr = 0; xr < 81; ++xr) {
            Polynomial x = poly_from_ints(f3, {int64_t(xr % 3), int64_t(xr / 3 % 3),
                                               int64_t(xr / 9 % 3), int64_t(xr / 27 % 3)});
            Polynomial v = poly_sub(poly_mul(x, x), poly_mul(d, poly_mul(y, y)));
            int n = v.degree();
            REQUIRE(n >= 3);
            DegreeProfile prof = degree_profile(3, n);
            CHECK(prof.feasible);
            CHECK(y.degree() >= prof.y_deg_lo);
            CHECK(y.degree() <= prof.y_deg_hi);
            if (x.is_zero())
                CHECK(prof.x_zero_allowed);
            else {
                CHECK(x.degree() >= prof.x_deg_lo);
                CHECK(x.degree() <= prof.x_deg_hi);
            }
        }
    }

    // y = 0 never matters: the value is a square.
    for (uint64_t xr = 3; xr < 81; ++xr) {
        Polynomial x = poly_from_ints(f3, {int64_t(xr % 3), int64_t(xr / 3 % 3),
                                           int64_t(xr / 9 % 3), int64_t(xr / 27 % 3)});
        if (x.degree() < 1) continue;
        CHECK_FALSE(poly_is_irreducible(poly_mul(x, x)));
    }

    // Forward exactness: every pool pair produces degree exactly n.
    for (int n = 3; n <= 8; ++n) {
        DegreeProfile prof = degree_profile(3, n);
        if (!prof.feasible) continue;
        for (int dy = prof.y_deg_lo; dy <= prof.y_deg_hi; ++dy) {
            PolyEnumerator ys(f3, dy, false);
            for (uint64_t yi = 0; yi < ys.count(); ++yi) {
                Polynomial y = ys.at(yi);
                for (int dx = prof.x_deg_lo; dx <= prof.x_deg_hi; ++dx) {
                    PolyEnumerator xs(f3, dx, false);
                    for (uint64_t xi = 0; xi < xs.count(); ++xi) {
                        Polynomial x = xs.at(xi);
                        Polynomial v = poly_sub(poly_mul(x, x), poly_mul(d, poly_mul(y, y)));
                        CHECK(v.degree() == n);
                    }
                }
            }
        }
    }
}

TEST_CASE("smallest irreducible values over F_3") {
    FieldSpec f3 = FieldSpec::make(3, 1);

    SearchOptions opts;
    opts.degree_cap = 6;

    // d = T: the very first candidate 0^2 - T * 1^2 works.
    Polynomial t = poly_from_ints(f3, {0, 1});
    SearchResult r1 = smallest_irreducible(t, opts);
    CHECK(r1.degree == 1);
    CHECK(poly_equal(r1.value, poly_from_ints(f3, {0, 2})));
    CHECK(r1.x.is_zero());
    CHECK(poly_equal(r1.y, poly_one(f3)));
    CHECK(poly_equal(r1.monic_value, t));
    CHECK(r1.unit == ff_from_int(f3, 2));
    CHECK(r1.exhaustive);

    // Irreducible cubic d: -d itself is the first hit.
    Polynomial d = poly_from_ints(f3, {1, 2, 0, 1});
    SearchResult r3 = smallest_irreducible(d, opts);
    CHECK(r3.degree == 3);
    CHECK(poly_equal(r3.value, poly_from_ints(f3, {2, 1, 0, 2})));
    CHECK(r3.x.is_zero());
    CHECK(poly_equal(r3.y, poly_one(f3)));
    CHECK(poly_equal(r3.monic_value, d));
    CHECK(r3.exhaustive);

    // Excluding values sharing a factor with d rules out the n = 3 and n = 4
    // profiles entirely (checked by hand), so the answer moves past degree 4.
    SearchOptions coprime = opts;
    coprime.coprime_to_d = true;
    SearchResult rc = smallest_irreducible(d, coprime);
    CHECK(rc.degree >= 5);
    CHECK(poly_gcd(rc.value, d).degree() == 0);
    CHECK(poly_is_irreducible(rc.value));

    SearchOptions parallel = coprime;
    parallel.workers = 5;
    CHECK(same_result(rc, smallest_irreducible(d, parallel)));

    SearchOptions no_cap;
    CHECK_THROWS_AS(smallest_irreducible(t, no_cap), std::invalid_argument);
}

TEST_CASE("reference search over F_5 at degree 19") {
    FieldSpec f5 = FieldSpec::make(5, 1);
    Polynomial d = sparse19(f5, 2, 0, 0, 3, 1);  // T^19 + 3T^8 + 2
    REQUIRE_FALSE(poly_is_irreducible(d));

    SearchOptions opts;
    opts.degree_cap = 19;
    SearchResult r = smallest_irreducible(d, opts);

    CHECK(r.degree == 19);
    CHECK(poly_equal(r.value, sparse19(f5, 2, 4, 1, 2, 4)));  // 4T^19+2T^8+T^2+4T+2
    CHECK(poly_equal(r.x, poly_from_ints(f5, {2, 1})));       // T + 2
    CHECK(poly_equal(r.y, poly_one(f5)));
    CHECK(r.unit == ff_from_int(f5, 4));
    CHECK(poly_equal(r.monic_value, sparse19(f5, 3, 1, 4, 3, 1)));
    CHECK(r.exhaustive);

    // Degree bound from the exact-arithmetic side of the project: the found
    // degree respects it with the Hasse-Weil class number bound plugged in.
    BoundReport report = make_bound_report(5, 19, class_degree_upper_bound(5, 19));
    CHECK(r.degree <= report.degree_bound);

    // The hit is coprime to d, so the restricted search agrees.
    SearchOptions coprime = opts;
    coprime.coprime_to_d = true;
    CHECK(same_result(r, smallest_irreducible(d, coprime)));

    SearchOptions parallel = opts;
    parallel.workers = 4;
    CHECK(same_result(r, smallest_irreducible(d, parallel)));

    SearchOptions low_cap;
    low_cap.degree_cap = 18;  // no feasible profile below 19 at all
    CHECK_THROWS_AS(smallest_irreducible(d, low_cap), BudgetError);
}

TEST_CASE("split case scans a capped box and reports an upper bound") {
    FieldSpec f3 = FieldSpec::make(3, 1);
    Polynomial d = poly_from_ints(f3, {0, 1, 1});  // T^2 + T = T(T+1), lc square
    REQUIRE(classify(d).infinite_place == InfinitePlace::Split);

    SearchOptions opts;
    opts.split_x_cap = 2;
    opts.split_y_cap = 1;
    SearchResult r = smallest_irreducible(d, opts);

    // Pell cancellation in action: x = T, y = 1 gives T^2 - (T^2+T) = -T.
    CHECK(r.degree == 1);
    CHECK(poly_equal(r.value, poly_from_ints(f3, {0, 2})));
    CHECK(poly_equal(r.x, poly_from_ints(f3, {0, 1})));
    CHECK(poly_equal(r.y, poly_one(f3)));
    CHECK(r.unit == ff_from_int(f3, 2));
    CHECK_FALSE(r.exhaustive);

    // A degree filter that excludes the whole box is reported as exhausted.
    SearchOptions filtered;
    filtered.split_x_cap = 0;
    filtered.split_y_cap = 0;
    filtered.degree_cap = 1;  // constants minus d e^2 all have degree 2
    CHECK_THROWS_AS(smallest_irreducible(d, filtered), BudgetError);

    SearchOptions missing_caps;
    missing_caps.degree_cap = 4;
    CHECK_THROWS_AS(smallest_irreducible(d, missing_caps), std::invalid_argument);

    Polynomial inert = poly_from_ints(f3, {1, 0, 2});  // lc non-square
    SearchOptions any;
    any.degree_cap = 4;
    any.split_x_cap = 2;
    any.split_y_cap = 2;
    CHECK_THROWS_AS(smallest_irreducible(inert, any), HypothesisError);
}

TEST_CASE("representability witnesses") {
    FieldSpec f3 = FieldSpec::make(3, 1);
    Polynomial d = poly_from_ints(f3, {1, 2, 0, 1});

    // p = d is u^-1 (0^2 - d 1^2) with u = -1.
    auto self_rep = represent(d, d);
    REQUIRE(self_rep.has_value());
    CHECK(self_rep->x.is_zero());
    CHECK(poly_equal(self_rep->y, poly_one(f3)));
    CHECK(self_rep->unit == ff_from_int(f3, 2));

    // Degree too small for the profile: provably not representable.
    CHECK_FALSE(represent(poly_from_ints(f3, {0, 1}), d).has_value());

    // Character obstruction: d is a non-square mod T^2 + 1.
    Polynomial p2 = poly_from_ints(f3, {1, 0, 1});
    REQUIRE(residue_symbol(d, p2) == -1);
    CHECK_FALSE(represent(p2, d).has_value());

    CHECK_THROWS_AS(represent(poly_from_ints(f3, {0, 0, 1}), d),
                    std::invalid_argument);  // T^2 is not irreducible
    Polynomial split_d = poly_from_ints(f3, {0, 1, 1});
    CHECK_THROWS_AS(represent(d, split_d), std::invalid_argument);  // even deg d

    // The reference witness over F_5.
    FieldSpec f5 = FieldSpec::make(5, 1);
    Polynomial d19 = sparse19(f5, 2, 0, 0, 3, 1);
    Polynomial p19 = sparse19(f5, 3, 1, 4, 3, 1);
    auto rep = represent(p19, d19);
    REQUIRE(rep.has_value());
    CHECK(poly_equal(rep->x, poly_from_ints(f5, {2, 1})));
    CHECK(poly_equal(rep->y, poly_one(f5)));
    CHECK(rep->unit == ff_from_int(f5, 4));
    Polynomial lhs = poly_mul_scalar(p19, rep->unit);
    Polynomial rhs = poly_sub(poly_mul(rep->x, rep->x),
                              poly_mul(d19, poly_mul(rep->y, rep->y)));
    CHECK(poly_equal(lhs, rhs));
}

TEST_CASE("forward search and representability testing enumerate the same primes") {
    FieldSpec f3 = FieldSpec::make(3, 1);
    Polynomial d = poly_from_ints(f3, {1, 2, 0, 1});

    // Forward: all irreducible values over the exact profiles, by degree.
    std::set<std::string> forward;
    for (int n = 1; n <= 6; ++n) {
        DegreeProfile prof = degree_profile(3, n);
        if (!prof.feasible) continue;
        for (int dy = prof.y_deg_lo; dy <= prof.y_deg_hi; ++dy) {
            PolyEnumerator ys(f3, dy, false);
            for (uint64_t yi = 0; yi < ys.count(); ++yi) {
                Polynomial y = ys.at(yi);
                Polynomial dy2 = poly_mul(d, poly_mul(y, y));
                std::vector<Polynomial> xs;
                if (prof.x_zero_allowed) xs.push_back(poly_zero(f3));
                for (int dx = prof.x_deg_lo; dx <= prof.x_deg_hi; ++dx) {
                    PolyEnumerator band(f3, dx, false);
                    for (uint64_t xi = 0; xi < band.count(); ++xi) xs.push_back(band.at(xi));
                }
                for (const Polynomial& x : xs) {
                    Polynomial v = poly_sub(poly_mul(x, x), dy2);
                    if (poly_is_irreducible(v)) forward.insert(poly_render(poly_monic(v)));
                }
            }
        }
    }

    // Backward: representability of each monic irreducible, degree by degree.
    int agreed = 0;
    for (int n = 1; n <= 6; ++n) {
        PolyEnumerator monics(f3, n, true);
        for (uint64_t i = 0; i < monics.count(); ++i) {
            Polynomial p = monics.at(i);
            if (!poly_is_irreducible(p)) continue;
            auto rep = represent(p, d);
            CHECK(rep.has_value() == (forward.count(poly_render(p)) > 0));
            ++agreed;
            if (!rep) continue;
            Polynomial lhs = poly_mul_scalar(p, rep->unit);
            Polynomial rhs = poly_sub(poly_mul(rep->x, rep->x),
                                      poly_mul(d, poly_mul(rep->y, rep->y)));
            CHECK(poly_equal(lhs, rhs));
        }
    }
    CHECK(agreed == 3 + 3 + 8 + 18 + 48 + 116);
}
