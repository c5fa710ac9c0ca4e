#pragma once

#include "quadff/polyring.hpp"
#include "quadff/quadfield.hpp"

#include <optional>

namespace quadff {

// Feasible (deg y, deg x) shapes for x^2 - d y^2 to have degree exactly n.
// Exact for odd deg d: x^2 has even degree and d y^2 odd degree, so the
// leading terms can never cancel and one side carries the lead alone.
struct DegreeProfile {
    int n = 0;
    bool feasible = false;
    int y_deg_lo = 0, y_deg_hi = -1;  // inclusive; y = 0 is never usable
    int x_deg_lo = 0, x_deg_hi = -1;  // inclusive
    bool x_zero_allowed = false;
    bool y_exact = false;  // odd n: deg y forced to y_deg_lo
    bool x_exact = false;  // even n: deg x forced to x_deg_lo
};

// Throws std::invalid_argument for even deg_d (no exact profile exists) or
// n < 1.
DegreeProfile degree_profile(int deg_d, int n);

struct SearchOptions {
    // Ramified case: inclusive bound on the result degree, required >= 1.
    int degree_cap = 0;
    unsigned workers = 1;
    // Skip values sharing an irreducible factor with d.
    bool coprime_to_d = false;
    // Split case: box bounds on deg x and deg y, both required >= 0. The
    // Pell phenomenon lets leading terms cancel, so no degree profile is
    // exact and the scan is a capped box instead.
    int split_x_cap = -1;
    int split_y_cap = -1;
};

struct SearchResult {
    int degree = 0;
    Polynomial value;  // x^2 - d y^2 as produced, not normalized
    Polynomial x, y;
    Polynomial monic_value;
    FieldElement unit;  // value = unit * monic_value
    // True when no feasible candidate of smaller degree or earlier canonical
    // order exists; false for the Split-case box scan, whose result is an
    // upper bound only.
    bool exhaustive = true;
};

// Smallest-degree irreducible value of x^2 - d y^2 over F_q[T], ties broken
// by canonical (y, then x) enumeration order. Throws HypothesisError for the
// Inert case and BudgetError when the caps are exhausted without a hit.
SearchResult smallest_irreducible(const Polynomial& d, const SearchOptions& opts);

struct Representation {
    Polynomial x, y;
    FieldElement unit;  // unit * p = x^2 - d y^2
};

// Representability of a monic irreducible p as a unit multiple of
// x^2 - d y^2. Odd deg d only: the degree profile makes the bounded scan
// exhaustive, so nullopt proves no representation exists. The witness is
// the canonically first (y, then unit) hit.
std::optional<Representation> represent(const Polynomial& p, const Polynomial& d);

}  // namespace quadff
