#pragma once

#include "quadff/polyring.hpp"
#include "quadff/quadexact.hpp"

namespace quadff {

// Behavior of the place at infinity of F_q(T) in F_q(T)(sqrt d):
//   Ramified: deg d odd
//   Split:    deg d even, leading coefficient a square
//   Inert:    deg d even, leading coefficient a non-square
enum class InfinitePlace { Ramified, Split, Inert };

const char* infinite_place_name(InfinitePlace p);

// The quadratic extension K = F_q(T)(sqrt d) with its derived invariants.
// Construction enforces d nonconstant and squarefree.
struct QuadExtension {
    FieldSpec field;
    Polynomial d;
    int deg_d = 0;
    bool deg_odd = false;
    bool lc_square = false;
    InfinitePlace infinite_place = InfinitePlace::Ramified;
    int delta = 1;  // constant-field degree of the Hilbert class field over F_q
    int genus = 0;  // genus of K: ceil(deg d / 2) - 1

    bool is_geometric() const { return delta == 1; }
};

// Throws std::invalid_argument for zero d, HypothesisError for constant or
// non-squarefree d.
QuadExtension classify(const Polynomial& d);

// Degree of the different of K/F: deg d, plus 1 when the infinite place
// ramifies (odd deg d).
int different_degree(const QuadExtension& ext);

// Invariants of the Hilbert class field L of K for a given ideal class
// number r = [L:K], from Riemann-Hurwitz with an everywhere-unramified L/K:
//   genus_L = r (ceil(deg d/2) - 2) + 1,  different_L_F = 2 r ceil(deg d/2).
// The genus formula can go negative when fed an upper-bound r on a low-genus
// field; it is then clamped to 0 (flagged), which only tightens the
// Chebotarev error bound it feeds into.
struct HilbertData {
    BigInt r;
    BigInt genus_L;
    BigInt different_L_F;
    bool genus_clamped = false;
};

// Requires a geometric extension and r >= 1.
HilbertData hilbert_data(const QuadExtension& ext, const BigInt& r);

// Fundamental unit g + h sqrt(d) of A[sqrt d] in the Split case, by the
// quadratic-surd continued fraction over F_q((1/T)). norm_constant is the
// nonzero constant g^2 - d h^2.
struct FundamentalUnit {
    Polynomial g;
    Polynomial h;
    FieldElement norm_constant;
};

// Throws HypothesisError outside the Split case, BudgetError past step_cap.
FundamentalUnit fundamental_unit(const QuadExtension& ext, int step_cap = 10000);

// Ideal class number h_{B_K} from the divisor class number h_K:
//   Ramified: h_K;  Split: h_K / deg g (exact by theory);  Inert: 2 h_K.
BigInt ideal_class_number(const QuadExtension& ext, const BigInt& h_K, int unit_step_cap = 10000);

// Exact Hasse-Weil interval [(sqrt q - 1)^(2g), (sqrt q + 1)^(2g)] for the
// divisor class number of a genus-g field over F_q.
std::pair<QuadExact, QuadExact> hasse_weil_interval(int64_t q, int genus);

}  // namespace quadff
