#include "quadff/ffield.hpp"

#include "quadff/errors.hpp"

#include <algorithm>
#include <limits>
#include <mutex>

namespace quadff {
namespace {

// ---- arithmetic over F_p on raw coefficient vectors (ascending powers) ----
//
// Self-contained mini poly layer used only for modulus validation, the
// canonical modulus search, and element inversion. The public polynomial ring
// lives in polyring.* and is built on top of FieldSpec, not under it.

using FpPoly = std::vector<uint32_t>;  // normalized: no trailing zeros, empty = 0

uint64_t fp_pow_scalar(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

uint32_t fp_inv_scalar(uint32_t a, uint32_t p) {
    if (a % p == 0) throw std::invalid_argument("inverse of zero mod p");
    return static_cast<uint32_t>(fp_pow_scalar(a, p - 2, p));
}

void fpp_normalize(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int fpp_deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly fpp_mul(const FpPoly& f, const FpPoly& g, uint32_t p) {
    if (f.empty() || g.empty()) return {};
    FpPoly out(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        uint64_t fi = f[i];
        for (size_t j = 0; j < g.size(); ++j)
            out[i + j] = static_cast<uint32_t>((out[i + j] + fi * g[j]) % p);
    }
    fpp_normalize(out);
    return out;
}

FpPoly fpp_sub(const FpPoly& f, const FpPoly& g, uint32_t p) {
    FpPoly out(std::max(f.size(), g.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        uint64_t a = i < f.size() ? f[i] : 0;
        uint64_t b = i < g.size() ? g[i] : 0;
        out[i] = static_cast<uint32_t>((a + p - b) % p);
    }
    fpp_normalize(out);
    return out;
}

// f mod g in place conceptually; returns remainder. g nonzero.
FpPoly fpp_rem(FpPoly f, const FpPoly& g, uint32_t p) {
    int dg = fpp_deg(g);
    uint32_t lg_inv = fp_inv_scalar(g.back(), p);
    while (fpp_deg(f) >= dg) {
        int shift = fpp_deg(f) - dg;
        uint64_t c = static_cast<uint64_t>(f.back()) * lg_inv % p;
        for (int i = 0; i <= dg; ++i) {
            uint64_t sub = c * g[i] % p;
            f[i + shift] = static_cast<uint32_t>((f[i + shift] + p - sub) % p);
        }
        fpp_normalize(f);
    }
    return f;
}

FpPoly fpp_gcd(FpPoly f, FpPoly g, uint32_t p) {
    while (!g.empty()) {
        FpPoly r = fpp_rem(std::move(f), g, p);
        f = std::move(g);
        g = std::move(r);
    }
    if (!f.empty() && f.back() != 1) {
        uint32_t inv = fp_inv_scalar(f.back(), p);
        for (auto& c : f) c = static_cast<uint32_t>(static_cast<uint64_t>(c) * inv % p);
    }
    return f;
}

FpPoly fpp_powmod(FpPoly base, BigInt e, const FpPoly& mod, uint32_t p) {
    FpPoly r{1};
    base = fpp_rem(std::move(base), mod, p);
    while (e > 0) {
        if (bit_test(e, 0)) r = fpp_rem(fpp_mul(r, base, p), mod, p);
        e >>= 1;
        if (e > 0) base = fpp_rem(fpp_mul(base, base, p), mod, p);
    }
    return r;
}

// Rabin test over F_p. f monic, degree >= 1.
bool fpp_is_irreducible(const FpPoly& f, uint32_t p) {
    int n = fpp_deg(f);
    if (n == 1) return true;
    const FpPoly t{0, 1};
    // Frobenius orbit of T: frob[i] = T^(p^i) mod f.
    FpPoly h = t;
    std::vector<FpPoly> frob(n + 1);
    frob[0] = t;
    for (int i = 1; i <= n; ++i) {
        h = fpp_powmod(h, p, f, p);
        frob[i] = h;
    }
    if (frob[n] != fpp_rem(t, f, p)) return false;
    for (uint64_t l : prime_factors(static_cast<uint64_t>(n))) {
        FpPoly g = fpp_sub(frob[n / l], t, p);
        FpPoly d = fpp_gcd(g, f, p);
        if (fpp_deg(d) > 0) return false;
    }
    return true;
}

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// First monic irreducible of degree m over F_p in canonical polynomial order
// (coefficients compared from the highest power down).
FpPoly canonical_modulus(uint32_t p, unsigned m) {
    if (m == 1) return FpPoly{0, 1};
    BigInt total = big_pow(p, m);
    for (BigInt idx = 0; idx < total; ++idx) {
        FpPoly f(m + 1, 0);
        f[m] = 1;
        BigInt rest = idx;  // big-endian digits: first digit is the T^(m-1) coefficient
        for (unsigned j = m; j-- > 0;) {
            BigInt scale = big_pow(p, j);
            f[j] = static_cast<uint32_t>(rest / scale);
            rest %= scale;
        }
        if (fpp_is_irreducible(f, p)) return f;
    }
    throw InternalCheckError("no irreducible modulus found");  // unreachable
}

}  // namespace

struct FieldSpec::Data {
    uint32_t p = 0;
    unsigned m = 0;
    std::vector<uint32_t> modulus;  // ascending, size m+1, monic
    BigInt q;
    uint64_t q_u64 = 0;  // 0 when q does not fit in 64 bits
    mutable std::mutex chi_mutex;
    mutable std::vector<int8_t> chi;  // built lazily; size q + 4 when present
};

FieldSpec FieldSpec::make(uint32_t p, unsigned m) {
    return make_with_modulus(p, canonical_modulus(p, m));
}

FieldSpec FieldSpec::make_with_modulus(uint32_t p, const std::vector<uint32_t>& modulus) {
    if (!is_prime_u32(p)) throw std::invalid_argument("characteristic must be prime");
    if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
    if (modulus.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
    unsigned m = static_cast<unsigned>(modulus.size()) - 1;
    for (uint32_t c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (!fpp_is_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible");
    auto d = std::make_shared<Data>();
    d->p = p;
    d->m = m;
    d->modulus = modulus;
    d->q = big_pow(p, m);
    if (d->q <= std::numeric_limits<uint64_t>::max()) d->q_u64 = static_cast<uint64_t>(d->q);
    return FieldSpec(std::move(d));
}

uint32_t FieldSpec::characteristic() const { return d_->p; }
unsigned FieldSpec::degree() const { return d_->m; }
const std::vector<uint32_t>& FieldSpec::modulus() const { return d_->modulus; }
const BigInt& FieldSpec::cardinality() const { return d_->q; }

uint64_t FieldSpec::cardinality_u64() const {
    if (d_->q_u64 == 0) throw BudgetError("field cardinality exceeds 64 bits");
    return d_->q_u64;
}

bool FieldSpec::same_field(const FieldSpec& other) const {
    return d_ == other.d_ ||
           (d_->p == other.d_->p && d_->m == other.d_->m && d_->modulus == other.d_->modulus);
}

FieldElement ff_zero(const FieldSpec& k) {
    return FieldElement(k.degree(), 0u);
}

FieldElement ff_one(const FieldSpec& k) {
    FieldElement x(k.degree(), 0u);
    x[0] = 1;
    return x;
}

FieldElement ff_from_int(const FieldSpec& k, int64_t v) {
    int64_t p = k.characteristic();
    int64_t r = v % p;
    if (r < 0) r += p;
    FieldElement x(k.degree(), 0u);
    x[0] = static_cast<uint32_t>(r);
    return x;
}

FieldElement ff_generator(const FieldSpec& k) {
    FieldElement x(k.degree(), 0u);
    if (k.degree() == 1) {
        x[0] = (k.characteristic() - k.modulus()[0]) % k.characteristic();
    } else {
        x[1] = 1;
    }
    return x;
}

bool ff_is_zero(const FieldElement& x) {
    return std::all_of(x.begin(), x.end(), [](uint32_t c) { return c == 0; });
}

namespace {

void require_same_size(const FieldSpec& k, const FieldElement& x) {
    if (x.size() != k.degree()) throw std::invalid_argument("element does not belong to this field");
}

}  // namespace

FieldElement ff_add(const FieldSpec& k, const FieldElement& x, const FieldElement& y) {
    require_same_size(k, x);
    require_same_size(k, y);
    uint32_t p = k.characteristic();
    FieldElement out(x);
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] += y[i];
        if (out[i] >= p) out[i] -= p;
    }
    return out;
}

FieldElement ff_sub(const FieldSpec& k, const FieldElement& x, const FieldElement& y) {
    require_same_size(k, x);
    require_same_size(k, y);
    uint32_t p = k.characteristic();
    FieldElement out(x);
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] += p - y[i];
        if (out[i] >= p) out[i] -= p;
    }
    return out;
}

FieldElement ff_neg(const FieldSpec& k, const FieldElement& x) {
    require_same_size(k, x);
    uint32_t p = k.characteristic();
    FieldElement out(x);
    for (auto& c : out) c = c == 0 ? 0 : p - c;
    return out;
}

FieldElement ff_mul(const FieldSpec& k, const FieldElement& x, const FieldElement& y) {
    require_same_size(k, x);
    require_same_size(k, y);
    uint32_t p = k.characteristic();
    unsigned m = k.degree();
    if (m == 1) {
        FieldElement out(1, 0u);
        out[0] = static_cast<uint32_t>(static_cast<uint64_t>(x[0]) * y[0] % p);
        return out;
    }
    boost::container::small_vector<uint64_t, 24> acc(2 * m - 1, 0);
    for (unsigned i = 0; i < m; ++i) {
        if (x[i] == 0) continue;
        uint64_t xi = x[i];
        for (unsigned j = 0; j < m; ++j) acc[i + j] += xi * y[j] % p;
    }
    // Fold T^(m+k) = T^k * (T^m mod modulus) from the top down. The modulus is
    // monic, so T^m == -(modulus[0..m-1]) in the quotient.
    const auto& mod = k.modulus();
    for (unsigned j = 2 * m - 2; j >= m; --j) {
        uint64_t v = acc[j] % p;
        if (v) {
            uint64_t vneg = p - v;
            for (unsigned t = 0; t < m; ++t) acc[j - m + t] += vneg * mod[t] % p;
        }
        if (j == m) break;
    }
    FieldElement out(m, 0u);
    for (unsigned i = 0; i < m; ++i) out[i] = static_cast<uint32_t>(acc[i] % p);
    return out;
}

FieldElement ff_inv(const FieldSpec& k, const FieldElement& x) {
    require_same_size(k, x);
    if (ff_is_zero(x)) throw std::invalid_argument("division by zero in field");
    uint32_t p = k.characteristic();
    if (k.degree() == 1) {
        FieldElement out(1, 0u);
        out[0] = fp_inv_scalar(x[0], p);
        return out;
    }
    // Extended Euclid on (x, modulus) over F_p.
    FpPoly r0(k.modulus());
    FpPoly r1(x.begin(), x.end());
    fpp_normalize(r1);
    FpPoly s0{}, s1{1};  // s tracks the coefficient of x
    while (!r1.empty()) {
        int d0 = fpp_deg(r0), d1 = fpp_deg(r1);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            continue;
        }
        uint64_t c = static_cast<uint64_t>(r0.back()) * fp_inv_scalar(r1.back(), p) % p;
        int shift = d0 - d1;
        FpPoly q(shift + 1, 0);
        q[shift] = static_cast<uint32_t>(c);
        r0 = fpp_sub(r0, fpp_mul(q, r1, p), p);
        s0 = fpp_sub(s0, fpp_mul(q, s1, p), p);
        if (fpp_deg(r0) < fpp_deg(r1)) {
            std::swap(r0, r1);
            std::swap(s0, s1);
        }
    }
    internal_check(fpp_deg(r0) == 0, "inverse gcd is not a unit");
    uint32_t scale = fp_inv_scalar(r0[0], p);
    FieldElement out(k.degree(), 0u);
    for (size_t i = 0; i < s0.size(); ++i)
        out[i] = static_cast<uint32_t>(static_cast<uint64_t>(s0[i]) * scale % p);
    return out;
}

FieldElement ff_div(const FieldSpec& k, const FieldElement& x, const FieldElement& y) {
    return ff_mul(k, x, ff_inv(k, y));
}

FieldElement ff_pow(const FieldSpec& k, const FieldElement& x, const BigInt& e) {
    require_same_size(k, x);
    if (e < 0) throw std::invalid_argument("negative exponent");
    FieldElement r = ff_one(k);
    FieldElement b = x;
    BigInt n = e;
    while (n > 0) {
        if (bit_test(n, 0)) r = ff_mul(k, r, b);
        n >>= 1;
        if (n > 0) b = ff_mul(k, b, b);
    }
    return r;
}

int ff_chi(const FieldSpec& k, const FieldElement& x) {
    require_same_size(k, x);
    if (ff_is_zero(x)) return 0;
    FieldElement w = ff_pow(k, x, (k.cardinality() - 1) / 2);
    if (w == ff_one(k)) return 1;
    internal_check(w == ff_neg(k, ff_one(k)), "Euler criterion returned a non-unit");
    return -1;
}

bool ff_is_square(const FieldSpec& k, const FieldElement& x) {
    return ff_chi(k, x) >= 0;
}

std::optional<FieldElement> ff_sqrt(const FieldSpec& k, const FieldElement& x) {
    require_same_size(k, x);
    if (ff_is_zero(x)) return ff_zero(k);
    if (ff_chi(k, x) < 0) return std::nullopt;
    // Tonelli-Shanks. q - 1 = 2^s * t with t odd.
    BigInt t = k.cardinality() - 1;
    unsigned s = 0;
    while (bit_test(t, 0) == false) {
        t >>= 1;
        ++s;
    }
    // First non-residue in canonical element order.
    FieldElement z = ff_zero(k);
    for (uint64_t r = 2;; ++r) {
        z = ff_element_at(k, r);
        if (ff_chi(k, z) < 0) break;
    }
    FieldElement c = ff_pow(k, z, t);
    FieldElement r = ff_pow(k, x, (t + 1) / 2);
    FieldElement w = ff_pow(k, x, t);
    unsigned mexp = s;
    const FieldElement one = ff_one(k);
    while (w != one) {
        unsigned i = 0;
        FieldElement probe = w;
        while (probe != one) {
            probe = ff_mul(k, probe, probe);
            ++i;
            internal_check(i <= mexp, "square-root order search diverged");
        }
        FieldElement b = c;
        for (unsigned j = 0; j + i + 1 < mexp; ++j) b = ff_mul(k, b, b);
        mexp = i;
        c = ff_mul(k, b, b);
        r = ff_mul(k, r, b);
        w = ff_mul(k, w, c);
    }
    internal_check(ff_mul(k, r, r) == x, "square root verification failed");
    FieldElement nr = ff_neg(k, r);
    return ff_compare(r, nr) <= 0 ? r : nr;
}

uint64_t ff_rank(const FieldSpec& k, const FieldElement& x) {
    require_same_size(k, x);
    k.cardinality_u64();
    uint64_t rank = 0;
    for (unsigned j = k.degree(); j-- > 0;) rank = rank * k.characteristic() + x[j];
    return rank;
}

FieldElement ff_element_at(const FieldSpec& k, uint64_t rank) {
    if (rank >= k.cardinality_u64()) throw std::invalid_argument("element rank out of range");
    FieldElement x(k.degree(), 0u);
    uint32_t p = k.characteristic();
    for (unsigned j = 0; j < k.degree(); ++j) {
        x[j] = static_cast<uint32_t>(rank % p);
        rank /= p;
    }
    return x;
}

int ff_compare(const FieldElement& x, const FieldElement& y) {
    if (x.size() != y.size()) throw std::invalid_argument("comparing elements of different fields");
    for (size_t j = x.size(); j-- > 0;) {
        if (x[j] != y[j]) return x[j] < y[j] ? -1 : 1;
    }
    return 0;
}

const std::vector<int8_t>& FieldSpec::quadratic_character_table(uint64_t max_entries) const {
    uint64_t q = cardinality_u64();
    if (q > max_entries) throw BudgetError("character table would exceed the configured threshold");
    std::lock_guard<std::mutex> lock(d_->chi_mutex);
    if (!d_->chi.empty()) return d_->chi;
    std::vector<int8_t> chi(q + 4, 0);
    const FieldSpec& k = *this;
    // Walk all elements with an odometer, mark the ranks of their squares.
    FieldElement z = ff_zero(k);
    for (uint64_t r = 1; r < q; ++r) {
        unsigned j = 0;
        while (true) {
            if (++z[j] == characteristic()) {
                z[j] = 0;
                ++j;
            } else {
                break;
            }
        }
        chi[ff_rank(k, ff_mul(k, z, z))] = 1;
    }
    for (uint64_t r = 1; r < q; ++r)
        if (chi[r] == 0) chi[r] = -1;
    chi[0] = 0;
    d_->chi = std::move(chi);
    return d_->chi;
}

}  // namespace quadff
