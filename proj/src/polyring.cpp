#include "quadff/polyring.hpp"

#include "quadff/errors.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace quadff {

namespace {

void normalize(Polynomial& f) {
    while (!f.coeffs.empty() && ff_is_zero(f.coeffs.back())) f.coeffs.pop_back();
}

void require_same_ring(const Polynomial& f, const Polynomial& g) {
    if (!f.field.same_field(g.field))
        throw std::invalid_argument("polynomials live in different rings");
}

std::mt19937_64 seeded_rng(uint64_t seed) {
    // splitmix-style scramble so nearby seeds do not produce nearby streams
    uint64_t z = seed + 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return std::mt19937_64(z ^ (z >> 31));
}

}  // namespace

const FieldElement& Polynomial::leading() const {
    if (coeffs.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
    return coeffs.back();
}

FieldElement Polynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return ff_zero(field);
    return coeffs[static_cast<size_t>(i)];
}

int deg_add(int a, int b) {
    if (a == kZeroDeg || b == kZeroDeg) return kZeroDeg;
    return a + b;
}

int deg_max(int a, int b) { return a > b ? a : b; }

Polynomial poly_zero(const FieldSpec& k) { return Polynomial{k, {}}; }

Polynomial poly_one(const FieldSpec& k) { return Polynomial{k, {ff_one(k)}}; }

Polynomial poly_T(const FieldSpec& k) { return Polynomial{k, {ff_zero(k), ff_one(k)}}; }

Polynomial poly_constant(const FieldSpec& k, const FieldElement& c) {
    Polynomial f{k, {c}};
    normalize(f);
    return f;
}

Polynomial poly_from_ints(const FieldSpec& k, const std::vector<int64_t>& coeffs) {
    Polynomial f{k, {}};
    f.coeffs.reserve(coeffs.size());
    for (int64_t c : coeffs) f.coeffs.push_back(ff_from_int(k, c));
    normalize(f);
    return f;
}

Polynomial poly_from_coeffs(const FieldSpec& k, std::vector<FieldElement> coeffs) {
    Polynomial f{k, std::move(coeffs)};
    for (const auto& c : f.coeffs)
        if (c.size() != k.degree()) throw std::invalid_argument("coefficient from a different field");
    normalize(f);
    return f;
}

Polynomial poly_monomial(const FieldSpec& k, const FieldElement& c, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (ff_is_zero(c)) return poly_zero(k);
    Polynomial f{k, std::vector<FieldElement>(static_cast<size_t>(e) + 1, ff_zero(k))};
    f.coeffs.back() = c;
    return f;
}

bool poly_equal(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f, g);
    return f.coeffs == g.coeffs;
}

int poly_compare(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f, g);
    if (f.degree() != g.degree()) return f.degree() < g.degree() ? -1 : 1;
    for (size_t i = f.coeffs.size(); i-- > 0;) {
        int c = ff_compare(f.coeffs[i], g.coeffs[i]);
        if (c != 0) return c;
    }
    return 0;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f, g);
    const FieldSpec& k = f.field;
    Polynomial out{k, {}};
    size_t n = std::max(f.coeffs.size(), g.coeffs.size());
    out.coeffs.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        FieldElement a = i < f.coeffs.size() ? f.coeffs[i] : ff_zero(k);
        FieldElement b = i < g.coeffs.size() ? g.coeffs[i] : ff_zero(k);
        out.coeffs.push_back(ff_add(k, a, b));
    }
    normalize(out);
    return out;
}

Polynomial poly_neg(const Polynomial& f) {
    Polynomial out{f.field, {}};
    out.coeffs.reserve(f.coeffs.size());
    for (const auto& c : f.coeffs) out.coeffs.push_back(ff_neg(f.field, c));
    return out;
}

Polynomial poly_sub(const Polynomial& f, const Polynomial& g) {
    return poly_add(f, poly_neg(g));
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f, g);
    const FieldSpec& k = f.field;
    if (f.is_zero() || g.is_zero()) return poly_zero(k);
    Polynomial out{k, std::vector<FieldElement>(f.coeffs.size() + g.coeffs.size() - 1, ff_zero(k))};
    for (size_t i = 0; i < f.coeffs.size(); ++i) {
        if (ff_is_zero(f.coeffs[i])) continue;
        for (size_t j = 0; j < g.coeffs.size(); ++j) {
            if (ff_is_zero(g.coeffs[j])) continue;
            out.coeffs[i + j] = ff_add(k, out.coeffs[i + j], ff_mul(k, f.coeffs[i], g.coeffs[j]));
        }
    }
    normalize(out);
    return out;
}

Polynomial poly_mul_scalar(const Polynomial& f, const FieldElement& c) {
    const FieldSpec& k = f.field;
    if (ff_is_zero(c)) return poly_zero(k);
    Polynomial out{k, {}};
    out.coeffs.reserve(f.coeffs.size());
    for (const auto& a : f.coeffs) out.coeffs.push_back(ff_mul(k, a, c));
    return out;
}

std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f, g);
    const FieldSpec& k = f.field;
    if (g.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (f.degree() < g.degree()) return {poly_zero(k), f};
    FieldElement lg_inv = ff_inv(k, g.leading());
    std::vector<FieldElement> rem = f.coeffs;
    int dq = f.degree() - g.degree();
    std::vector<FieldElement> quot(static_cast<size_t>(dq) + 1, ff_zero(k));
    for (int i = dq; i >= 0; --i) {
        FieldElement c = ff_mul(k, rem[static_cast<size_t>(i + g.degree())], lg_inv);
        quot[static_cast<size_t>(i)] = c;
        if (ff_is_zero(c)) continue;
        for (int j = 0; j <= g.degree(); ++j) {
            size_t idx = static_cast<size_t>(i + j);
            rem[idx] = ff_sub(k, rem[idx], ff_mul(k, c, g.coeffs[static_cast<size_t>(j)]));
        }
    }
    Polynomial q{k, std::move(quot)}, r{k, std::move(rem)};
    normalize(q);
    r.coeffs.resize(static_cast<size_t>(std::max(g.degree(), 0)), ff_zero(k));
    normalize(r);
    return {std::move(q), std::move(r)};
}

Polynomial poly_mod(const Polynomial& f, const Polynomial& g) {
    return poly_divrem(f, g).second;
}

Polynomial poly_gcd(Polynomial f, Polynomial g) {
    require_same_ring(f, g);
    while (!g.is_zero()) {
        Polynomial r = poly_mod(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return f.is_zero() ? f : poly_monic(f);
}

Polynomial poly_derivative(const Polynomial& f) {
    const FieldSpec& k = f.field;
    Polynomial out{k, {}};
    if (f.degree() < 1) return out;
    out.coeffs.reserve(f.coeffs.size() - 1);
    for (size_t i = 1; i < f.coeffs.size(); ++i)
        out.coeffs.push_back(ff_mul(k, f.coeffs[i], ff_from_int(k, static_cast<int64_t>(i))));
    normalize(out);
    return out;
}

Polynomial poly_monic(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot normalize the zero polynomial");
    return poly_mul_scalar(f, ff_inv(f.field, f.leading()));
}

FieldElement poly_eval(const Polynomial& f, const FieldElement& x) {
    const FieldSpec& k = f.field;
    FieldElement acc = ff_zero(k);
    for (size_t i = f.coeffs.size(); i-- > 0;) acc = ff_add(k, ff_mul(k, acc, x), f.coeffs[i]);
    return acc;
}

Polynomial poly_powmod(const Polynomial& base, const BigInt& e, const Polynomial& modulus) {
    require_same_ring(base, modulus);
    if (modulus.degree() < 1) throw std::invalid_argument("powmod modulus must have positive degree");
    if (e < 0) throw std::invalid_argument("negative exponent");
    Polynomial r = poly_mod(poly_one(base.field), modulus);
    Polynomial b = poly_mod(base, modulus);
    BigInt n = e;
    while (n > 0) {
        if (bit_test(n, 0)) r = poly_mod(poly_mul(r, b), modulus);
        n >>= 1;
        if (n > 0) b = poly_mod(poly_mul(b, b), modulus);
    }
    return r;
}

bool poly_is_irreducible(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const FieldSpec& k = f.field;
    const BigInt& q = k.cardinality();
    // Quadratics and cubics are reducible iff they have a root; over a small
    // field a direct scan beats the Frobenius ladder.
    if (n <= 3 && q <= 4096) {
        uint64_t qq = k.cardinality_u64();
        for (uint64_t r = 0; r < qq; ++r)
            if (ff_is_zero(poly_eval(f, ff_element_at(k, r)))) return false;
        return true;
    }
    Polynomial fm = poly_monic(f);
    const Polynomial t = poly_T(k);
    std::vector<Polynomial> frob;  // frob[i] = T^(q^i) mod fm
    frob.reserve(static_cast<size_t>(n) + 1);
    frob.push_back(poly_mod(t, fm));
    for (int i = 1; i <= n; ++i) frob.push_back(poly_powmod(frob.back(), q, fm));
    if (!poly_equal(frob[static_cast<size_t>(n)], poly_mod(t, fm))) return false;
    for (uint64_t l : prime_factors(static_cast<uint64_t>(n))) {
        Polynomial g = poly_sub(frob[static_cast<size_t>(n / l)], t);
        if (poly_gcd(g, fm).degree() > 0) return false;
    }
    return true;
}

namespace {

// Frobenius-inverse per coefficient: c -> c^(q/p), the unique p-th root in F_q.
Polynomial poly_pth_root_coeffs(const Polynomial& f) {
    const FieldSpec& k = f.field;
    uint32_t p = k.characteristic();
    BigInt e = k.cardinality() / p;
    Polynomial out{k, {}};
    int n = f.degree();
    out.coeffs.reserve(static_cast<size_t>(n / static_cast<int>(p)) + 1);
    for (int i = 0; i <= n; i += static_cast<int>(p))
        out.coeffs.push_back(ff_pow(k, f.coeff(i), e));
    normalize(out);
    return out;
}

// f = g(T^p)?  True when every exponent with a nonzero coefficient is
// divisible by p; then returns g with g(T^p) = f.
bool poly_is_pth_power_shape(const Polynomial& f) {
    uint32_t p = f.field.characteristic();
    for (size_t i = 0; i < f.coeffs.size(); ++i)
        if (i % p != 0 && !ff_is_zero(f.coeffs[i])) return false;
    return true;
}

// Squarefree decomposition of a monic polynomial in characteristic p.
// Returns pairs (monic squarefree, multiplicity), factors pairwise coprime.
void squarefree_decompose(const Polynomial& f, int mult_scale,
                          std::vector<std::pair<Polynomial, int>>& out) {
    if (f.degree() <= 0) return;
    const FieldSpec& k = f.field;
    Polynomial df = poly_derivative(f);
    if (df.is_zero()) {
        internal_check(poly_is_pth_power_shape(f), "vanishing derivative without p-th power shape");
        squarefree_decompose(poly_pth_root_coeffs(f), mult_scale * static_cast<int>(k.characteristic()), out);
        return;
    }
    Polynomial c = poly_gcd(f, df);
    Polynomial w = poly_divrem(f, c).first;  // product of factors with p∤mult, each once
    int i = 1;
    while (w.degree() > 0) {
        Polynomial y = poly_gcd(w, c);
        Polynomial z = poly_divrem(w, y).first;  // factors of multiplicity exactly i
        if (z.degree() > 0) out.emplace_back(poly_monic(z), i * mult_scale);
        w = std::move(y);
        c = poly_divrem(c, w).first;
        ++i;
    }
    // what is left of c collects the factors with multiplicity divisible by p
    if (c.degree() > 0) {
        internal_check(poly_is_pth_power_shape(c), "residual factor is not a p-th power");
        squarefree_decompose(poly_pth_root_coeffs(c), mult_scale * static_cast<int>(k.characteristic()), out);
    }
}

// Equal-degree splitting (Cantor-Zassenhaus) of a monic squarefree product of
// irreducibles all of degree d.
void equal_degree_split(const Polynomial& g, int d, std::mt19937_64& rng,
                        std::vector<Polynomial>& out) {
    if (g.degree() == d) {
        out.push_back(poly_monic(g));
        return;
    }
    const FieldSpec& k = g.field;
    const BigInt exponent = (big_pow(k.cardinality(), static_cast<unsigned>(d)) - 1) / 2;
    const uint64_t q64 = k.cardinality_u64();
    while (true) {
        Polynomial u{k, {}};
        u.coeffs.reserve(static_cast<size_t>(g.degree()));
        for (int i = 0; i < g.degree(); ++i)
            u.coeffs.push_back(ff_element_at(k, rng() % q64));
        normalize(u);
        if (u.degree() < 1) continue;
        Polynomial w = poly_powmod(u, exponent, g);
        Polynomial s = poly_gcd(poly_sub(w, poly_one(k)), g);
        if (s.degree() > 0 && s.degree() < g.degree()) {
            equal_degree_split(s, d, rng, out);
            equal_degree_split(poly_divrem(g, s).first, d, rng, out);
            return;
        }
    }
}

}  // namespace

Factorization poly_factor(const Polynomial& f, uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    Factorization out{f.leading(), {}};
    Polynomial fm = poly_monic(f);
    if (fm.degree() == 0) return out;
    std::vector<std::pair<Polynomial, int>> squarefree;
    squarefree_decompose(fm, 1, squarefree);
    std::mt19937_64 rng = seeded_rng(seed);
    for (const auto& [part, mult] : squarefree) {
        // distinct-degree phase on each squarefree part
        Polynomial g = part;
        Polynomial h = poly_mod(poly_T(g.field), g);
        int d = 0;
        while (g.degree() > 0 && 2 * (d + 1) <= g.degree()) {
            ++d;
            h = poly_powmod(h, g.field.cardinality(), g);
            Polynomial gd = poly_gcd(poly_sub(h, poly_T(g.field)), g);
            if (gd.degree() > 0) {
                std::vector<Polynomial> irreducibles;
                equal_degree_split(gd, d, rng, irreducibles);
                for (auto& irr : irreducibles) out.parts.emplace_back(std::move(irr), mult);
                g = poly_divrem(g, gd).first;
                h = poly_mod(h, g);
            }
        }
        if (g.degree() > 0) out.parts.emplace_back(poly_monic(g), mult);
    }
    std::sort(out.parts.begin(), out.parts.end(),
              [](const auto& a, const auto& b) { return poly_compare(a.first, b.first) < 0; });
    // cross-check: unit * product of parts reproduces the input
    Polynomial prod = poly_constant(f.field, out.unit);
    for (const auto& [part, mult] : out.parts)
        for (int i = 0; i < mult; ++i) prod = poly_mul(prod, part);
    internal_check(poly_equal(prod, f), "factorization does not multiply back to the input");
    return out;
}

bool poly_is_squarefree(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    if (f.degree() <= 0) return true;
    Polynomial df = poly_derivative(f);
    if (df.is_zero()) return false;  // p-th power shape
    return poly_gcd(f, df).degree() == 0;
}

std::optional<Polynomial> poly_sqrt(const Polynomial& f) {
    const FieldSpec& k = f.field;
    if (f.is_zero()) return poly_zero(k);
    if (f.degree() % 2 != 0) return std::nullopt;
    int half = f.degree() / 2;
    auto lead = ff_sqrt(k, f.leading());
    if (!lead) return std::nullopt;
    std::vector<FieldElement> s(static_cast<size_t>(half) + 1, ff_zero(k));
    s[static_cast<size_t>(half)] = *lead;
    FieldElement twice_lead_inv = ff_inv(k, ff_add(k, *lead, *lead));
    for (int i = half - 1; i >= 0; --i) {
        // coefficient of T^(half+i) in s^2 must equal f's; the only term with
        // the unknown s_i is 2*s_half*s_i
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
        FieldElement target = ff_sub(k, f.coeff(tot), acc);
        s[static_cast<size_t>(i)] = ff_mul(k, target, twice_lead_inv);
    }
    Polynomial root = poly_from_coeffs(k, std::move(s));
    if (!poly_equal(poly_mul(root, root), f)) return std::nullopt;
    if (ff_compare(root.leading(), ff_neg(k, root.leading())) > 0) root = poly_neg(root);
    return root;
}

std::vector<FieldElement> poly_roots(const Polynomial& f, uint64_t seed) {
    Factorization fac = poly_factor(f, seed);
    std::vector<FieldElement> roots;
    for (const auto& [part, mult] : fac.parts) {
        (void)mult;
        if (part.degree() == 1) roots.push_back(ff_neg(f.field, part.coeff(0)));
    }
    std::sort(roots.begin(), roots.end(),
              [](const FieldElement& a, const FieldElement& b) { return ff_compare(a, b) < 0; });
    return roots;
}

BigInt count_monic_irreducibles(const BigInt& q, unsigned n) {
    if (n == 0) throw std::invalid_argument("degree must be positive");
    BigInt sum = 0;
    for (uint64_t m : divisors(n)) {
        int mu = moebius(m);
        if (mu == 0) continue;
        sum += mu * big_pow(q, static_cast<unsigned>(n / m));
    }
    internal_check(sum % n == 0, "irreducible count is not divisible by n");
    return sum / n;
}

int residue_symbol(const Polynomial& d, const Polynomial& prime) {
    require_same_ring(d, prime);
    if (prime.is_zero() || prime.leading() != ff_one(prime.field) || !poly_is_irreducible(prime))
        throw std::invalid_argument("residue symbol modulus must be monic irreducible");
    Polynomial r = poly_mod(d, prime);
    if (r.is_zero()) return 0;
    const FieldSpec& k = d.field;
    BigInt e = (big_pow(k.cardinality(), static_cast<unsigned>(prime.degree())) - 1) / 2;
    Polynomial w = poly_powmod(r, e, prime);
    if (poly_equal(w, poly_one(k))) return 1;
    internal_check(poly_equal(w, poly_neg(poly_one(k))), "residue symbol power is not +-1");
    return -1;
}

PolyEnumerator::PolyEnumerator(const FieldSpec& k, int degree, bool monic)
    : field_(k), degree_(degree), monic_(monic) {
    if (degree < 0) throw std::invalid_argument("enumerator degree must be >= 0");
    BigInt total = big_pow(k.cardinality(), static_cast<unsigned>(degree));
    if (!monic) total *= k.cardinality() - 1;
    if (total > std::numeric_limits<uint64_t>::max())
        throw BudgetError("enumeration space exceeds 64-bit indexing");
    count_ = static_cast<uint64_t>(total);
}

Polynomial PolyEnumerator::at(uint64_t index) const {
    if (index >= count_) throw std::invalid_argument("enumeration index out of range");
    uint64_t q = field_.cardinality_u64();
    std::vector<FieldElement> coeffs(static_cast<size_t>(degree_) + 1, ff_zero(field_));
    uint64_t rest = index;
    // big-endian digits: the T^(degree-1) digit varies slowest so enumeration
    // order equals the canonical polynomial order
    for (int j = 0; j < degree_; ++j) {
        coeffs[static_cast<size_t>(j)] = ff_element_at(field_, rest % q);
        rest /= q;
    }
    if (monic_) {
        internal_check(rest == 0, "monic enumeration index overflow");
        coeffs[static_cast<size_t>(degree_)] = ff_one(field_);
    } else {
        internal_check(rest < q - 1, "enumeration index overflow");
        coeffs[static_cast<size_t>(degree_)] = ff_element_at(field_, rest + 1);
    }
    return poly_from_coeffs(field_, std::move(coeffs));
}

FieldEmbedding::FieldEmbedding(const FieldSpec& from, const FieldSpec& to, uint64_t seed)
    : from_(from), to_(to), gen_image_(ff_zero(to)) {
    if (from.characteristic() != to.characteristic())
        throw std::invalid_argument("embedding requires equal characteristic");
    if (to.degree() % from.degree() != 0)
        throw std::invalid_argument("no embedding: source degree does not divide target degree");
    if (from.same_field(to)) {
        gen_image_ = ff_generator(to);
        return;
    }
    // image of the generator = canonical (smallest) root of the source
    // modulus inside the target field
    Polynomial mod{to, {}};
    mod.coeffs.reserve(from.modulus().size());
    for (uint32_t c : from.modulus()) mod.coeffs.push_back(ff_from_int(to, c));
    std::vector<FieldElement> roots = poly_roots(mod, seed);
    internal_check(roots.size() == from.degree(), "source modulus does not split in the target");
    gen_image_ = roots.front();
}

FieldElement FieldEmbedding::apply(const FieldElement& x) const {
    if (x.size() != from_.degree()) throw std::invalid_argument("element not in the source field");
    if (from_.same_field(to_)) return x;
    FieldElement acc = ff_zero(to_);
    for (size_t j = x.size(); j-- > 0;)
        acc = ff_add(to_, ff_mul(to_, acc, gen_image_), ff_from_int(to_, x[j]));
    return acc;
}

Polynomial poly_map(const FieldEmbedding& e, const Polynomial& f) {
    if (!f.field.same_field(e.from())) throw std::invalid_argument("polynomial not over the source field");
    Polynomial out{e.to(), {}};
    out.coeffs.reserve(f.coeffs.size());
    for (const auto& c : f.coeffs) out.coeffs.push_back(e.apply(c));
    return out;
}

namespace {

std::string render_prime_coeff(uint32_t c) { return std::to_string(c); }

std::string render_ext_coeff(const FieldElement& c, const std::string& gen) {
    // prime-subfield values render as bare integers; anything involving the
    // generator becomes a parenthesized polynomial in it, descending powers,
    // e.g. (2*a^2+a+1)
    bool prime_subfield = true;
    for (size_t j = 1; j < c.size(); ++j)
        if (c[j] != 0) prime_subfield = false;
    if (prime_subfield) return std::to_string(c.empty() ? 0 : c[0]);
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (size_t j = c.size(); j-- > 0;) {
        if (c[j] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (j == 0) {
            os << c[j];
        } else {
            if (c[j] != 1) os << c[j] << '*';
            os << gen;
            if (j > 1) os << '^' << j;
        }
    }
    if (first) os << '0';
    os << ')';
    return os.str();
}

}  // namespace

std::string poly_render(const Polynomial& f, const std::string& var, const std::string& gen) {
    if (f.is_zero()) return "0";
    const FieldSpec& k = f.field;
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        FieldElement c = f.coeff(i);
        if (ff_is_zero(c)) continue;
        if (!first) os << '+';
        first = false;
        bool is_one = (c == ff_one(k));
        std::string cs = k.degree() == 1 ? render_prime_coeff(c[0]) : render_ext_coeff(c, gen);
        if (i == 0) {
            os << cs;
        } else {
            if (!is_one) os << cs << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

}  // namespace quadff
