#include "quadff/search.hpp"

#include "quadff/errors.hpp"

#include <atomic>
#include <future>
#include <stdexcept>

namespace quadff {

namespace {

// Ordered candidate pool: optionally the zero polynomial, then every degree
// band ascending, each in canonical enumeration order. Mirrors poly_compare.
class PolyPool {
public:
    PolyPool(const FieldSpec& k, int deg_lo, int deg_hi, bool with_zero)
        : field_(k), with_zero_(with_zero) {
        BigInt total = with_zero ? 1 : 0;
        for (int deg = deg_lo; deg <= deg_hi; ++deg) {
            enums_.emplace_back(k, deg, false);
            total += enums_.back().count();
        }
        if (total > (BigInt(1) << 62)) throw BudgetError("candidate space too large to index");
        total_ = static_cast<uint64_t>(total);
    }

    uint64_t count() const { return total_; }

    Polynomial at(uint64_t idx) const {
        if (with_zero_) {
            if (idx == 0) return poly_zero(field_);
            --idx;
        }
        for (const PolyEnumerator& e : enums_) {
            if (idx < e.count()) return e.at(idx);
            idx -= e.count();
        }
        throw std::out_of_range("candidate index past the pool");
    }

private:
    FieldSpec field_;
    bool with_zero_;
    std::vector<PolyEnumerator> enums_;
    uint64_t total_ = 0;
};

PolyPool y_pool(const FieldSpec& k, const DegreeProfile& prof) {
    return PolyPool(k, prof.y_deg_lo, prof.y_deg_hi, false);
}

PolyPool x_pool(const FieldSpec& k, const DegreeProfile& prof) {
    return PolyPool(k, prof.x_deg_lo, prof.x_deg_hi, prof.x_zero_allowed);
}

Polynomial form_value(const Polynomial& d, const Polynomial& x, const Polynomial& y) {
    return poly_sub(poly_mul(x, x), poly_mul(d, poly_mul(y, y)));
}

bool shares_factor_with(const Polynomial& v, const Polynomial& d) {
    return poly_gcd(v, d).degree() > 0;
}

// First irreducible hit in one profile, scanning candidate indices
// [lo, hi) of the (y-major, x-minor) linearization. `stop_hint` lets other
// workers retire a range early once a smaller index has hit; correctness
// never depends on it.
std::optional<uint64_t> scan_profile(const Polynomial& d, const PolyPool& ys, const PolyPool& xs,
                                     uint64_t lo, uint64_t hi, bool coprime_to_d,
                                     std::atomic<uint64_t>* stop_hint) {
    uint64_t y_idx_prev = UINT64_MAX;
    Polynomial y = poly_zero(d.field);
    Polynomial dy2 = poly_zero(d.field);
    for (uint64_t idx = lo; idx < hi; ++idx) {
        if (stop_hint && idx > stop_hint->load(std::memory_order_relaxed)) return std::nullopt;
        uint64_t y_idx = idx / xs.count();
        if (y_idx != y_idx_prev) {
            y = ys.at(y_idx);
            dy2 = poly_mul(d, poly_mul(y, y));
            y_idx_prev = y_idx;
        }
        Polynomial x = xs.at(idx % xs.count());
        Polynomial v = poly_sub(poly_mul(x, x), dy2);
        if (v.degree() < 1) continue;
        if (coprime_to_d && shares_factor_with(v, d)) continue;
        if (!poly_is_irreducible(v)) continue;
        if (stop_hint) {
            uint64_t cur = stop_hint->load(std::memory_order_relaxed);
            while (idx < cur &&
                   !stop_hint->compare_exchange_weak(cur, idx, std::memory_order_relaxed)) {
            }
        }
        return idx;
    }
    return std::nullopt;
}

std::optional<std::pair<Polynomial, Polynomial>> search_profile(const Polynomial& d,
                                                                const DegreeProfile& prof,
                                                                bool coprime_to_d,
                                                                unsigned workers) {
    PolyPool ys = y_pool(d.field, prof);
    PolyPool xs = x_pool(d.field, prof);
    uint64_t total = ys.count() * xs.count();
    internal_check(xs.count() == 0 || total / xs.count() == ys.count(),
                   "candidate space size overflow");

    std::optional<uint64_t> best;
    if (workers <= 1 || total < 1024) {
        best = scan_profile(d, ys, xs, 0, total, coprime_to_d, nullptr);
    } else {
        if (workers > 64) workers = 64;
        std::atomic<uint64_t> stop_hint{UINT64_MAX};
        std::vector<std::future<std::optional<uint64_t>>> parts;
        for (unsigned w = 0; w < workers; ++w) {
            uint64_t lo = total / workers * w + std::min<uint64_t>(total % workers, w);
            uint64_t hi = total / workers * (w + 1) + std::min<uint64_t>(total % workers, w + 1);
            parts.push_back(std::async(std::launch::async, [&, lo, hi] {
                return scan_profile(d, ys, xs, lo, hi, coprime_to_d, &stop_hint);
            }));
        }
        for (auto& f : parts) {
            std::optional<uint64_t> hit = f.get();
            if (hit && (!best || *hit < *best)) best = hit;
        }
    }
    if (!best) return std::nullopt;
    return std::make_pair(ys.at(*best / xs.count()), xs.at(*best % xs.count()));
}

SearchResult finish(const Polynomial& d, const Polynomial& x, const Polynomial& y,
                    bool exhaustive) {
    Polynomial value = form_value(d, x, y);
    internal_check(poly_is_irreducible(value), "search returned a reducible value");
    SearchResult res{value.degree(), value,          x, y,
                     poly_monic(value), value.leading(), exhaustive};
    return res;
}

SearchResult search_ramified(const Polynomial& d, const SearchOptions& opts) {
    if (opts.degree_cap < 1)
        throw std::invalid_argument("a degree cap >= 1 is required for the search");
    for (int n = 1; n <= opts.degree_cap; ++n) {
        DegreeProfile prof = degree_profile(d.degree(), n);
        if (!prof.feasible) continue;
        auto hit = search_profile(d, prof, opts.coprime_to_d, opts.workers);
        if (hit) return finish(d, hit->second, hit->first, true);
    }
    throw BudgetError("no irreducible value found up to degree " +
                      std::to_string(opts.degree_cap));
}

SearchResult search_split_box(const Polynomial& d, const SearchOptions& opts) {
    if (opts.split_x_cap < 0 || opts.split_y_cap < 0)
        throw std::invalid_argument("the Split case needs explicit deg x / deg y caps");
    PolyPool ys(d.field, 0, opts.split_y_cap, false);
    PolyPool xs(d.field, 0, opts.split_x_cap, true);

    // Degrees are not monotone along the box, so the whole box is scanned
    // and the minimum kept: order by degree, then (y, x) linearized index.
    std::optional<std::pair<int, uint64_t>> best;
    for (uint64_t y_idx = 0; y_idx < ys.count(); ++y_idx) {
        Polynomial y = ys.at(y_idx);
        Polynomial dy2 = poly_mul(d, poly_mul(y, y));
        for (uint64_t x_idx = 0; x_idx < xs.count(); ++x_idx) {
            Polynomial v = poly_sub(poly_mul(xs.at(x_idx), xs.at(x_idx)), dy2);
            if (v.degree() < 1) continue;
            if (opts.degree_cap > 0 && v.degree() > opts.degree_cap) continue;
            if (opts.coprime_to_d && shares_factor_with(v, d)) continue;
            std::pair<int, uint64_t> key{v.degree(), y_idx * xs.count() + x_idx};
            if (best && !(key < *best)) continue;
            if (!poly_is_irreducible(v)) continue;
            best = key;
        }
    }
    if (!best) throw BudgetError("no irreducible value inside the Split-case box");
    return finish(d, xs.at(best->second % xs.count()), ys.at(best->second / xs.count()), false);
}

}  // namespace

DegreeProfile degree_profile(int deg_d, int n) {
    if (deg_d % 2 == 0) throw std::invalid_argument("degree profiles are exact only for odd deg d");
    if (n < 1) throw std::invalid_argument("target degree must be >= 1");
    DegreeProfile prof;
    prof.n = n;
    if (n % 2 == 1) {
        // d y^2 carries the lead: deg y = (n - deg d)/2, 2 deg x < n
        if (n < deg_d) return prof;
        prof.feasible = true;
        prof.y_exact = true;
        prof.y_deg_lo = prof.y_deg_hi = (n - deg_d) / 2;
        prof.x_deg_lo = 0;
        prof.x_deg_hi = (n - 1) / 2;
        prof.x_zero_allowed = true;
    } else {
        // x^2 carries the lead: deg x = n/2, deg d + 2 deg y < n
        if (n <= deg_d) return prof;
        prof.feasible = true;
        prof.x_exact = true;
        prof.x_deg_lo = prof.x_deg_hi = n / 2;
        prof.x_zero_allowed = false;
        prof.y_deg_lo = 0;
        prof.y_deg_hi = (n - 1 - deg_d) / 2;
    }
    return prof;
}

SearchResult smallest_irreducible(const Polynomial& d, const SearchOptions& opts) {
    QuadExtension ext = classify(d);
    switch (ext.infinite_place) {
        case InfinitePlace::Ramified:
            return search_ramified(d, opts);
        case InfinitePlace::Split:
            return search_split_box(d, opts);
        case InfinitePlace::Inert:
            break;
    }
    throw HypothesisError("inert place at infinity: the form search is unsupported");
}

std::optional<Representation> represent(const Polynomial& p, const Polynomial& d) {
    if (d.degree() % 2 == 0)
        throw std::invalid_argument("representability testing needs odd deg d");
    if (residue_symbol(d, p) == -1) return std::nullopt;  // also validates p

    DegreeProfile prof = degree_profile(d.degree(), p.degree());
    if (!prof.feasible) return std::nullopt;

    const FieldSpec& k = d.field;
    uint64_t q = k.cardinality_u64();
    PolyPool ys = y_pool(k, prof);
    for (uint64_t y_idx = 0; y_idx < ys.count(); ++y_idx) {
        Polynomial y = ys.at(y_idx);
        Polynomial dy2 = poly_mul(d, poly_mul(y, y));
        for (uint64_t u_rank = 1; u_rank < q; ++u_rank) {
            FieldElement u = ff_element_at(k, u_rank);
            Polynomial v = poly_add(poly_mul_scalar(p, u), dy2);  // candidate x^2
            std::optional<Polynomial> x =
                v.is_zero() ? std::optional<Polynomial>(poly_zero(k)) : poly_sqrt(v);
            if (!x) continue;
            internal_check(poly_equal(form_value(d, *x, y), poly_mul_scalar(p, u)),
                           "representation witness fails to multiply back");
            return Representation{*x, y, u};
        }
    }
    return std::nullopt;
}

}  // namespace quadff
