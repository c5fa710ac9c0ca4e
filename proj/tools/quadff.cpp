#include "CLI11.hpp"
#include "json.hpp"

#include "quadff/bounds.hpp"
#include "quadff/census.hpp"
#include "quadff/errors.hpp"
#include "quadff/parse.hpp"
#include "quadff/search.hpp"
#include "quadff/zeta.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace quadff;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string rat_str(const BigRat& x) {
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
}

std::string elem_str(const FieldSpec& k, const FieldElement& c) {
    return poly_render(poly_constant(k, c));
}

void kv(const std::string& key, const std::string& val) {
    std::cout << std::left << std::setw(16) << (key + ":") << val << "\n";
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

// Arguments shared by the subcommands that work on a concrete d.
struct FieldArgs {
    uint32_t p = 0;
    unsigned m = 1;
    std::string d_text;

    FieldSpec field() const { return FieldSpec::make(p, m); }
    int64_t q() const {
        uint64_t card = field().cardinality_u64();
        if (card > uint64_t(INT64_MAX)) throw BudgetError("field too large for the CLI");
        return static_cast<int64_t>(card);
    }
};

void add_field_options(CLI::App* cmd, FieldArgs& fa, bool with_d) {
    cmd->add_option("--p", fa.p, "characteristic of the coefficient field (odd prime)")
        ->required();
    cmd->add_option("--m", fa.m, "extension degree of the coefficient field over F_p");
    if (with_d)
        cmd->add_option("--d", fa.d_text,
                        "the squarefree polynomial d, e.g. \"T^3+2*T+1\" or "
                        "\"(a+1)*T^3+a\" over an extension field")
            ->required();
}

BigInt positive_integer(const std::string& text, const std::string& what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument(what + " must be a positive integer");
    BigInt v(text);
    if (v < 1) throw std::invalid_argument(what + " must be a positive integer");
    return v;
}

int run_bound(const FieldArgs& fa, int deg_d, const std::string& exact_r, bool compute_r,
              bool json) {
    int64_t q = fa.q();
    std::optional<Polynomial> d;
    if (!fa.d_text.empty()) {
        if (deg_d != 0) throw std::invalid_argument("give either --deg or --d, not both");
        d = poly_parse(fa.field(), fa.d_text);
        deg_d = d->degree() >= 1 ? d->degree() : 0;
    } else if (deg_d == 0) {
        throw std::invalid_argument("one of --deg or --d is required");
    }
    if (compute_r && !d) throw std::invalid_argument("--compute-r needs --d");
    if (compute_r && !exact_r.empty())
        throw std::invalid_argument("--compute-r and --exact-r are mutually exclusive");
    QuadExact r = exact_r.empty()
                      ? class_degree_upper_bound(q, deg_d)
                      : QuadExact(BigRat(positive_integer(exact_r, "--exact-r")));
    if (compute_r)
        r = QuadExact(BigRat(ideal_class_number(classify(*d), divisor_class_number(*d))));
    BoundReport rep = make_bound_report(q, deg_d, r);
    if (json) {
        ordered_json j;
        j["q"] = q;
        j["deg_d"] = deg_d;
        j["r_used"] = rep.r_used.str();
        j["m"] = rep.m.str();
        j["degree_bound"] = rep.degree_bound;
        j["corollary_applicable"] = rep.corollary_applicable;
        if (rep.corollary_applicable) {
            j["corollary_exact"] = rep.corollary_exact.str();
            j["corollary_integer"] = rep.corollary_integer.str();
        } else {
            j["corollary_exact"] = nullptr;
            j["corollary_integer"] = nullptr;
        }
        emit(j);
    } else {
        kv("q", std::to_string(q));
        kv("deg d", std::to_string(deg_d));
        kv("r used", rep.r_used.str());
        kv("M", rep.m.str());
        kv("degree bound", std::to_string(rep.degree_bound));
        if (rep.corollary_applicable) {
            kv("corollary", "h_K >= " + rep.corollary_integer.str());
            kv("  exact", rep.corollary_exact.str());
        } else {
            kv("corollary", "not applicable (even deg d)");
        }
    }
    return 0;
}

int run_corollary(const FieldArgs& fa, int deg_d, bool json) {
    int64_t q = fa.q();
    ClassNumberLowerBound lb = class_number_lower_bound(q, deg_d);
    if (json) {
        ordered_json j;
        j["q"] = q;
        j["deg_d"] = deg_d;
        j["exact"] = lb.exact.str();
        j["integer_bound"] = lb.integer_bound.str();
        emit(j);
    } else {
        kv("q", std::to_string(q));
        kv("deg d", std::to_string(deg_d));
        kv("exact bound", lb.exact.str());
        kv("integer bound", "h_K >= " + lb.integer_bound.str());
    }
    return 0;
}

void report_search(const FieldSpec& k, const std::string& place, const std::string& variant,
                   const SearchResult& r, bool json) {
    if (json) {
        ordered_json j;
        j["place"] = place;
        j["variant"] = variant;
        j["degree"] = r.degree;
        j["value"] = poly_render(r.value);
        j["monic_value"] = poly_render(r.monic_value);
        j["unit"] = elem_str(k, r.unit);
        j["x"] = poly_render(r.x);
        j["y"] = poly_render(r.y);
        j["exhaustive"] = r.exhaustive;
        emit(j);
    } else {
        std::cout << "\nsmallest irreducible value, " << variant << ":\n";
        kv("  degree", std::to_string(r.degree));
        kv("  value", poly_render(r.value));
        kv("  monic value", poly_render(r.monic_value));
        kv("  unit", elem_str(k, r.unit));
        kv("  witness x", poly_render(r.x));
        kv("  witness y", poly_render(r.y));
        kv("  exhaustive", r.exhaustive ? "yes" : "no (upper bound only)");
    }
}

int run_search(const FieldArgs& fa, const SearchOptions& base, bool json) {
    FieldSpec k = fa.field();
    Polynomial d = poly_parse(k, fa.d_text);
    QuadExtension ext = classify(d);
    std::string place = infinite_place_name(ext.infinite_place);
    if (!json) kv("place", place);

    SearchOptions all = base;
    all.coprime_to_d = false;
    report_search(k, place, "all values", smallest_irreducible(d, all), json);

    SearchOptions coprime = base;
    coprime.coprime_to_d = true;
    report_search(k, place, "coprime to d", smallest_irreducible(d, coprime), json);
    return 0;
}

int run_classnum(const FieldArgs& fa, const PointCountOptions& opts, bool json) {
    FieldSpec k = fa.field();
    Polynomial d = poly_parse(k, fa.d_text);
    ClassNumberResult res = divisor_class_number_full(d, opts);
    BigInt h_b = ideal_class_number(res.ext, res.h);
    std::string place = infinite_place_name(res.ext.infinite_place);

    if (json) {
        ordered_json j;
        j["place"] = place;
        j["genus"] = res.ext.genus;
        j["delta"] = res.ext.delta;
        ordered_json counts = ordered_json::array();
        for (const BigInt& n : res.counts) counts.push_back(n.str());
        j["counts"] = counts;
        ordered_json lc = ordered_json::array();
        for (const BigInt& c : res.lpoly.c) lc.push_back(c.str());
        j["l_coefficients"] = lc;
        j["h_K"] = res.h.str();
        j["h_B"] = h_b.str();
        j["self_checked"] = res.self_checked;
        emit(j);
    } else {
        kv("place", place);
        kv("genus", std::to_string(res.ext.genus));
        kv("delta", std::to_string(res.ext.delta));
        std::ostringstream counts;
        for (const BigInt& n : res.counts) counts << (counts.tellp() ? " " : "") << n;
        kv("point counts", counts.str());
        std::ostringstream lc;
        for (const BigInt& c : res.lpoly.c) lc << (lc.tellp() ? " " : "") << c;
        kv("L coefficients", lc.str());
        kv("h_K", res.h.str());
        kv("h_{B_K}", h_b.str());
        kv("self-checked", res.self_checked ? "yes" : "no");
    }
    return 0;
}

int run_census(const FieldArgs& fa, int n_max, const PointCountOptions& opts, unsigned workers,
               bool json) {
    FieldSpec k = fa.field();
    Polynomial d = poly_parse(k, fa.d_text);
    std::vector<CensusRow> rows = chebotarev_census(d, n_max, opts, workers);

    if (json) {
        for (const CensusRow& row : rows) {
            ordered_json j;
            j["n"] = row.n;
            j["gamma"] = row.gamma_n.str();
            j["eps"] = row.eps_n.str();
            j["pi"] = row.pi_n.str();
            j["pi_C"] = row.pi_C_n.str();
            j["r"] = row.r.str();
            j["predicted"] = rat_str(row.predicted);
            j["error_bound"] = row.rhs.str();
            j["holds"] = row.holds;
            j["pi_lower_ok"] = row.pi_lower_ok;
            j["genus_clamped"] = row.genus_clamped;
            emit(j);
        }
        return 0;
    }

    std::vector<std::vector<std::string>> table;
    table.push_back({"n", "gamma", "eps", "pi", "pi_C", "predicted", "error bound", "holds",
                     "pi>=LB"});
    for (const CensusRow& row : rows)
        table.push_back({std::to_string(row.n), row.gamma_n.str(), row.eps_n.str(),
                         row.pi_n.str(), row.pi_C_n.str(), rat_str(row.predicted),
                         row.rhs.str(), row.holds ? "yes" : "NO",
                         row.pi_lower_ok ? "yes" : "NO"});
    std::vector<size_t> width(table[0].size(), 0);
    for (const auto& row : table)
        for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : table) {
        for (size_t c = 0; c < row.size(); ++c) {
            bool left = c >= 6;  // wide text columns read better left-aligned
            std::cout << (c ? "  " : "") << (left ? std::left : std::right)
                      << std::setw(int(width[c])) << row[c];
        }
        std::cout << "\n";
    }
    if (rows.size() && rows.front().genus_clamped)
        std::cout << "(genus of the class field clamped to 0)\n";
    return 0;
}

int run_hw(const FieldArgs& fa, int genus, bool json) {
    int64_t q = fa.q();
    if (!fa.d_text.empty()) {
        if (genus >= 0) throw std::invalid_argument("give either --d or --genus, not both");
        genus = classify(poly_parse(fa.field(), fa.d_text)).genus;
    }
    if (genus < 0) throw std::invalid_argument("the interval needs --d or --genus");
    auto [lo, hi] = hasse_weil_interval(q, genus);
    if (json) {
        ordered_json j;
        j["q"] = q;
        j["genus"] = genus;
        j["lower"] = lo.str();
        j["upper"] = hi.str();
        j["lower_int"] = lo.ceil().str();
        j["upper_int"] = hi.floor().str();
        emit(j);
    } else {
        kv("q", std::to_string(q));
        kv("genus", std::to_string(genus));
        kv("lower", lo.str());
        kv("upper", hi.str());
        kv("integer range", "[" + lo.ceil().str() + ", " + hi.floor().str() + "]");
    }
    return 0;
}

int run_verify(unsigned workers, uint64_t table_threshold, bool json) {
    FieldSpec f5 = FieldSpec::make(5, 1);
    Polynomial d = poly_parse(f5, "T^19+3*T^8+2");

    SearchOptions sopts;
    sopts.degree_cap = 19;
    sopts.workers = workers;
    SearchResult found = smallest_irreducible(d, sopts);

    PointCountOptions copts;
    copts.workers = workers;
    copts.table_threshold = table_threshold;
    BigInt h = divisor_class_number(d, copts);

    BoundReport rep = make_bound_report(5, 19, class_degree_upper_bound(5, 19));

    struct Item {
        std::string description;
        bool pass;
    };
    std::vector<Item> items;
    items.push_back({"smallest irreducible degree is 19", found.degree == 19});
    items.push_back({"value is 4*T^19+2*T^8+T^2+4*T+2",
                     poly_equal(found.value, poly_parse(f5, "4*T^19+2*T^8+T^2+4*T+2"))});
    items.push_back({"witness is x = T+2, y = 1",
                     poly_equal(found.x, poly_parse(f5, "T+2")) &&
                         poly_equal(found.y, poly_one(f5)) && found.exhaustive});
    items.push_back({"divisor class number is 1348408", h == 1348408});
    items.push_back({"degree bound from the class number bound is 60", rep.degree_bound == 60});
    items.push_back(
        {"corollary lower bound is h_K >= 70",
         rep.corollary_applicable && rep.corollary_integer == 70 && h >= rep.corollary_integer});

    bool all = true;
    for (size_t i = 0; i < items.size(); ++i) {
        all = all && items[i].pass;
        if (json) {
            ordered_json j;
            j["item"] = i + 1;
            j["pass"] = items[i].pass;
            j["description"] = items[i].description;
            emit(j);
        } else {
            std::cout << "[" << i + 1 << "] " << (items[i].pass ? "PASS" : "FAIL") << " — "
                      << items[i].description << "\n";
        }
    }
    if (json) {
        ordered_json j;
        j["all_pass"] = all;
        emit(j);
    } else {
        std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants, searches, and empirical checks for the quadratic form "
                 "x^2 - d y^2 over F_q[T]"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "line-delimited JSON output");

    FieldArgs bound_fa;
    int bound_deg = 0;
    std::string bound_exact_r;
    bool bound_compute_r = false;
    CLI::App* bound_cmd =
        app.add_subcommand("bound", "degree bound for the smallest irreducible value");
    add_field_options(bound_cmd, bound_fa, false);
    bound_cmd->add_option("--deg", bound_deg, "degree of d");
    bound_cmd->add_option("--d", bound_fa.d_text, "d itself; only its degree matters here");
    bound_cmd->add_option("--exact-r", bound_exact_r,
                          "exact ideal class number to use instead of the Hasse-Weil bound");
    bound_cmd->add_flag("--compute-r", bound_compute_r,
                        "compute the exact class number of --d and use it as r");
    bound_cmd->add_flag("--json", json, "line-delimited JSON output");

    FieldArgs cor_fa;
    int cor_deg = 0;
    CLI::App* cor_cmd =
        app.add_subcommand("corollary", "class number lower bound for odd deg d");
    add_field_options(cor_cmd, cor_fa, false);
    cor_cmd->add_option("--deg", cor_deg, "degree of d")->required();
    cor_cmd->add_flag("--json", json, "line-delimited JSON output");

    FieldArgs search_fa;
    SearchOptions search_opts;
    CLI::App* search_cmd =
        app.add_subcommand("search", "smallest irreducible value of x^2 - d y^2");
    add_field_options(search_cmd, search_fa, true);
    search_cmd->add_option("--cap", search_opts.degree_cap,
                           "largest value degree to scan (required unless the infinite "
                           "place splits, where it filters the box)");
    search_cmd->add_option("--x-cap", search_opts.split_x_cap,
                           "Split case: inclusive bound on deg x");
    search_cmd->add_option("--y-cap", search_opts.split_y_cap,
                           "Split case: inclusive bound on deg y");
    search_cmd->add_option("--workers", search_opts.workers, "worker threads");
    search_cmd->add_flag("--json", json, "line-delimited JSON output");

    FieldArgs class_fa;
    PointCountOptions class_opts;
    CLI::App* class_cmd =
        app.add_subcommand("classnum", "divisor and ideal class numbers by point counting");
    add_field_options(class_cmd, class_fa, true);
    class_cmd->add_option("--workers", class_opts.workers, "worker threads");
    class_cmd->add_option("--table-threshold", class_opts.table_threshold,
                          "largest field size counted via the character table");
    class_cmd->add_option("--seed", class_opts.seed, "seed for randomized factoring");
    class_cmd->add_flag("--json", json, "line-delimited JSON output");

    FieldArgs census_fa;
    PointCountOptions census_opts;
    int census_nmax = 0;
    unsigned census_workers = 1;
    CLI::App* census_cmd = app.add_subcommand(
        "census", "empirical effective-Chebotarev check, one row per prime degree");
    add_field_options(census_cmd, census_fa, true);
    census_cmd->add_option("--nmax", census_nmax, "largest prime degree to census")->required();
    census_cmd->add_option("--workers", census_workers, "worker threads");
    census_cmd->add_option("--table-threshold", census_opts.table_threshold,
                           "largest field size counted via the character table");
    census_cmd->add_option("--seed", census_opts.seed, "seed for randomized factoring");
    census_cmd->add_flag("--json", json, "line-delimited JSON output");

    FieldArgs hw_fa;
    int hw_genus = -1;
    CLI::App* hw_cmd =
        app.add_subcommand("hw", "Hasse-Weil interval for the divisor class number");
    add_field_options(hw_cmd, hw_fa, false);
    hw_cmd->add_option("--d", hw_fa.d_text, "derive the genus from this d");
    hw_cmd->add_option("--genus", hw_genus, "genus of the function field");
    hw_cmd->add_flag("--json", json, "line-delimited JSON output");

    unsigned verify_workers = 1;
    uint64_t verify_table = PointCountOptions{}.table_threshold;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify-paper-example", "re-derive the pinned reference example and report PASS/FAIL");
    verify_cmd->add_option("--workers", verify_workers, "worker threads");
    verify_cmd->add_option("--table-threshold", verify_table,
                           "largest field size counted via the character table");
    verify_cmd->add_flag("--json", json, "line-delimited JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (bound_cmd->parsed())
            return run_bound(bound_fa, bound_deg, bound_exact_r, bound_compute_r, json);
        if (cor_cmd->parsed()) return run_corollary(cor_fa, cor_deg, json);
        if (search_cmd->parsed()) return run_search(search_fa, search_opts, json);
        if (class_cmd->parsed()) return run_classnum(class_fa, class_opts, json);
        if (census_cmd->parsed())
            return run_census(census_fa, census_nmax, census_opts, census_workers, json);
        if (hw_cmd->parsed()) return run_hw(hw_fa, hw_genus, json);
        if (verify_cmd->parsed()) return run_verify(verify_workers, verify_table, json);
    } catch (const InternalCheckError& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 2;
    } catch (const HypothesisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
