#pragma once

// Command-line front end: one binary, one subcommand per engine surface.
// Reports are emitted as text, JSON (stable key order) or CSV with fixed
// column schemas, to standard output or to --output. Exit codes: 0 success,
// 1 verification failures, 2 usage errors, 3 exceeded search budget,
// 4 internal self-check failure.

#include "charclass.hpp"
#include "f2.hpp"
#include "grassmann.hpp"
#include "util.hpp"
#include "verify.hpp"
#include "wring.hpp"
#include "zcl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <list>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

namespace z2coh::cli {

using json = nlohmann::json;

struct RunConfig {
    std::string subcommand;
    int n = -1;
    int n_min = 2;
    int n_max = -1;
    int degree = -1;  // -1 = whole series
    long long m = -1;
    long long m_max = -1;
    std::string monomial;
    std::string bundle = "eta-c";
    std::string format;  // resolved per subcommand when empty
    std::string output;
    unsigned jobs = 0;  // 0 = environment default
    std::size_t cache_max = 32;
    std::vector<std::string> suites;
    bool exhaustive = false;
    bool witness_detail = false;
};

// Ring contexts keyed by n, built lazily, least-recently-used eviction.
class ContextCache {
public:
    explicit ContextCache(std::size_t capacity) : capacity_(capacity ? capacity : 1) {}

    std::shared_ptr<const WRing> get(int n) {
        if (auto hit = lookup(n)) return hit;
        // build outside the lock; a racing duplicate build is discarded
        auto ring = std::make_shared<const WRing>(n);
        std::lock_guard<std::mutex> lock(mutex_);
        for (auto& entry : entries_)
            if (entry.first == n) return entry.second;
        entries_.emplace_front(n, std::move(ring));
        while (entries_.size() > capacity_) entries_.pop_back();
        return entries_.front().second;
    }

private:
    std::size_t capacity_;
    std::list<std::pair<int, std::shared_ptr<const WRing>>> entries_;
    std::mutex mutex_;

    std::shared_ptr<const WRing> lookup(int n) {
        std::lock_guard<std::mutex> lock(mutex_);
        for (auto it = entries_.begin(); it != entries_.end(); ++it) {
            if (it->first == n) {
                entries_.splice(entries_.begin(), entries_, it);
                return entries_.front().second;
            }
        }
        return nullptr;
    }
};

// "x^3 u y^2" -> monomial; factors are space-separated, an omitted exponent
// means 1, and "1" is the empty product.
inline WMonomial parse_monomial(const std::string& text) {
    WMonomial m{0, 0, 0};
    std::istringstream in(text);
    std::string token;
    bool saw_any = false;
    while (in >> token) {
        saw_any = true;
        if (token == "1") continue;
        int exponent = 1;
        const auto caret = token.find('^');
        std::string gen = token.substr(0, caret);
        if (caret != std::string::npos) {
            const std::string tail = token.substr(caret + 1);
            std::size_t used = 0;
            try {
                exponent = std::stoi(tail, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad exponent in '" + token + "'");
            }
            if (used != tail.size() || exponent < 0)
                throw std::invalid_argument("bad exponent in '" + token + "'");
        }
        if (gen == "x")
            m.x_exp += exponent;
        else if (gen == "u")
            m.u_exp += exponent;
        else if (gen == "y")
            m.y_exp += exponent;
        else
            throw std::invalid_argument("unknown factor '" + token + "' (expected x, u, y or 1)");
    }
    if (!saw_any) throw std::invalid_argument("empty monomial");
    return m;
}

inline std::vector<std::string> reduced_strings(const WRing& ring, const WReduced& r) {
    std::vector<std::string> out;
    r.coords.for_each_set([&](std::size_t i) {
        out.push_back(to_string(ring.basis_monomial(r.degree, static_cast<int>(i))));
    });
    return out;
}

inline std::vector<std::string> ambient_strings(const WClass& c) {
    std::vector<std::string> out;
    c.coeffs.for_each_set(
        [&](std::size_t i) { out.push_back(to_string(w_monomial_at(c.degree, static_cast<int>(i)))); });
    return out;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline std::string class_or_zero(const std::vector<std::string>& parts) {
    return parts.empty() ? "0" : join(parts, " + ");
}

// ---------------------------------------------------------------- basis ----

inline json basis_json(const GrassContext& ctx, int degree) {
    json j;
    j["n"] = ctx.n();
    j["degree"] = degree;
    j["dim"] = ctx.dim(degree);
    std::vector<std::string> names;
    if (degree >= 0 && degree <= ctx.top_degree())
        for (const auto& m : ctx.basis(degree)) names.push_back(to_string(m));
    j["basis"] = names;
    j["relations_applied"] = ctx.relations_rank(degree);
    return j;
}

inline void basis_text(std::ostream& out, const GrassContext& ctx, int degree) {
    out << "H^" << degree << " of the 2-plane Grassmannian ring, n = " << ctx.n() << "\n";
    out << "dim: " << ctx.dim(degree) << "\n";
    std::vector<std::string> names;
    if (degree >= 0 && degree <= ctx.top_degree())
        for (const auto& m : ctx.basis(degree)) names.push_back(to_string(m));
    out << "basis: " << (names.empty() ? "(none)" : join(names, ", ")) << "\n";
    out << "relations applied: " << ctx.relations_rank(degree) << "\n";
    if (degree >= ctx.n() && degree <= ctx.top_degree() && ctx.betas_built()) {
        out << "two-power normal forms (b_j basis):\n";
        for (int i = 0; i < g_monomial_count(degree); ++i) {
            const GMonomial m = g_monomial_at(degree, i);
            const auto nf = hg_normal_form(ctx.n(), m);
            std::vector<std::string> terms;
            nf.beta_bits.for_each_set(
                [&](std::size_t j) { terms.push_back("b_" + std::to_string(j + 1)); });
            out << "  " << to_string(m) << " = " << class_or_zero(terms) << "\n";
        }
    }
}

// ----------------------------------------------------------- normal form ----

inline json normal_form_json(const WRing& ring, const std::string& input) {
    const WMonomial raw = parse_monomial(input);
    const WMonomial canonical = normalize(raw);
    const WReduced reduced = ring.reduce_monomial(canonical);
    json j;
    j["n"] = ring.n();
    j["input"] = input;
    j["canonical"] = to_string(canonical);
    j["degree"] = canonical.degree();
    j["reduced"] = reduced_strings(ring, reduced);
    j["zero"] = reduced.is_zero();
    return j;
}

// ------------------------------------------------------------------- sw ----

struct SwComputation {
    std::vector<WClass> ambient;
    std::vector<WReduced> reduced;
};

// For the configuration-space normal bundle the closed form is the
// production route and, through the crossover, the series expansion must
// agree with it coefficient by coefficient. Other bundles use the series.
inline SwComputation compute_sw(const WRing& ring, Bundle bundle, int cutoff,
                                int series_crossover = 64) {
    SwComputation out;
    if (bundle == Bundle::normal_c) {
        for (int d = 0; d <= cutoff; ++d) {
            out.ambient.push_back(eta_c_coeff_closed(ring.n(), d));
            out.reduced.push_back(ring.reduce(out.ambient.back()));
        }
        if (ring.n() <= series_crossover)
            check_eta_routes(sw_series(ring, bundle, cutoff));  // throws on mismatch
        return out;
    }
    const SwSeries s = sw_series(ring, bundle, cutoff);
    out.ambient = s.ambient;
    out.reduced = s.reduced;
    return out;
}

inline json sw_class_json(const WRing& ring, Bundle bundle, const SwComputation& c, int degree) {
    json j;
    j["n"] = ring.n();
    j["bundle"] = bundle_name(bundle);
    j["degree"] = degree;
    j["ambient"] = ambient_strings(c.ambient[degree]);
    j["reduced"] = reduced_strings(ring, c.reduced[degree]);
    j["nonzero"] = !c.reduced[degree].is_zero();
    return j;
}

inline json sw_series_json(const WRing& ring, Bundle bundle, const SwComputation& c) {
    json j;
    j["n"] = ring.n();
    j["bundle"] = bundle_name(bundle);
    j["cutoff"] = static_cast<int>(c.reduced.size()) - 1;
    json classes = json::array();
    for (std::size_t d = 0; d < c.reduced.size(); ++d) {
        json item;
        item["degree"] = d;
        item["reduced"] = reduced_strings(ring, c.reduced[d]);
        item["nonzero"] = !c.reduced[d].is_zero();
        classes.push_back(item);
    }
    j["classes"] = classes;
    return j;
}

// ------------------------------------------------------------- sw-search ----

inline json search_hit_json(const SearchHit& hit) {
    json j;
    j["n"] = hit.n;
    j["k"] = hit.k;
    j["nonzero"] = hit.nonzero;
    j["family"] = hit.family;
    j["family_degree"] = hit.family_degree;
    j["family_nonzero"] = hit.family_nonzero;
    j["witness"] = hit.witness;
    j["implied_nonimmersion_dim"] = hit.implied_nonimmersion_dim;
    return j;
}

inline void search_csv(std::ostream& out, const std::vector<SearchHit>& hits) {
    out << "n,k,nonzero,family,implied_nonimmersion_dim\n";
    for (const auto& hit : hits)
        out << hit.n << ',' << hit.k << ',' << (hit.nonzero ? 1 : 0) << ',' << hit.family << ','
            << hit.implied_nonimmersion_dim << '\n';
}

// ------------------------------------------------------------------ zcl ----

inline json zcl_witness_json(const ZclWitness& w) {
    json j;
    j["exponents"] = {w.a, w.b, w.c};
    j["product_nonzero"] = w.product_nonzero;
    j["block_matches"] = w.block_matches;
    j["block_left"] = to_string(w.block_left);
    j["block_right"] = to_string(w.block_right);
    j["bump_x_zero"] = w.bump_x_zero;
    j["bump_u_zero"] = w.bump_u_zero;
    j["bump_y_zero"] = w.bump_y_zero;
    j["ok"] = w.ok();
    return j;
}

// -------------------------------------------------------------- verify ----

inline json verify_report_json(const VerifyReport& rep) {
    json j;
    j["suite"] = rep.suite;
    j["instances"] = rep.instances;
    j["failures"] = rep.failures;
    j["millis"] = rep.millis;
    return j;
}

inline void verify_report_text(std::ostream& out, const VerifyReport& rep) {
    out << rep.suite << ": " << rep.instances << " instances, " << rep.failures.size()
        << " failures (" << rep.millis << " ms)\n";
    for (const auto& f : rep.failures) out << "  FAIL " << f << "\n";
}

// ------------------------------------------------------------- dispatch ----

inline int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err);

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"exact mod-2 cohomology engine for two-point configuration spaces of"
                 " projective space and the Grassmannian of 2-planes"};
    app.require_subcommand(1);
    app.fallthrough(false);

    auto add_common = [&cfg](CLI::App* cmd, std::initializer_list<const char*> formats) {
        cmd->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember(std::vector<std::string>(formats.begin(), formats.end())));
        cmd->add_option("--output", cfg.output, "write the report to this path");
        cmd->add_option("--jobs", cfg.jobs, "parallel fan-out width");
        cmd->add_option("--cache-max", cfg.cache_max, "max cached ring contexts");
    };

    auto* basis = app.add_subcommand("basis", "quotient basis of one degree");
    basis->add_option("--n", cfg.n, "ring parameter")->required();
    basis->add_option("--degree", cfg.degree, "cohomological degree")->required();
    add_common(basis, {"text", "json"});

    auto* nf = app.add_subcommand("normal-form", "reduce a monomial");
    nf->add_option("--n", cfg.n, "ring parameter")->required();
    nf->add_option("--monomial", cfg.monomial, "monomial, e.g. \"x^3 u y^2\"")->required();
    add_common(nf, {"text", "json"});

    auto* sw = app.add_subcommand("sw", "Stiefel-Whitney classes of one bundle");
    sw->add_option("--n", cfg.n, "ring parameter")->required();
    sw->add_option("--bundle", cfg.bundle, "eta-c|tau-c|tau-w|eta-w|tau-g");
    sw->add_option("--degree", cfg.degree, "single degree (default: whole series)");
    add_common(sw, {"text", "json"});

    auto* search = app.add_subcommand("sw-search", "largest nonzero normal class per n");
    search->add_option("--n-max", cfg.n_max, "search 2..n-max")->required();
    add_common(search, {"csv", "json"});

    auto* zcl = app.add_subcommand("zcl", "zero-divisor cup length");
    zcl->add_option("--n", cfg.n, "ring parameter")->required();
    zcl->add_flag("--exhaustive", cfg.exhaustive, "run the full generator-power search");
    zcl->add_flag("--witness", cfg.witness_detail, "include the witness record");
    add_common(zcl, {"text", "json"});

    auto* tc = app.add_subcommand("tc-report", "cup-length and motion-planning bounds table");
    tc->add_option("--n-min", cfg.n_min, "first n")->required();
    tc->add_option("--n-max", cfg.n_max, "last n")->required();
    add_common(tc, {"csv", "json"});

    auto* matlem = app.add_subcommand("matlem", "two-power matrix determinants");
    matlem->add_option("--m", cfg.m, "single size");
    matlem->add_option("--m-max", cfg.m_max, "certify all sizes up to this");
    add_common(matlem, {"text", "json"});

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify
        ->add_option("--suite", cfg.suites,
                     "hg|matlem|duality|wu|whitney|zcl|top-class|all")
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>{"hg", "matlem", "duality", "wu",
                                                       "whitney", "zcl", "top-class", "all"}));
    verify->add_option("--n-max", cfg.n_max, "override the suite's n range");
    verify->add_option("--m-max", cfg.m_max, "override the matrix size range");
    add_common(verify, {"text", "json"});

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();

    try {
        if (!cfg.output.empty()) {
            std::ofstream file(cfg.output);
            if (!file) {
                err << "error: cannot write to '" << cfg.output << "'\n";
                return 2;
            }
            return dispatch(cfg, file, err);
        }
        return dispatch(cfg, out, err);
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const RouteMismatchError& e) {
        err << "internal self-check failed: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

inline int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const unsigned jobs = cfg.jobs ? cfg.jobs : default_jobs();
    ContextCache cache(cfg.cache_max);
    const std::string format = !cfg.format.empty()           ? cfg.format
                               : (cfg.subcommand == "sw-search" || cfg.subcommand == "tc-report")
                                   ? "csv"
                                   : "text";

    if (cfg.subcommand == "basis") {
        const auto ring = cache.get(cfg.n);
        if (format == "json")
            out << basis_json(ring->grass(), cfg.degree).dump(2) << "\n";
        else
            basis_text(out, ring->grass(), cfg.degree);
        return 0;
    }

    if (cfg.subcommand == "normal-form") {
        const auto ring = cache.get(cfg.n);
        const json j = normal_form_json(*ring, cfg.monomial);
        if (format == "json")
            out << j.dump(2) << "\n";
        else
            out << j["canonical"].get<std::string>() << " = "
                << class_or_zero(j["reduced"].get<std::vector<std::string>>()) << "  (degree "
                << j["degree"].get<int>() << ", n = " << cfg.n << ")\n";
        return 0;
    }

    if (cfg.subcommand == "sw") {
        const auto bundle = parse_bundle(cfg.bundle);
        if (!bundle) throw std::invalid_argument("unknown bundle '" + cfg.bundle + "'");
        const auto ring = cache.get(cfg.n);
        const int cutoff = cfg.degree >= 0 ? cfg.degree : ring->top_degree();
        if (cutoff > ring->top_degree())
            throw std::invalid_argument("degree exceeds 2n-1");
        const SwComputation c = compute_sw(*ring, *bundle, cutoff);
        if (cfg.degree >= 0) {
            const json j = sw_class_json(*ring, *bundle, c, cfg.degree);
            if (format == "json")
                out << j.dump(2) << "\n";
            else
                out << "w_" << cfg.degree << "(" << bundle_name(*bundle) << ", n = " << cfg.n
                    << ") = " << class_or_zero(j["reduced"].get<std::vector<std::string>>())
                    << (j["nonzero"].get<bool>() ? "  [nonzero]" : "") << "\n";
        } else if (format == "json") {
            out << sw_series_json(*ring, *bundle, c).dump(2) << "\n";
        } else {
            out << "total Stiefel-Whitney class of " << bundle_name(*bundle)
                << " at n = " << cfg.n << ":\n";
            for (int d = 0; d <= cutoff; ++d)
                out << "  w_" << d << " = "
                    << class_or_zero(reduced_strings(*ring, c.reduced[d])) << "\n";
        }
        return 0;
    }

    if (cfg.subcommand == "sw-search") {
        std::vector<SearchHit> hits(std::max(0, cfg.n_max - 1));
        parallel_for(2, cfg.n_max + 1, jobs,
                     [&](int n) { hits[n - 2] = search_normal_classes(*cache.get(n)); });
        if (format == "json") {
            json j;
            j["n_max"] = cfg.n_max;
            json arr = json::array();
            for (const auto& hit : hits) arr.push_back(search_hit_json(hit));
            j["hits"] = arr;
            out << j.dump(2) << "\n";
        } else {
            search_csv(out, hits);
        }
        return 0;
    }

    if (cfg.subcommand == "zcl") {
        const auto ring = cache.get(cfg.n);
        TensorAlgebra alg(*ring);
        const NDecomp dec = decompose_two_power(cfg.n);
        const ZclWitness w = zcl_witness(alg);
        json j;
        j["n"] = cfg.n;
        j["e"] = dec.e;
        j["d"] = dec.d;
        j["r"] = dec.r;
        j["zcl_formula"] = zcl_formula(cfg.n);
        j["witness_ok"] = w.ok();
        j["scope"] = "products of the zero divisors xbar, ubar, ybar";
        if (cfg.witness_detail) j["witness"] = zcl_witness_json(w);
        if (cfg.exhaustive) j["zcl_exhaustive"] = zcl_exhaustive(alg);  // may throw BudgetError
        if (format == "json") {
            out << j.dump(2) << "\n";
        } else {
            out << "zcl for n = " << cfg.n << " (e = " << dec.e << ", d = " << dec.d
                << ", r = " << dec.r << "): " << j["zcl_formula"].get<int>() << "\n";
            out << "witness " << (w.ok() ? "ok" : "FAILED") << ": xbar^" << w.a << " ubar^" << w.b
                << " ybar^" << w.c << "\n";
            if (cfg.witness_detail)
                out << "  surviving block: " << to_string(w.block_left) << " (x) "
                    << to_string(w.block_right) << "\n";
            if (cfg.exhaustive)
                out << "exhaustive over the generator set: " << j["zcl_exhaustive"].get<int>()
                    << "\n";
            out << "note: lengths are over " << j["scope"].get<std::string>() << "\n";
        }
        return 0;
    }

    if (cfg.subcommand == "tc-report") {
        if (cfg.n_min < 2) throw std::invalid_argument("tc-report: n-min must be >= 2");
        if (cfg.n_max < cfg.n_min) throw std::invalid_argument("tc-report: empty range");
        const int count = cfg.n_max - cfg.n_min + 1;
        struct Row {
            TcBounds bounds;
            bool witness_ok = false;
            int exhaustive = -1;
        };
        std::vector<Row> rows(count);
        parallel_for(cfg.n_min, cfg.n_max + 1, jobs, [&](int n) {
            Row row;
            row.bounds = tc_bounds(n);
            const auto ring = cache.get(n);
            TensorAlgebra alg(*ring);
            row.witness_ok = zcl_witness(alg).ok();
            if (n <= kZclExhaustiveMaxN) row.exhaustive = zcl_exhaustive(alg);
            rows[n - cfg.n_min] = std::move(row);
        });
        if (format == "json") {
            json arr = json::array();
            for (const auto& row : rows) {
                json j;
                j["n"] = row.bounds.n;
                j["e"] = row.bounds.dec.e;
                j["d"] = row.bounds.dec.d;
                j["r"] = row.bounds.dec.r;
                j["zcl_formula"] = row.bounds.lower;
                if (row.exhaustive >= 0) j["zcl_exhaustive"] = row.exhaustive;
                j["witness_ok"] = row.witness_ok;
                j["tc_lower"] = row.bounds.lower;
                j["tc_upper"] = row.bounds.upper;
                j["gap"] = row.bounds.gap;
                arr.push_back(j);
            }
            out << arr.dump(2) << "\n";
        } else {
            out << "n,e,d,r,zcl_formula,zcl_exhaustive,witness_ok,tc_lower,tc_upper,gap\n";
            for (const auto& row : rows) {
                out << row.bounds.n << ',' << row.bounds.dec.e << ',' << row.bounds.dec.d << ','
                    << row.bounds.dec.r << ',' << row.bounds.lower << ',';
                if (row.exhaustive >= 0) out << row.exhaustive;
                out << ',' << (row.witness_ok ? 1 : 0) << ',' << row.bounds.lower << ','
                    << row.bounds.upper << ',' << row.bounds.gap << '\n';
            }
        }
        return 0;
    }

    if (cfg.subcommand == "matlem") {
        if (cfg.m < 1 && cfg.m_max < 1)
            throw std::invalid_argument("matlem: give --m or --m-max");
        json j;
        if (cfg.m >= 1) {
            j["m"] = cfg.m;
            j["det"] = f2::two_power_matrix_det(static_cast<std::size_t>(cfg.m));
        }
        if (cfg.m_max >= 1) {
            const auto first = f2::two_power_det_first_failure(static_cast<std::size_t>(cfg.m_max));
            j["m_max"] = cfg.m_max;
            j["all_unit"] = !first.has_value();
            if (first) j["first_failure"] = *first;
        }
        if (format == "json") {
            out << j.dump(2) << "\n";
        } else {
            if (j.contains("det"))
                out << "det(A_" << cfg.m << ") = " << j["det"].get<int>() << "\n";
            if (j.contains("all_unit"))
                out << "det(A_m) for all m <= " << cfg.m_max << ": "
                    << (j["all_unit"].get<bool>() ? "all 1" : "FAILURE at m = " +
                            std::to_string(j["first_failure"].get<std::size_t>()))
                    << "\n";
        }
        return 0;
    }

    if (cfg.subcommand == "verify") {
        std::vector<std::string> suites = cfg.suites;
        if (std::find(suites.begin(), suites.end(), "all") != suites.end())
            suites = {"hg", "matlem", "duality", "wu", "whitney", "zcl", "top-class"};
        std::vector<VerifyReport> reports;
        for (const auto& suite : suites) {
            if (suite == "hg")
                reports.push_back(verify_hg_suite(cfg.n_max > 0 ? cfg.n_max : 40, jobs));
            else if (suite == "matlem")
                reports.push_back(
                    verify_matlem_suite(cfg.m_max > 0 ? static_cast<std::size_t>(cfg.m_max) : 4096));
            else if (suite == "duality")
                reports.push_back(verify_duality_suite(cfg.n_max > 0 ? cfg.n_max : 40, jobs));
            else if (suite == "wu")
                reports.push_back(verify_wu_suite(cfg.n_max > 0 ? cfg.n_max : 40, jobs));
            else if (suite == "whitney")
                reports.push_back(verify_whitney_suite(cfg.n_max > 0 ? cfg.n_max : 64, jobs));
            else if (suite == "zcl")
                reports.push_back(verify_zcl_suite(cfg.n_max > 0 ? cfg.n_max : 64, jobs));
            else if (suite == "top-class")
                reports.push_back(verify_top_class_suite(cfg.n_max > 0 ? cfg.n_max : 512, jobs));
        }
        if (format == "json") {
            json arr = json::array();
            for (const auto& rep : reports) arr.push_back(verify_report_json(rep));
            out << arr.dump(2) << "\n";
        } else {
            for (const auto& rep : reports) verify_report_text(out, rep);
        }
        return verify_exit_status(reports);
    }

    err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
    return 2;
}

}  // namespace z2coh::cli
