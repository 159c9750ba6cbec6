#pragma once

// Named verification suites, one per family of claims the engine can check
// exhaustively at desk scale. Each returns a report with the number of
// instances checked and one line per failure; an empty failure list is a
// clean pass. The suites fan out over n where that helps.

#include "charclass.hpp"
#include "f2.hpp"
#include "grassmann.hpp"
#include "util.hpp"
#include "wring.hpp"
#include "zcl.hpp"

#include <chrono>
#include <mutex>
#include <string>
#include <vector>

namespace z2coh {

struct VerifyReport {
    std::string suite;
    std::size_t instances = 0;
    std::vector<std::string> failures;
    long long millis = 0;
    bool passed() const { return failures.empty(); }
};

namespace detail {

class SuiteTimer {
public:
    explicit SuiteTimer(VerifyReport& rep)
        : rep_(rep), start_(std::chrono::steady_clock::now()) {}
    ~SuiteTimer() {
        rep_.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
    }

private:
    VerifyReport& rep_;
    std::chrono::steady_clock::time_point start_;
};

// Collects per-n failure lines from a worker that may run in parallel.
template <typename Fn>
void for_each_n(int n_min, int n_max, unsigned jobs, VerifyReport& rep, Fn&& check) {
    if (n_max < n_min) return;
    std::vector<std::vector<std::string>> failures(n_max - n_min + 1);
    parallel_for(n_min, n_max + 1, jobs,
                 [&](int n) { failures[n - n_min] = check(n); });
    for (auto& f : failures)
        rep.failures.insert(rep.failures.end(), f.begin(), f.end());
    rep.instances += static_cast<std::size_t>(n_max - n_min + 1);
}

}  // namespace detail

// Two-power normal form against the oracle, all degrees, plus the dimension
// bookkeeping, for 2 <= n <= n_max.
inline VerifyReport verify_hg_suite(int n_max, unsigned jobs = 1) {
    VerifyReport rep{"hg", 0, {}, 0};
    detail::SuiteTimer timer(rep);
    detail::for_each_n(2, n_max, jobs, rep, [](int n) {
        std::vector<std::string> bad;
        GrassContext ctx(n);
        for (const auto& line : verify_hg_vs_oracle(ctx))
            bad.push_back("n=" + std::to_string(n) + ": " + line);
        const auto poincare = poincare_check(ctx);
        for (const auto& line : poincare.problems)
            bad.push_back("n=" + std::to_string(n) + ": " + line);
        return bad;
    });
    return rep;
}

// det(A_m) = 1 for every m <= m_max: one no-pivot elimination certifies all
// leading minors, and direct per-m eliminations spot-check small sizes.
inline VerifyReport verify_matlem_suite(std::size_t m_max) {
    VerifyReport rep{"matlem", m_max, {}, 0};
    detail::SuiteTimer timer(rep);
    if (const auto first = f2::two_power_det_first_failure(m_max))
        rep.failures.push_back("det is 0 at m = " + std::to_string(*first));
    for (std::size_t m = 1; m <= std::min<std::size_t>(m_max, 64); ++m)
        if (f2::two_power_matrix_det(m) != 1)
            rep.failures.push_back("direct elimination: det is 0 at m = " + std::to_string(m));
    return rep;
}

// Palindromic dimensions for both rings.
inline VerifyReport verify_duality_suite(int n_max, unsigned jobs = 1) {
    VerifyReport rep{"duality", 0, {}, 0};
    detail::SuiteTimer timer(rep);
    detail::for_each_n(2, n_max, jobs, rep, [](int n) {
        std::vector<std::string> bad;
        WRing ring(n);
        const auto poincare = poincare_check(ring.grass());
        for (const auto& line : poincare.problems)
            bad.push_back("n=" + std::to_string(n) + ": " + line);
        for (int d = 0; d <= ring.top_degree(); ++d)
            if (ring.dim(d) != ring.dim(ring.top_degree() - d)) {
                bad.push_back("n=" + std::to_string(n) + ": extension dims asymmetric at degree " +
                              std::to_string(d));
                break;
            }
        return bad;
    });
    return rep;
}

// Sq^1 into the top degree is multiplication by (n mod 2) x.
inline VerifyReport verify_wu_suite(int n_max, unsigned jobs = 1) {
    VerifyReport rep{"wu", 0, {}, 0};
    detail::SuiteTimer timer(rep);
    detail::for_each_n(2, n_max, jobs, rep, [](int n) {
        std::vector<std::string> bad;
        if (!WRing(n).wu_top_check())
            bad.push_back("n=" + std::to_string(n) + ": Sq^1 on the next-to-top degree is wrong");
        return bad;
    });
    return rep;
}

// Tangent times normal equals 1 for both bundle pairs.
inline VerifyReport verify_whitney_suite(int n_max, unsigned jobs = 1) {
    VerifyReport rep{"whitney", 0, {}, 0};
    detail::SuiteTimer timer(rep);
    detail::for_each_n(2, n_max, jobs, rep, [](int n) {
        std::vector<std::string> bad;
        if (!whitney_duality(n))
            bad.push_back("n=" + std::to_string(n) + ": tangent x normal series is not 1");
        return bad;
    });
    return rep;
}

// Witness product nonzero, its surviving block pinned, every exponent bump
// zero; exhaustive search where budgeted; the bound-gap table.
inline VerifyReport verify_zcl_suite(int n_max, unsigned jobs = 1) {
    VerifyReport rep{"zcl", 0, {}, 0};
    detail::SuiteTimer timer(rep);
    detail::for_each_n(2, n_max, jobs, rep, [](int n) {
        std::vector<std::string> bad;
        WRing ring(n);
        TensorAlgebra alg(ring);
        const auto w = zcl_witness(alg);
        if (!w.product_nonzero)
            bad.push_back("n=" + std::to_string(n) + ": witness product is zero");
        if (!w.block_matches)
            bad.push_back("n=" + std::to_string(n) + ": witness block is not the pinned tensor");
        if (!(w.bump_x_zero && w.bump_u_zero && w.bump_y_zero))
            bad.push_back("n=" + std::to_string(n) + ": witness is not maximal");
        if (w.a + w.b + w.c != zcl_formula(n))
            bad.push_back("n=" + std::to_string(n) + ": witness length differs from formula");
        if (n <= kZclExhaustiveMaxN && zcl_exhaustive(alg) != zcl_formula(n))
            bad.push_back("n=" + std::to_string(n) + ": exhaustive search differs from formula");
        return bad;
    });
    const int expected_gap[5] = {1, 4, 6, 10, 10};
    for (int e = 1; e <= 7; ++e)
        for (int d = 0; d <= 4 && d < (1 << e); ++d) {
            ++rep.instances;
            if (tc_bounds((1 << e) + d).gap != expected_gap[d])
                rep.failures.push_back("gap wrong at e=" + std::to_string(e) +
                                       ", d=" + std::to_string(d));
        }
    return rep;
}

// Top normal-class parity is the 2-power indicator; below the series
// crossover the series route must agree with the closed form and the top
// monomial family with the oracle.
inline VerifyReport verify_top_class_suite(int n_max, unsigned jobs = 1,
                                           int series_crossover = 64) {
    VerifyReport rep{"top-class", 0, {}, 0};
    detail::SuiteTimer timer(rep);
    detail::for_each_n(2, n_max, jobs, rep, [series_crossover](int n) {
        std::vector<std::string> bad;
        if (top_sw_parity(n) != is_two_power(n))
            bad.push_back("n=" + std::to_string(n) + ": top parity is not the 2-power indicator");
        if (n > series_crossover) return bad;
        WRing ring(n);
        try {
            check_eta_routes(sw_series(ring, Bundle::normal_c, ring.top_degree()));
        } catch (const RouteMismatchError& e) {
            bad.push_back("n=" + std::to_string(n) + ": " + e.what());
        }
        if (top_sw_parity(n) != !eta_c_coeff(ring, 2 * n - 1).is_zero())
            bad.push_back("n=" + std::to_string(n) + ": parity differs from the reduced class");
        const int top = ring.top_degree();
        for (int i = 0; i < w_monomial_count(top); ++i) {
            const WMonomial m = w_monomial_at(top, i);
            if (ring.top_monomial_nonzero(m) != ring.reduce_monomial(m).coords.any()) {
                bad.push_back("n=" + std::to_string(n) + ": top-family predicate wrong at " +
                              to_string(m));
                break;
            }
        }
        return bad;
    });
    return rep;
}

// Normal-class search with the family checks and the dominance comparison
// against the 2-power result.
inline VerifyReport verify_search_suite(int n_max, unsigned jobs = 1) {
    VerifyReport rep{"search", 0, {}, 0};
    detail::SuiteTimer timer(rep);
    std::vector<SearchHit> hits(std::max(0, n_max - 1));
    parallel_for(2, n_max + 1, jobs,
                 [&](int n) { hits[n - 2] = search_normal_classes(WRing(n)); });
    rep.instances = hits.size();
    for (const auto& hit : hits) {
        if (hit.family.empty()) continue;
        if (hit.family_degree < 1) continue;  // pattern degenerate at this n
        if (!hit.family_nonzero) {
            rep.failures.push_back("n=" + std::to_string(hit.n) + ": expected nonzero class in degree " +
                                   std::to_string(hit.family_degree));
            continue;
        }
        if (hit.family == "2-power") continue;
        // the family hit must not beat the nearby 2-power nonimmersion
        int delta = 0;
        if (hit.family == "2^r+1") delta = 1;
        else if (hit.family == "2^r+2") delta = 2;
        else if (hit.family == "2^r+4") delta = 4;
        const int base = hit.n - delta;
        const int family_dim = 2 * hit.n + hit.family_degree - 1;
        if (family_dim != 4 * base - 2)
            rep.failures.push_back("n=" + std::to_string(hit.n) +
                                   ": family dimension is not the 2-power dimension");
    }
    return rep;
}

inline int verify_exit_status(const std::vector<VerifyReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed()) return 1;
    return 0;
}

}  // namespace z2coh
