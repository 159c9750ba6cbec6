#pragma once

// Stiefel-Whitney series of the bundles over the Grassmannian G, the
// orthogonal-pair space W and the two-point configuration space C of RP^n,
// together with the certificate computations they support: the parity of the
// top normal class (which decides nonimmersion), the vanishing certificate
// one degree down (which feeds the immersion result), the indeterminacy
// witness for even n, and the search for further nonzero normal classes.
//
// The series are:
//   tau G : (1+x)^{-2} (1+x+y)^{n+1}
//   tau W : (1+x)^{-1} (1+x+y)^{n+1}
//   eta W : (1+x)   (1+x+y)^{-n-1}
//   tau C : (1+x+u) (1+x)^{-1} (1+x+y)^{n+1}
//   eta C : (1+x)   (1+x+y)^{-n-1} (1+x+u)^{-1}
//                 = (1+x+y)^{-n-1} + u (1+u+y)^{-n-1}
// The last identity gives a closed form per coefficient; the series engine
// and the closed form are kept as independent routes.

#include "f2.hpp"
#include "grassmann.hpp"
#include "series.hpp"
#include "wring.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace z2coh {

enum class Bundle { tangent_g, tangent_w, normal_w, tangent_c, normal_c };

inline const char* bundle_name(Bundle b) {
    switch (b) {
        case Bundle::tangent_g: return "tau-g";
        case Bundle::tangent_w: return "tau-w";
        case Bundle::normal_w: return "eta-w";
        case Bundle::tangent_c: return "tau-c";
        case Bundle::normal_c: return "eta-c";
    }
    return "?";
}

inline std::optional<Bundle> parse_bundle(const std::string& name) {
    if (name == "tau-g") return Bundle::tangent_g;
    if (name == "tau-w") return Bundle::tangent_w;
    if (name == "eta-w") return Bundle::normal_w;
    if (name == "tau-c") return Bundle::tangent_c;
    if (name == "eta-c") return Bundle::normal_c;
    return std::nullopt;
}

struct SwSeries {
    int n = 0;
    Bundle bundle = Bundle::normal_c;
    int cutoff = 0;
    std::vector<WClass> ambient;    // canonical-monomial coefficients per degree
    std::vector<WReduced> reduced;  // quotient coordinates per degree
};

inline XuySeries sw_series_ambient(int n, Bundle bundle, int cutoff) {
    const XuySeries one_x = XuySeries::from_monomials(cutoff, {{0, 0, 0}, {1, 0, 0}});
    const XuySeries one_xy =
        XuySeries::from_monomials(cutoff, {{0, 0, 0}, {1, 0, 0}, {0, 0, 1}});
    const XuySeries one_xu =
        XuySeries::from_monomials(cutoff, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
    switch (bundle) {
        case Bundle::tangent_g: return one_x.pow(-2) * one_xy.pow(n + 1);
        case Bundle::tangent_w: return one_x.pow(-1) * one_xy.pow(n + 1);
        case Bundle::normal_w: return one_x * one_xy.pow(-n - 1);
        case Bundle::tangent_c: return one_xu * one_x.pow(-1) * one_xy.pow(n + 1);
        case Bundle::normal_c: return one_x * one_xy.pow(-n - 1) * one_xu.pow(-1);
    }
    throw std::invalid_argument("sw_series_ambient: unknown bundle");
}

inline SwSeries sw_series(const WRing& ring, Bundle bundle, int cutoff) {
    if (cutoff < 0 || cutoff > ring.top_degree())
        throw std::invalid_argument("sw_series: cutoff must lie in [0, 2n-1]");
    SwSeries out{ring.n(), bundle, cutoff, {}, {}};
    const XuySeries s = sw_series_ambient(ring.n(), bundle, cutoff);
    for (int d = 0; d <= cutoff; ++d) {
        out.ambient.push_back(s.component_class(d));
        out.reduced.push_back(ring.reduce(out.ambient.back()));
    }
    return out;
}

// Degree-k coefficient of the normal-bundle series of the configuration
// space, from the closed form: the u-free part is (1+x+y)^{-n-1} and the
// u-part of x^j u y^i carries C(-n-1, i) C(-n-1-i, j).
inline WClass eta_c_coeff_closed(int n, int k) {
    WClass out = w_zero(k);
    for (int b = 0; 2 * b <= k; ++b) {
        const int a = k - 2 * b;
        if (f2::binom_odd(-n - 1, a + b) && f2::binom_odd(a + b, a))
            out.coeffs.flip(w_monomial_index({a, 0, b}));
    }
    for (int i = 0; 1 + 2 * i <= k; ++i) {
        const int j = k - 1 - 2 * i;
        if (f2::binom_odd(-n - 1, i) && f2::binom_odd(-n - 1 - i, j))
            out.coeffs.flip(w_monomial_index({j, 1, i}));
    }
    return out;
}

// Hard failure raised when the series route and the closed form disagree.
struct RouteMismatchError : std::runtime_error {
    int degree;
    WMonomial monomial;
    RouteMismatchError(int deg, WMonomial m)
        : std::runtime_error("normal-bundle series routes disagree in degree " +
                             std::to_string(deg) + " at " + to_string(m)),
          degree(deg), monomial(m) {}
};

// Compare the two routes coefficient by coefficient through the cutoff;
// throws on the first differing monomial.
inline void check_eta_routes(const SwSeries& series) {
    for (int d = 0; d <= series.cutoff; ++d) {
        const WClass closed = eta_c_coeff_closed(series.n, d);
        if (closed == series.ambient[d]) continue;
        f2::BitVec diff = closed.coeffs;
        diff ^= series.ambient[d].coeffs;
        throw RouteMismatchError(d, w_monomial_at(d, static_cast<int>(diff.first_set())));
    }
}

// Parity of the top normal class w_{2n-1}(eta C): the coefficient sum over
// the top-family monomials,
//   sum_t C(2n - 2^{t-1}, n - 2^{t-1}) C(2n + 2^{t-1} - 2, 2^t - 2).
// Nonzero exactly when n is a power of 2.
inline bool top_sw_parity(int n) {
    if (n < 2) throw std::invalid_argument("top_sw_parity: n must be >= 2");
    bool odd = false;
    for (long long t = 1; (1LL << (t - 1)) <= n; ++t) {
        const long long half = 1LL << (t - 1);
        if (f2::binom_odd(2 * n - half, n - half) && f2::binom_odd(2 * n + half - 2, 2 * half - 2))
            odd = !odd;
    }
    return odd;
}

// Reduced degree-k coefficient of the normal series of the configuration
// space (closed-form route).
inline WReduced eta_c_coeff(const WRing& ring, int k) {
    return ring.reduce(eta_c_coeff_closed(ring.n(), k));
}

// Both tangent/normal pairs must multiply to 1 through degree 2n-1.
inline bool whitney_duality(int n) {
    const int cutoff = 2 * n - 1;
    const auto product_c = sw_series_ambient(n, Bundle::tangent_c, cutoff) *
                           sw_series_ambient(n, Bundle::normal_c, cutoff);
    const auto product_w = sw_series_ambient(n, Bundle::tangent_w, cutoff) *
                           sw_series_ambient(n, Bundle::normal_w, cutoff);
    return product_c == XuySeries::one(cutoff) && product_w == XuySeries::one(cutoff);
}

// One line of the normal-class search. family is set when n sits in one of
// the recognized patterns (a 2-power, or a 2-power plus 1, 2 or 4);
// family_degree is the degree in which that pattern has its nonzero class.
struct SearchHit {
    int n = 0;
    int k = 0;        // largest degree with a nonzero normal class
    bool nonzero = false;
    std::string family;
    int family_degree = -1;
    bool family_nonzero = false;
    std::string witness;  // basis monomial representing the class in degree k
    int implied_nonimmersion_dim = 0;
};

inline SearchHit search_normal_classes(const WRing& ring) {
    SearchHit hit;
    hit.n = ring.n();
    const int n = ring.n();
    for (int k = ring.top_degree(); k >= 0; --k) {
        const WReduced w = eta_c_coeff(ring, k);
        if (w.is_zero()) continue;
        hit.k = k;
        hit.nonzero = true;
        hit.witness = to_string(ring.basis_monomial(k, static_cast<int>(w.coords.first_set())));
        break;
    }
    hit.implied_nonimmersion_dim = 2 * n + hit.k - 1;
    if (is_two_power(n)) {
        hit.family = "2-power";
        hit.family_degree = 2 * n - 1;
    } else if (is_two_power(n - 1) && n - 1 >= 2) {
        hit.family = "2^r+1";
        hit.family_degree = 2 * n - 5;
    } else if (is_two_power(n - 2) && n - 2 >= 4) {
        hit.family = "2^r+2";
        hit.family_degree = 2 * n - 9;
    } else if (is_two_power(n - 4) && n - 4 >= 8) {
        hit.family = "2^r+4";
        hit.family_degree = 2 * n - 17;
    }
    if (hit.family_degree >= 0)
        hit.family_nonzero = !eta_c_coeff(ring, hit.family_degree).is_zero();
    return hit;
}

inline std::vector<SearchHit> sw_search(int n_max) {
    std::vector<SearchHit> hits;
    for (int n = 2; n <= n_max; ++n) hits.push_back(search_normal_classes(WRing(n)));
    return hits;
}

// Indeterminacy witness for even n that are not 2-powers: a class
// z = x^{2^t-3} y^{n-2^{t-1}} in degree 2n-3 with Sq^2 z = 0, y z = 0,
// x^2 z = 0 and u^2 z != 0, so that Sq^2 + w_2 is onto the top group.
struct Sq2Witness {
    bool found = false;
    std::vector<int> valid_t;
    WMonomial witness{};
};

inline Sq2Witness sq2_indeterminacy_witness(const WRing& ring) {
    const int n = ring.n();
    if (n < 6 || n % 2 != 0 || is_two_power(n))
        throw std::invalid_argument("sq2_indeterminacy_witness: needs even non-2-power n >= 6");
    Sq2Witness result;
    for (int t = 2; (1 << (t - 1)) <= n; ++t) {
        const WMonomial z{(1 << t) - 3, 0, n - (1 << (t - 1))};
        const WReduced zr = ring.reduce_monomial(z);
        if (zr.is_zero()) continue;
        const auto sq = ring.total_square(zr);
        if (!sq[2].is_zero()) continue;
        if (!ring.multiply_monomial(zr, {0, 0, 1}).is_zero()) continue;
        if (!ring.multiply_monomial(zr, {2, 0, 0}).is_zero()) continue;
        if (ring.multiply_monomial(zr, {0, 2, 0}).is_zero()) continue;
        result.valid_t.push_back(t);
        if (!result.found) {
            result.found = true;
            result.witness = z;
        }
    }
    return result;
}

// Immersion and embedding conclusions for the configuration space, an open
// 2n-manifold. Nonimmersion comes from a computed nonzero normal class; the
// immersion in the non-2-power case rests on obstruction theory and is cited,
// with its two cohomological certificates computed here.
struct ImmersionReport {
    int n = 0;
    int space_dim = 0;  // 2n
    bool two_power = false;
    // computed certificates
    bool top_normal_class_nonzero = false;   // w_{2n-1}(eta C)
    bool next_normal_class_zero = false;     // w_{2n-2}(eta C) = 0
    std::optional<bool> w2_matches_expected; // even n: w_2 = y + u^2 + C(n+2,2) x^2
    std::optional<Sq2Witness> sq2;           // even non-2-power n >= 6
    // conclusions
    int generic_immersion_dim = 0;        // 4n-1, classical for open 2n-manifolds
    int generic_embedding_dim = 0;        // 4n, closed embedding
    int nonimmersion_dim = -1;            // 4n-2 when n is a 2-power (computed)
    int nonembedding_dim = -1;            // 4n-1 when n is a 2-power (computed)
    int immersion_dim = -1;               // 4n-3 when n is not a 2-power (cited)
};

inline ImmersionReport immersion_report(const WRing& ring) {
    const int n = ring.n();
    ImmersionReport rep;
    rep.n = n;
    rep.space_dim = 2 * n;
    rep.two_power = is_two_power(n);
    rep.generic_immersion_dim = 4 * n - 1;
    rep.generic_embedding_dim = 4 * n;
    rep.top_normal_class_nonzero = !eta_c_coeff(ring, 2 * n - 1).is_zero();
    rep.next_normal_class_zero = eta_c_coeff(ring, 2 * n - 2).is_zero();
    if (n % 2 == 0) {
        const WClass expected =
            f2::binom_odd(n + 2, 2)
                ? w_class(2, {{0, 0, 1}, {0, 2, 0}, {2, 0, 0}})
                : w_class(2, {{0, 0, 1}, {0, 2, 0}});
        rep.w2_matches_expected = eta_c_coeff_closed(n, 2) == expected;
    }
    if (rep.two_power) {
        rep.nonimmersion_dim = 4 * n - 2;
        rep.nonembedding_dim = 4 * n - 1;
    } else {
        rep.immersion_dim = 4 * n - 3;
        if (n % 2 == 0 && n >= 6) rep.sq2 = sq2_indeterminacy_witness(ring);
    }
    return rep;
}

}  // namespace z2coh
