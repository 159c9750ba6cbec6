#pragma once

// The mod-2 cohomology ring of the Grassmann manifold of 2-planes in R^{n+1}.
// Generators are x = w_1 (degree 1) and y = w_2 (degree 2); the relations are
// q_n and q_{n+1}, the degree-n and degree-(n+1) components of the formal
// inverse of 1 + x + y. A context precomputes, per degree, a reduction onto a
// monomial basis of the quotient (the oracle route) and, in the upper half of
// the grading where dim H^{2n-2k-eps} = k, the preferred basis b_1..b_k in
// which a monomial x^{2i-eps} y^{n-k-i} expands as the sum of the b_j with
// i + j a power of 2 (the fast route). The two routes are kept independent so
// each can check the other.

#include "f2.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace z2coh {

struct GMonomial {
    int x_exp = 0;
    int y_exp = 0;
    int degree() const { return x_exp + 2 * y_exp; }
    bool operator==(const GMonomial&) const = default;
};

inline std::string to_string(const GMonomial& m) {
    std::string s;
    auto factor = [&s](const char* g, int e) {
        if (e == 0) return;
        if (!s.empty()) s += ' ';
        s += g;
        if (e != 1) s += '^' + std::to_string(e);
    };
    factor("x", m.x_exp);
    factor("y", m.y_exp);
    return s.empty() ? "1" : s;
}

// Ambient monomials of one degree, ordered by decreasing x exponent. The
// index of x^{d-2j} y^j is j.
inline int g_monomial_count(int degree) { return degree < 0 ? 0 : degree / 2 + 1; }
inline GMonomial g_monomial_at(int degree, int index) { return {degree - 2 * index, index}; }
inline int g_monomial_index(const GMonomial& m) { return m.y_exp; }

inline bool is_two_power(long long v) { return v > 0 && (v & (v - 1)) == 0; }

// Degree-k component of the inverse of 1 + x + y: coefficient of x^{k-2j} y^j
// is C(k-j, j) mod 2. Satisfies q_k = x q_{k-1} + y q_{k-2}.
inline f2::BitVec dual_class(int k) {
    f2::BitVec coeffs(g_monomial_count(k));
    for (int j = 0; 2 * j <= k; ++j)
        if (f2::binom_odd(k - j, j)) coeffs.set(j);
    return coeffs;
}

class GrassContext {
public:
    explicit GrassContext(int n) : GrassContext(n, dual_class(n), dual_class(n + 1)) {}

    // Quotient of Z2[x, y] by two homogeneous relations in degrees n and n+1.
    // The separate entry point exists so a deliberately wrong presentation can
    // be fed to the verification routines.
    GrassContext(int n, f2::BitVec relation_lo, f2::BitVec relation_hi)
        : n_(n), rel_lo_(std::move(relation_lo)), rel_hi_(std::move(relation_hi)) {
        if (n < 2) throw std::invalid_argument("GrassContext: n must be >= 2");
        if (static_cast<int>(rel_lo_.size()) != g_monomial_count(n) ||
            static_cast<int>(rel_hi_.size()) != g_monomial_count(n + 1))
            throw std::invalid_argument("GrassContext: relation degrees must be n and n+1");
        build();
        build_betas();
    }

    int n() const { return n_; }
    int top_degree() const { return 2 * n_ - 2; }

    int dim(int degree) const {
        if (degree < 0 || degree > top_degree()) return 0;
        return static_cast<int>(degrees_[degree].basis.size());
    }

    const std::vector<GMonomial>& basis(int degree) const { return degrees_[degree].basis; }

    std::size_t relations_rank(int degree) const {
        if (degree < 0 || degree > top_degree()) return 0;
        return degrees_[degree].relations_rank;
    }

    // Image of an ambient degree-d coefficient vector in the quotient,
    // expressed over basis(d). Degrees outside [0, 2n-2] are zero.
    f2::BitVec reduce(int degree, const f2::BitVec& ambient) const {
        if (degree < 0 || degree > top_degree()) return f2::BitVec(0);
        const auto& dd = degrees_[degree];
        f2::BitVec out(dd.basis.size());
        ambient.for_each_set([&](std::size_t i) { out ^= dd.to_basis.row(i); });
        return out;
    }

    f2::BitVec reduce_monomial(const GMonomial& m) const {
        const int d = m.degree();
        if (m.x_exp < 0 || m.y_exp < 0 || d > top_degree()) return f2::BitVec(0);
        return degrees_[d].to_basis.row(g_monomial_index(m));
    }

    // Product of two reduced classes, reduced again.
    f2::BitVec multiply(int d1, const f2::BitVec& r1, int d2, const f2::BitVec& r2) const {
        const int d = d1 + d2;
        if (d > top_degree()) return f2::BitVec(0);
        f2::BitVec ambient(g_monomial_count(d));
        r1.for_each_set([&](std::size_t p) {
            const GMonomial a = degrees_[d1].basis[p];
            r2.for_each_set([&](std::size_t q) {
                const GMonomial b = degrees_[d2].basis[q];
                ambient.flip(a.y_exp + b.y_exp);
            });
        });
        return reduce(d, ambient);
    }

    // Number of preferred basis elements in this degree: k when
    // degree = 2n - 2k - eps >= n, otherwise 0.
    int beta_count(int degree) const {
        if (degree < n_ || degree > top_degree()) return 0;
        return (2 * n_ - degree - (degree & 1)) / 2;
    }

    bool betas_built() const { return beta_ok_; }
    const std::string& beta_failure() const { return beta_failure_; }

    // Oracle coordinates of b_j (1-based j) in the given degree.
    const f2::BitVec& beta(int degree, int j) const {
        if (!beta_ok_) throw std::logic_error("GrassContext: basis construction failed: " + beta_failure_);
        const int k = beta_count(degree);
        if (j < 1 || j > k) throw std::out_of_range("GrassContext::beta: index");
        return betas_[degree][j - 1];
    }

private:
    struct DegreeData {
        std::vector<GMonomial> basis;
        f2::BitMat to_basis;  // ambient index -> coordinates over basis
        std::size_t relations_rank = 0;
    };

    int n_;
    f2::BitVec rel_lo_, rel_hi_;
    std::vector<DegreeData> degrees_;
    std::vector<std::vector<f2::BitVec>> betas_;
    bool beta_ok_ = true;
    std::string beta_failure_;

    // Row of x^a y^b * q inside the ambient degree-d enumeration.
    static f2::BitVec shifted_relation(const f2::BitVec& rel, int b, int count) {
        f2::BitVec row(count);
        rel.for_each_set([&](std::size_t j) { row.set(b + j); });
        return row;
    }

    void build() {
        degrees_.resize(top_degree() + 1);
        for (int d = 0; d <= top_degree(); ++d) {
            const int count = g_monomial_count(d);
            f2::BitMat ideal(0, count);
            for (int b = 0; 2 * b <= d - n_; ++b)
                ideal.append_row(shifted_relation(rel_lo_, b, count));
            for (int b = 0; 2 * b <= d - n_ - 1; ++b)
                ideal.append_row(shifted_relation(rel_hi_, b, count));
            const auto ech = f2::row_reduce(std::move(ideal));

            DegreeData dd;
            dd.relations_rank = ech.rank;
            std::vector<int> basis_pos(count, -1);
            std::size_t next_pivot = 0;
            for (int i = 0; i < count; ++i) {
                if (next_pivot < ech.pivots.size() && ech.pivots[next_pivot] == static_cast<std::size_t>(i)) {
                    ++next_pivot;
                    continue;
                }
                basis_pos[i] = static_cast<int>(dd.basis.size());
                dd.basis.push_back(g_monomial_at(d, i));
            }
            dd.to_basis = f2::BitMat(count, dd.basis.size());
            for (int i = 0; i < count; ++i) {
                if (basis_pos[i] >= 0) {
                    dd.to_basis.set(i, basis_pos[i]);
                    continue;
                }
                // pivot monomial: its RREF row reads e_i = sum of basis monomials
                const std::size_t r = static_cast<std::size_t>(
                    std::lower_bound(ech.pivots.begin(), ech.pivots.end(), static_cast<std::size_t>(i)) -
                    ech.pivots.begin());
                ech.reduced.row(r).for_each_set([&](std::size_t j) {
                    if (basis_pos[j] >= 0) dd.to_basis.set(i, basis_pos[j]);
                });
            }
            degrees_[d] = std::move(dd);
        }
    }

    // Build the preferred bases downward in degree. Base case: the one-line
    // degrees 2n-2 and 2n-3. Step: b_j in the next degree down is the unique
    // preimage of (b_j, b_{j-1}) under (.y, .x^2).
    void build_betas() {
        betas_.assign(top_degree() + 1, {});
        for (int eps = 0; eps <= 1 && beta_ok_; ++eps) {
            const int k_max = (n_ - eps) / 2;
            if (k_max < 1) continue;
            {
                const int d = 2 * n_ - 2 - eps;
                if (dim(d) != 1) {
                    fail_betas("top degree " + std::to_string(d) + " is not one-dimensional");
                    return;
                }
                f2::BitVec generator(1);
                generator.set(0);
                betas_[d] = {generator};
            }
            for (int k = 1; k + 1 <= k_max; ++k) {
                const int d_cur = 2 * n_ - 2 * k - eps;
                const int d_next = d_cur - 2;
                const int dim_next = dim(d_next);
                if (dim_next != k + 1 || dim(d_cur) != k) {
                    fail_betas("unexpected dimension at degree " + std::to_string(d_next));
                    return;
                }
                const int w = dim(d_cur);
                f2::BitMat phi(dim_next, 2 * w);
                for (int p = 0; p < dim_next; ++p) {
                    const GMonomial m = degrees_[d_next].basis[p];
                    const f2::BitVec by = reduce_monomial({m.x_exp, m.y_exp + 1});
                    const f2::BitVec bx2 = reduce_monomial({m.x_exp + 2, m.y_exp});
                    by.for_each_set([&](std::size_t c) { phi.set(p, c); });
                    bx2.for_each_set([&](std::size_t c) { phi.set(p, w + c); });
                }
                // augment with the identity to recover preimages
                f2::BitMat aug(dim_next, 2 * w + dim_next);
                for (int p = 0; p < dim_next; ++p) {
                    phi.row(p).for_each_set([&](std::size_t c) { aug.set(p, c); });
                    aug.set(p, 2 * w + p);
                }
                auto ech = f2::row_reduce(std::move(aug));
                // pivots within the first 2w columns = rank of phi
                std::size_t phi_rank = 0;
                while (phi_rank < ech.pivots.size() && ech.pivots[phi_rank] < static_cast<std::size_t>(2 * w))
                    ++phi_rank;
                if (phi_rank != static_cast<std::size_t>(dim_next)) {
                    fail_betas("multiplication map not injective entering degree " + std::to_string(d_next));
                    return;
                }
                std::vector<f2::BitVec> next_betas;
                for (int j = 1; j <= k + 1; ++j) {
                    f2::BitVec target(2 * w);
                    if (j <= k)
                        betas_[d_cur][j - 1].for_each_set([&](std::size_t c) { target.set(c); });
                    if (j >= 2)
                        betas_[d_cur][j - 2].for_each_set([&](std::size_t c) { target.set(w + c); });
                    f2::BitVec residue = target;
                    f2::BitVec combo(dim_next);
                    for (std::size_t r = 0; r < phi_rank; ++r) {
                        if (!residue.test(ech.pivots[r])) continue;
                        for (std::size_t c = 0; c < static_cast<std::size_t>(2 * w); ++c)
                            if (ech.reduced.row(r).test(c)) residue.flip(c);
                        for (int p = 0; p < dim_next; ++p)
                            if (ech.reduced.row(r).test(2 * w + p)) combo.flip(p);
                    }
                    if (residue.any()) {
                        fail_betas("image misses target " + std::to_string(j) + " in degree " +
                                   std::to_string(d_next));
                        return;
                    }
                    next_betas.push_back(std::move(combo));
                }
                betas_[d_next] = std::move(next_betas);
            }
        }
    }

    void fail_betas(std::string why) {
        beta_ok_ = false;
        beta_failure_ = std::move(why);
    }
};

enum class HgRegime { free_monomial, beta_sum, above_top };

struct HgNormalForm {
    HgRegime regime = HgRegime::free_monomial;
    int k = 0;            // basis size when regime == beta_sum
    f2::BitVec beta_bits; // bit j-1 set when b_j appears, 1 <= j <= k
};

// The closed-form normal form: in degree 2n-2k-eps >= n the monomial
// x^{2i-eps} y^{n-k-i} equals the sum of the b_j with i + j a power of 2.
// Below degree n monomials are independent; above 2n-2 everything is zero.
inline HgNormalForm hg_normal_form(int n, const GMonomial& m) {
    if (n < 2) throw std::invalid_argument("hg_normal_form: n must be >= 2");
    const int d = m.degree();
    HgNormalForm nf;
    if (d > 2 * n - 2) {
        nf.regime = HgRegime::above_top;
        return nf;
    }
    if (d < n) {
        nf.regime = HgRegime::free_monomial;
        return nf;
    }
    const int eps = d & 1;
    nf.regime = HgRegime::beta_sum;
    nf.k = (2 * n - d - eps) / 2;
    const int i = (m.x_exp + eps) / 2;
    nf.beta_bits = f2::BitVec(nf.k);
    for (int j = 1; j <= nf.k; ++j)
        if (is_two_power(i + j)) nf.beta_bits.set(j - 1);
    return nf;
}

struct PoincareReport {
    bool ok = true;
    std::vector<int> dims;
    long long total = 0;
    std::vector<std::string> problems;
};

// Duality and dimension bookkeeping: dims are palindromic, the upper-half
// degrees have dim k, and the total matches the Schubert cell count
// C(n+1, 2).
inline PoincareReport poincare_check(const GrassContext& ctx) {
    PoincareReport rep;
    const int n = ctx.n();
    const int top = ctx.top_degree();
    for (int d = 0; d <= top; ++d) {
        rep.dims.push_back(ctx.dim(d));
        rep.total += ctx.dim(d);
    }
    for (int d = 0; d <= top; ++d) {
        if (ctx.dim(d) != ctx.dim(top - d)) {
            rep.ok = false;
            rep.problems.push_back("dim asymmetry at degree " + std::to_string(d));
        }
    }
    for (int d = n; d <= top; ++d) {
        const int k = ctx.beta_count(d);
        if (ctx.dim(d) != k) {
            rep.ok = false;
            rep.problems.push_back("degree " + std::to_string(d) + ": dim " +
                                   std::to_string(ctx.dim(d)) + " != " + std::to_string(k));
        }
    }
    const long long cells = static_cast<long long>(n + 1) * n / 2;
    if (rep.total != cells) {
        rep.ok = false;
        rep.problems.push_back("total dimension " + std::to_string(rep.total) + " != " +
                               std::to_string(cells));
    }
    if (ctx.dim(top) != 1) {
        rep.ok = false;
        rep.problems.push_back("top degree not one-dimensional");
    }
    return rep;
}

// Cross-check of the two reduction routes. For every degree in the two-power
// regime: the oracle dimension equals k; the fast-route matrix F and oracle
// matrix O (rows = ambient monomials) induce the same linear dependencies,
// i.e. rank F = rank O = rank [O | F] = k; and when the preferred basis was
// constructed, every monomial's oracle reduction equals its predicted sum of
// b_j. Below degree n, monomials must be independent. Returns one line per
// mismatch; empty means the routes agree everywhere.
inline std::vector<std::string> verify_hg_vs_oracle(const GrassContext& ctx) {
    std::vector<std::string> mismatches;
    const int n = ctx.n();
    for (int d = 0; d < n && d <= ctx.top_degree(); ++d) {
        if (ctx.relations_rank(d) != 0 || ctx.dim(d) != g_monomial_count(d))
            mismatches.push_back("degree " + std::to_string(d) + ": monomials not independent");
    }
    for (int d = n; d <= ctx.top_degree(); ++d) {
        const int count = g_monomial_count(d);
        const int dim = ctx.dim(d);
        const int k = ctx.beta_count(d);
        if (dim != k) {
            mismatches.push_back("degree " + std::to_string(d) + ": oracle dim " +
                                 std::to_string(dim) + " != k = " + std::to_string(k));
            continue;
        }
        f2::BitMat fast(count, k);
        f2::BitMat both(count, dim + k);
        for (int i = 0; i < count; ++i) {
            const GMonomial m = g_monomial_at(d, i);
            const auto nf = hg_normal_form(n, m);
            nf.beta_bits.for_each_set([&](std::size_t j) {
                fast.set(i, j);
                both.set(i, dim + j);
            });
            ctx.reduce_monomial(m).for_each_set([&](std::size_t j) { both.set(i, j); });
        }
        const std::size_t rank_fast = f2::rank_of(fast);
        const std::size_t rank_both = f2::rank_of(both);
        if (rank_fast != static_cast<std::size_t>(k) || rank_both != static_cast<std::size_t>(k))
            mismatches.push_back("degree " + std::to_string(d) + ": dependency patterns differ");
        if (ctx.betas_built()) {
            for (int i = 0; i < count; ++i) {
                const GMonomial m = g_monomial_at(d, i);
                const auto nf = hg_normal_form(n, m);
                f2::BitVec expected(dim);
                nf.beta_bits.for_each_set(
                    [&](std::size_t j) { expected ^= ctx.beta(d, static_cast<int>(j) + 1); });
                if (!(expected == ctx.reduce_monomial(m)))
                    mismatches.push_back("degree " + std::to_string(d) + ": " + to_string(m) +
                                         " disagrees with its two-power expansion");
            }
        } else {
            mismatches.push_back("preferred basis construction failed: " + ctx.beta_failure());
        }
    }
    return mismatches;
}

}  // namespace z2coh
