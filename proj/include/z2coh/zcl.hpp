#pragma once

// Zero-divisor cup length of the two-point configuration space of RP^n,
// computed in H*(C) tensor H*(C). The zero divisors in play are
// xbar = x(x)1 + 1(x)x and likewise ubar, ybar. A tensor class is stored one
// bidegree at a time as a bit matrix over the reduced bases of the two
// factors, so a class is nonzero exactly when some block matrix is. Products
// are accumulated one generator at a time, reducing after every step.
//
// With n = 2^e + d, 0 <= d < 2^e, and r = -1 for d = 0 or else the top bit
// position of d, the cup length is 2^{e+2} + 2^{r+1} - 4, realized by
// xbar^{2^{e+1}-1} ubar^{2^{e+1}-2} ybar^{2^{r+1}-1}.

#include "f2.hpp"
#include "wring.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace z2coh {

struct NDecomp {
    int e = 0;
    int d = 0;
    int r = -1;
};

inline NDecomp decompose_two_power(int n) {
    if (n < 2) throw std::invalid_argument("decompose_two_power: n must be >= 2");
    NDecomp dec;
    while ((2 << dec.e) <= n) ++dec.e;
    dec.d = n - (1 << dec.e);
    dec.r = -1;
    while ((2 << (dec.r + 1)) <= 2 * dec.d + 1) ++dec.r;  // 2^r <= d + 1/2
    return dec;
}

inline int zcl_formula(int n) {
    const NDecomp dec = decompose_two_power(n);
    return (1 << (dec.e + 2)) + (1 << (dec.r + 1)) - 4;
}

struct TcBounds {
    int n = 0;
    NDecomp dec;
    int lower = 0;
    int upper = 0;
    int gap = 0;
};

inline TcBounds tc_bounds(int n) {
    TcBounds b;
    b.n = n;
    b.dec = decompose_two_power(n);
    b.lower = zcl_formula(n);
    b.upper = 4 * n - 2;  // twice the dimension of the compact model
    b.gap = b.upper - b.lower;
    return b;
}

// Element of one total degree of the tensor-square ring. blocks[i] covers
// left degree d_lo + i; entry (p, q) is the coefficient of the p-th left
// basis class tensor the q-th right basis class.
struct TensorClass {
    int total_degree = 0;
    int d_lo = 0;
    std::vector<f2::BitMat> blocks;

    bool is_zero() const {
        for (const auto& b : blocks)
            for (std::size_t r = 0; r < b.rows(); ++r)
                if (b.row(r).any()) return false;
        return true;
    }
    const f2::BitMat* block_at(int left_degree) const {
        const int i = left_degree - d_lo;
        if (i < 0 || i >= static_cast<int>(blocks.size())) return nullptr;
        return &blocks[i];
    }
};

class TensorAlgebra {
public:
    explicit TensorAlgebra(const WRing& ring) : ring_(&ring) {
        const int top = ring.top_degree();
        const std::array<WMonomial, 3> gens = {WMonomial{1, 0, 0}, WMonomial{0, 1, 0},
                                               WMonomial{0, 0, 1}};
        for (int g = 0; g < 3; ++g) {
            ops_[g].reserve(top + 1);
            for (int d = 0; d <= top; ++d) {
                const int dim_to = ring.dim(d + gens[g].degree());
                f2::BitMat op(ring.dim(d), dim_to);
                for (int p = 0; p < ring.dim(d); ++p) {
                    WReduced unit{d, f2::BitVec(ring.dim(d))};
                    unit.coords.set(p);
                    const WReduced image = ring.multiply_monomial(unit, gens[g]);
                    image.coords.for_each_set([&](std::size_t c) { op.set(p, c); });
                }
                ops_[g].push_back(std::move(op));
            }
        }
    }

    const WRing& ring() const { return *ring_; }

    TensorClass zero(int total_degree) const {
        TensorClass t;
        t.total_degree = total_degree;
        const int top = ring_->top_degree();
        t.d_lo = std::max(0, total_degree - top);
        const int d_hi = std::min(total_degree, top);
        for (int dl = t.d_lo; dl <= d_hi; ++dl)
            t.blocks.emplace_back(ring_->dim(dl), ring_->dim(total_degree - dl));
        return t;
    }

    TensorClass unit() const {
        TensorClass t = zero(0);
        t.blocks[0].set(0, 0);
        return t;
    }

    // Multiply by g(x)1 + 1(x)g for a generator g.
    TensorClass multiply_bar(const TensorClass& t, const WMonomial& gen) const {
        const int gd = gen.degree();
        const int gi = gen_index(gen);
        TensorClass out = zero(t.total_degree + gd);
        for (int i = 0; i < static_cast<int>(t.blocks.size()); ++i) {
            const int dl = t.d_lo + i;
            const int dr = t.total_degree - dl;
            const f2::BitMat& m = t.blocks[i];
            if (m.rows() == 0 || m.cols() == 0) continue;
            // left factor: rows map through the operator
            if (dl + gd <= ring_->top_degree() && ring_->dim(dl + gd) > 0) {
                f2::BitMat& target = out.blocks[dl + gd - out.d_lo];
                const f2::BitMat& op = ops_[gi][dl];
                for (std::size_t p = 0; p < m.rows(); ++p) {
                    if (m.row(p).none()) continue;
                    op.row(p).for_each_set(
                        [&](std::size_t pp) { target.row(pp) ^= m.row(p); });
                }
            }
            // right factor: columns map through the operator
            if (dr + gd <= ring_->top_degree() && ring_->dim(dr + gd) > 0) {
                f2::BitMat& target = out.blocks[dl - out.d_lo];
                const f2::BitMat& op = ops_[gi][dr];
                for (std::size_t p = 0; p < m.rows(); ++p)
                    m.row(p).for_each_set(
                        [&](std::size_t q) { target.row(p) ^= op.row(q); });
            }
        }
        return out;
    }

    // xbar^a ubar^b ybar^c applied to 1(x)1.
    TensorClass generator_power(int a, int b, int c) const {
        if (a < 0 || b < 0 || c < 0)
            throw std::invalid_argument("generator_power: exponents must be >= 0");
        TensorClass t = unit();
        const int total = a + b + 2 * c;
        for (int i = 0; i < a; ++i) {
            t = multiply_bar(t, {1, 0, 0});
            if (t.is_zero()) return zero(total);
        }
        for (int i = 0; i < b; ++i) {
            t = multiply_bar(t, {0, 1, 0});
            if (t.is_zero()) return zero(total);
        }
        for (int i = 0; i < c; ++i) {
            t = multiply_bar(t, {0, 0, 1});
            if (t.is_zero()) return zero(total);
        }
        return t;
    }

    // Image under the multiplication-to-diagonal map; zero on every zbar.
    WReduced diagonal(const TensorClass& t) const {
        WReduced out{t.total_degree, f2::BitVec(ring_->dim(t.total_degree))};
        for (int i = 0; i < static_cast<int>(t.blocks.size()); ++i) {
            const int dl = t.d_lo + i;
            const int dr = t.total_degree - dl;
            const f2::BitMat& m = t.blocks[i];
            for (std::size_t p = 0; p < m.rows(); ++p)
                m.row(p).for_each_set([&](std::size_t q) {
                    WReduced left{dl, f2::BitVec(ring_->dim(dl))};
                    left.coords.set(p);
                    WReduced right{dr, f2::BitVec(ring_->dim(dr))};
                    right.coords.set(q);
                    out.coords ^= ring_->multiply(left, right).coords;
                });
        }
        return out;
    }

private:
    const WRing* ring_;
    std::array<std::vector<f2::BitMat>, 3> ops_;  // x, u, y action per degree

    static int gen_index(const WMonomial& gen) {
        if (gen == WMonomial{1, 0, 0}) return 0;
        if (gen == WMonomial{0, 1, 0}) return 1;
        if (gen == WMonomial{0, 0, 1}) return 2;
        throw std::invalid_argument("multiply_bar: generator must be x, u or y");
    }
};

inline bool zero_divisor_power_nonzero(const TensorAlgebra& alg, int a, int b, int c) {
    return !alg.generator_power(a, b, c).is_zero();
}

// Verification record for the witness product. The witness block lives in
// left degree 2^{e+1} + 2d - 1; restricted to u-free right factors it must be
// exactly x^{2^{e+1}-2} u y^d tensor x^{2^{e+1}-2} y^{2^{r+1}-1-d}. Maximality
// means each single exponent bump kills the product.
struct ZclWitness {
    int n = 0;
    NDecomp dec;
    int a = 0, b = 0, c = 0;
    bool product_nonzero = false;
    bool block_matches = false;
    WMonomial block_left, block_right;
    bool bump_x_zero = false, bump_u_zero = false, bump_y_zero = false;
    bool ok() const {
        return product_nonzero && block_matches && bump_x_zero && bump_u_zero && bump_y_zero;
    }
};

inline ZclWitness zcl_witness(const TensorAlgebra& alg) {
    const WRing& ring = alg.ring();
    ZclWitness w;
    w.n = ring.n();
    w.dec = decompose_two_power(w.n);
    const int pe = 1 << (w.dec.e + 1);
    w.a = pe - 1;
    w.b = pe - 2;
    w.c = (1 << (w.dec.r + 1)) - 1;
    w.block_left = WMonomial{pe - 2, 1, w.dec.d};
    w.block_right = WMonomial{pe - 2, 0, (1 << (w.dec.r + 1)) - 1 - w.dec.d};

    const TensorClass product = alg.generator_power(w.a, w.b, w.c);
    w.product_nonzero = !product.is_zero();

    const int left_degree = w.block_left.degree();
    const int right_degree = product.total_degree - left_degree;
    if (const f2::BitMat* block = product.block_at(left_degree)) {
        const f2::BitVec left = ring.reduce_monomial(w.block_left).coords;
        const f2::BitVec right = ring.reduce_monomial(w.block_right).coords;
        const int ufree_cols = ring.grass().dim(right_degree);
        bool match = left.any() && right.any() && w.block_right.degree() == right_degree;
        for (std::size_t p = 0; match && p < block->rows(); ++p)
            for (int q = 0; match && q < ufree_cols; ++q)
                if (block->get(p, q) != (left.test(p) && right.test(q))) match = false;
        w.block_matches = match;
    }

    w.bump_x_zero = alg.multiply_bar(product, {1, 0, 0}).is_zero();
    w.bump_u_zero = alg.multiply_bar(product, {0, 1, 0}).is_zero();
    w.bump_y_zero = alg.multiply_bar(product, {0, 0, 1}).is_zero();
    return w;
}

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kZclExhaustiveMaxN = 8;

// True cup length over the generating set by full search: the largest a+b+c
// with xbar^a ubar^b ybar^c nonzero. Deliberately refused above the budget.
inline int zcl_exhaustive(const TensorAlgebra& alg) {
    const WRing& ring = alg.ring();
    if (ring.n() > kZclExhaustiveMaxN)
        throw BudgetError("zcl_exhaustive: refusing n = " + std::to_string(ring.n()) +
                          " (budget is n <= " + std::to_string(kZclExhaustiveMaxN) + ")");
    const int degree_cap = 2 * ring.top_degree();
    int best = 0;
    TensorClass ypow = alg.unit();
    for (int c = 0; 2 * c <= degree_cap; ++c) {
        if (c > 0) {
            ypow = alg.multiply_bar(ypow, {0, 0, 1});
            if (ypow.is_zero()) break;
        }
        TensorClass ub = ypow;
        for (int b = 0; 2 * c + b <= degree_cap; ++b) {
            if (b > 0) {
                ub = alg.multiply_bar(ub, {0, 1, 0});
                if (ub.is_zero()) break;
            }
            TensorClass p = ub;
            for (int a = 0; 2 * c + b + a <= degree_cap; ++a) {
                if (a > 0) {
                    p = alg.multiply_bar(p, {1, 0, 0});
                    if (p.is_zero()) break;
                }
                best = std::max(best, a + b + c);
            }
        }
    }
    return best;
}

}  // namespace z2coh
