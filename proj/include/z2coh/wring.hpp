#pragma once

// H*(W_n), the mod-2 cohomology of the space of unordered pairs of orthogonal
// lines through the origin in R^{n+1}; the configuration space of two points
// in RP^n deformation-retracts onto W_n, so this ring is also H* of that
// space. It is the Grassmannian ring extended by a degree-1 class u subject
// to u^2 = xu, so additively it splits as the u-free part in each degree plus
// u times the part one degree down, and every reduction is two Grassmannian
// reductions. Degrees run 0..2n-1.

#include "f2.hpp"
#include "grassmann.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace z2coh {

struct WMonomial {
    int x_exp = 0;
    int u_exp = 0;
    int y_exp = 0;
    int degree() const { return x_exp + u_exp + 2 * y_exp; }
    bool operator==(const WMonomial&) const = default;
};

// u^j = x^{j-1} u for j > 0; canonical monomials have u exponent 0 or 1.
inline WMonomial normalize(WMonomial m) {
    if (m.u_exp > 1) {
        m.x_exp += m.u_exp - 1;
        m.u_exp = 1;
    }
    return m;
}

inline WMonomial operator*(const WMonomial& a, const WMonomial& b) {
    return normalize({a.x_exp + b.x_exp, a.u_exp + b.u_exp, a.y_exp + b.y_exp});
}

inline std::string to_string(const WMonomial& m) {
    std::string s;
    auto factor = [&s](const char* g, int e) {
        if (e == 0) return;
        if (!s.empty()) s += ' ';
        s += g;
        if (e != 1) s += '^' + std::to_string(e);
    };
    factor("x", m.x_exp);
    factor("u", m.u_exp);
    factor("y", m.y_exp);
    return s.empty() ? "1" : s;
}

// Canonical monomials of one degree: the u-free block (indexed by y exponent)
// followed by the u-divisible block.
inline int w_monomial_count(int degree) {
    return g_monomial_count(degree) + g_monomial_count(degree - 1);
}
inline WMonomial w_monomial_at(int degree, int index) {
    const int ufree = g_monomial_count(degree);
    if (index < ufree) return {degree - 2 * index, 0, index};
    const int j = index - ufree;
    return {degree - 1 - 2 * j, 1, j};
}
inline int w_monomial_index(const WMonomial& m) {
    return m.u_exp == 0 ? m.y_exp : g_monomial_count(m.degree()) + m.y_exp;
}

// A homogeneous element written over canonical monomials of its degree.
struct WClass {
    int degree = 0;
    f2::BitVec coeffs;
    bool is_zero() const { return coeffs.none(); }
    bool operator==(const WClass&) const = default;
};

inline WClass w_zero(int degree) { return {degree, f2::BitVec(w_monomial_count(degree))}; }

inline WClass w_class(int degree, std::initializer_list<WMonomial> monomials) {
    WClass c = w_zero(degree);
    for (const auto& m : monomials) c.coeffs.flip(w_monomial_index(normalize(m)));
    return c;
}

// A homogeneous element written over the quotient basis of its degree.
struct WReduced {
    int degree = 0;
    f2::BitVec coords;
    bool is_zero() const { return coords.none(); }
    bool operator==(const WReduced&) const = default;
};

// Product in the ambient u-ruled polynomial ring (no quotient applied);
// defined for every degree.
inline WClass multiply_ambient(const WClass& a, const WClass& b) {
    WClass out = w_zero(a.degree + b.degree);
    a.coeffs.for_each_set([&](std::size_t i) {
        const WMonomial ma = w_monomial_at(a.degree, static_cast<int>(i));
        b.coeffs.for_each_set([&](std::size_t j) {
            const WMonomial mb = w_monomial_at(b.degree, static_cast<int>(j));
            out.coeffs.flip(w_monomial_index(ma * mb));
        });
    });
    return out;
}

// Total Steenrod square of an ambient class, returned by excess: entry k is
// the degree-(deg + k) component. On a canonical monomial x^a u^e y^b the
// total square is the monomial times (1+x)^{a+e} (1+x+y)^b, since x and u
// square to x^2 and xu while y maps to y + xy + y^2.
inline std::vector<WClass> total_square_ambient(const WClass& c) {
    std::vector<WClass> out;
    out.reserve(c.degree + 1);
    for (int k = 0; k <= c.degree; ++k) out.push_back(w_zero(c.degree + k));
    c.coeffs.for_each_set([&](std::size_t idx) {
        const WMonomial m = w_monomial_at(c.degree, static_cast<int>(idx));
        const int a = m.x_exp, e = m.u_exp, b = m.y_exp;
        for (int i = 0; i <= a + e; ++i) {
            if (!f2::binom_odd(a + e, i)) continue;
            for (int j = 0; j <= b; ++j) {
                if (!f2::binom_odd(b, j)) continue;
                for (int l = 0; l <= j; ++l) {
                    if (!f2::binom_odd(j, l)) continue;
                    const int k = i + 2 * j - l;
                    out[k].coeffs.flip(w_monomial_index({a + i + l, e, b + j - l}));
                }
            }
        }
    });
    return out;
}

class WRing {
public:
    explicit WRing(int n) : grass_(n) {}
    explicit WRing(GrassContext grass) : grass_(std::move(grass)) {}

    const GrassContext& grass() const { return grass_; }
    int n() const { return grass_.n(); }
    int top_degree() const { return 2 * n() - 1; }

    int dim(int degree) const { return grass_.dim(degree) + grass_.dim(degree - 1); }

    WMonomial basis_monomial(int degree, int index) const {
        const int ufree = grass_.dim(degree);
        if (index < ufree) {
            const GMonomial g = grass_.basis(degree)[index];
            return {g.x_exp, 0, g.y_exp};
        }
        const GMonomial g = grass_.basis(degree - 1)[index - ufree];
        return {g.x_exp, 1, g.y_exp};
    }

    WReduced reduce(const WClass& c) const {
        const int d = c.degree;
        WReduced out{d, f2::BitVec(dim(d))};
        if (d < 0 || d > top_degree()) return out;
        f2::BitVec ufree(g_monomial_count(d));
        f2::BitVec upart(g_monomial_count(d - 1));
        const int split = g_monomial_count(d);
        c.coeffs.for_each_set([&](std::size_t i) {
            if (static_cast<int>(i) < split)
                ufree.flip(i);
            else
                upart.flip(i - split);
        });
        const f2::BitVec r0 = grass_.reduce(d, ufree);
        const f2::BitVec r1 = grass_.reduce(d - 1, upart);
        const std::size_t off = r0.size();
        r0.for_each_set([&](std::size_t i) { out.coords.set(i); });
        r1.for_each_set([&](std::size_t i) { out.coords.set(off + i); });
        return out;
    }

    WReduced reduce_monomial(WMonomial m) const {
        m = normalize(m);
        WClass c = w_zero(m.degree());
        c.coeffs.flip(w_monomial_index(m));
        return reduce(c);
    }

    WClass lift(const WReduced& r) const {
        WClass c = w_zero(r.degree);
        r.coords.for_each_set([&](std::size_t i) {
            c.coeffs.flip(w_monomial_index(basis_monomial(r.degree, static_cast<int>(i))));
        });
        return c;
    }

    WReduced multiply(const WReduced& a, const WReduced& b) const {
        const int d = a.degree + b.degree;
        if (d > top_degree()) return {d, f2::BitVec(0)};
        return reduce(multiply_ambient(lift(a), lift(b)));
    }

    WReduced multiply_monomial(const WReduced& a, const WMonomial& m) const {
        WClass mm = w_zero(normalize(m).degree());
        mm.coeffs.flip(w_monomial_index(normalize(m)));
        const int d = a.degree + mm.degree;
        if (d > top_degree()) return {d, f2::BitVec(0)};
        return reduce(multiply_ambient(lift(a), mm));
    }

    // Components Sq^k of a reduced class, k = 0..degree, reduced again.
    std::vector<WReduced> total_square(const WReduced& r) const {
        std::vector<WReduced> out;
        const auto ambient = total_square_ambient(lift(r));
        out.reserve(ambient.size());
        for (const auto& component : ambient) out.push_back(reduce(component));
        return out;
    }

    // The top group H^{2n-1} is one-dimensional; its nonzero canonical
    // monomials are x^{2^t - 2} u y^{n - 2^{t-1}} for 1 <= t with 2^{t-1} <= n,
    // all representing the same class.
    std::vector<WMonomial> top_family() const {
        std::vector<WMonomial> family;
        for (int t = 1; (1 << (t - 1)) <= n(); ++t)
            family.push_back({(1 << t) - 2, 1, n() - (1 << (t - 1))});
        return family;
    }

    bool top_monomial_nonzero(const WMonomial& raw) const {
        const WMonomial m = normalize(raw);
        if (m.degree() != top_degree() || m.u_exp != 1) return false;
        return is_two_power(m.x_exp + 2) && m.y_exp == n() - (m.x_exp + 2) / 2;
    }

    // Sq^1 on the next-to-top degree must be multiplication by (n mod 2) x.
    bool wu_top_check() const {
        const int d = top_degree() - 1;
        for (int i = 0; i < dim(d); ++i) {
            WReduced z{d, f2::BitVec(dim(d))};
            z.coords.set(i);
            const WReduced sq1 = total_square(z)[1];
            WReduced expected{top_degree(), f2::BitVec(dim(top_degree()))};
            if (n() % 2 == 1) expected = multiply_monomial(z, {1, 0, 0});
            if (!(sq1 == expected)) return false;
        }
        return true;
    }

private:
    GrassContext grass_;
};

}  // namespace z2coh
