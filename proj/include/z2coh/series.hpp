#pragma once

// Truncated formal series over GF(2) in the generators x, u, y with the
// rewriting rule u^2 = xu already applied, one packed coefficient vector per
// degree. Inversion needs constant term 1; integer powers accept negative
// exponents via inversion. This is the expansion engine behind the total
// Stiefel-Whitney series.

#include "f2.hpp"
#include "wring.hpp"

#include <stdexcept>
#include <vector>

namespace z2coh {

class XuySeries {
public:
    explicit XuySeries(int cutoff) : cutoff_(cutoff) {
        if (cutoff < 0) throw std::invalid_argument("XuySeries: cutoff must be >= 0");
        components_.reserve(cutoff + 1);
        for (int d = 0; d <= cutoff; ++d) components_.emplace_back(w_monomial_count(d));
    }

    static XuySeries one(int cutoff) {
        XuySeries s(cutoff);
        s.components_[0].set(0);
        return s;
    }

    static XuySeries from_monomials(int cutoff, std::initializer_list<WMonomial> monomials) {
        XuySeries s(cutoff);
        for (const auto& raw : monomials) {
            const WMonomial m = normalize(raw);
            if (m.degree() <= cutoff) s.components_[m.degree()].flip(w_monomial_index(m));
        }
        return s;
    }

    int cutoff() const { return cutoff_; }
    const f2::BitVec& component(int degree) const { return components_[degree]; }
    WClass component_class(int degree) const { return {degree, components_[degree]}; }

    bool operator==(const XuySeries&) const = default;

    XuySeries operator+(const XuySeries& other) const {
        check_cutoff(other);
        XuySeries out = *this;
        for (int d = 0; d <= cutoff_; ++d) out.components_[d] ^= other.components_[d];
        return out;
    }

    XuySeries operator*(const XuySeries& other) const {
        check_cutoff(other);
        XuySeries out(cutoff_);
        for (int d1 = 0; d1 <= cutoff_; ++d1) {
            if (components_[d1].none()) continue;
            for (int d2 = 0; d1 + d2 <= cutoff_; ++d2)
                convolve(components_[d1], d1, other.components_[d2], d2, out.components_[d1 + d2]);
        }
        return out;
    }

    XuySeries inverse() const {
        if (!components_[0].test(0) || components_[0].count() != 1)
            throw std::invalid_argument("XuySeries::inverse: constant term must be 1");
        XuySeries inv(cutoff_);
        inv.components_[0].set(0);
        for (int d = 1; d <= cutoff_; ++d)
            for (int i = 1; i <= d; ++i)
                convolve(components_[i], i, inv.components_[d - i], d - i, inv.components_[d]);
        return inv;
    }

    XuySeries pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        XuySeries acc = one(cutoff_);
        XuySeries base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

private:
    int cutoff_;
    std::vector<f2::BitVec> components_;

    void check_cutoff(const XuySeries& other) const {
        if (other.cutoff_ != cutoff_)
            throw std::invalid_argument("XuySeries: cutoff mismatch");
    }

    static void convolve(const f2::BitVec& a, int da, const f2::BitVec& b, int db,
                         f2::BitVec& target) {
        a.for_each_set([&](std::size_t i) {
            const WMonomial ma = w_monomial_at(da, static_cast<int>(i));
            b.for_each_set([&](std::size_t j) {
                target.flip(w_monomial_index(ma * w_monomial_at(db, static_cast<int>(j))));
            });
        });
    }
};

}  // namespace z2coh
