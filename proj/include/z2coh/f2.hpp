#pragma once

// Exact linear algebra over the two-element field, plus binomial-coefficient
// parity. Vectors and matrices are bit-packed into 64-bit words; addition is
// XOR. Everything here is value-semantic and safe for concurrent reads.

#include <algorithm>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace z2coh::f2 {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n_bits)
        : n_bits_(n_bits), words_((n_bits + 63) / 64, 0u) {}

    std::size_t size() const { return n_bits_; }
    bool empty() const { return n_bits_ == 0; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool value = true) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    // Index of the lowest set bit, or npos when the vector is zero.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t first_set() const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi)
            if (words_[wi])
                return wi * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[wi]));
        return npos;
    }

    BitVec& operator^=(const BitVec& other) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] ^= other.words_[i];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    bool operator==(const BitVec&) const = default;

    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                const int b = __builtin_ctzll(w);
                fn(wi * 64 + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t n_bits_ = 0;
    std::vector<std::uint64_t> words_;
};

class BitMat {
public:
    BitMat() = default;
    BitMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BitVec& row(std::size_t i) { return data_[i]; }
    const BitVec& row(std::size_t i) const { return data_[i]; }

    bool get(std::size_t i, std::size_t j) const { return data_[i].test(j); }
    void set(std::size_t i, std::size_t j, bool v = true) { data_[i].set(j, v); }

    void append_row(BitVec v) {
        data_.push_back(std::move(v));
        ++rows_;
    }

    bool operator==(const BitMat&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVec> data_;
};

inline BitMat transpose(const BitMat& m) {
    BitMat t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        m.row(i).for_each_set([&](std::size_t j) { t.set(j, i); });
    return t;
}

struct Echelon {
    BitMat reduced;                 // reduced row-echelon form
    std::vector<std::size_t> pivots;  // pivot column per pivot row
    std::size_t rank = 0;
};

// Reduced row-echelon form with pivots chosen left to right. The row space is
// preserved; zero rows sink to the bottom.
inline Echelon row_reduce(BitMat m) {
    Echelon result;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t found = BitVec::npos;
        for (std::size_t r = pivot_row; r < m.rows(); ++r) {
            if (m.get(r, col)) {
                found = r;
                break;
            }
        }
        if (found == BitVec::npos) continue;
        std::swap(m.row(pivot_row), m.row(found));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != pivot_row && m.get(r, col)) m.row(r) ^= m.row(pivot_row);
        }
        result.pivots.push_back(col);
        ++pivot_row;
    }
    result.rank = pivot_row;
    result.reduced = std::move(m);
    return result;
}

inline std::size_t rank_of(const BitMat& m) { return row_reduce(m).rank; }

// C(a, b) mod 2. For a >= 0 this is Lucas's criterion: odd exactly when the
// binary digits of b are dominated by those of a. Negative upper index uses
// C(-m, b) = (-1)^b C(m+b-1, b), whose parity matches the coefficients of the
// power-series expansion of (1+t)^{-m} over GF(2).
inline bool binom_odd(long long a, long long b) {
    if (b < 0) return false;
    if (a >= 0) {
        if (b > a) return false;
        return ((a - b) & b) == 0;
    }
    const long long m = -a;
    return binom_odd(m + b - 1, b);
}

// The matrix with a 1 at (i, j), 1-based, exactly when i + j is a power of 2.
// Rows and columns are 0-based in the API, so entry (i, j) tests i + j + 2.
inline BitMat two_power_matrix(std::size_t m) {
    BitMat a(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t s = i + j + 2;
            if ((s & (s - 1)) == 0) a.set(i, j);
        }
    return a;
}

// det over GF(2) by elimination: 1 exactly when the matrix has full rank.
inline int det(const BitMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    return rank_of(m) == m.rows() ? 1 : 0;
}

inline int two_power_matrix_det(std::size_t m) {
    if (m == 0) throw std::invalid_argument("two_power_matrix_det: m must be >= 1");
    return det(two_power_matrix(m));
}

// One LU-style elimination pass without pivoting over A_{m_max}. Row k only
// ever receives additions of earlier rows, so the leading k-by-k minor of the
// partially eliminated matrix equals det(A_k); a zero diagonal entry at step k
// certifies det(A_k) = 0. Returns the first such k, or nullopt when every
// leading minor (hence every det(A_m), m <= m_max) equals 1.
inline std::optional<std::size_t> two_power_det_first_failure(std::size_t m_max) {
    BitMat a = two_power_matrix(m_max);
    for (std::size_t k = 0; k < m_max; ++k) {
        if (!a.get(k, k)) return k + 1;
        for (std::size_t r = k + 1; r < m_max; ++r)
            if (a.get(r, k)) a.row(r) ^= a.row(k);
    }
    return std::nullopt;
}

// Parity guard for y-exponent growth in the cup-length maximality argument:
// with 2^r <= d < 2^{r+1}, every j in the window (2^{r+1}-d-1, d-1] must make
// C(d+j, d) even. Out-of-window j are vacuous rather than failures.
enum class WindowCheck { vacuous, holds, fails };

inline WindowCheck binom_window_check(long long d, long long j) {
    if (d < 1) throw std::invalid_argument("binom_window_check: d must be >= 1");
    long long r = 0;
    while ((2LL << r) <= d) ++r;  // 2^r <= d < 2^{r+1}
    const long long lo = (2LL << r) - d - 1;
    if (j <= lo || j > d - 1) return WindowCheck::vacuous;
    return binom_odd(d + j, d) ? WindowCheck::fails : WindowCheck::holds;
}

}  // namespace z2coh::f2
