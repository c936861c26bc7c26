#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "polyqd/common.hpp"

namespace polyqd::bitmat {

// Vector over F2, bit-packed into 64-bit words.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    int get(int i) const { return int((w_[i >> 6] >> (i & 63)) & 1); }
    void set(int i, int v) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(int i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void xor_in(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }

    int popcount() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }

    bool is_zero() const {
        for (auto x : w_) if (x) return false;
        return true;
    }

    int dot(const BitVec& o) const {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
        return std::popcount(acc) & 1;
    }

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

    std::uint64_t to_u64() const { return w_.empty() ? 0 : w_[0]; }
    static BitVec from_u64(int n, std::uint64_t bits) {
        BitVec v(n);
        for (int i = 0; i < n && i < 64; ++i) v.set(i, int((bits >> i) & 1));
        return v;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Dense matrix over F2 with bit-packed rows. Vectors multiply from the
// left (row-vector convention): y = x * M maps F2^rows -> F2^cols.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows, BitVec(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int get(int r, int c) const { return row_[r].get(c); }
    void set(int r, int c, int v) { row_[r].set(c, v); }
    BitVec& row(int r) { return row_[r]; }
    const BitVec& row(int r) const { return row_[r]; }

    static BitMatrix identity(int n) {
        BitMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    BitVec mul_left(const BitVec& x) const;     // x (len rows) -> x*M (len cols)
    BitMatrix mul(const BitMatrix& o) const;    // this(r x k) * o(k x c)
    BitMatrix transposed() const;
    int rank() const;
    std::optional<BitMatrix> inverse() const;   // square only

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && row_ == o.row_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<BitVec> row_;
};

// One solution of the affine system given by augmented rows [A | b]
// (last column is the right-hand side); free variables are set to 0.
// Returns nullopt when inconsistent.
std::optional<BitVec> solve_affine(BitMatrix augmented);

// Basis of { x : x * M^T = 0 }, i.e. the kernel of the map v -> M * v.
std::vector<BitVec> nullspace(const BitMatrix& m);

}  // namespace polyqd::bitmat
