#include "polyqd/bitmat.hpp"

namespace polyqd::bitmat {

BitVec BitMatrix::mul_left(const BitVec& x) const {
    if (x.size() != rows_) throw parameter_error("bitmat: vector length mismatch");
    BitVec y(cols_);
    for (int r = 0; r < rows_; ++r)
        if (x.get(r)) y.xor_in(row_[r]);
    return y;
}

BitMatrix BitMatrix::mul(const BitMatrix& o) const {
    if (cols_ != o.rows_) throw parameter_error("bitmat: dimension mismatch");
    BitMatrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k)
            if (row_[r].get(k)) out.row(r).xor_in(o.row(k));
    return out;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (row_[r].get(c)) out.set(c, r, 1);
    return out;
}

int BitMatrix::rank() const {
    std::vector<BitVec> rows = row_;
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (rows[r].get(c)) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < rows_; ++r)
            if (r != rank && rows[r].get(c)) rows[r].xor_in(rows[rank]);
        ++rank;
    }
    return rank;
}

std::optional<BitMatrix> BitMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    int n = rows_;
    std::vector<BitVec> a = row_;
    BitMatrix inv = identity(n);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (a[r].get(c)) { pivot = r; break; }
        if (pivot < 0) return std::nullopt;
        std::swap(a[c], a[pivot]);
        std::swap(inv.row(c), inv.row(pivot));
        for (int r = 0; r < n; ++r) {
            if (r != c && a[r].get(c)) {
                a[r].xor_in(a[c]);
                inv.row(r).xor_in(inv.row(c));
            }
        }
    }
    return inv;
}

std::optional<BitVec> solve_affine(BitMatrix aug) {
    int rows = aug.rows();
    int nvars = aug.cols() - 1;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < nvars && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (aug.row(r).get(c)) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(aug.row(rank), aug.row(pivot));
        for (int r = 0; r < rows; ++r)
            if (r != rank && aug.row(r).get(c)) aug.row(r).xor_in(aug.row(rank));
        pivot_col.push_back(c);
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (aug.row(r).get(nvars)) return std::nullopt;  // 0 = 1 row

    BitVec x(nvars);
    for (int r = 0; r < rank; ++r)
        if (aug.row(r).get(nvars)) x.set(pivot_col[r], 1);
    return x;
}

std::vector<BitVec> nullspace(const BitMatrix& m) {
    // Reduce the transposed system: kernel vectors v with m.row(r) . v = 0.
    int rows = m.rows(), cols = m.cols();
    std::vector<BitVec> a;
    a.reserve(rows);
    for (int r = 0; r < rows; ++r) a.push_back(m.row(r));

    std::vector<int> pivot_of_col(cols, -1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r].get(c)) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = 0; r < rows; ++r)
            if (r != rank && a[r].get(c)) a[r].xor_in(a[rank]);
        pivot_of_col[c] = rank;
        ++rank;
    }

    std::vector<BitVec> basis;
    for (int c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        BitVec v(cols);
        v.set(c, 1);
        for (int c2 = 0; c2 < cols; ++c2) {
            int p = pivot_of_col[c2];
            if (p >= 0 && a[p].get(c)) v.set(c2, 1);
        }
        basis.push_back(v);
    }
    return basis;
}

}  // namespace polyqd::bitmat
