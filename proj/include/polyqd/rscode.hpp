#pragma once

#include <span>
#include <vector>

#include "polyqd/bitmat.hpp"
#include "polyqd/gf2e.hpp"

namespace polyqd::rscode {

using gf2e::Elem;
using gf2e::FieldCtx;
using gf2e::FieldPtr;

// Dense row-major matrix over GF(2^n). Row-vector convention: codeword =
// message * M.
class SymMatrix {
public:
    SymMatrix() = default;
    SymMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Elem at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }
    Elem& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }

    std::vector<Elem> mul_left(const FieldCtx& f, std::span<const Elem> x) const;

    bool operator==(const SymMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Elem> a_;
};

// The dual Reed-Solomon code C_perp of dimension k_dual together with its
// dual GRS code C of dimension m - k_dual, over GF(2^n), plus the binary
// images over F2 and the systematic block R with G_bar ~ [I | R].
struct CodePair {
    FieldPtr ctx;
    int m = 0;
    int k_dual = 0;                 // dim C_perp
    int k_primal = 0;               // dim C = m - k_dual
    std::vector<Elem> gamma;        // m distinct evaluation points
    std::vector<Elem> v;            // GRS column multipliers of C
    SymMatrix H;                    // k_dual x m, generates C_perp (RS rows gamma_i^j)
    SymMatrix G;                    // k_primal x m, generates C (rows v_i * gamma_i^r)
    SymMatrix P;                    // k_primal x k_dual: symbol systematic block, G_sys = [I | P]
    std::vector<int> sys_perm;      // symbol column j of the systematic form = original column sys_perm[j]
    bool permuted = false;          // true iff sys_perm is not the identity
    bitmat::BitMatrix G_bar;        // k_primal*n x m*n; rows span the bit expansions of C
    bitmat::BitMatrix H_bar;        // k_dual*n x m*n syndrome map: H_bar.row(r).dot(bits) = 0
                                    // for every r iff the word lies in C
    bitmat::BitMatrix R;            // k_primal*n x k_dual*n from G_bar_sys = [I | R]
};

CodePair build_codes(FieldPtr ctx, int m, int k_dual, std::vector<Elem> gamma);

// Default evaluation points: the field elements with integer codes 0..m-1.
std::vector<Elem> default_gamma(const FieldCtx& f, int m);

std::vector<Elem> encode_dual(const CodePair& code, std::span<const Elem> msg);    // len k_dual
std::vector<Elem> encode_primal(const CodePair& code, std::span<const Elem> msg);  // len k_primal

enum class Which { primal, dual };
bool is_codeword(const CodePair& code, std::span<const Elem> y, Which which);

// Number of nonzero GF(2^n) symbols.
int hamming_weight_ext(std::span<const Elem> y);
int hamming_distance_ext(std::span<const Elem> a, std::span<const Elem> b);

// Bit layout of symbol vectors: symbol i occupies bits [i*n, (i+1)*n),
// each symbol in canonical basis order (bit j = coefficient of x^j).
bitmat::BitVec expand_bits(const CodePair& code, std::span<const Elem> y);
std::vector<Elem> collapse_bits(const CodePair& code, const bitmat::BitVec& bits);

// Enumerate codewords by message index (message symbols are the base-2^n
// digits of idx, least significant digit = first message symbol).
std::vector<Elem> dual_codeword(const CodePair& code, std::uint64_t idx);
std::vector<Elem> primal_codeword(const CodePair& code, std::uint64_t idx);

}  // namespace polyqd::rscode
