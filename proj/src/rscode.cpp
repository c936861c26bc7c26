#include "polyqd/rscode.hpp"

#include <algorithm>
#include <numeric>

namespace polyqd::rscode {

std::vector<Elem> SymMatrix::mul_left(const FieldCtx& f, std::span<const Elem> x) const {
    if (int(x.size()) != rows_) throw parameter_error("rscode: vector length mismatch");
    std::vector<Elem> y(cols_, 0);
    for (int r = 0; r < rows_; ++r) {
        if (x[r] == 0) continue;
        for (int c = 0; c < cols_; ++c)
            y[c] ^= f.mul(x[r], at(r, c));
    }
    return y;
}

std::vector<Elem> default_gamma(const FieldCtx& f, int m) {
    if (m > int(f.order())) throw parameter_error("rscode: m exceeds field size");
    std::vector<Elem> g(m);
    for (int i = 0; i < m; ++i) g[i] = Elem(i);
    return g;
}

namespace {

// n x n F2 block of multiplication by h in the canonical basis. Generator
// orientation (row-vector convention, msg * M): block[j][l] = coeff_l(x^j h),
// so rows of the image are expansions of codewords. Syndrome orientation
// (M * word^T): block[t][l] = coeff_t(x^l h), so a row dotted with the bit
// expansion of a word accumulates one output coefficient.
enum class Orient { generator, syndrome };

void fill_mul_block(const FieldCtx& f, Elem h, bitmat::BitMatrix& dst, int row0, int col0,
                    Orient orient) {
    int n = f.n();
    for (int j = 0; j < n; ++j) {
        Elem w = f.mul(Elem(1) << j, h);
        for (int l = 0; l < n; ++l) {
            if (!((w >> l) & 1)) continue;
            if (orient == Orient::generator) dst.set(row0 + j, col0 + l, 1);
            else dst.set(row0 + l, col0 + j, 1);
        }
    }
}

bitmat::BitMatrix binary_image(const FieldCtx& f, const SymMatrix& M, Orient orient) {
    int n = f.n();
    bitmat::BitMatrix out(M.rows() * n, M.cols() * n);
    for (int r = 0; r < M.rows(); ++r)
        for (int c = 0; c < M.cols(); ++c)
            if (M.at(r, c) != 0) fill_mul_block(f, M.at(r, c), out, r * n, c * n, orient);
    return out;
}

// Row reduce G to [I | P] on the leading k columns, permuting symbol
// columns only if a leading minor is singular (never for MDS inputs).
void systematic_form(const FieldCtx& f, const SymMatrix& G, SymMatrix& P,
                     std::vector<int>& perm, bool& permuted) {
    int k = G.rows(), m = G.cols();
    SymMatrix A = G;
    perm.resize(m);
    std::iota(perm.begin(), perm.end(), 0);
    permuted = false;

    for (int col = 0; col < k; ++col) {
        int pr = -1;
        for (int r = col; r < k; ++r)
            if (A.at(r, col) != 0) { pr = r; break; }
        if (pr < 0) {
            int pc = -1;
            for (int c = col + 1; c < m && pc < 0; ++c)
                for (int r = col; r < k; ++r)
                    if (A.at(r, c) != 0) { pc = c; pr = r; break; }
            if (pc < 0) throw parameter_error("rscode: generator matrix is rank deficient");
            for (int r = 0; r < k; ++r) std::swap(A.at(r, col), A.at(r, pc));
            std::swap(perm[col], perm[pc]);
            permuted = true;
        }
        if (pr != col)
            for (int c = 0; c < m; ++c) std::swap(A.at(col, c), A.at(pr, c));
        Elem piv_inv = f.inv(A.at(col, col));
        for (int c = 0; c < m; ++c) A.at(col, c) = f.mul(A.at(col, c), piv_inv);
        for (int r = 0; r < k; ++r) {
            if (r == col || A.at(r, col) == 0) continue;
            Elem factor = A.at(r, col);
            for (int c = 0; c < m; ++c)
                A.at(r, c) ^= f.mul(factor, A.at(col, c));
        }
    }
    P = SymMatrix(k, m - k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < m - k; ++c)
            P.at(r, c) = A.at(r, k + c);
}

}  // namespace

CodePair build_codes(FieldPtr ctx, int m, int k_dual, std::vector<Elem> gamma) {
    const FieldCtx& f = *ctx;
    if (m < 2 || m > int(f.order()))
        throw parameter_error("rscode: need 2 <= m <= 2^n evaluation points");
    if (k_dual < 1 || k_dual >= m)
        throw parameter_error("rscode: need 1 <= k_dual < m");
    if (int(gamma.size()) != m) throw parameter_error("rscode: gamma length mismatch");
    {
        auto s = gamma;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw parameter_error("rscode: repeated evaluation point");
    }

    CodePair cp;
    cp.ctx = std::move(ctx);
    cp.m = m;
    cp.k_dual = k_dual;
    cp.k_primal = m - k_dual;
    cp.gamma = std::move(gamma);

    // H: Vandermonde rows gamma_i^j generate the RS code C_perp.
    cp.H = SymMatrix(k_dual, m);
    for (int j = 0; j < k_dual; ++j)
        for (int i = 0; i < m; ++i)
            cp.H.at(j, i) = f.pow(cp.gamma[i], j);

    // Dual multipliers v_i = prod_{j != i} (gamma_i - gamma_j)^{-1} make
    // G generate C = (C_perp)^perp as a GRS code.
    cp.v.resize(m);
    for (int i = 0; i < m; ++i) {
        Elem prod = 1;
        for (int j = 0; j < m; ++j)
            if (j != i) prod = f.mul(prod, cp.gamma[i] ^ cp.gamma[j]);
        cp.v[i] = f.inv(prod);
    }
    cp.G = SymMatrix(cp.k_primal, m);
    for (int r = 0; r < cp.k_primal; ++r)
        for (int i = 0; i < m; ++i)
            cp.G.at(r, i) = f.mul(cp.v[i], f.pow(cp.gamma[i], r));

    systematic_form(f, cp.G, cp.P, cp.sys_perm, cp.permuted);

    cp.G_bar = binary_image(f, cp.G, Orient::generator);
    cp.H_bar = binary_image(f, cp.H, Orient::syndrome);
    cp.R = binary_image(f, cp.P, Orient::generator);
    return cp;
}

std::vector<Elem> encode_dual(const CodePair& code, std::span<const Elem> msg) {
    if (int(msg.size()) != code.k_dual) throw parameter_error("rscode: dual message length mismatch");
    return code.H.mul_left(*code.ctx, msg);
}

std::vector<Elem> encode_primal(const CodePair& code, std::span<const Elem> msg) {
    if (int(msg.size()) != code.k_primal) throw parameter_error("rscode: primal message length mismatch");
    return code.G.mul_left(*code.ctx, msg);
}

bool is_codeword(const CodePair& code, std::span<const Elem> y, Which which) {
    if (int(y.size()) != code.m) throw parameter_error("rscode: word length mismatch");
    const FieldCtx& f = *code.ctx;
    // y is in a code iff it is orthogonal to every generator row of the
    // dual: C is checked against H, C_perp against G.
    const SymMatrix& rows = (which == Which::primal) ? code.H : code.G;
    for (int r = 0; r < rows.rows(); ++r) {
        Elem acc = 0;
        for (int i = 0; i < code.m; ++i) acc ^= f.mul(rows.at(r, i), y[i]);
        if (acc != 0) return false;
    }
    return true;
}

int hamming_weight_ext(std::span<const Elem> y) {
    int w = 0;
    for (Elem s : y) w += (s != 0);
    return w;
}

int hamming_distance_ext(std::span<const Elem> a, std::span<const Elem> b) {
    if (a.size() != b.size()) throw parameter_error("rscode: length mismatch");
    int w = 0;
    for (std::size_t i = 0; i < a.size(); ++i) w += (a[i] != b[i]);
    return w;
}

bitmat::BitVec expand_bits(const CodePair& code, std::span<const Elem> y) {
    int n = code.ctx->n();
    bitmat::BitVec out(code.m * n);
    for (int i = 0; i < code.m; ++i)
        for (int j = 0; j < n; ++j)
            if ((y[i] >> j) & 1) out.set(i * n + j, 1);
    return out;
}

std::vector<Elem> collapse_bits(const CodePair& code, const bitmat::BitVec& bits) {
    int n = code.ctx->n();
    if (bits.size() != code.m * n) throw parameter_error("rscode: bit vector length mismatch");
    std::vector<Elem> y(code.m, 0);
    for (int i = 0; i < code.m; ++i)
        for (int j = 0; j < n; ++j)
            if (bits.get(i * n + j)) y[i] |= Elem(1) << j;
    return y;
}

namespace {
std::vector<Elem> codeword_from_index(const CodePair& code, const SymMatrix& gen, std::uint64_t idx) {
    int k = gen.rows();
    std::uint32_t q = code.ctx->order();
    std::vector<Elem> msg(k);
    for (int i = 0; i < k; ++i) {
        msg[i] = Elem(idx % q);
        idx /= q;
    }
    return gen.mul_left(*code.ctx, msg);
}
}  // namespace

std::vector<Elem> dual_codeword(const CodePair& code, std::uint64_t idx) {
    return codeword_from_index(code, code.H, idx);
}

std::vector<Elem> primal_codeword(const CodePair& code, std::uint64_t idx) {
    return codeword_from_index(code, code.G, idx);
}

}  // namespace polyqd::rscode
