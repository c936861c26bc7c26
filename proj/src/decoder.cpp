#include "polyqd/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace polyqd::decoder {

using gf2e::FieldCtx;

namespace {

std::uint64_t isqrt(std::uint64_t v) {
    std::uint64_t r = std::uint64_t(std::sqrt(double(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// ----- Guruswami-Sudan internals -----------------------------------------
//
// Q(X, Y) = sum_b coef[b](X) * Y^b with coef[b] an X-coefficient vector.
using XPoly = std::vector<Elem>;
using BivarPoly = std::vector<XPoly>;

bool bivar_is_zero(const BivarPoly& q) {
    for (const auto& c : q)
        for (Elem e : c)
            if (e) return false;
    return true;
}

// C(a, b) mod 2 via Lucas.
bool binom_odd(int a, int b) { return (a & b) == b; }

struct Monomial {
    int a, b;  // X^a Y^b
};

std::vector<Monomial> monomial_basis(int k, int D, int ycap) {
    std::vector<Monomial> monos;
    for (int b = 0; b <= ycap; ++b) {
        int wy = b * (k - 1);
        if (wy > D) break;
        for (int a = 0; a + wy <= D; ++a) monos.push_back({a, b});
    }
    return monos;
}

// Nonzero Q vanishing at every (gamma_i, z_i) with multiplicity r, built
// from a nullspace vector of the Hasse-derivative constraint system.
// Empty result signals rank deficiency (no nonzero kernel found).
BivarPoly interpolate(const FieldCtx& f, std::span<const Elem> gamma, std::span<const Elem> z,
                      int r, const std::vector<Monomial>& monos) {
    int m = int(gamma.size());
    int ncols = int(monos.size());
    int nrows = m * r * (r + 1) / 2;

    // Row-major constraint matrix over GF(2^n).
    std::vector<Elem> A(std::size_t(nrows) * ncols, 0);
    int row = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < r; ++j) {
            for (int l = 0; l + j < r; ++l) {
                Elem* arow = &A[std::size_t(row) * ncols];
                for (int c = 0; c < ncols; ++c) {
                    int a = monos[c].a, b = monos[c].b;
                    if (a < j || b < l) continue;
                    if (!binom_odd(a, j) || !binom_odd(b, l)) continue;
                    arow[c] = f.mul(f.pow(gamma[i], a - j), f.pow(z[i], b - l));
                }
                ++row;
            }
        }
    }

    // Gaussian elimination to find one nonzero kernel vector.
    std::vector<int> pivot_of_col(ncols, -1);
    int rank = 0;
    for (int c = 0; c < ncols && rank < nrows; ++c) {
        int pr = -1;
        for (int rr = rank; rr < nrows; ++rr)
            if (A[std::size_t(rr) * ncols + c] != 0) { pr = rr; break; }
        if (pr < 0) continue;
        for (int cc = 0; cc < ncols; ++cc)
            std::swap(A[std::size_t(rank) * ncols + cc], A[std::size_t(pr) * ncols + cc]);
        Elem inv = f.inv(A[std::size_t(rank) * ncols + c]);
        for (int cc = 0; cc < ncols; ++cc)
            A[std::size_t(rank) * ncols + cc] = f.mul(A[std::size_t(rank) * ncols + cc], inv);
        for (int rr = 0; rr < nrows; ++rr) {
            if (rr == rank) continue;
            Elem factor = A[std::size_t(rr) * ncols + c];
            if (factor == 0) continue;
            for (int cc = 0; cc < ncols; ++cc)
                A[std::size_t(rr) * ncols + cc] ^= f.mul(factor, A[std::size_t(rank) * ncols + cc]);
        }
        pivot_of_col[c] = rank;
        ++rank;
    }
    int free_col = -1;
    for (int c = 0; c < ncols; ++c)
        if (pivot_of_col[c] < 0) { free_col = c; break; }
    if (free_col < 0) return {};

    std::vector<Elem> sol(ncols, 0);
    sol[free_col] = 1;
    for (int c = 0; c < ncols; ++c) {
        int p = pivot_of_col[c];
        if (p >= 0) sol[c] = A[std::size_t(p) * ncols + free_col];
    }

    int max_b = 0;
    for (const auto& mo : monos) max_b = std::max(max_b, mo.b);
    BivarPoly q(max_b + 1);
    for (int c = 0; c < ncols; ++c) {
        if (sol[c] == 0) continue;
        auto& xp = q[monos[c].b];
        if (int(xp.size()) <= monos[c].a) xp.resize(monos[c].a + 1, 0);
        xp[monos[c].a] = sol[c];
    }
    return q;
}

// Divide out the largest power of X dividing every coefficient.
void strip_x(BivarPoly& q) {
    int s = -1;
    for (const auto& c : q) {
        for (int a = 0; a < int(c.size()); ++a) {
            if (c[a] != 0) {
                if (s < 0 || a < s) s = a;
                break;
            }
        }
    }
    if (s <= 0) return;
    for (auto& c : q) {
        if (c.empty()) continue;
        c.erase(c.begin(), c.begin() + std::min<std::size_t>(s, c.size()));
    }
}

// Q(X, X*Y + y0).
BivarPoly substitute(const FieldCtx& f, const BivarPoly& q, Elem y0) {
    int degy = int(q.size()) - 1;
    BivarPoly out(q.size());
    for (int j = 0; j <= degy; ++j) {
        XPoly acc;  // sum over b >= j with C(b, j) odd of q[b] * y0^{b-j}
        for (int b = j; b <= degy; ++b) {
            if (!binom_odd(b, j)) continue;
            Elem scale = f.pow(y0, b - j);
            if (scale == 0 && b != j) continue;
            if (int(acc.size()) < int(q[b].size())) acc.resize(q[b].size(), 0);
            for (int a = 0; a < int(q[b].size()); ++a)
                acc[a] ^= f.mul(q[b][a], scale);
        }
        // Multiply by X^j.
        out[j].assign(j, 0);
        out[j].insert(out[j].end(), acc.begin(), acc.end());
    }
    return out;
}

void y_roots_of_constant_slice(const FieldCtx& f, const BivarPoly& q, std::vector<Elem>& roots) {
    roots.clear();
    std::vector<Elem> uni(q.size(), 0);
    for (std::size_t b = 0; b < q.size(); ++b)
        if (!q[b].empty()) uni[b] = q[b][0];
    for (Elem y = 0; y < f.order(); ++y) {
        Elem acc = 0;
        for (std::size_t b = uni.size(); b-- > 0;) acc = f.mul(acc, y) ^ uni[b];
        if (acc == 0) roots.push_back(y);
    }
}

// Roth-Ruckenstein: all message vectors (f_0 .. f_{k-1}) whose polynomial
// f can satisfy Q(X, f(X)) = 0; spurious paths are removed by the distance
// filter in the caller.
void rr_search(const FieldCtx& f, BivarPoly q, int depth, int k, std::vector<Elem>& path,
               std::vector<std::vector<Elem>>& out) {
    if (depth == k) {
        out.push_back(path);
        return;
    }
    strip_x(q);
    std::vector<Elem> roots;
    y_roots_of_constant_slice(f, q, roots);
    for (Elem y0 : roots) {
        path.push_back(y0);
        rr_search(f, substitute(f, q, y0), depth + 1, k, path, out);
        path.pop_back();
    }
}

}  // namespace

int gs_radius(int m, int k) {
    // e < m - sqrt(km)  <=>  (m - e)^2 > km; the smallest admissible
    // agreement is t = floor(sqrt(km)) + 1.
    std::uint64_t t = isqrt(std::uint64_t(k) * std::uint64_t(m)) + 1;
    return m - int(t);
}

std::vector<std::vector<Elem>> list_decode_bruteforce(const CodePair& code,
                                                      std::span<const Elem> z, int radius) {
    if (int(z.size()) != code.m) throw parameter_error("decoder: word length mismatch");
    int n = code.ctx->n();
    if (n * code.k_dual > 20)
        throw capability_error("decoder: brute-force list decoding capped at |C_perp| <= 2^20");
    std::vector<std::vector<Elem>> out;
    std::uint64_t count = std::uint64_t(1) << (n * code.k_dual);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        auto cw = rscode::dual_codeword(code, idx);
        if (rscode::hamming_distance_ext(cw, z) <= radius) out.push_back(std::move(cw));
    }
    return out;
}

std::vector<std::vector<Elem>> list_decode_gs(const CodePair& code, std::span<const Elem> z) {
    if (int(z.size()) != code.m) throw parameter_error("decoder: word length mismatch");
    const FieldCtx& f = *code.ctx;
    int m = code.m, k = code.k_dual;
    int t = int(isqrt(std::uint64_t(k) * std::uint64_t(m))) + 1;  // required agreement
    int radius = m - t;

    std::vector<std::vector<Elem>> found;
    bool interpolated = false;
    for (int r = 1; r <= 8 && !interpolated; ++r) {
        int constraints = m * r * (r + 1) / 2;
        int D = r * t - 1;
        int ycap = (k >= 2) ? D / (k - 1) : constraints / (D + 1) + 1;
        auto monos = monomial_basis(k, D, ycap);
        if (int(monos.size()) <= constraints) continue;  // multiplicity too small
        auto q = interpolate(f, code.gamma, z, r, monos);
        if (q.empty() || bivar_is_zero(q)) continue;  // rank deficient; retry higher r
        interpolated = true;
        std::vector<Elem> path;
        rr_search(f, std::move(q), 0, k, path, found);
    }
    if (!interpolated)
        throw std::runtime_error("decoder: Guruswami-Sudan interpolation failed at all multiplicities");

    // Keep exactly the codewords inside the guaranteed radius.
    std::vector<std::vector<Elem>> out;
    for (auto& msg : found) {
        auto cw = rscode::encode_dual(code, msg);
        if (rscode::hamming_distance_ext(cw, z) <= radius) out.push_back(std::move(cw));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool decode_precondition_ok(const CodePair& code, const Rational& eps) {
    return list_radius_covers_threshold(code.k_dual, code.m, eps);
}

DecodeOutcome decode(const CodePair& code, std::span<const Elem> z, const Rational& eps,
                     Backend backend) {
    if (!decode_precondition_ok(code, eps))
        throw parameter_error("decoder: (1/2+eps)m < m - sqrt(k_dual*m) violated for eps=" +
                              eps.str());
    std::vector<std::vector<Elem>> list;
    if (backend == Backend::gs) {
        list = list_decode_gs(code, z);
    } else {
        int radius = int((std::int64_t(eps.den + 2 * eps.num) * code.m) / (2 * eps.den));
        list = list_decode_bruteforce(code, z, radius);
    }
    const std::vector<Elem>* hit = nullptr;
    int hits = 0;
    for (const auto& cw : list) {
        if (within_weight_threshold(rscode::hamming_distance_ext(cw, z), code.m, eps)) {
            ++hits;
            hit = &cw;
        }
    }
    DecodeOutcome out;
    if (hits == 1) {
        out.codeword = *hit;
        out.unique_flag = true;
    } else {
        out.codeword.assign(code.m, 0);
        out.unique_flag = false;
    }
    return out;
}

}  // namespace polyqd::decoder
