#include "polyqd/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>

#include "polyqd/rng.hpp"

namespace polyqd::solvers {

using bitmat::BitMatrix;
using bitmat::BitVec;
using boolpoly::Mask;
using gf2e::Elem;

namespace {

void toggle(std::unordered_set<Mask>& s, Mask m) {
    auto it = s.find(m);
    if (it == s.end()) s.insert(m); else s.erase(it);
}

// Substitute affine forms (mask over out_nvars, constant) for each input
// variable of p and re-expand to ANF.
AnfPoly compose_affine(const AnfPoly& p, const std::vector<std::pair<Mask, int>>& forms,
                       int out_nvars) {
    if (int(forms.size()) != p.n_vars()) throw parameter_error("solvers: form count mismatch");
    std::unordered_set<Mask> acc;
    for (Mask mono : p.monomials()) {
        std::unordered_set<Mask> cur{Mask(0)};
        for (Mask rest = mono; rest && !cur.empty(); rest &= rest - 1) {
            int var = std::countr_zero(rest);
            auto [fmask, fconst] = forms[var];
            std::unordered_set<Mask> next;
            for (Mask s : cur) {
                for (Mask fb = fmask; fb; fb &= fb - 1)
                    toggle(next, s | (Mask(1) << std::countr_zero(fb)));
                if (fconst) toggle(next, s);
            }
            cur = std::move(next);
        }
        for (Mask s : cur) toggle(acc, s);
    }
    std::vector<Mask> monos(acc.begin(), acc.end());
    return AnfPoly(out_nvars, p.degree_bound(), std::move(monos));
}

}  // namespace

QuadNormalForm quad_normal_form(const AnfPoly& q) {
    if (q.degree() > 2) throw parameter_error("solvers: quad_normal_form requires degree <= 2");
    int n = q.n_vars();

    std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
    std::vector<int> lin(n, 0);
    int cst = 0;
    for (Mask mo : q.monomials()) {
        int pc = std::popcount(mo);
        if (pc == 0) {
            cst ^= 1;
        } else if (pc == 1) {
            lin[std::countr_zero(mo)] ^= 1;
        } else {
            int i = std::countr_zero(mo);
            int j = std::countr_zero(mo & (mo - 1));
            adj[i][j] ^= 1;
            adj[j][i] ^= 1;
        }
    }

    BitMatrix U = BitMatrix::identity(n);
    std::vector<char> active(n, 1);
    std::vector<std::pair<int, int>> pairs;

    for (;;) {
        int a = -1, b = -1;
        for (int i = 0; i < n && a < 0; ++i) {
            if (!active[i]) continue;
            for (int j = i + 1; j < n; ++j)
                if (active[j] && adj[i][j]) { a = i; b = j; break; }
        }
        if (a < 0) break;

        std::vector<int> na, nb;  // neighbors of b resp. a, excluding the pair
        for (int k = 0; k < n; ++k) {
            if (!active[k] || k == a || k == b) continue;
            if (adj[b][k]) na.push_back(k);
            if (adj[a][k]) nb.push_back(k);
        }
        // w_a w_b + w_a A + w_b B + rest = (w_a + B)(w_b + A) + A B + rest
        for (int k : nb) U.row(a).xor_in(U.row(k));
        for (int k : na) U.row(b).xor_in(U.row(k));
        for (int k = 0; k < n; ++k) {
            adj[a][k] = adj[k][a] = 0;
            adj[b][k] = adj[k][b] = 0;
        }
        for (int k : na) {
            for (int l : nb) {
                if (k == l) lin[k] ^= 1;  // squares collapse to linear terms
                else { adj[k][l] ^= 1; adj[l][k] ^= 1; }
            }
        }
        // Old w_a = w'_a + sum(B), old w_b = w'_b + sum(A).
        if (lin[a]) for (int k : nb) lin[k] ^= 1;
        if (lin[b]) for (int k : na) lin[k] ^= 1;
        pairs.emplace_back(a, b);
        active[a] = active[b] = 0;
    }

    int r = int(2 * pairs.size());
    std::vector<int> order;
    order.reserve(n);
    for (auto [a, b] : pairs) { order.push_back(a); order.push_back(b); }
    for (int k = 0; k < n; ++k)
        if (active[k]) order.push_back(k);

    QuadNormalForm nf;
    nf.n = n;
    nf.U = BitMatrix(n, n);
    nf.t = BitVec(n);
    nf.r = r;
    std::vector<int> linf(n, 0);
    for (int tpos = 0; tpos < n; ++tpos) {
        nf.U.row(tpos) = U.row(order[tpos]);
        linf[tpos] = lin[order[tpos]];
    }

    int arf = 0;
    for (std::size_t s = 0; s < pairs.size(); ++s) {
        int a2 = linf[2 * s], b2 = linf[2 * s + 1];
        // y0 y1 + a2 y0 + b2 y1 = (y0 + b2)(y1 + a2) + a2 b2
        nf.t.set(int(2 * s), b2);
        nf.t.set(int(2 * s + 1), a2);
        arf ^= a2 & b2;
        cst ^= a2 & b2;
        linf[2 * s] = linf[2 * s + 1] = 0;
    }
    nf.form_type = (r > 0 && arf) ? QuadNormalForm::FormType::type2
                                  : QuadNormalForm::FormType::type1;
    nf.residual_linear = BitVec(n);
    for (int tpos = r; tpos < n; ++tpos)
        if (linf[tpos]) nf.residual_linear.set(tpos, 1);
    nf.residual_const = cst;
    return nf;
}

AnfPoly canonical_poly(const QuadNormalForm& nf) {
    std::vector<Mask> monos;
    for (int s = 0; s + 1 < nf.r; s += 2) monos.push_back((Mask(1) << s) | (Mask(1) << (s + 1)));
    for (int i = 0; i < nf.n; ++i)
        if (nf.residual_linear.get(i)) monos.push_back(Mask(1) << i);
    if (nf.residual_const) monos.push_back(0);
    return AnfPoly(nf.n, 2, std::move(monos));
}

BitVec apply_transform(const QuadNormalForm& nf, const BitVec& x) {
    BitVec y(nf.n);
    for (int j = 0; j < nf.n; ++j) y.set(j, nf.U.row(j).dot(x) ^ nf.t.get(j));
    return y;
}

QuadSolveResult solve_quadratic(const Instance& inst, std::uint64_t seed, int retry_budget) {
    if (inst.params.d != 2) throw parameter_error("solvers: quadratic solver requires d = 2");
    int n = inst.params.n, m = inst.params.m;
    int nm = n * m;

    std::vector<QuadNormalForm> nf(m);
    std::vector<BitMatrix> uinv(m);
    for (int i = 0; i < m; ++i) {
        nf[i] = quad_normal_form(inst.polys[i]);
        auto inv = nf[i].U.inverse();
        if (!inv) throw std::logic_error("solvers: normal-form transform not invertible");
        uinv[i] = std::move(*inv);
    }

    // Parity equations rewritten in the y coordinates once: x_{i,l} =
    // <uinv_i.row(l), y_i + t_i>.
    const BitMatrix& hb = inst.code.H_bar;
    int prows = hb.rows();
    BitMatrix peq(prows, nm + 1);
    for (int rr = 0; rr < prows; ++rr) {
        int rhs = 0;
        for (int i = 0; i < m; ++i) {
            for (int jj = 0; jj < n; ++jj) {
                if (!hb.get(rr, i * n + jj)) continue;
                for (int l = 0; l < n; ++l)
                    if (uinv[i].get(jj, l)) peq.row(rr).flip(i * n + l);
                rhs ^= uinv[i].row(jj).dot(nf[i].t);
            }
        }
        peq.set(rr, nm, rhs);
    }

    Rng rng(seed);
    QuadSolveResult res;
    for (int attempt = 1; attempt <= retry_budget; ++attempt) {
        // Fix the second coordinate of every hyperbolic pair to a fresh bit.
        BitVec fixed_mask(nm), fixed_val(nm);
        std::vector<std::vector<int>> beta(m);
        for (int i = 0; i < m; ++i) {
            beta[i].resize(nf[i].r / 2);
            for (int s = 0; s < nf[i].r / 2; ++s) {
                int bit = rng.next_bit();
                beta[i][s] = bit;
                fixed_mask.set(i * n + 2 * s + 1, 1);
                fixed_val.set(i * n + 2 * s + 1, bit);
            }
        }

        std::vector<int> col_of(nm, -1);
        int ncols = 0;
        for (int pos = 0; pos < nm; ++pos)
            if (!fixed_mask.get(pos)) col_of[pos] = ncols++;

        BitMatrix sys(m + prows, ncols + 1);
        for (int i = 0; i < m; ++i) {
            // sum_s beta_s y_{2s} + residual_linear . y_tail = residual_const
            for (int s = 0; s < nf[i].r / 2; ++s)
                if (beta[i][s]) sys.set(i, col_of[i * n + 2 * s], 1);
            for (int l = 0; l < n; ++l)
                if (nf[i].residual_linear.get(l)) sys.set(i, col_of[i * n + l], 1);
            sys.set(i, ncols, nf[i].residual_const);
        }
        for (int rr = 0; rr < prows; ++rr) {
            int rhs = peq.get(rr, nm);
            for (int pos = 0; pos < nm; ++pos) {
                if (!peq.get(rr, pos)) continue;
                if (fixed_mask.get(pos)) rhs ^= fixed_val.get(pos);
                else sys.set(m + rr, col_of[pos], 1);
            }
            sys.set(m + rr, ncols, rhs);
        }

        auto sol = bitmat::solve_affine(std::move(sys));
        res.retries = attempt;
        if (!sol) continue;

        BitVec y(nm);
        for (int pos = 0; pos < nm; ++pos)
            y.set(pos, fixed_mask.get(pos) ? fixed_val.get(pos) : sol->get(col_of[pos]));
        Solution s;
        s.y = BitVec(nm);
        for (int i = 0; i < m; ++i) {
            BitVec yi(n);
            for (int l = 0; l < n; ++l) yi.set(l, y.get(i * n + l) ^ nf[i].t.get(l));
            for (int l = 0; l < n; ++l) s.y.set(i * n + l, uinv[i].row(l).dot(yi));
        }
        auto vr = instance::verify(inst, s);
        if (!vr.valid)
            throw std::logic_error("solvers: quadratic solver produced an invalid solution (" +
                                   vr.failed_constraint + ")");
        res.solved = true;
        res.sol = std::move(s);
        return res;
    }
    return res;
}

CombinatorialResult solve_combinatorial(const Instance& inst, std::uint64_t seed,
                                        std::uint64_t trial_budget) {
    int n = inst.params.n, m = inst.params.m;
    int k = inst.code.k_primal;
    if (n > 20) throw capability_error("solvers: root enumeration capped at n <= 20");
    const auto& perm = inst.code.sys_perm;

    std::vector<std::vector<std::uint32_t>> root_list(m);
    std::vector<std::vector<bool>> is_root(m, std::vector<bool>(std::size_t(1) << n, false));
    for (int i = 0; i < m; ++i) {
        root_list[i] = boolpoly::roots(inst.polys[i]);
        if (root_list[i].empty())
            throw parameter_error("solvers: combinatorial solver requires every block to have a root");
        for (auto rt : root_list[i]) is_root[i][rt] = true;
    }

    CombinatorialResult res;
    Rng rng(seed);
    std::vector<Elem> syms(m);
    for (std::uint64_t trial = 1; trial <= trial_budget; ++trial) {
        BitVec a(k * n);
        for (int c = 0; c < k; ++c) {
            const auto& rl = root_list[perm[c]];
            std::uint32_t root = rl[rng.next_below(rl.size())];
            for (int j = 0; j < n; ++j)
                if ((root >> j) & 1) a.set(c * n + j, 1);
        }
        BitVec b = inst.code.R.mul_left(a);
        bool ok = true;
        for (int c = k; c < m && ok; ++c) {
            Elem sym = 0;
            for (int j = 0; j < n; ++j)
                if (b.get((c - k) * n + j)) sym |= Elem(1) << j;
            ok = is_root[perm[c]][sym];
        }
        if (!ok) continue;

        for (int c = 0; c < m; ++c) {
            Elem sym = 0;
            for (int j = 0; j < n; ++j) {
                int bit = (c < k) ? a.get(c * n + j) : b.get((c - k) * n + j);
                if (bit) sym |= Elem(1) << j;
            }
            syms[perm[c]] = sym;
        }
        res.sol = instance::solution_from_symbols(inst, syms);
        auto vr = instance::verify(inst, res.sol);
        if (!vr.valid)
            throw std::logic_error("solvers: combinatorial solver produced an invalid solution (" +
                                   vr.failed_constraint + ")");
        res.solved = true;
        res.trials = trial;
        break;
    }
    if (!res.solved) res.trials = trial_budget;

    // Empirical image density of R restricted to V (the surjectivity
    // assumption is measured, not assumed).
    double vsize = 1.0;
    for (int c = 0; c < k; ++c) vsize *= double(root_list[perm[c]].size());
    int out_bits = inst.code.k_dual * n;
    if (vsize <= double(1 << 20) && out_bits <= 24) {
        std::vector<bool> image(std::size_t(1) << out_bits, false);
        std::vector<std::size_t> pos(k, 0);
        BitVec a(k * n);
        auto load = [&](int c) {
            std::uint32_t root = root_list[perm[c]][pos[c]];
            for (int j = 0; j < n; ++j) a.set(c * n + j, (root >> j) & 1);
        };
        for (int c = 0; c < k; ++c) load(c);
        for (;;) {
            BitVec b = inst.code.R.mul_left(a);
            image[b.to_u64() & ((std::uint64_t(1) << out_bits) - 1)] = true;
            int c = 0;
            while (c < k) {
                if (++pos[c] < root_list[perm[c]].size()) { load(c); break; }
                pos[c] = 0;
                load(c);
                ++c;
            }
            if (c == k) break;
        }
        std::size_t hits = 0;
        for (bool bit : image) hits += bit;
        res.vr_image_density = double(hits) / double(image.size());
    }
    return res;
}

ExhaustiveResult solve_exhaustive(const Instance& inst) {
    int n = inst.params.n, m = inst.params.m;
    int k = inst.code.k_primal;
    if (n * k > 24) throw capability_error("solvers: exhaustive scan capped at |C| <= 2^24");
    std::vector<std::vector<bool>> is_root(m, std::vector<bool>(std::size_t(1) << n, false));
    for (int i = 0; i < m; ++i)
        for (auto rt : boolpoly::roots(inst.polys[i])) is_root[i][rt] = true;

    ExhaustiveResult res;
    std::uint64_t total = std::uint64_t(1) << (n * k);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto cw = rscode::primal_codeword(inst.code, idx);
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) ok = is_root[i][cw[i]];
        if (!ok) continue;
        res.found = true;
        res.sol = instance::solution_from_symbols(inst, cw);
        return res;
    }
    return res;
}

int SpecializedSystem::n_vars() const {
    int s = 0;
    for (int b : block_sizes) s += b;
    return s;
}

SpecializedSystem specialize_system(const Instance& inst, const std::vector<int>& J,
                                    const BitVec& t_vals) {
    int n = inst.params.n, m = inst.params.m;
    int k = inst.code.k_primal;
    int kn = k * n;
    const auto& perm = inst.code.sys_perm;
    if (int(t_vals.size()) != int(J.size())) throw parameter_error("solvers: |t| must equal |J|");
    for (int pos : J)
        if (pos < 0 || pos >= kn) throw parameter_error("solvers: specialized position out of range");
    {
        auto s = J;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw parameter_error("solvers: repeated specialized position");
    }

    SpecializedSystem sys;
    sys.J = J;
    std::sort(sys.J.begin(), sys.J.end());
    sys.t_vals = BitVec(int(J.size()));
    {
        // Align values with the sorted order.
        std::vector<std::pair<int, int>> jt(J.size());
        for (std::size_t i = 0; i < J.size(); ++i) jt[i] = {J[i], t_vals.get(int(i))};
        std::sort(jt.begin(), jt.end());
        for (std::size_t i = 0; i < jt.size(); ++i) sys.t_vals.set(int(i), jt[i].second);
    }

    std::vector<int> fixed_val(kn, -1);  // -1 = free
    for (std::size_t i = 0; i < sys.J.size(); ++i) fixed_val[sys.J[i]] = sys.t_vals.get(int(i));

    sys.z_of_global.assign(kn, -1);
    int nz = 0;
    for (int pos = 0; pos < kn; ++pos)
        if (fixed_val[pos] < 0) sys.z_of_global[pos] = nz++;
    if (nz > 24) throw capability_error("solvers: specialized system capped at 24 variables");

    // Surviving blocks and their sizes.
    for (int c = 0; c < k; ++c) {
        int sz = 0;
        for (int l = 0; l < n; ++l) sz += (fixed_val[c * n + l] < 0);
        if (sz > 0) {
            ++sys.k_prime;
            sys.block_sizes.push_back(sz);
        }
    }
    sys.well_defined = (nz == m - k + sys.k_prime);

    // Block equations: substitute fixed bits into p_{perm[c]}.
    for (int c = 0; c < k; ++c) {
        bool has_free = false;
        for (int l = 0; l < n; ++l) has_free |= (fixed_val[c * n + l] < 0);
        if (!has_free) continue;
        std::vector<std::pair<Mask, int>> forms(n);
        for (int l = 0; l < n; ++l) {
            int fv = fixed_val[c * n + l];
            if (fv < 0) forms[l] = {Mask(1) << sys.z_of_global[c * n + l], 0};
            else forms[l] = {0, fv};
        }
        sys.equations.push_back(compose_affine(inst.polys[perm[c]], forms, nz));
    }

    // Mixed equations through the R blocks: x_l = sum_g y_g R[g][j*n + l].
    for (int c = k; c < m; ++c) {
        int j = c - k;
        std::vector<std::pair<Mask, int>> forms(n);
        BitMatrix S(nz, n), T(int(sys.J.size()), n);
        for (int l = 0; l < n; ++l) {
            Mask fmask = 0;
            int fconst = 0;
            for (int g = 0; g < kn; ++g) {
                if (!inst.code.R.get(g, j * n + l)) continue;
                if (fixed_val[g] < 0) {
                    fmask |= Mask(1) << sys.z_of_global[g];
                    S.set(sys.z_of_global[g], l, 1);
                } else {
                    fconst ^= fixed_val[g];
                }
            }
            forms[l] = {fmask, fconst};
        }
        int ti = 0;
        for (int pos : sys.J) {
            for (int l = 0; l < n; ++l) T.set(ti, l, inst.code.R.get(pos, j * n + l));
            ++ti;
        }
        sys.S.push_back(std::move(S));
        sys.T.push_back(std::move(T));
        sys.equations.push_back(compose_affine(inst.polys[perm[c]], forms, nz));
    }
    return sys;
}

SpecializationShape full_blocks_shape(int n, int m, int k_dual) {
    (void)m;
    if (n < 2) throw parameter_error("solvers: full-blocks strategy needs n >= 2");
    SpecializationShape sh;
    sh.k_prime = (k_dual + n - 2) / (n - 1);
    int last = k_dual + sh.k_prime - n * (sh.k_prime - 1);
    sh.block_sizes.assign(sh.k_prime - 1, n);
    sh.block_sizes.push_back(last);
    sh.n_eqs = sh.k_prime + k_dual;
    sh.n_vars = k_dual + sh.k_prime;
    return sh;
}

std::pair<std::vector<int>, BitVec> choose_specialization(const Instance& inst,
                                                          SpecializeStrategy strategy,
                                                          std::uint64_t seed) {
    int n = inst.params.n, m = inst.params.m;
    int k = inst.code.k_primal;
    const auto& perm = inst.code.sys_perm;
    Rng rng(seed);

    std::vector<int> free_in_block(k, 0);
    if (strategy == SpecializeStrategy::full_blocks) {
        auto sh = full_blocks_shape(n, m, inst.params.k_dual);
        if (sh.k_prime > k) throw parameter_error("solvers: full-blocks strategy infeasible");
        for (int c = 0; c < sh.k_prime; ++c) free_in_block[c] = sh.block_sizes[c];
    } else {
        int base = m / k, extra = m - base * k;
        if (base + 1 > n && extra > 0)
            throw parameter_error("solvers: even strategy infeasible for these parameters");
        for (int c = 0; c < k; ++c) free_in_block[c] = base + (c < extra ? 1 : 0);
    }

    std::vector<int> J;
    std::vector<int> vals;
    for (int c = 0; c < k; ++c) {
        int nfree = free_in_block[c];
        if (nfree >= n) continue;
        if (nfree == 0) {
            // Fully fixed block: pin to a root of its polynomial so the
            // dropped equation is satisfied.
            auto rl = boolpoly::roots(inst.polys[perm[c]]);
            if (rl.empty()) throw parameter_error("solvers: cannot fix a rootless block");
            std::uint32_t root = rl[rng.next_below(rl.size())];
            for (int l = 0; l < n; ++l) {
                J.push_back(c * n + l);
                vals.push_back(int((root >> l) & 1));
            }
        } else {
            for (int l = nfree; l < n; ++l) {
                J.push_back(c * n + l);
                vals.push_back(rng.next_bit());
            }
        }
    }
    BitVec t(int(J.size()));
    for (std::size_t i = 0; i < vals.size(); ++i) t.set(int(i), vals[i]);
    return {std::move(J), std::move(t)};
}

Solution lift_specialized_assignment(const Instance& inst, const SpecializedSystem& sys,
                                     const BitVec& z) {
    int n = inst.params.n, m = inst.params.m;
    int k = inst.code.k_primal;
    int kn = k * n;
    if (z.size() != sys.n_vars()) throw parameter_error("solvers: assignment length mismatch");

    BitVec y(kn);
    for (std::size_t i = 0; i < sys.J.size(); ++i) y.set(sys.J[i], sys.t_vals.get(int(i)));
    for (int pos = 0; pos < kn; ++pos)
        if (sys.z_of_global[pos] >= 0) y.set(pos, z.get(sys.z_of_global[pos]));

    BitVec b = inst.code.R.mul_left(y);
    const auto& perm = inst.code.sys_perm;
    std::vector<Elem> syms(m);
    for (int c = 0; c < m; ++c) {
        Elem sym = 0;
        for (int j = 0; j < n; ++j) {
            int bit = (c < k) ? y.get(c * n + j) : b.get((c - k) * n + j);
            if (bit) sym |= Elem(1) << j;
        }
        syms[perm[c]] = sym;
    }
    return instance::solution_from_symbols(inst, syms);
}

SubspaceReport subspace_degree_experiment(int n, int codim, std::uint64_t trials,
                                          std::uint64_t seed) {
    if (n < 1 || n > 16) throw parameter_error("solvers: subspace experiment capped at n <= 16");
    if (codim < 0 || codim > n) throw parameter_error("solvers: codimension must be in [0,n]");

    SubspaceReport rep;
    rep.n = n;
    rep.codim = codim;
    rep.trials = trials;
    int nf = n - codim;
    long long cubes = (nf >= 3) ? (std::int64_t(nf) * (nf - 1) * (nf - 2)) / 6 : 0;
    rep.predicted = std::pow(2.0, -double(cubes));

    Rng rng(seed);
    boolpoly::PolyDistribution dist{n, 3};
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        AnfPoly p = boolpoly::sample(dist, rng);
        if (p.degree() <= 2) ++rep.degree_le2_samples;

        if (codim == 0) {
            if (p.degree() <= 2) ++rep.drop_events;
            continue;
        }
        if (codim == n) {
            ++rep.drop_events;  // restriction to a point is a constant
            continue;
        }
        // Random codim x n constraint matrix of full rank, random rhs.
        BitMatrix A(codim, n);
        do {
            for (int r = 0; r < codim; ++r)
                for (int c = 0; c < n; ++c) A.set(r, c, rng.next_bit());
        } while (A.rank() != codim);
        BitMatrix aug(codim, n + 1);
        for (int r = 0; r < codim; ++r) {
            for (int c = 0; c < n; ++c) aug.set(r, c, A.get(r, c));
            aug.set(r, n, rng.next_bit());
        }
        auto x0 = bitmat::solve_affine(aug);
        if (!x0) throw std::logic_error("solvers: full-rank system reported inconsistent");
        auto basis = bitmat::nullspace(A);

        std::vector<std::pair<Mask, int>> forms(n);
        for (int i = 0; i < n; ++i) {
            Mask fm = 0;
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (basis[j].get(i)) fm |= Mask(1) << j;
            forms[i] = {fm, x0->get(i)};
        }
        AnfPoly q = compose_affine(p, forms, nf);
        if (q.degree() <= 2) ++rep.drop_events;
    }
    rep.frequency = trials ? double(rep.drop_events) / double(trials) : 0.0;
    return rep;
}

}  // namespace polyqd::solvers
