#include "polyqd/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "polyqd/fourier.hpp"

namespace polyqd::qsim {

using gf2e::Elem;
using gf2e::FieldCtx;

double StateVec::norm_sq() const {
    double s = 0;
    for (double a : amp) s += a * a;
    return s;
}

double SparseJointState::total_norm_sq() const {
    double s = 0;
    for (const auto& v : vecs)
        for (double a : v) s += a * a;
    return s;
}

namespace {

std::uint32_t pack_word(const std::vector<Elem>& syms, int n) {
    std::uint32_t w = 0;
    for (std::size_t i = 0; i < syms.size(); ++i) w |= syms[i] << (n * i);
    return w;
}

// Decode(z) for every packed word z, tabulated once per run. idx is the
// key index of the decoded codeword (0 = the zero codeword); unique is
// the decoder's uniqueness flag.
struct DecodeTable {
    std::vector<std::uint32_t> key_cw;  // packed codeword per key index
    std::vector<std::uint16_t> idx;
    std::vector<bool> unique;
};

DecodeTable build_decode_table(const rscode::CodePair& code, const Rational& eps) {
    const FieldCtx& f = *code.ctx;
    int n = f.n(), m = code.m;
    int nm = n * m;
    std::uint32_t kspace = std::uint32_t(1) << (n * code.k_dual);
    std::uint64_t zspace = std::uint64_t(1) << nm;

    DecodeTable tab;
    tab.key_cw.resize(kspace);
    std::vector<Elem> cw_syms(std::size_t(kspace) * m);
    for (std::uint32_t kidx = 0; kidx < kspace; ++kidx) {
        auto cw = rscode::dual_codeword(code, kidx);
        tab.key_cw[kidx] = pack_word(cw, n);
        std::copy(cw.begin(), cw.end(), cw_syms.begin() + std::size_t(kidx) * m);
    }

    const std::int64_t lhs_scale = 2 * eps.den;
    const std::int64_t rhs = std::int64_t(eps.den + 2 * eps.num) * m;
    const Elem sym_mask = Elem(f.order() - 1);

    tab.idx.assign(zspace, 0);
    tab.unique.assign(zspace, false);
    std::vector<Elem> zs(m);
    for (std::uint64_t z = 0; z < zspace; ++z) {
        for (int i = 0; i < m; ++i) zs[i] = Elem(z >> (n * i)) & sym_mask;
        int hits = 0;
        std::uint32_t hit_idx = 0;
        for (std::uint32_t kidx = 0; kidx < kspace; ++kidx) {
            const Elem* cw = &cw_syms[std::size_t(kidx) * m];
            int hw = 0;
            for (int i = 0; i < m; ++i) hw += (cw[i] != zs[i]);
            if (lhs_scale * hw <= rhs) {
                if (++hits >= 2) break;
                hit_idx = kidx;
            }
        }
        if (hits == 1) {
            tab.idx[z] = std::uint16_t(hit_idx);
            tab.unique[z] = true;
        }
    }
    return tab;
}

// W-hat^P as the tensor product of the per-symbol transforms (Fourier
// coefficients of product functions factor per symbol).
std::vector<double> build_what(const Instance& inst) {
    const FieldCtx& f = *inst.ctx;
    int n = f.n(), m = inst.params.m;
    std::vector<double> cur{1.0};
    for (int i = 0; i < m; ++i) {
        fourier::WeightFn w = fourier::weight_W(inst.polys[i]);
        if (w.empty_support) throw parameter_error("qsim: polynomial " + std::to_string(i) + " has no roots");
        fourier::qft_symbol(f, w.values);
        std::vector<double> next(cur.size() << n);
        for (std::size_t x = 0; x < w.values.size(); ++x) {
            double a = w.values[x];
            std::size_t off = x << (n * i);
            for (std::size_t s = 0; s < cur.size(); ++s) next[off | s] = a * cur[s];
        }
        cur = std::move(next);
    }
    return cur;
}

struct BadMass {
    double mu = 0, delta = 0;
};

BadMass bad_mass_from(const std::vector<double>& what, const DecodeTable& tab) {
    std::uint64_t zspace = what.size();
    std::uint32_t kspace = std::uint32_t(tab.key_cw.size());

    // e is good iff Decode(e) is uniquely the zero codeword; shift
    // covariance of the exact-ball decoder extends this to all x + e.
    BadMass bm;
    for (std::uint64_t e = 0; e < zspace; ++e)
        if (!(tab.unique[e] && tab.idx[e] == 0)) bm.mu += what[e] * what[e];

    double vhat0_sq = 1.0 / double(kspace);
    for (std::uint64_t z = 0; z < zspace; ++z) {
        double s = 0;
        for (std::uint32_t j = 0; j < kspace; ++j) {
            std::uint64_t e = z ^ tab.key_cw[j];
            if (!(tab.unique[e] && tab.idx[e] == 0)) s += what[e];
        }
        bm.delta += vhat0_sq * s * s;
    }
    return bm;
}

void check_caps_structured(const Instance& inst) {
    int nm = inst.params.n * inst.params.m;
    if (nm > 26) throw capability_error("qsim: structured backend capped at nm <= 26");
    if (inst.params.n * inst.params.k_dual > 10)
        throw capability_error("qsim: structured backend capped at 2^{n*k_dual} <= 2^10");
}

std::vector<Sample> draw_samples(const std::vector<double>& dist, double total,
                                 const std::vector<std::uint64_t>& sols, int count,
                                 std::uint64_t seed) {
    std::vector<Sample> out(count);
    if (count == 0) return out;
    Rng rng(seed);
    std::vector<std::pair<double, int>> draws(count);
    for (int t = 0; t < count; ++t) draws[t] = {rng.next_unit() * total, t};
    std::sort(draws.begin(), draws.end());
    double acc = 0;
    std::size_t z = 0;
    for (auto& [u, slot] : draws) {
        while (z + 1 < dist.size() && acc + dist[z] < u) acc += dist[z++];
        out[slot].y = z;
        out[slot].valid = std::binary_search(sols.begin(), sols.end(), std::uint64_t(z));
    }
    return out;
}

}  // namespace

std::vector<std::uint64_t> solution_set(const Instance& inst) {
    const auto& code = inst.code;
    int n = inst.params.n, m = inst.params.m;
    std::vector<std::vector<std::uint32_t>> root_sets(m);
    double tuples = 1.0;
    for (int i = 0; i < m; ++i) {
        root_sets[i] = boolpoly::roots(inst.polys[i]);
        tuples *= double(root_sets[i].size());
    }
    std::vector<std::uint64_t> sols;
    if (tuples == 0) return sols;
    if (tuples > double(1 << 22)) {
        // Fall back to scanning the whole word space.
        int nm = n * m;
        if (nm > 26) throw capability_error("qsim: solution enumeration too large");
        std::vector<Elem> syms(m);
        for (std::uint64_t z = 0; z < (std::uint64_t(1) << nm); ++z) {
            bool ok = true;
            for (int i = 0; i < m && ok; ++i) {
                Elem s = Elem(z >> (n * i)) & Elem((1u << n) - 1);
                ok = inst.polys[i].eval(s) == 0;
                syms[i] = s;
            }
            if (ok && rscode::is_codeword(code, syms, rscode::Which::primal)) sols.push_back(z);
        }
        return sols;
    }
    std::vector<std::size_t> pos(m, 0);
    std::vector<Elem> syms(m);
    for (int i = 0; i < m; ++i) syms[i] = Elem(root_sets[i][0]);
    for (;;) {
        if (rscode::is_codeword(code, syms, rscode::Which::primal))
            sols.push_back(pack_word(syms, n));
        int i = 0;
        while (i < m) {
            if (++pos[i] < root_sets[i].size()) {
                syms[i] = Elem(root_sets[i][pos[i]]);
                break;
            }
            pos[i] = 0;
            syms[i] = Elem(root_sets[i][0]);
            ++i;
        }
        if (i == m) break;
    }
    std::sort(sols.begin(), sols.end());
    return sols;
}

StateVec prepare_phi(const Instance& inst) {
    int n = inst.params.n, m = inst.params.m;
    int nm = n * m;
    if (nm > 26) throw capability_error("qsim: prepare_phi capped at nm <= 26");
    StateVec sv;
    sv.log_size = nm;
    std::vector<double> cur{1.0};
    for (int i = 0; i < m; ++i) {
        fourier::WeightFn w = fourier::weight_W(inst.polys[i]);
        if (w.empty_support) throw parameter_error("qsim: polynomial " + std::to_string(i) + " has no roots");
        std::vector<double> next(cur.size() << n);
        for (std::size_t x = 0; x < w.values.size(); ++x) {
            double a = w.values[x];
            if (a == 0) continue;
            std::size_t off = x << (n * i);
            for (std::size_t s = 0; s < cur.size(); ++s)
                if (cur[s] != 0) next[off | s] = a * cur[s];
        }
        cur = std::move(next);
    }
    sv.amp = std::move(cur);
    return sv;
}

StateVec prepare_psi(const Instance& inst) {
    fourier::WeightFn v = fourier::weight_V(inst.code);
    StateVec sv;
    sv.log_size = v.log_size;
    sv.amp = std::move(v.values);
    return sv;
}

RootDraw sample_root_rejection(const boolpoly::AnfPoly& p, Rng& rng) {
    if (p.is_one()) throw parameter_error("qsim: rejection sampling on a rootless polynomial");
    RootDraw d;
    for (;;) {
        ++d.tries;
        std::uint32_t x = std::uint32_t(rng.next_bits(p.n_vars()));
        if (p.eval(x) == 0) {
            d.root = x;
            return d;
        }
    }
}

RunReport run_structured(const Instance& inst, const RunOptions& opts) {
    check_caps_structured(inst);
    const FieldCtx& f = *inst.ctx;
    int n = f.n(), m = inst.params.m;
    int nm = n * m;
    std::uint64_t zspace = std::uint64_t(1) << nm;
    std::uint32_t kspace = std::uint32_t(1) << (n * inst.params.k_dual);

    RunReport rep;
    rep.backend = "structured";

    std::vector<double> what = build_what(inst);
    double what_norm = std::inner_product(what.begin(), what.end(), what.begin(), 0.0);
    rep.max_stage_norm_err = std::abs(what_norm - 1.0);

    DecodeTable tab = build_decode_table(inst.code, inst.params.epsilon);

    auto sols = solution_set(inst);
    rep.solution_count = sols.size();
    double inv_sqrt_s = sols.empty() ? 0.0 : 1.0 / std::sqrt(double(sols.size()));

    double v0 = 1.0 / std::sqrt(double(kspace));
    std::vector<double> dist(zspace, 0.0);
    std::vector<double> scratch(zspace);

    double post_decode_norm = 0;
    double fid_dot = 0;
    for (std::uint32_t j = 0; j < kspace; ++j) {
        std::uint32_t xj = tab.key_cw[j];
        // U_add then U_decode, evaluated lazily: the second-register state
        // attached to key j is z -> V0 * What[z ^ x_j ^ Decode(z)].
        for (std::uint64_t z = 0; z < zspace; ++z)
            scratch[z] = v0 * what[z ^ xj ^ tab.key_cw[tab.idx[z]]];
        double mass = std::inner_product(scratch.begin(), scratch.end(), scratch.begin(), 0.0);
        post_decode_norm += mass;
        if (j == 0) rep.zero_branch_mass = mass;
        else rep.residual_mass += mass;

        fourier::qft_full(f, m, scratch);
        for (std::uint64_t z = 0; z < zspace; ++z) dist[z] += scratch[z] * scratch[z];
        if (j == 0) {
            for (auto s : sols) {
                rep.zero_branch_success += scratch[s] * scratch[s];
                fid_dot += scratch[s] * inv_sqrt_s;
            }
        }
    }
    rep.max_stage_norm_err = std::max(rep.max_stage_norm_err, std::abs(post_decode_norm - 1.0));
    double total = std::accumulate(dist.begin(), dist.end(), 0.0);
    rep.max_stage_norm_err = std::max(rep.max_stage_norm_err, std::abs(total - 1.0));

    for (auto s : sols) rep.success_probability += dist[s];
    rep.fidelity_to_ideal = fid_dot * fid_dot;

    if (opts.compute_bad_mass) {
        if (double(zspace) * kspace <= double(std::uint64_t(1) << 28)) {
            BadMass bm = bad_mass_from(what, tab);
            rep.mu_hat = bm.mu;
            rep.delta_hat = bm.delta;
        }
    }

    rep.samples = draw_samples(dist, total, sols, opts.samples, opts.seed);
    return rep;
}

RunReport run_dense(const Instance& inst, const RunOptions& opts) {
    const FieldCtx& f = *inst.ctx;
    int n = f.n(), m = inst.params.m;
    int nm = n * m;
    if (2 * nm > 20) throw capability_error("qsim: dense backend capped at 2nm <= 20");
    std::uint64_t zspace = std::uint64_t(1) << nm;

    RunReport rep;
    rep.backend = "dense";

    StateVec phi = prepare_phi(inst);
    StateVec psi = prepare_psi(inst);

    std::vector<double> joint(zspace * zspace);
    for (std::uint64_t x = 0; x < zspace; ++x) {
        double vx = psi.amp[x];
        if (vx == 0) continue;
        for (std::uint64_t e = 0; e < zspace; ++e) joint[(x << nm) | e] = vx * phi.amp[e];
    }
    auto stage_norm = [&] {
        double s = 0;
        for (double a : joint) s += a * a;
        return s;
    };
    auto note_norm = [&] { rep.max_stage_norm_err = std::max(rep.max_stage_norm_err, std::abs(stage_norm() - 1.0)); };
    note_norm();

    // Step 3: QFT both registers. Register 2 occupies the low nm bits of
    // the joint index, register 1 the high nm bits.
    for (std::uint64_t x = 0; x < zspace; ++x)
        fourier::qft_full(f, m, std::span<double>(joint.data() + (x << nm), zspace));
    {
        std::vector<double> slice(zspace);
        for (std::uint64_t e = 0; e < zspace; ++e) {
            for (std::uint64_t x = 0; x < zspace; ++x) slice[x] = joint[(x << nm) | e];
            fourier::qft_full(f, m, slice);
            for (std::uint64_t x = 0; x < zspace; ++x) joint[(x << nm) | e] = slice[x];
        }
    }
    note_norm();

    // Step 4: U_add |x>|e> -> |x>|x+e>, an XOR permutation inside each block.
    for (std::uint64_t x = 1; x < zspace; ++x) {
        double* blk = joint.data() + (x << nm);
        for (std::uint64_t e = 0; e < zspace; ++e) {
            std::uint64_t t = e ^ x;
            if (e < t) std::swap(blk[e], blk[t]);
        }
    }
    note_norm();

    // Step 5: U_decode |x>|z> -> |x - Decode(z)>|z>.
    if (opts.cheat_decode) {
        // Oracle that always knows the true x: everything lands on key 0.
        // Amplitudes add; this diagnostic map is not unitary.
        std::vector<double> zero(zspace, 0.0);
        for (std::uint64_t x = 0; x < zspace; ++x)
            for (std::uint64_t z = 0; z < zspace; ++z) zero[z] += joint[(x << nm) | z];
        std::fill(joint.begin(), joint.end(), 0.0);
        std::copy(zero.begin(), zero.end(), joint.begin());
    } else {
        DecodeTable tab = build_decode_table(inst.code, inst.params.epsilon);
        for (std::uint64_t z = 0; z < zspace; ++z) {
            std::uint64_t c = tab.key_cw[tab.idx[z]];
            if (c == 0) continue;
            for (std::uint64_t x = 0; x < zspace; ++x) {
                std::uint64_t t = x ^ c;
                if (x < t) std::swap(joint[(x << nm) | z], joint[(t << nm) | z]);
            }
        }
        note_norm();
    }

    // Step 6: inverse QFT on register 2 (the trace QFT is an involution).
    for (std::uint64_t x = 0; x < zspace; ++x)
        fourier::qft_full(f, m, std::span<double>(joint.data() + (x << nm), zspace));
    if (!opts.cheat_decode) note_norm();

    auto sols = solution_set(inst);
    rep.solution_count = sols.size();
    double inv_sqrt_s = sols.empty() ? 0.0 : 1.0 / std::sqrt(double(sols.size()));

    std::vector<double> dist(zspace, 0.0);
    for (std::uint64_t x = 0; x < zspace; ++x) {
        const double* blk = joint.data() + (x << nm);
        double mass = 0;
        for (std::uint64_t z = 0; z < zspace; ++z) {
            dist[z] += blk[z] * blk[z];
            mass += blk[z] * blk[z];
        }
        if (x == 0) rep.zero_branch_mass = mass;
        else rep.residual_mass += mass;
    }
    rep.zero_branch.assign(joint.begin(), joint.begin() + zspace);
    double fid_dot = 0;
    for (auto s : sols) {
        rep.zero_branch_success += rep.zero_branch[s] * rep.zero_branch[s];
        fid_dot += rep.zero_branch[s] * inv_sqrt_s;
        rep.success_probability += dist[s];
    }
    rep.fidelity_to_ideal = fid_dot * fid_dot;

    if (opts.compute_bad_mass && !opts.cheat_decode) {
        std::vector<double> what = build_what(inst);
        DecodeTable tab = build_decode_table(inst.code, inst.params.epsilon);
        BadMass bm = bad_mass_from(what, tab);
        rep.mu_hat = bm.mu;
        rep.delta_hat = bm.delta;
    }

    double total = std::accumulate(dist.begin(), dist.end(), 0.0);
    rep.samples = draw_samples(dist, total, sols, opts.samples, opts.seed);
    return rep;
}

SparseJointState joint_after_decode(const Instance& inst) {
    check_caps_structured(inst);
    int n = inst.params.n, m = inst.params.m;
    int nm = n * m;
    if (nm + n * inst.params.k_dual > 22)
        throw capability_error("qsim: joint_after_decode capped at 2^22 amplitudes");
    std::uint64_t zspace = std::uint64_t(1) << nm;
    std::uint32_t kspace = std::uint32_t(1) << (n * inst.params.k_dual);

    std::vector<double> what = build_what(inst);
    DecodeTable tab = build_decode_table(inst.code, inst.params.epsilon);
    double v0 = 1.0 / std::sqrt(double(kspace));

    SparseJointState joint;
    joint.key_codeword = tab.key_cw;
    joint.vecs.assign(kspace, std::vector<double>(zspace));
    for (std::uint32_t j = 0; j < kspace; ++j)
        for (std::uint64_t z = 0; z < zspace; ++z)
            joint.vecs[j][z] = v0 * what[z ^ tab.key_cw[j] ^ tab.key_cw[tab.idx[z]]];
    return joint;
}

std::pair<double, double> bad_mass(const Instance& inst) {
    int nm = inst.params.n * inst.params.m;
    int nk = inst.params.n * inst.params.k_dual;
    if (nm + nk > 28)
        throw capability_error("qsim: bad_mass capped at 2^{nm} * 2^{n k_dual} <= 2^28");
    std::vector<double> what = build_what(inst);
    DecodeTable tab = build_decode_table(inst.code, inst.params.epsilon);
    BadMass bm = bad_mass_from(what, tab);
    return {bm.mu, bm.delta};
}

std::string report_to_json(const RunReport& rep, const Instance& inst, const RunOptions& opts) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["backend"] = rep.backend;
    j["n"] = inst.params.n;
    j["m"] = inst.params.m;
    j["d"] = inst.params.d;
    j["k_dual"] = inst.params.k_dual;
    j["epsilon"] = {{"num", inst.params.epsilon.num}, {"den", inst.params.epsilon.den}};
    j["instance_seed"] = inst.params.seed;
    j["run_seed"] = opts.seed;
    j["solution_count"] = rep.solution_count;
    j["success_probability"] = rep.success_probability;
    j["zero_branch_mass"] = rep.zero_branch_mass;
    j["zero_branch_success"] = rep.zero_branch_success;
    j["residual_mass"] = rep.residual_mass;
    j["fidelity_to_ideal"] = rep.fidelity_to_ideal;
    if (rep.mu_hat >= 0) {
        j["mu_hat"] = rep.mu_hat;
        j["delta_hat"] = rep.delta_hat;
    }
    j["max_stage_norm_err"] = rep.max_stage_norm_err;
    nlohmann::json samples = nlohmann::json::array();
    int nm = inst.params.n * inst.params.m;
    for (const auto& s : rep.samples) {
        instance::Solution sol;
        sol.y = bitmat::BitVec::from_u64(nm, s.y);
        samples.push_back({{"y", nlohmann::json::parse(instance::solution_to_json(sol))["y_hex"]},
                           {"valid", s.valid}});
    }
    j["samples"] = samples;
    return j.dump();
}

}  // namespace polyqd::qsim
