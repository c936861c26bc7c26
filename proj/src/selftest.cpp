#include "polyqd/selftest.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "polyqd/decoder.hpp"
#include "polyqd/fourier.hpp"
#include "polyqd/instance.hpp"
#include "polyqd/rng.hpp"

namespace polyqd::selftest {

using boolpoly::AnfPoly;
using gf2e::Elem;

namespace {

void add(std::vector<CheckResult>& out, const std::string& name, bool ok,
         const std::string& detail = "") {
    out.push_back({name, ok, detail});
}

bool field_axioms(int n) {
    auto f = gf2e::field_new(n);
    std::uint32_t q = f->order();
    for (Elem a = 0; a < q; ++a) {
        if (f->mul(a, 1) != a || f->mul(a, 0) != 0) return false;
        for (Elem b = 0; b < q; ++b) {
            if (f->mul(a, b) != f->mul(b, a)) return false;
            Elem fr = f->mul(a ^ b, a ^ b);
            if (fr != (f->mul(a, a) ^ f->mul(b, b))) return false;  // Frobenius
            for (Elem c = 0; c < q; ++c) {
                if (f->mul(f->mul(a, b), c) != f->mul(a, f->mul(b, c))) return false;
                if (f->mul(a, b ^ c) != (f->mul(a, b) ^ f->mul(a, c))) return false;
            }
        }
        if (a != 0 && f->mul(a, f->inv(a)) != 1) return false;
    }
    return true;
}

bool sigma_duality(int n) {
    auto f = gf2e::field_new(n);
    std::uint32_t q = f->order();
    if (f->sigma(0) != 0) return false;
    std::vector<bool> seen(q, false);
    for (Elem e = 0; e < q; ++e) {
        if (seen[f->sigma(e)]) return false;
        seen[f->sigma(e)] = true;
        for (Elem z = 0; z < q; ++z) {
            int lhs = f->trace(f->mul(e, z));
            int rhs = std::popcount(f->sigma(e) & z) & 1;
            if (lhs != rhs) return false;
        }
    }
    // Nondegeneracy: only e = 0 pairs to zero with everything.
    for (Elem e = 1; e < q; ++e) {
        bool all_zero = true;
        for (Elem z = 0; z < q && all_zero; ++z) all_zero = (f->trace(f->mul(e, z)) == 0);
        if (all_zero) return false;
    }
    return true;
}

bool shift_properties(int n, int d) {
    auto monos = boolpoly::monomials_up_to_degree(n, d);
    std::uint64_t support = std::uint64_t(1) << monos.size();
    for (std::uint32_t z = 0; z < (1u << n); ++z) {
        std::vector<bool> hit(support, false);
        for (std::uint64_t bits = 0; bits < support; ++bits) {
            std::vector<boolpoly::Mask> ms;
            for (std::size_t i = 0; i < monos.size(); ++i)
                if ((bits >> i) & 1) ms.push_back(monos[i]);
            AnfPoly p(n, d, ms);
            AnfPoly sh = boolpoly::shift(p, z);
            if (sh.degree() != p.degree()) return false;
            if (!(boolpoly::shift(sh, z) == p)) return false;
            // Re-encode the image to confirm the map is a bijection on the
            // degree-bounded family.
            std::uint64_t key = 0;
            for (std::size_t i = 0; i < monos.size(); ++i) {
                const auto& mm = sh.monomials();
                if (std::binary_search(mm.begin(), mm.end(), monos[i])) key |= std::uint64_t(1) << i;
            }
            if (hit[key]) return false;
            hit[key] = true;
        }
    }
    return true;
}

bool variety_moments(int n) {
    auto monos = boolpoly::monomials_up_to_degree(n, 2);
    std::uint64_t support = std::uint64_t(1) << monos.size();
    std::uint64_t sum = 0, sumsq = 0;
    for (std::uint64_t bits = 0; bits < support; ++bits) {
        std::vector<boolpoly::Mask> ms;
        for (std::size_t i = 0; i < monos.size(); ++i)
            if ((bits >> i) & 1) ms.push_back(monos[i]);
        std::uint64_t np = boolpoly::root_count(AnfPoly(n, 2, ms));
        sum += np;
        sumsq += np * np;
    }
    bool mean_ok = sum == support * (std::uint64_t(1) << (n - 1));
    // E[N^2] = 2^{2n-2} + 2^{n-2}, scaled by 4 to stay integral.
    bool second_ok = 4 * sumsq == support * ((std::uint64_t(1) << (2 * n)) + (std::uint64_t(1) << n));
    return mean_ok && second_ok;
}

bool qft_involution(int n) {
    auto f = gf2e::field_new(n);
    std::uint32_t q = f->order();
    Rng rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> v(q);
        for (auto& x : v) x = 2.0 * rng.next_unit() - 1.0;
        auto w = v;
        fourier::qft_symbol(*f, w);
        double norm_v = 0, norm_w = 0;
        for (std::uint32_t i = 0; i < q; ++i) { norm_v += v[i] * v[i]; norm_w += w[i] * w[i]; }
        if (std::abs(norm_v - norm_w) > 1e-11) return false;
        fourier::qft_symbol(*f, w);
        for (std::uint32_t i = 0; i < q; ++i)
            if (std::abs(w[i] - v[i]) > 1e-11) return false;
    }
    return true;
}

bool twowise_counts(int n, int d) {
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
        for (std::uint32_t y = 0; y < (1u << n); ++y) {
            if (x == y) continue;
            auto c = boolpoly::count_joint(n, d, x, y);
            if (c[0] != c[1] || c[1] != c[2] || c[2] != c[3]) return false;
        }
    }
    return true;
}

bool decoder_cross_check() {
    instance::Params p;
    p.n = 3; p.m = 8; p.d = 3; p.k_dual = 1;
    p.epsilon = Rational(1, 10);
    p.seed = 99;
    auto inst = instance::gen(p);
    Rng rng(7);
    int radius = decoder::gs_radius(p.m, p.k_dual);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Elem> z(p.m);
        for (auto& s : z) s = Elem(rng.next_bits(p.n));
        auto bf = decoder::list_decode_bruteforce(inst.code, z, radius);
        auto gs = decoder::list_decode_gs(inst.code, z);
        std::sort(bf.begin(), bf.end());
        if (bf != gs) return false;
        auto d1 = decoder::decode(inst.code, z, p.epsilon, decoder::Backend::bruteforce);
        auto d2 = decoder::decode(inst.code, z, p.epsilon, decoder::Backend::gs);
        if (d1.unique_flag != d2.unique_flag || d1.codeword != d2.codeword) return false;
    }
    return true;
}

}  // namespace

std::vector<CheckResult> run(Level level) {
    std::vector<CheckResult> out;
    int axiom_max = (level == Level::exhaustive) ? 4 : 3;
    for (int n = 1; n <= axiom_max; ++n)
        add(out, "field axioms exhaustive n=" + std::to_string(n), field_axioms(n));
    int sigma_max = (level == Level::exhaustive) ? 8 : 4;
    for (int n = 1; n <= sigma_max; ++n)
        add(out, "sigma duality exhaustive n=" + std::to_string(n), sigma_duality(n));
    add(out, "shift involution/bijection n=2 d=2", shift_properties(2, 2));
    if (level == Level::exhaustive)
        add(out, "shift involution/bijection n=3 d=2", shift_properties(3, 2));
    add(out, "variety moments n=2", variety_moments(2));
    add(out, "variety moments n=3", variety_moments(3));
    for (int n = 1; n <= 3; ++n)
        add(out, "qft involution n=" + std::to_string(n), qft_involution(n));
    add(out, "2-wise independence counts n=2 d=2", twowise_counts(2, 2));
    add(out, "2-wise independence counts n=3 d=2", twowise_counts(3, 2));
    add(out, "decoder gs/bruteforce agreement", decoder_cross_check());
    return out;
}

}  // namespace polyqd::selftest
