#include "polyqd/boolpoly.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace polyqd::boolpoly {

AnfPoly::AnfPoly(int n_vars, int degree_bound, std::vector<Mask> monomials)
    : n_vars_(n_vars), degree_bound_(degree_bound), monomials_(std::move(monomials)) {
    if (n_vars < 0 || n_vars > 31) throw parameter_error("boolpoly: n_vars out of range");
    std::sort(monomials_.begin(), monomials_.end());
    monomials_.erase(std::unique(monomials_.begin(), monomials_.end()), monomials_.end());
    Mask var_space = (n_vars >= 31) ? ~Mask(0) : ((Mask(1) << n_vars) - 1);
    for (Mask m : monomials_) {
        if (m & ~var_space) throw parameter_error("boolpoly: monomial uses variable beyond n_vars");
        if (std::popcount(m) > degree_bound_)
            throw parameter_error("boolpoly: monomial exceeds degree bound");
    }
}

int AnfPoly::degree() const {
    int d = -1;
    for (Mask m : monomials_) d = std::max(d, int(std::popcount(m)));
    return d;
}

int AnfPoly::eval(std::uint32_t x) const {
    if (n_vars_ < 31 && x >= (std::uint32_t(1) << n_vars_))
        throw parameter_error("boolpoly: evaluation point length mismatch");
    int acc = 0;
    for (Mask m : monomials_)
        acc ^= int((x & m) == m);
    return acc;
}

std::vector<std::uint32_t> roots(const AnfPoly& p) {
    if (p.n_vars() > 24) throw capability_error("boolpoly: root enumeration capped at 24 variables");
    std::vector<std::uint32_t> out;
    std::uint32_t space = std::uint32_t(1) << p.n_vars();
    for (std::uint32_t x = 0; x < space; ++x)
        if (p.eval(x) == 0) out.push_back(x);
    return out;
}

std::uint64_t root_count(const AnfPoly& p) {
    if (p.n_vars() > 24) throw capability_error("boolpoly: root enumeration capped at 24 variables");
    std::uint64_t c = 0;
    std::uint32_t space = std::uint32_t(1) << p.n_vars();
    for (std::uint32_t x = 0; x < space; ++x) c += (p.eval(x) == 0);
    return c;
}

AnfPoly shift(const AnfPoly& p, std::uint32_t z) {
    if (p.n_vars() < 31 && z >= (std::uint32_t(1) << p.n_vars()))
        throw parameter_error("boolpoly: shift vector length mismatch");
    // Substitute x_i <- x_i + z_i monomial by monomial: prod_{i in m}(x_i + z_i)
    // expands to sum over subsets S of m&z of the monomial (m\z) | S.
    std::unordered_set<Mask> acc;
    auto toggle = [&](Mask m) {
        auto it = acc.find(m);
        if (it == acc.end()) acc.insert(m); else acc.erase(it);
    };
    for (Mask m : p.monomials()) {
        Mask fixed = m & ~z;
        Mask movable = m & z;
        Mask s = 0;
        for (;;) {
            toggle(fixed | s);
            if (s == movable) break;
            s = (s - movable) & movable;  // next subset of movable
        }
    }
    std::vector<Mask> out(acc.begin(), acc.end());
    return AnfPoly(p.n_vars(), p.degree_bound(), std::move(out));
}

std::vector<Mask> monomials_up_to_degree(int n, int d) {
    std::vector<Mask> out;
    Mask space = (n >= 31) ? ~Mask(0) : ((Mask(1) << n) - 1);
    for (Mask m = 0;; ++m) {
        if (std::popcount(m) <= d) out.push_back(m);
        if (m == space) break;
    }
    return out;
}

AnfPoly sample(const PolyDistribution& dist, Rng& rng) {
    std::vector<Mask> monos;
    for (Mask m : monomials_up_to_degree(dist.n_vars, dist.d))
        if (rng.next_bit()) monos.push_back(m);
    return AnfPoly(dist.n_vars, dist.d, std::move(monos));
}

std::array<std::uint64_t, 4> count_joint(int n, int d, std::uint32_t x, std::uint32_t y) {
    if (x == y) throw parameter_error("boolpoly: count_joint requires distinct points");
    auto monos = monomials_up_to_degree(n, d);
    if (monos.size() > 24) throw capability_error("boolpoly: count_joint support too large");
    std::uint32_t u = 0, v = 0;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        u |= std::uint32_t((x & monos[i]) == monos[i]) << i;
        v |= std::uint32_t((y & monos[i]) == monos[i]) << i;
    }
    std::array<std::uint64_t, 4> counts{0, 0, 0, 0};
    std::uint32_t support = std::uint32_t(1) << monos.size();
    for (std::uint32_t c = 0; c < support; ++c) {
        int px = std::popcount(c & u) & 1;
        int py = std::popcount(c & v) & 1;
        ++counts[px + 2 * py];
    }
    return counts;
}

}  // namespace polyqd::boolpoly
