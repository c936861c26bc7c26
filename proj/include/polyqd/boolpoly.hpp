#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "polyqd/common.hpp"
#include "polyqd/rng.hpp"

namespace polyqd::boolpoly {

// Monomial over n_vars variables as a bit mask (bit i set = variable x_i
// occurs). The empty mask is the constant-1 term.
using Mask = std::uint32_t;

// Multivariate Boolean polynomial in algebraic normal form: XOR of
// AND-monomials, every monomial of degree <= degree_bound. Immutable.
class AnfPoly {
public:
    AnfPoly() = default;
    AnfPoly(int n_vars, int degree_bound, std::vector<Mask> monomials);

    int n_vars() const { return n_vars_; }
    int degree_bound() const { return degree_bound_; }
    const std::vector<Mask>& monomials() const { return monomials_; }  // sorted, unique

    // Max monomial degree; -1 for the zero polynomial.
    int degree() const;

    bool is_zero() const { return monomials_.empty(); }
    // The constant-1 polynomial: the unique Boolean function with no roots.
    bool is_one() const { return monomials_.size() == 1 && monomials_[0] == 0; }

    int eval(std::uint32_t x) const;

    bool operator==(const AnfPoly& o) const {
        return n_vars_ == o.n_vars_ && monomials_ == o.monomials_;
    }

private:
    int n_vars_ = 0;
    int degree_bound_ = 0;
    std::vector<Mask> monomials_;
};

// All x with p(x) = 0; enumeration, requires n_vars <= 24.
std::vector<std::uint32_t> roots(const AnfPoly& p);
std::uint64_t root_count(const AnfPoly& p);

// p'(x) = p(x XOR z); degree-preserving involution on degree-<=d polynomials.
AnfPoly shift(const AnfPoly& p, std::uint32_t z);

// All monomial masks of degree <= d over n variables, sorted by mask value.
std::vector<Mask> monomials_up_to_degree(int n, int d);

// Uniform distribution over polynomials of degree at most d: every
// monomial coefficient is an independent fair bit.
struct PolyDistribution {
    int n_vars;
    int d;
};

AnfPoly sample(const PolyDistribution& dist, Rng& rng);

// Exact joint counts of (p(x), p(y)) over the full support of the
// degree-<=d distribution, indexed [p(x) + 2*p(y)]. Requires the support
// exponent (monomial count) <= 24.
std::array<std::uint64_t, 4> count_joint(int n, int d, std::uint32_t x, std::uint32_t y);

}  // namespace polyqd::boolpoly
