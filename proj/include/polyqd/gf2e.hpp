#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "polyqd/common.hpp"

namespace polyqd::gf2e {

// Field element in canonical (polynomial basis) representation:
// bit i is the coefficient of x^i, value < 2^n.
using Elem = std::uint32_t;

// Arithmetic context for GF(2^n) = F2[x]/(modulus), 1 <= n <= 16.
// Immutable after construction; all operations are pure.
class FieldCtx {
public:
    // Verifies the modulus has degree exactly n and is irreducible
    // (exhaustive divisor search); precomputes the sigma table with
    // sigma(e) bit j = trace(e * x^j).
    FieldCtx(int n, std::uint32_t modulus);

    int n() const { return n_; }
    std::uint32_t modulus() const { return modulus_; }
    std::uint32_t order() const { return std::uint32_t(1) << n_; }

    Elem add(Elem a, Elem b) const { return a ^ b; }
    Elem mul(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const;
    Elem inv(Elem a) const;
    int trace(Elem a) const;

    // Trace-dual bijection sigma: GF(2^n) -> F2^n with
    // trace(e*z) = <sigma(e), z> for all z (F2 dot product on bits).
    std::uint32_t sigma(Elem e) const { return sigma_table_[e]; }
    const std::vector<std::uint32_t>& sigma_table() const { return sigma_table_; }

    // Lexicographically least irreducible polynomial of degree n.
    static std::uint32_t default_modulus(int n);

private:
    int n_;
    std::uint32_t modulus_;
    std::vector<std::uint32_t> sigma_table_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

inline FieldPtr field_new(int n, std::uint32_t modulus) {
    return std::make_shared<FieldCtx>(n, modulus);
}
inline FieldPtr field_new(int n) {
    return std::make_shared<FieldCtx>(n, FieldCtx::default_modulus(n));
}

// "x^3+x+1" style rendering of a polynomial over F2 (bit i = coeff of x^i).
std::string poly_to_string(std::uint64_t bits);

}  // namespace polyqd::gf2e
