#include "polyqd/gf2e.hpp"

#include <bit>

namespace polyqd::gf2e {

namespace {

int poly_degree(std::uint64_t p) {
    return p == 0 ? -1 : 63 - std::countl_zero(p);
}

// Remainder of a mod b over F2[x].
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
    int db = poly_degree(b);
    int da = poly_degree(a);
    while (da >= db) {
        a ^= b << (da - db);
        da = poly_degree(a);
    }
    return a;
}

// Smallest-degree nontrivial factor, or 0 if irreducible.
// Exhaustive trial division; fine for degree <= 16.
std::uint64_t find_factor(std::uint64_t p) {
    int d = poly_degree(p);
    for (int dd = 1; dd <= d / 2; ++dd) {
        for (std::uint64_t q = std::uint64_t(1) << dd; q < (std::uint64_t(1) << (dd + 1)); ++q) {
            if (poly_mod(p, q) == 0) return q;
        }
    }
    return 0;
}

}  // namespace

std::string poly_to_string(std::uint64_t bits) {
    if (bits == 0) return "0";
    std::string s;
    for (int i = poly_degree(bits); i >= 0; --i) {
        if (!((bits >> i) & 1)) continue;
        if (!s.empty()) s += "+";
        if (i == 0) s += "1";
        else if (i == 1) s += "x";
        else s += "x^" + std::to_string(i);
    }
    return s;
}

FieldCtx::FieldCtx(int n, std::uint32_t modulus) : n_(n), modulus_(modulus) {
    if (n < 1 || n > 16) throw parameter_error("gf2e: extension degree must be in [1,16]");
    if (poly_degree(modulus) != n)
        throw parameter_error("gf2e: modulus degree mismatch, expected degree " + std::to_string(n) +
                              " got " + poly_to_string(modulus));
    if (std::uint64_t f = find_factor(modulus))
        throw parameter_error("gf2e: reducible modulus " + poly_to_string(modulus) +
                              ": divisible by " + poly_to_string(f));

    sigma_table_.resize(order());
    std::vector<bool> seen(order(), false);
    for (Elem e = 0; e < order(); ++e) {
        std::uint32_t bits = 0;
        for (int j = 0; j < n_; ++j)
            bits |= std::uint32_t(trace(mul(e, Elem(1) << j))) << j;
        sigma_table_[e] = bits;
        seen[bits] = true;
    }
    // Nondegeneracy of the trace form makes sigma a bijection; if this
    // ever fires the modulus verification above is broken.
    for (std::uint32_t b = 0; b < order(); ++b)
        if (!seen[b]) throw std::logic_error("gf2e: sigma table is not a bijection");
}

Elem FieldCtx::mul(Elem a, Elem b) const {
    std::uint32_t r = 0;
    std::uint32_t acc = a;
    std::uint32_t top = order();
    while (b) {
        if (b & 1) r ^= acc;
        b >>= 1;
        acc <<= 1;
        if (acc & top) acc ^= modulus_;
    }
    return r;
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const {
    Elem r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Elem FieldCtx::inv(Elem a) const {
    if (a == 0) throw parameter_error("gf2e: inverse of zero");
    return pow(a, order() - 2);
}

int FieldCtx::trace(Elem a) const {
    Elem t = 0, f = a;
    for (int i = 0; i < n_; ++i) {
        t ^= f;
        f = mul(f, f);
    }
    // The trace lands in the prime subfield {0, 1}.
    return int(t & 1);
}

std::uint32_t FieldCtx::default_modulus(int n) {
    if (n < 1 || n > 16) throw parameter_error("gf2e: extension degree must be in [1,16]");
    for (std::uint32_t p = (std::uint32_t(1) << n) | 1;; p += 2) {
        if (find_factor(p) == 0) return p;
    }
}

}  // namespace polyqd::gf2e
