#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polyqd/boolpoly.hpp"
#include "polyqd/gf2e.hpp"
#include "polyqd/rscode.hpp"

namespace polyqd::fourier {

using boolpoly::AnfPoly;
using boolpoly::PolyDistribution;
using gf2e::FieldCtx;

// In-place unnormalized Walsh-Hadamard butterflies on a length-2^k vector.
void fwht(std::span<double> v);

// Trace QFT over GF(2^n) on a real vector of length 2^n:
//   (QFT v)[y] = 2^{-n/2} sum_x (-1)^{trace(x*y)} v[x],
// realized as the sigma permutation followed by a normalized WHT. The
// trace pairing is symmetric, so the transform is its own inverse.
void qft_symbol(const FieldCtx& f, std::span<double> v);

// Tensor application of qft_symbol to each of the m symbol registers of a
// vector of length 2^{n*m}; requires n*m <= 26.
void qft_full(const FieldCtx& f, int m, std::span<double> v);

// Index layout used throughout: symbol i of a word occupies bits
// [i*n, (i+1)*n) of the index, canonical basis order within a symbol.

struct WeightFn {
    int log_size = 0;            // domain is [0, 2^log_size)
    std::vector<double> values;
    bool empty_support = false;  // the all-zero function (rootless polynomial)
};

// W^p: N_p^{-1/2} on the roots of p, 0 elsewhere (all-zero when rootless).
WeightFn weight_W(const AnfPoly& p);
// V: |C|^{-1/2} on the primal code C, 0 elsewhere; materialized by
// enumerating codewords. Requires n*k_primal <= 26 and n*m <= 26.
WeightFn weight_V(const rscode::CodePair& code);

// Spectral statistics of |W-hat^p|^2 under the degree-<=d distribution.
// Exhausts the distribution support when it is small (<= 2^20 polynomials),
// otherwise Monte Carlo with `trials` samples. With power-of-two sample
// counts the exhaustive means are exact in double precision.
struct SpectrumReport {
    int n = 0, d = 0;
    bool exhaustive = false;
    std::uint64_t samples = 0;
    double w0_mean = 0, w0_stderr = 0;           // E[|W-hat(0)|^2]
    double max_tail_mean = 0;                    // max_{e != 0} E[|W-hat(e)|^2]
    double max_tail_stderr = 0;
    std::uint32_t max_tail_arg = 0;
    std::vector<double> tail_mean;               // per e (index = field element)
    std::vector<double> tail_stderr;
    std::vector<double> boolsq_mean;             // E[P~(e)^2] per e in F2^n
};

SpectrumReport spectrum_stats(const PolyDistribution& dist, std::uint64_t trials, Rng& rng);

// Numerical check of the transform identities
//   (f.g)^ = 2^{-nm/2} (f^ * g^),   (f*g)^ = 2^{nm/2} (f^ . g^),
//   (f.(g*h))^ = f^ * (g^ . h^),
// on random real vectors, with the direct O(4^{nm}) convolution; requires
// n*m <= 16. Also reports the Boolean Parseval defect on random p.
struct ConvolutionReport {
    double max_err_product_rule = 0;
    double max_err_convolution_rule = 0;
    double max_err_mixed_rule = 0;
    double max_err_bool_parseval = 0;
};

ConvolutionReport convolution_check(const FieldCtx& f, int m, int trials, Rng& rng);

// +-1 Boolean Fourier coefficients P~(a) = E_z[(-1)^{p(z) + <a,z>}].
std::vector<double> bool_fourier(const AnfPoly& p);

}  // namespace polyqd::fourier
