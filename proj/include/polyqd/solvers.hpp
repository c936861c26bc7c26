#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyqd/instance.hpp"

namespace polyqd::solvers {

using boolpoly::AnfPoly;
using instance::Instance;
using instance::Solution;

// Canonical form of a quadratic Boolean function: with y = apply(U, x) + t,
//   p(x) = y_0 y_1 + y_2 y_3 + ... + y_{r-2} y_{r-1}
//          + residual_linear . y + residual_const,
// where residual_linear is supported outside the first r coordinates.
// The transform is invertible, so root counts are preserved. Type 2 marks
// Arf invariant 1 (the translated-out pair terms flip the constant).
struct QuadNormalForm {
    int n = 0;
    bitmat::BitMatrix U;             // rows are linear forms: y_j = <U.row(j), x>
    bitmat::BitVec t;                // translation applied after U
    int r = 0;                       // rank of the Gram matrix M + M^T, even
    enum class FormType { type1, type2 } form_type = FormType::type1;
    bitmat::BitVec residual_linear;  // support in [r, n)
    int residual_const = 0;
};

QuadNormalForm quad_normal_form(const AnfPoly& q);

// The canonical right-hand side as a polynomial: pair monomials plus the
// residual affine part.
AnfPoly canonical_poly(const QuadNormalForm& nf);

// y = U x + t evaluated coordinate-wise.
bitmat::BitVec apply_transform(const QuadNormalForm& nf, const bitmat::BitVec& x);

// Specialization solver for d = 2: per-block normal forms, random fixing of
// the pair-partner coordinates, then one affine solve over F2 combining the
// linearized block equations with the transformed parity equations.
struct QuadSolveResult {
    bool solved = false;
    Solution sol;
    int retries = 0;  // fixings consumed (1 = first try succeeded)
};
QuadSolveResult solve_quadratic(const Instance& inst, std::uint64_t seed, int retry_budget = 32);

// Sample a root tuple of the first alpha*m blocks (in systematic symbol
// order), push through R, test the remaining blocks.
struct CombinatorialResult {
    bool solved = false;
    Solution sol;
    std::uint64_t trials = 0;
    double vr_image_density = -1;  // |V R| / 2^{(1-alpha)mn}; -1 when not measured
};
CombinatorialResult solve_combinatorial(const Instance& inst, std::uint64_t seed,
                                        std::uint64_t trial_budget);

// Full scan of C in message order; ground truth.
struct ExhaustiveResult {
    bool found = false;
    Solution sol;
};
ExhaustiveResult solve_exhaustive(const Instance& inst);

// Rewrite of the instance as equations in the systematic coordinates y
// (y G_bar = x), specialized at positions J to values t: k' block equations
// over the surviving block variables plus m - k mixed equations
// p_i(z S + t T) through the R blocks.
struct SpecializedSystem {
    std::vector<int> J;              // fixed positions in [0, k*n), sorted
    bitmat::BitVec t_vals;           // values aligned with J
    int k_prime = 0;                 // blocks with at least one free variable
    std::vector<int> block_sizes;    // n_i per surviving block
    std::vector<int> z_of_global;    // global y position -> z index, -1 if fixed
    std::vector<AnfPoly> equations;  // k' block equations then m-k mixed equations
    std::vector<bitmat::BitMatrix> S;  // per mixed equation: free rows of R_j
    std::vector<bitmat::BitMatrix> T;  // per mixed equation: fixed rows of R_j
    bool well_defined = false;       // sum n_i == m - k + k'
    int n_eqs() const { return int(equations.size()); }
    int n_vars() const;
};

SpecializedSystem specialize_system(const Instance& inst, const std::vector<int>& J,
                                    const bitmat::BitVec& t_vals);

enum class SpecializeStrategy { full_blocks, even };

// J and t for a strategy: full_blocks leaves ceil(k_dual/(n-1)) blocks free
// (the last one partially) and fixes every fully-fixed block to a root of
// its polynomial; even spreads the m - k + k extra freedoms over all blocks.
std::pair<std::vector<int>, bitmat::BitVec> choose_specialization(const Instance& inst,
                                                                  SpecializeStrategy strategy,
                                                                  std::uint64_t seed);

// Pure count arithmetic of the full_blocks strategy for given parameters.
struct SpecializationShape {
    int k_prime = 0;
    std::vector<int> block_sizes;
    int n_eqs = 0;
    int n_vars = 0;
};
SpecializationShape full_blocks_shape(int n, int m, int k_dual);

// Back-substitute a z assignment of a specialized system into a candidate
// solution of the instance.
Solution lift_specialized_assignment(const Instance& inst, const SpecializedSystem& sys,
                                     const bitmat::BitVec& z);

// Monte Carlo restriction experiment: frequency with which a uniform
// degree-<=3 polynomial drops to degree <= 2 on a random affine subspace
// of the given codimension.
struct SubspaceReport {
    int n = 0, codim = 0;
    std::uint64_t trials = 0;
    std::uint64_t drop_events = 0;
    double frequency = 0;
    double predicted = 0;              // 2^{-C(n-codim, 3)}
    std::uint64_t degree_le2_samples = 0;  // sampled p already of degree <= 2
};
SubspaceReport subspace_degree_experiment(int n, int codim, std::uint64_t trials,
                                          std::uint64_t seed);

}  // namespace polyqd::solvers
