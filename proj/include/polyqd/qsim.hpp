#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polyqd/decoder.hpp"
#include "polyqd/instance.hpp"
#include "polyqd/rng.hpp"

namespace polyqd::qsim {

using instance::Instance;

// Real amplitude vector over basis states indexed by packed words
// (symbol i at bits [i*n, (i+1)*n)).
struct StateVec {
    int log_size = 0;
    std::vector<double> amp;
    double norm_sq() const;
};

// Joint state keyed by first-register basis value; every key is a dual
// codeword (Decode outputs lie in C_perp, which is closed under the
// subtraction in U_decode).
struct SparseJointState {
    std::vector<std::uint32_t> key_codeword;   // packed codeword per key index
    std::vector<std::vector<double>> vecs;     // second-register amplitudes per key
    double total_norm_sq() const;
};

struct Sample {
    std::uint64_t y = 0;
    bool valid = false;
};

struct RunOptions {
    int samples = 0;
    std::uint64_t seed = 1;
    bool cheat_decode = false;      // replace Decode by the true first-register value
    bool compute_bad_mass = true;
    decoder::Backend decode_backend = decoder::Backend::bruteforce;
};

struct RunReport {
    std::string backend;
    std::uint64_t solution_count = 0;
    double success_probability = 0;   // Pr[register-2 measurement solves the instance]
    double zero_branch_mass = 0;      // squared mass with first register = 0
    double zero_branch_success = 0;   // valid mass inside the zero branch
    double residual_mass = 0;         // squared mass on nonzero first-register keys
    double fidelity_to_ideal = 0;     // against the normalized pointwise product V.W
    double mu_hat = -1, delta_hat = -1;  // bad-set masses; -1 when not computed
    double max_stage_norm_err = 0;    // max |norm^2 - 1| across unitary stages
    std::vector<Sample> samples;
    std::vector<double> zero_branch;  // final zero-branch amplitudes (dense backend only)
};

// Amplitude W^P(e) on root tuples, built directly; the measure-and-retry
// preparation loop is sample_root_rejection below.
StateVec prepare_phi(const Instance& inst);
// Amplitude |C|^{-1/2} on primal codewords.
StateVec prepare_psi(const Instance& inst);

// Literal joint-register pipeline; requires 2*n*m <= 20.
RunReport run_dense(const Instance& inst, const RunOptions& opts);

// Joint state keyed by the first register (supp(V-hat) = C_perp);
// requires n*m <= 26 and 2^{n*k_dual} <= 2^10.
RunReport run_structured(const Instance& inst, const RunOptions& opts);

// (mu_hat, delta_hat): squared Fourier mass on undecodable errors, and the
// coherent bad-set sum over z. Requires 2^{nm} * 2^{n*k_dual} <= 2^28.
std::pair<double, double> bad_mass(const Instance& inst);

// Materialized joint state after U_decode (before the final QFT); keys are
// the dual codewords. Requires 2^{n(m + k_dual)} <= 2^22.
SparseJointState joint_after_decode(const Instance& inst);

// Measure-and-retry preparation of one root of p: draw uniform x until
// p(x) = 0. Expected tries 2^n / N_p.
struct RootDraw {
    std::uint32_t root = 0;
    std::uint64_t tries = 0;
};
RootDraw sample_root_rejection(const boolpoly::AnfPoly& p, Rng& rng);

// Exact solution set of the instance as sorted packed words.
std::vector<std::uint64_t> solution_set(const Instance& inst);

std::string report_to_json(const RunReport& rep, const Instance& inst, const RunOptions& opts);

}  // namespace polyqd::qsim
