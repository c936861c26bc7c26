#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyqd/boolpoly.hpp"
#include "polyqd/rscode.hpp"

namespace polyqd::instance {

using boolpoly::AnfPoly;
using gf2e::Elem;

struct Params {
    int n = 0, m = 0, d = 0;
    int k_dual = 0;               // alpha = 1 - k_dual/m
    Rational epsilon;
    std::uint64_t seed = 0;
    bool reject_rootless = true;
    std::uint32_t modulus = 0;    // 0 = lexicographically least irreducible for n
    std::vector<Elem> gamma;      // empty = field elements 0..m-1
};

// strict additionally enforces 7/8 + (3/4)eps < alpha < 1; desk keeps only
// what decoding needs: 1 - sqrt(1-alpha) > 1/2 + eps.
enum class Mode { desk, strict };

// Throws parameter_error naming the violated inequality.
void validate_params(const Params& p, Mode mode);

struct Instance {
    Params params;
    gf2e::FieldPtr ctx;
    rscode::CodePair code;
    std::vector<AnfPoly> polys;  // m polynomials, block i over variables x_{i,1..n}
};

// Deterministic under params.seed. Polynomials are i.i.d. uniform of degree
// <= d; with reject_rootless, the constant-1 polynomial (the unique
// rootless function) is resampled.
Instance gen(const Params& p, Mode mode = Mode::desk);

// Same construction without the parameter inequalities, for diagnostic
// configurations outside the decodable window (the exhaustive Decode rule
// is total, so the simulator still runs on these).
Instance assemble(const Params& p);

// Solution candidate: mn bits, block i in bits [(i-1)n, in).
struct Solution {
    bitmat::BitVec y;
};

struct VerifyResult {
    bool valid = false;
    std::string failed_constraint;  // "", "length", "parity", or "poly"
    int poly_index = -1;
};

VerifyResult verify(const Instance& inst, const Solution& sol);

// Exact number of simultaneous solutions, enumerating whichever of the
// codeword set or the root-tuple set is smaller; capability error above
// 2^24 on both sides.
std::uint64_t solution_count(const Instance& inst);

// Heuristic expected count |C| * prod_i (N_{p_i} / 2^n), reported alongside
// the exact count in diagnostics.
double heuristic_solution_count(const Instance& inst);

// Per-block symbols of a solution.
std::vector<Elem> solution_symbols(const Instance& inst, const Solution& sol);
Solution solution_from_symbols(const Instance& inst, const std::vector<Elem>& syms);

// JSON round trip; serialization is byte-deterministic for a given value.
std::string to_json(const Instance& inst);
Instance from_json(const std::string& text);
std::string solution_to_json(const Solution& sol);
Solution solution_from_json(const std::string& text);

}  // namespace polyqd::instance
