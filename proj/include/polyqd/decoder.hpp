#pragma once

#include <span>
#include <vector>

#include "polyqd/rscode.hpp"

namespace polyqd::decoder {

using rscode::CodePair;
using rscode::Elem;

struct DecodeOutcome {
    std::vector<Elem> codeword;  // zero vector when unique_flag is false
    bool unique_flag = false;    // exactly one candidate passed the threshold
};

enum class Backend { bruteforce, gs };

// Largest integer e with e < m - sqrt(k*m), i.e. every codeword within
// distance e is guaranteed recoverable by list decoding.
int gs_radius(int m, int k);

// Exact oracle: all codewords of C_perp within symbol distance <= radius.
// Requires 2^{n*k_dual} <= 2^20.
std::vector<std::vector<Elem>> list_decode_bruteforce(const CodePair& code,
                                                      std::span<const Elem> z, int radius);

// Guruswami-Sudan interpolation decoder: exactly the codewords of C_perp
// within distance gs_radius(m, k_dual) of z. Interpolation multiplicity is
// the smallest one meeting the radius bound; rank deficiency retries with
// a higher multiplicity and finally raises an error.
std::vector<std::vector<Elem>> list_decode_gs(const CodePair& code, std::span<const Elem> z);

// Requires (1/2 + eps)m < m - sqrt(k_dual * m) so the list covers the
// threshold ball (exact integer check).
bool decode_precondition_ok(const CodePair& code, const Rational& eps);

// Two-step decode: list decode C_perp, then keep the unique candidate x
// with hw(z - x) <= (1/2 + eps)m; zero vector with unique_flag=false when
// no candidate or more than one.
DecodeOutcome decode(const CodePair& code, std::span<const Elem> z, const Rational& eps,
                     Backend backend = Backend::bruteforce);

}  // namespace polyqd::decoder
