#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "polyqd/decoder.hpp"
#include "polyqd/rng.hpp"

using namespace polyqd;
using gf2e::Elem;

namespace {

rscode::CodePair small_code(int n, int m, int k_dual) {
    auto f = gf2e::field_new(n);
    return rscode::build_codes(f, m, k_dual, rscode::default_gamma(*f, m));
}

std::vector<Elem> word(std::initializer_list<Elem> v) { return {v}; }

}  // namespace

TEST_CASE("gs_radius integer arithmetic") {
    CHECK(decoder::gs_radius(8, 1) == 5);    // m - (floor(sqrt(8)) + 1)
    CHECK(decoder::gs_radius(16, 2) == 10);  // floor(sqrt(32)) = 5
    CHECK(decoder::gs_radius(9, 1) == 5);    // sqrt(9) exact: agreement must exceed 3
}

TEST_CASE("brute-force list decoding on the repetition dual") {
    auto code = small_code(3, 4, 1);
    auto z = word({5, 5, 5, 2});
    auto l2 = decoder::list_decode_bruteforce(code, z, 2);
    REQUIRE(l2.size() == 1);
    CHECK(l2[0] == word({5, 5, 5, 5}));
    // exact codeword at radius 0
    auto l0 = decoder::list_decode_bruteforce(code, word({3, 3, 3, 3}), 0);
    REQUIRE(l0.size() == 1);
    CHECK(l0[0] == word({3, 3, 3, 3}));
    // radius m returns the whole dual code
    CHECK(decoder::list_decode_bruteforce(code, z, 4).size() == 8);
}

TEST_CASE("GS list contains an exact codeword and a planted neighbour") {
    auto code = small_code(3, 8, 1);
    for (Elem c = 0; c < 8; ++c) {
        std::vector<Elem> z(8, c);
        auto list = decoder::list_decode_gs(code, z);
        CHECK(std::find(list.begin(), list.end(), z) != list.end());
        // plant one error
        auto z1 = z;
        z1[3] ^= 0b110;
        auto list1 = decoder::list_decode_gs(code, z1);
        CHECK(std::find(list1.begin(), list1.end(), z) != list1.end());
    }
}

TEST_CASE("GS agrees with brute force at the guaranteed radius: 1000 planted trials") {
    auto code = small_code(3, 8, 1);
    int radius = decoder::gs_radius(8, 1);
    Rng rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        auto cw = rscode::dual_codeword(code, rng.next_below(8));
        auto z = cw;
        int werr = int(rng.next_below(radius + 2));  // sometimes beyond the radius
        for (int e = 0; e < werr; ++e)
            z[rng.next_below(8)] ^= Elem(rng.next_bits(3));
        auto bf = decoder::list_decode_bruteforce(code, z, radius);
        auto gs = decoder::list_decode_gs(code, z);
        std::sort(bf.begin(), bf.end());
        REQUIRE(bf == gs);
    }
}

TEST_CASE("GS on a two-symbol message code") {
    auto code = small_code(4, 16, 2);
    int radius = decoder::gs_radius(16, 2);
    Rng rng(10);
    for (int trial = 0; trial < 100; ++trial) {
        auto cw = rscode::dual_codeword(code, rng.next_below(1u << 8));
        auto z = cw;
        for (int e = 0; e < radius; ++e) z[rng.next_below(16)] ^= Elem(rng.next_bits(4));
        auto gs = decoder::list_decode_gs(code, z);
        REQUIRE(std::find(gs.begin(), gs.end(), cw) != gs.end());
        auto bf = decoder::list_decode_bruteforce(code, z, radius);
        std::sort(bf.begin(), bf.end());
        REQUIRE(bf == gs);
    }
}

TEST_CASE("decode: planted errors under the threshold recover the codeword") {
    auto code = small_code(3, 8, 1);
    Rational eps(1, 10);  // threshold 4.8 symbols
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        Elem c = Elem(rng.next_below(8));
        std::vector<Elem> z(8, c);
        // distinct nonzero deltas in 4 positions leave no competing constant
        std::vector<Elem> deltas{1, 2, 3, 4};
        for (int i = 0; i < 4; ++i) z[2 * i] ^= deltas[i];
        for (auto backend : {decoder::Backend::bruteforce, decoder::Backend::gs}) {
            auto out = decoder::decode(code, z, eps, backend);
            REQUIRE(out.unique_flag);
            REQUIRE(out.codeword == std::vector<Elem>(8, c));
        }
    }
    // exact codeword decodes to itself
    auto out = decoder::decode(code, std::vector<Elem>(8, 6), eps);
    CHECK(out.unique_flag);
    CHECK(out.codeword == std::vector<Elem>(8, 6));
}

TEST_CASE("decode: ambiguous midpoint yields zero with unique_flag false") {
    auto code = small_code(4, 16, 2);
    Rational eps(1, 8);  // threshold 10; gs radius 10 covers it
    REQUIRE(decoder::decode_precondition_ok(code, eps));
    auto c1 = rscode::dual_codeword(code, 1);
    auto c2 = rscode::dual_codeword(code, 2);
    std::vector<int> diff;
    for (int i = 0; i < 16; ++i)
        if (c1[i] != c2[i]) diff.push_back(i);
    REQUIRE(diff.size() >= 15);
    // agree with c1 on the first 8 differing positions, with c2 on the rest
    auto z = c2;
    for (int i = 0; i < 8; ++i) z[diff[i]] = c1[diff[i]];
    REQUIRE(rscode::hamming_distance_ext(z, c1) <= 10);
    REQUIRE(rscode::hamming_distance_ext(z, c2) <= 10);
    for (auto backend : {decoder::Backend::bruteforce, decoder::Backend::gs}) {
        auto out = decoder::decode(code, z, eps, backend);
        CHECK_FALSE(out.unique_flag);
        CHECK(out.codeword == std::vector<Elem>(16, 0));
    }
}

TEST_CASE("decode rejects parameters whose list cannot cover the threshold") {
    auto code = small_code(3, 8, 2);  // needs 4*b^2*2 < (b-2a)^2*8
    CHECK_THROWS_AS(decoder::decode(code, std::vector<Elem>(8, 0), Rational(1, 10)),
                    parameter_error);
}

TEST_CASE("decode shift relation over the dual code") {
    auto code = small_code(3, 8, 1);
    Rational eps(1, 10);
    Rng rng(64);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Elem> z(8);
        for (auto& s : z) s = Elem(rng.next_bits(3));
        auto base = decoder::decode(code, z, eps);
        for (std::uint64_t idx = 0; idx < 8; ++idx) {
            auto cw = rscode::dual_codeword(code, idx);
            auto zs = z;
            for (int i = 0; i < 8; ++i) zs[i] ^= cw[i];
            auto shifted = decoder::decode(code, zs, eps);
            REQUIRE(shifted.unique_flag == base.unique_flag);
            if (base.unique_flag) {
                for (int i = 0; i < 8; ++i)
                    REQUIRE(shifted.codeword[i] == (base.codeword[i] ^ cw[i]));
            }
        }
    }
}

TEST_CASE("empirical decodability improves with larger n, m at fixed rate") {
    // Per-symbol error: 0 with probability 1/2, otherwise uniform nonzero.
    auto run = [](int n, int m, int k, int trials, std::uint64_t seed) {
        auto code = small_code(n, m, k);
        Rational eps(1, 10);
        Rng rng(seed);
        int failures = 0;
        for (int t = 0; t < trials; ++t) {
            std::vector<Elem> e(m, 0);
            for (auto& s : e)
                if (rng.next_bit()) s = Elem(1 + rng.next_below((1u << n) - 1));
            auto out = decoder::decode(code, e, eps);
            bool good = out.unique_flag && rscode::hamming_weight_ext(out.codeword) == 0;
            failures += !good;
        }
        return double(failures) / trials;
    };
    double f_small = run(3, 8, 1, 2000, 555);
    double f_big = run(4, 16, 2, 2000, 556);
    // Binomial noise is about 0.01 at 2000 trials; require a clear drop.
    CHECK(f_big < f_small - 0.05);
}
