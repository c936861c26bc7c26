#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "polyqd/rng.hpp"
#include "polyqd/rscode.hpp"

using namespace polyqd;
using gf2e::Elem;

namespace {

rscode::CodePair small_code(int n, int m, int k_dual) {
    auto f = gf2e::field_new(n);
    return rscode::build_codes(f, m, k_dual, rscode::default_gamma(*f, m));
}

}  // namespace

TEST_CASE("repetition structure at k_dual = 1") {
    auto code = small_code(3, 4, 1);
    // C_perp = constants
    for (std::uint64_t idx = 0; idx < 8; ++idx) {
        auto cw = rscode::dual_codeword(code, idx);
        for (auto s : cw) CHECK(s == cw[0]);
    }
    // |C| = 2^{n * k_primal} = 2^9 and every codeword checks against H
    std::set<std::vector<Elem>> seen;
    for (std::uint64_t idx = 0; idx < (1u << 9); ++idx) {
        auto cw = rscode::primal_codeword(code, idx);
        CHECK(rscode::is_codeword(code, cw, rscode::Which::primal));
        seen.insert(cw);
    }
    CHECK(seen.size() == (1u << 9));
}

TEST_CASE("G * H^T = 0 over the field for several parameter sets") {
    for (auto [n, m, k] : {std::tuple{3, 8, 1}, {3, 8, 2}, {4, 16, 2}, {4, 10, 3}, {5, 20, 4}}) {
        auto code = small_code(n, m, k);
        const auto& f = *code.ctx;
        for (int r = 0; r < code.G.rows(); ++r)
            for (int s = 0; s < code.H.rows(); ++s) {
                Elem acc = 0;
                for (int i = 0; i < m; ++i) acc ^= f.mul(code.G.at(r, i), code.H.at(s, i));
                REQUIRE(acc == 0);
            }
    }
}

TEST_CASE("encode_dual evaluates the message polynomial") {
    auto code = small_code(3, 6, 2);
    const auto& f = *code.ctx;
    std::vector<Elem> msg{0b011, 0b101};
    auto cw = rscode::encode_dual(code, msg);
    for (int i = 0; i < 6; ++i)
        CHECK(cw[i] == (msg[0] ^ f.mul(msg[1], code.gamma[i])));
    CHECK(rscode::is_codeword(code, cw, rscode::Which::dual));

    std::vector<Elem> zero{0, 0};
    auto zcw = rscode::encode_dual(code, zero);
    for (auto s : zcw) CHECK(s == 0);
    CHECK_THROWS_AS(rscode::encode_dual(code, std::vector<Elem>{1}), parameter_error);
}

TEST_CASE("is_codeword distinguishes primal and dual") {
    auto code = small_code(3, 8, 2);
    std::vector<Elem> zero(8, 0);
    CHECK(rscode::is_codeword(code, zero, rscode::Which::primal));
    CHECK(rscode::is_codeword(code, zero, rscode::Which::dual));
    // a generator row of G is in C; the top row is generically not in
    // C_perp (here gamma covers the whole field, so low rows of G happen to
    // coincide with rows of H -- pick a degree above k_dual)
    std::vector<Elem> grow(8);
    for (int i = 0; i < 8; ++i) grow[i] = code.G.at(5, i);
    CHECK(rscode::is_codeword(code, grow, rscode::Which::primal));
    CHECK_FALSE(rscode::is_codeword(code, grow, rscode::Which::dual));
    // unit vector is not in C_perp (minimum distance m - k_dual + 1 > 1)
    std::vector<Elem> e1(8, 0);
    e1[0] = 1;
    CHECK_FALSE(rscode::is_codeword(code, e1, rscode::Which::dual));
}

TEST_CASE("extension-field Hamming weight") {
    std::vector<Elem> z(4, 0);
    CHECK(rscode::hamming_weight_ext(z) == 0);
    z[1] = 5;
    CHECK(rscode::hamming_weight_ext(z) == 1);
    std::vector<Elem> all{1, 2, 3, 4};
    CHECK(rscode::hamming_weight_ext(all) == 4);
}

TEST_CASE("MDS: every nonzero dual codeword has weight >= m - k_dual + 1") {
    for (auto [n, m, k] : {std::tuple{3, 8, 1}, {3, 8, 2}, {4, 16, 2}}) {
        auto code = small_code(n, m, k);
        std::uint64_t total = std::uint64_t(1) << (n * k);
        for (std::uint64_t idx = 1; idx < total; ++idx) {
            auto cw = rscode::dual_codeword(code, idx);
            REQUIRE(rscode::hamming_weight_ext(cw) >= m - k + 1);
        }
    }
}

TEST_CASE("binary images: G_bar rows are codeword expansions, H_bar checks them") {
    auto code = small_code(3, 8, 2);
    int n = 3;
    // Random binary messages: expansion of the encoded word satisfies H_bar.
    Rng rng(77);
    for (int t = 0; t < 50; ++t) {
        bitmat::BitVec msg(code.k_primal * n);
        for (int i = 0; i < msg.size(); ++i) msg.set(i, rng.next_bit());
        bitmat::BitVec cw_bits = code.G_bar.mul_left(msg);
        // parity over F2
        for (int r = 0; r < code.H_bar.rows(); ++r)
            REQUIRE(code.H_bar.row(r).dot(cw_bits) == 0);
    }
    // G_bar * H_bar^T = 0 checked row by row above; ranks are complementary.
    CHECK(code.G_bar.rank() == code.k_primal * n);
    CHECK(code.H_bar.rank() == code.k_dual * n);
}

TEST_CASE("binary image of the symbol encoder matches expand_bits") {
    auto code = small_code(4, 6, 2);
    int n = 4;
    Rng rng(99);
    for (int t = 0; t < 50; ++t) {
        std::vector<Elem> msg(code.k_primal);
        for (auto& s : msg) s = Elem(rng.next_bits(n));
        auto cw = rscode::encode_primal(code, msg);
        // expand the message, push through G_bar
        bitmat::BitVec msg_bits(code.k_primal * n);
        for (int i = 0; i < code.k_primal; ++i)
            for (int j = 0; j < n; ++j)
                if ((msg[i] >> j) & 1) msg_bits.set(i * n + j, 1);
        bitmat::BitVec via_bar = code.G_bar.mul_left(msg_bits);
        REQUIRE(via_bar == rscode::expand_bits(code, cw));
    }
}

TEST_CASE("systematic form: no permutation needed for RS, R full rank") {
    for (auto [n, m, k] : {std::tuple{3, 8, 1}, {3, 8, 2}, {4, 16, 2}}) {
        auto code = small_code(n, m, k);
        CHECK_FALSE(code.permuted);  // MDS keeps every leading minor nonsingular
        CHECK(code.R.rows() == code.k_primal * n);
        CHECK(code.R.cols() == code.k_dual * n);
        int expect = n * std::min(code.k_primal, code.k_dual);
        CHECK(code.R.rank() == expect);
        // [I | P] re-encodes to a codeword of the (possibly permuted) code:
        // row r of P extends unit message r.
        const auto& f = *code.ctx;
        for (int r = 0; r < code.k_primal; ++r) {
            std::vector<Elem> word(m, 0);
            for (int c = 0; c < code.k_primal; ++c) word[code.sys_perm[c]] = (c == r);
            for (int c = 0; c < code.k_dual; ++c)
                word[code.sys_perm[code.k_primal + c]] = code.P.at(r, c);
            REQUIRE(rscode::is_codeword(code, word, rscode::Which::primal));
        }
        (void)f;
    }
}

TEST_CASE("build_codes rejects bad inputs") {
    auto f = gf2e::field_new(3);
    auto gamma = rscode::default_gamma(*f, 8);
    CHECK_THROWS_AS(rscode::build_codes(f, 9, 1, rscode::default_gamma(*f, 8)), parameter_error);
    auto repeated = gamma;
    repeated[1] = repeated[0];
    CHECK_THROWS_AS(rscode::build_codes(f, 8, 1, repeated), parameter_error);
    CHECK_THROWS_AS(rscode::build_codes(f, 8, 0, gamma), parameter_error);
    CHECK_THROWS_AS(rscode::build_codes(f, 8, 8, gamma), parameter_error);
}
