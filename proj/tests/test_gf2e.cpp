#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <set>

#include "polyqd/gf2e.hpp"
#include "polyqd/rng.hpp"

using namespace polyqd;
using gf2e::Elem;

TEST_CASE("default moduli match the published least-irreducible table") {
    CHECK(gf2e::FieldCtx::default_modulus(3) == 0b1011);     // x^3+x+1
    CHECK(gf2e::FieldCtx::default_modulus(4) == 0b10011);    // x^4+x+1
    CHECK(gf2e::FieldCtx::default_modulus(8) == 0b100011011);
}

TEST_CASE("field_new accepts x^3+x+1 and rejects x^3+1") {
    CHECK_NOTHROW(gf2e::field_new(3, 0b1011));
    CHECK_THROWS_WITH_AS(gf2e::field_new(3, 0b1001),
                         doctest::Contains("divisible by x+1"), parameter_error);
    CHECK_THROWS_AS(gf2e::field_new(3, 0b101011), parameter_error);  // degree mismatch
}

TEST_CASE("multiplication in GF(8): x * x^2 = x + 1") {
    auto f = gf2e::field_new(3, 0b1011);
    CHECK(f->mul(0b010, 0b100) == 0b011);
    for (Elem a = 0; a < 8; ++a) {
        CHECK(f->mul(a, 1) == a);
        CHECK(f->mul(a, 0) == 0);
    }
}

TEST_CASE("trace basics") {
    auto f = gf2e::field_new(3);
    CHECK(f->trace(0) == 0);
    CHECK(f->trace(1) == 1);  // n odd: trace(1) = n mod 2
    int zeros = 0;
    for (Elem a = 0; a < 8; ++a) zeros += (f->trace(a) == 0);
    CHECK(zeros == 4);  // the trace is a balanced linear form
}

TEST_CASE("sigma: zero, bijection, duality on GF(8)") {
    auto f = gf2e::field_new(3);
    CHECK(f->sigma(0) == 0);
    std::set<std::uint32_t> img;
    for (Elem e = 0; e < 8; ++e) img.insert(f->sigma(e));
    CHECK(img.size() == 8);
    for (Elem e = 0; e < 8; ++e)
        for (Elem z = 0; z < 8; ++z)
            CHECK(f->trace(f->mul(e, z)) == (std::popcount(f->sigma(e) & z) & 1));
}

TEST_CASE("field axioms on random triples for larger n") {
    for (int n : {5, 8, 11, 16}) {
        auto f = gf2e::field_new(n);
        Rng rng(42 + n);
        for (int t = 0; t < 10000; ++t) {
            Elem a = Elem(rng.next_bits(n)), b = Elem(rng.next_bits(n)), c = Elem(rng.next_bits(n));
            REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            REQUIRE(f->mul(a, b ^ c) == (f->mul(a, b) ^ f->mul(a, c)));
            REQUIRE(f->mul(a, b) == f->mul(b, a));
        }
    }
}

TEST_CASE("trace bilinear form is symmetric and nondegenerate up to n = 8") {
    for (int n = 1; n <= 8; ++n) {
        auto f = gf2e::field_new(n);
        std::uint32_t q = f->order();
        for (Elem x = 1; x < q; ++x) {
            bool hits = false;
            for (Elem y = 0; y < q && !hits; ++y) hits = f->trace(f->mul(x, y)) != 0;
            REQUIRE(hits);  // kernel of the pairing is {0}
        }
    }
}

TEST_CASE("inverse and pow") {
    auto f = gf2e::field_new(6);
    for (Elem a = 1; a < f->order(); ++a) {
        CHECK(f->mul(a, f->inv(a)) == 1);
        CHECK(f->pow(a, f->order() - 1) == 1);  // Lagrange
    }
    CHECK_THROWS_AS(f->inv(0), parameter_error);
}
