#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "polyqd/boolpoly.hpp"

using namespace polyqd;
using boolpoly::AnfPoly;
using boolpoly::Mask;

namespace {
AnfPoly make(int n, int d, std::vector<Mask> ms) { return AnfPoly(n, d, std::move(ms)); }
}

TEST_CASE("evaluation matches truth-table semantics") {
    // x1 x2 x3 at the all-ones point
    CHECK(make(3, 3, {0b111}).eval(0b111) == 1);
    // 1 + x1 at any point with x1 = 1
    CHECK(make(3, 3, {0, 0b001}).eval(0b001) == 0);
    CHECK(make(3, 3, {0, 0b001}).eval(0b101) == 0);
    // x1x2 + x2x3 over n=3 vanishes on exactly 6 of 8 inputs
    auto p = make(3, 2, {0b011, 0b110});
    int zeros = 0;
    for (std::uint32_t x = 0; x < 8; ++x) zeros += (p.eval(x) == 0);
    CHECK(zeros == 6);
    CHECK_THROWS_AS(make(2, 2, {0b11}).eval(0b100), parameter_error);
}

TEST_CASE("roots of degenerate polynomials") {
    CHECK(boolpoly::roots(make(3, 2, {})).size() == 8);      // zero polynomial
    CHECK(boolpoly::roots(make(3, 2, {0})).empty());         // constant one
    auto r = boolpoly::roots(make(3, 1, {0b001}));           // p = x1
    CHECK(r.size() == 4);
    for (auto x : r) CHECK((x & 1) == 0);
    CHECK(make(3, 2, {0}).is_one());
    CHECK(make(3, 2, {}).is_zero());
}

TEST_CASE("degree bound is enforced and reported") {
    CHECK_THROWS_AS(make(3, 1, {0b011}), parameter_error);
    CHECK(make(3, 2, {0b011, 0b001}).degree() == 2);
    CHECK(make(3, 2, {}).degree() == -1);
}

TEST_CASE("shift: zero shift, involution, hand example") {
    auto p = make(2, 2, {0b11});  // x1 x2
    CHECK(boolpoly::shift(p, 0) == p);
    // x1 <- x1 + 1: x1x2 + x2
    auto sh = boolpoly::shift(p, 0b01);
    CHECK(sh == make(2, 2, {0b11, 0b10}));
    // involution on random polynomials
    Rng rng(5);
    boolpoly::PolyDistribution dist{6, 3};
    for (int t = 0; t < 200; ++t) {
        AnfPoly q = boolpoly::sample(dist, rng);
        std::uint32_t z = std::uint32_t(rng.next_bits(6));
        AnfPoly qq = boolpoly::shift(boolpoly::shift(q, z), z);
        REQUIRE(qq == q);
        REQUIRE(boolpoly::shift(q, z).degree() == q.degree());
    }
}

TEST_CASE("roots of a shift are the shifted roots") {
    Rng rng(11);
    boolpoly::PolyDistribution dist{4, 2};
    for (int t = 0; t < 100; ++t) {
        AnfPoly p = boolpoly::sample(dist, rng);
        std::uint32_t z = std::uint32_t(rng.next_bits(4));
        auto r1 = boolpoly::roots(boolpoly::shift(p, z));
        std::set<std::uint32_t> expect;
        for (auto x : boolpoly::roots(p)) expect.insert(x ^ z);
        REQUIRE(std::set<std::uint32_t>(r1.begin(), r1.end()) == expect);
    }
}

TEST_CASE("sampler hits every degree-<=2 polynomial over 2 variables uniformly") {
    Rng rng(123);
    boolpoly::PolyDistribution dist{2, 2};
    std::map<std::vector<Mask>, int> freq;
    const int trials = 100000;
    for (int t = 0; t < trials; ++t) freq[boolpoly::sample(dist, rng).monomials()]++;
    CHECK(freq.size() == 16);
    double expect = trials / 16.0;
    double sigma = std::sqrt(trials * (1.0 / 16) * (15.0 / 16));
    for (auto& [ms, count] : freq) CHECK(std::abs(count - expect) <= 3 * sigma + 1);
}

TEST_CASE("empirical pairwise evaluations are quarter-split") {
    Rng rng(321);
    boolpoly::PolyDistribution dist{5, 3};
    const std::uint32_t x = 0b00101, y = 0b11000;
    int counts[4] = {0, 0, 0, 0};
    const int trials = 100000;
    for (int t = 0; t < trials; ++t) {
        AnfPoly p = boolpoly::sample(dist, rng);
        counts[p.eval(x) + 2 * p.eval(y)]++;
    }
    double sigma = std::sqrt(trials * 0.25 * 0.75);
    for (int c : counts) CHECK(std::abs(c - trials / 4.0) <= 3 * sigma);
}

TEST_CASE("count_joint: exact quarter splits") {
    auto c1 = boolpoly::count_joint(2, 2, 0b00, 0b01);
    for (auto c : c1) CHECK(c == 4);  // 16 polynomials split 4/4/4/4
    for (std::uint32_t x = 0; x < 8; ++x)
        for (std::uint32_t y = 0; y < 8; ++y) {
            if (x == y) continue;
            auto c = boolpoly::count_joint(3, 2, x, y);
            std::uint64_t each = (std::uint64_t(1) << 7) / 4;
            for (auto v : c) REQUIRE(v == each);
        }
    // affine case d=1 is also balanced for these points
    auto c2 = boolpoly::count_joint(2, 1, 0b00, 0b11);
    for (auto c : c2) CHECK(c == 2);
    CHECK_THROWS_AS(boolpoly::count_joint(2, 2, 0b01, 0b01), parameter_error);
}

TEST_CASE("variety moments by full enumeration, n <= 3, d = 2") {
    for (int n = 1; n <= 3; ++n) {
        auto monos = boolpoly::monomials_up_to_degree(n, 2);
        std::uint64_t support = std::uint64_t(1) << monos.size();
        std::uint64_t sum = 0, sumsq = 0;
        for (std::uint64_t bits = 0; bits < support; ++bits) {
            std::vector<Mask> ms;
            for (std::size_t i = 0; i < monos.size(); ++i)
                if ((bits >> i) & 1) ms.push_back(monos[i]);
            std::uint64_t np = boolpoly::root_count(AnfPoly(n, 2, ms));
            sum += np;
            sumsq += np * np;
        }
        // E[N] = 2^{n-1}
        CHECK(sum == support << (n - 1));
        // E[(N - mu)^2] = 2^{n-2}: 4*E[N^2] - 4 mu^2 = 2^n
        CHECK(4 * sumsq - support * (std::uint64_t(1) << (2 * n)) == support << n);
    }
}
