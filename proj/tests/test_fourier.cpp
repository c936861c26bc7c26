#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "polyqd/fourier.hpp"
#include "polyqd/rng.hpp"

using namespace polyqd;
using boolpoly::AnfPoly;
using gf2e::Elem;

namespace {

rscode::CodePair small_code(int n, int m, int k_dual) {
    auto f = gf2e::field_new(n);
    return rscode::build_codes(f, m, k_dual, rscode::default_gamma(*f, m));
}

double max_abs(const std::vector<double>& v) {
    double m = 0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

TEST_CASE("qft of the zero indicator is the uniform vector") {
    auto f = gf2e::field_new(3);
    std::vector<double> v(8, 0.0);
    v[0] = 1.0;
    fourier::qft_symbol(*f, v);
    for (double x : v) CHECK(x == doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-12));
}

TEST_CASE("qft matches the dense trace kernel and is an involution") {
    for (int n = 1; n <= 6; ++n) {
        auto f = gf2e::field_new(n);
        std::uint32_t q = f->order();
        Rng rng(n);
        std::vector<double> v(q);
        for (auto& x : v) x = 2.0 * rng.next_unit() - 1.0;

        std::vector<double> dense(q, 0.0);
        for (std::uint32_t y = 0; y < q; ++y)
            for (std::uint32_t x = 0; x < q; ++x) {
                double sign = f->trace(f->mul(Elem(x), Elem(y))) ? -1.0 : 1.0;
                dense[y] += sign * v[x];
            }
        for (auto& d : dense) d /= std::sqrt(double(q));

        auto w = v;
        fourier::qft_symbol(*f, w);
        for (std::uint32_t y = 0; y < q; ++y) REQUIRE(w[y] == doctest::Approx(dense[y]).epsilon(1e-11));

        fourier::qft_symbol(*f, w);  // M^2 = I: the trace form is symmetric
        for (std::uint32_t y = 0; y < q; ++y) REQUIRE(w[y] == doctest::Approx(v[y]).epsilon(1e-11));
    }
}

TEST_CASE("qft_full equals the dense transform for nm <= 10 and preserves norm") {
    auto f = gf2e::field_new(2);
    int m = 3;  // nm = 6
    std::uint32_t total = 1u << 6;
    Rng rng(9);
    std::vector<double> v(total);
    for (auto& x : v) x = 2.0 * rng.next_unit() - 1.0;

    std::vector<double> dense(total, 0.0);
    for (std::uint32_t y = 0; y < total; ++y)
        for (std::uint32_t x = 0; x < total; ++x) {
            int tr = 0;
            for (int i = 0; i < m; ++i) {
                Elem xi = (x >> (2 * i)) & 3, yi = (y >> (2 * i)) & 3;
                tr ^= f->trace(f->mul(xi, yi));
            }
            dense[y] += (tr ? -1.0 : 1.0) * v[x];
        }
    for (auto& d : dense) d /= std::sqrt(double(total));

    auto w = v;
    fourier::qft_full(*f, m, w);
    double norm_in = 0, norm_out = 0;
    for (std::uint32_t i = 0; i < total; ++i) {
        REQUIRE(w[i] == doctest::Approx(dense[i]).epsilon(1e-10));
        norm_in += v[i] * v[i];
        norm_out += w[i] * w[i];
    }
    CHECK(std::abs(norm_in - norm_out) < 1e-10);
}

TEST_CASE("product inputs transform to products (per-register factorization)") {
    auto f = gf2e::field_new(2);
    int m = 3;
    Rng rng(21);
    std::vector<std::vector<double>> parts(m, std::vector<double>(4));
    for (auto& p : parts)
        for (auto& x : p) x = 2.0 * rng.next_unit() - 1.0;
    std::uint32_t total = 1u << 6;
    std::vector<double> prod(total);
    for (std::uint32_t x = 0; x < total; ++x) {
        double a = 1;
        for (int i = 0; i < m; ++i) a *= parts[i][(x >> (2 * i)) & 3];
        prod[x] = a;
    }
    fourier::qft_full(*f, m, prod);
    for (auto& p : parts) fourier::qft_symbol(*f, p);
    for (std::uint32_t z = 0; z < total; ++z) {
        double expect = 1;
        for (int i = 0; i < m; ++i) expect *= parts[i][(z >> (2 * i)) & 3];
        REQUIRE(prod[z] == doctest::Approx(expect).epsilon(1e-10));
    }
}

TEST_CASE("weight functions: W on roots, V maps to the dual under qft") {
    // W for p = x1 over 3 variables: 1/2 on the four roots
    AnfPoly p(3, 2, {0b001});
    auto w = fourier::weight_W(p);
    for (std::uint32_t x = 0; x < 8; ++x)
        CHECK(w.values[x] == doctest::Approx((x & 1) ? 0.0 : 0.5));
    // |W-hat(0)|^2 = N_p / 2^n = 1/2 for this balanced p
    auto f = gf2e::field_new(3);
    auto what = w.values;
    fourier::qft_symbol(*f, what);
    CHECK(what[0] * what[0] == doctest::Approx(0.5).epsilon(1e-12));

    // rootless polynomial: all-zero weight with flag
    auto w1 = fourier::weight_W(AnfPoly(3, 2, {0}));
    CHECK(w1.empty_support);
    CHECK(max_abs(w1.values) == 0.0);

    // V-hat is |C_perp|^{-1/2} exactly on C_perp
    auto code = small_code(3, 4, 1);
    auto v = fourier::weight_V(code);
    auto vhat = v.values;
    fourier::qft_full(*f, 4, vhat);
    double expect = 1.0 / std::sqrt(8.0);
    for (std::uint64_t idx = 0; idx < 8; ++idx) {
        auto cw = rscode::dual_codeword(code, idx);
        std::uint64_t pos = 0;
        for (int i = 0; i < 4; ++i) pos |= std::uint64_t(cw[i]) << (3 * i);
        REQUIRE(std::abs(vhat[pos] - expect) < 1e-10);
        vhat[pos] = 0;
    }
    CHECK(max_abs(vhat) < 1e-10);  // nothing outside the dual
}

TEST_CASE("exhaustive spectrum statistics at n <= 3, d = 2 are exact") {
    Rng rng(1);
    for (int n = 2; n <= 3; ++n) {
        auto rep = fourier::spectrum_stats({n, 2}, 0, rng);
        REQUIRE(rep.exhaustive);
        // E[|W-hat(0)|^2] = 1/2 exactly (power-of-two denominators)
        CHECK(rep.w0_mean == 0.5);
        // E[P~(e)^2] = 2^{-n} exactly for every e
        for (double b : rep.boolsq_mean) CHECK(b == doctest::Approx(std::pow(2.0, -n)).epsilon(1e-12));
        // mass at 0 of the per-symbol error law is exactly 1/2; tails bounded
        for (std::size_t e = 1; e < rep.tail_mean.size(); ++e)
            CHECK(rep.tail_mean[e] <= std::pow(2.0, -n / 2.0) + 1e-12);
    }
}

TEST_CASE("Monte Carlo spectrum at n=6 d=3 obeys the tail bound") {
    Rng rng(42);
    auto rep = fourier::spectrum_stats({6, 3}, 3000, rng);
    CHECK_FALSE(rep.exhaustive);
    CHECK(std::abs(rep.w0_mean - 0.5) <= 3 * rep.w0_stderr + 1e-9);
    CHECK(rep.max_tail_mean <= std::pow(2.0, -3.0));
}

TEST_CASE("convolution identities and Boolean Parseval") {
    auto f = gf2e::field_new(2);
    Rng rng(1234);
    auto rep = fourier::convolution_check(*f, 2, 10, rng);
    CHECK(rep.max_err_product_rule < 1e-10);
    CHECK(rep.max_err_convolution_rule < 1e-10);
    CHECK(rep.max_err_mixed_rule < 1e-10);
    CHECK(rep.max_err_bool_parseval < 1e-10);
}

TEST_CASE("delta convolution: indicators add their supports") {
    // f = delta_a, g = delta_b; f*g = delta_{a+b}
    std::uint32_t a = 5, b = 9, total = 16;
    std::vector<double> fa(total, 0.0), gb(total, 0.0);
    fa[a] = 1.0;
    gb[b] = 1.0;
    std::vector<double> conv(total, 0.0);
    for (std::uint32_t x = 0; x < total; ++x)
        for (std::uint32_t y = 0; y < total; ++y)
            conv[x] += fa[y] * gb[x ^ y];
    for (std::uint32_t x = 0; x < total; ++x)
        CHECK(conv[x] == ((x == (a ^ b)) ? 1.0 : 0.0));
}

TEST_CASE("shift invariance makes E|(B * W)(z)|^2 independent of z") {
    auto f = gf2e::field_new(2);
    int m = 2, nm = 4;
    std::uint32_t total = 1u << nm;
    // fixed indicator B: words of extension weight <= 1
    std::vector<double> B(total, 0.0);
    for (std::uint32_t x = 0; x < total; ++x) {
        int w = ((x & 3) != 0) + (((x >> 2) & 3) != 0);
        if (w <= 1) B[x] = 1.0;
    }
    const std::uint32_t z1 = 0, z2 = 0b0110;
    Rng rng(777);
    boolpoly::PolyDistribution dist{2, 2};
    double s1 = 0, s1sq = 0, s2 = 0, s2sq = 0;
    const int trials = 4000;
    for (int t = 0; t < trials; ++t) {
        std::vector<double> w(total, 1.0);
        bool dead = false;
        for (int i = 0; i < m && !dead; ++i) {
            auto wf = fourier::weight_W(boolpoly::sample(dist, rng));
            if (wf.empty_support) dead = true;
            for (std::uint32_t x = 0; x < total; ++x) w[x] *= wf.values[(x >> (2 * i)) & 3];
        }
        if (dead) std::fill(w.begin(), w.end(), 0.0);
        auto conv_at = [&](std::uint32_t z) {
            double acc = 0;
            for (std::uint32_t x = 0; x < total; ++x) acc += B[x] * w[z ^ x];
            return acc;
        };
        double v1 = conv_at(z1), v2 = conv_at(z2);
        s1 += v1 * v1; s1sq += v1 * v1 * v1 * v1;
        s2 += v2 * v2; s2sq += v2 * v2 * v2 * v2;
    }
    double m1 = s1 / trials, m2 = s2 / trials;
    double se1 = std::sqrt((s1sq / trials - m1 * m1) / trials);
    double se2 = std::sqrt((s2sq / trials - m2 * m2) / trials);
    // confidence intervals for the two z choices overlap
    CHECK(std::abs(m1 - m2) <= 3 * (se1 + se2));
}
