#include "polyqd/fourier.hpp"

#include <cmath>

namespace polyqd::fourier {

using gf2e::Elem;

void fwht(std::span<double> v) {
    std::size_t n = v.size();
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                double a = v[j], b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

void qft_symbol(const FieldCtx& f, std::span<double> v) {
    std::size_t q = f.order();
    if (v.size() != q) throw parameter_error("fourier: vector length must be 2^n");
    std::vector<double> u(q);
    for (std::size_t x = 0; x < q; ++x) u[f.sigma(Elem(x))] = v[x];
    fwht(u);
    double scale = 1.0 / std::sqrt(double(q));
    for (std::size_t y = 0; y < q; ++y) v[y] = u[y] * scale;
    // trace(x*y) = <sigma(x), y>, so permuting by sigma turns the trace
    // kernel into the WHT kernel.
}

void qft_full(const FieldCtx& f, int m, std::span<double> v) {
    int n = f.n();
    if (n * m > 26) throw capability_error("fourier: qft_full capped at nm <= 26");
    std::size_t total = std::size_t(1) << (n * m);
    if (v.size() != total) throw parameter_error("fourier: vector length must be 2^(n*m)");
    std::size_t q = f.order();
    std::vector<double> scratch(q);
    double scale = 1.0 / std::sqrt(double(q));
    for (int axis = 0; axis < m; ++axis) {
        std::size_t stride = std::size_t(1) << (n * axis);
        std::size_t block = stride * q;
        for (std::size_t base = 0; base < total; base += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                double* p = v.data() + base + off;
                for (std::size_t x = 0; x < q; ++x) scratch[f.sigma(Elem(x))] = p[x * stride];
                fwht(scratch);
                for (std::size_t y = 0; y < q; ++y) p[y * stride] = scratch[y] * scale;
            }
        }
    }
}

WeightFn weight_W(const AnfPoly& p) {
    WeightFn w;
    w.log_size = p.n_vars();
    w.values.assign(std::size_t(1) << p.n_vars(), 0.0);
    auto rs = boolpoly::roots(p);
    if (rs.empty()) {
        w.empty_support = true;
        return w;
    }
    double a = 1.0 / std::sqrt(double(rs.size()));
    for (auto r : rs) w.values[r] = a;
    return w;
}

WeightFn weight_V(const rscode::CodePair& code) {
    int n = code.ctx->n();
    int nm = n * code.m;
    if (nm > 26 || n * code.k_primal > 26)
        throw capability_error("fourier: weight_V requires enumerable code and nm <= 26");
    WeightFn w;
    w.log_size = nm;
    w.values.assign(std::size_t(1) << nm, 0.0);
    std::uint64_t count = std::uint64_t(1) << (n * code.k_primal);
    double a = 1.0 / std::sqrt(double(count));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        auto cw = rscode::primal_codeword(code, idx);
        std::uint64_t pos = 0;
        for (int i = 0; i < code.m; ++i) pos |= std::uint64_t(cw[i]) << (n * i);
        w.values[pos] = a;
    }
    return w;
}

std::vector<double> bool_fourier(const AnfPoly& p) {
    std::size_t space = std::size_t(1) << p.n_vars();
    std::vector<double> pm(space);
    for (std::size_t x = 0; x < space; ++x) pm[x] = p.eval(std::uint32_t(x)) ? -1.0 : 1.0;
    fwht(pm);
    for (auto& t : pm) t /= double(space);
    return pm;
}

SpectrumReport spectrum_stats(const PolyDistribution& dist, std::uint64_t trials, Rng& rng) {
    int n = dist.n_vars;
    if (n > 10) throw capability_error("fourier: spectrum_stats capped at n <= 10");
    std::size_t q = std::size_t(1) << n;
    auto monos = boolpoly::monomials_up_to_degree(n, dist.d);

    SpectrumReport rep;
    rep.n = n;
    rep.d = dist.d;
    rep.exhaustive = monos.size() <= 20;

    std::vector<double> sum_w(q, 0.0), sum_w2(q, 0.0);
    std::vector<double> sum_b(q, 0.0);
    std::uint64_t samples;

    // A field context is only needed for the sigma permutation.
    auto f = gf2e::field_new(n);

    auto add_sample = [&](const AnfPoly& p) {
        // Rootless polynomials contribute the all-zero function.
        WeightFn w = weight_W(p);
        std::vector<double>& vals = w.values;
        if (!w.empty_support) qft_symbol(*f, vals);
        for (std::size_t e = 0; e < q; ++e) {
            double s = vals[e] * vals[e];
            sum_w[e] += s;
            sum_w2[e] += s * s;
        }
        auto bf = bool_fourier(p);
        for (std::size_t e = 0; e < q; ++e) sum_b[e] += bf[e] * bf[e];
    };

    if (rep.exhaustive) {
        std::uint64_t support = std::uint64_t(1) << monos.size();
        for (std::uint64_t bits = 0; bits < support; ++bits) {
            std::vector<boolpoly::Mask> ms;
            for (std::size_t i = 0; i < monos.size(); ++i)
                if ((bits >> i) & 1) ms.push_back(monos[i]);
            add_sample(AnfPoly(n, dist.d, std::move(ms)));
        }
        samples = support;
    } else {
        PolyDistribution d = dist;
        for (std::uint64_t t = 0; t < trials; ++t) add_sample(boolpoly::sample(d, rng));
        samples = trials;
    }

    rep.samples = samples;
    rep.tail_mean.assign(q, 0.0);
    rep.tail_stderr.assign(q, 0.0);
    rep.boolsq_mean.assign(q, 0.0);
    for (std::size_t e = 0; e < q; ++e) {
        double mean = sum_w[e] / double(samples);
        double var = sum_w2[e] / double(samples) - mean * mean;
        if (var < 0) var = 0;
        double se = rep.exhaustive ? 0.0 : std::sqrt(var / double(samples));
        rep.tail_mean[e] = mean;
        rep.tail_stderr[e] = se;
        rep.boolsq_mean[e] = sum_b[e] / double(samples);
        if (e == 0) {
            rep.w0_mean = mean;
            rep.w0_stderr = se;
        } else if (mean > rep.max_tail_mean) {
            rep.max_tail_mean = mean;
            rep.max_tail_stderr = se;
            rep.max_tail_arg = std::uint32_t(e);
        }
    }
    return rep;
}

namespace {

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
    std::size_t n = a.size();
    std::vector<double> c(n, 0.0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            c[x] += a[y] * b[x ^ y];  // x - y = x XOR y in characteristic 2
    return c;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

ConvolutionReport convolution_check(const FieldCtx& f, int m, int trials, Rng& rng) {
    int nm = f.n() * m;
    if (nm > 16) throw capability_error("fourier: convolution_check capped at nm <= 16");
    std::size_t total = std::size_t(1) << nm;
    double root = std::pow(2.0, nm / 2.0);

    ConvolutionReport rep;
    auto rand_vec = [&] {
        std::vector<double> v(total);
        for (auto& x : v) x = 2.0 * rng.next_unit() - 1.0;
        return v;
    };
    auto hat = [&](std::vector<double> v) {
        qft_full(f, m, v);
        return v;
    };

    for (int t = 0; t < trials; ++t) {
        auto fv = rand_vec(), gv = rand_vec(), hv = rand_vec();
        auto fh = hat(fv), gh = hat(gv), hh = hat(hv);

        // (f.g)^ = 2^{-nm/2} (f^ * g^)
        std::vector<double> fg(total);
        for (std::size_t i = 0; i < total; ++i) fg[i] = fv[i] * gv[i];
        auto lhs1 = hat(fg);
        auto rhs1 = convolve(fh, gh);
        for (auto& x : rhs1) x /= root;
        rep.max_err_product_rule = std::max(rep.max_err_product_rule, max_abs_diff(lhs1, rhs1));

        // (f*g)^ = 2^{nm/2} (f^ . g^)
        auto lhs2 = hat(convolve(fv, gv));
        std::vector<double> rhs2(total);
        for (std::size_t i = 0; i < total; ++i) rhs2[i] = root * fh[i] * gh[i];
        rep.max_err_convolution_rule = std::max(rep.max_err_convolution_rule, max_abs_diff(lhs2, rhs2));

        // (f.(g*h))^ = f^ * (g^ . h^)
        auto gstarh = convolve(gv, hv);
        std::vector<double> fgh(total);
        for (std::size_t i = 0; i < total; ++i) fgh[i] = fv[i] * gstarh[i];
        auto lhs3 = hat(fgh);
        std::vector<double> ghh(total);
        for (std::size_t i = 0; i < total; ++i) ghh[i] = gh[i] * hh[i];
        auto rhs3 = convolve(fh, ghh);
        rep.max_err_mixed_rule = std::max(rep.max_err_mixed_rule, max_abs_diff(lhs3, rhs3));

        // Boolean Parseval on a random polynomial over nm variables.
        PolyDistribution pd{nm, 3};
        auto bf = bool_fourier(boolpoly::sample(pd, rng));
        double s = 0;
        for (double x : bf) s += x * x;
        rep.max_err_bool_parseval = std::max(rep.max_err_bool_parseval, std::abs(s - 1.0));
    }
    return rep;
}

}  // namespace polyqd::fourier
