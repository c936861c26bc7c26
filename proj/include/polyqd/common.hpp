#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace polyqd {

// Thrown when inputs violate an operation's contract (bad parameters,
// length mismatches, inconsistent configuration). CLI maps this to exit 2.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when an exact/enumerative path would exceed its size cap.
struct capability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact nonnegative rational, used for epsilon and the parameter
// inequalities so that threshold comparisons never touch floating point.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den <= 0 || num < 0) throw parameter_error("rational must be nonnegative with positive denominator");
        std::int64_t g = std::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// hw <= (1/2 + eps) * m, compared in integers.
inline bool within_weight_threshold(int hw, int m, const Rational& eps) {
    return std::int64_t(2) * eps.den * hw <= std::int64_t(eps.den + 2 * eps.num) * m;
}

// (1/2 + eps) * m < m - sqrt(k * m), squared into integer form.
// Equivalent to k * (2b)^2 < m * (b - 2a)^2 with eps = a/b, requiring b > 2a.
inline bool list_radius_covers_threshold(int k, int m, const Rational& eps) {
    std::int64_t a = eps.num, b = eps.den;
    if (b <= 2 * a) return false;
    return 4 * b * b * std::int64_t(k) < std::int64_t(m) * (b - 2 * a) * (b - 2 * a);
}

// 7/8 + (3/4) eps < alpha < 1 with alpha = (m - k)/m.
// Equivalent to 8bk < m(b - 6a) and k >= 1.
inline bool strict_rate_window(int k, int m, const Rational& eps) {
    std::int64_t a = eps.num, b = eps.den;
    if (k < 1) return false;
    if (b <= 6 * a) return false;  // requires eps < 1/6
    return 8 * b * std::int64_t(k) < std::int64_t(m) * (b - 6 * a);
}

}  // namespace polyqd
