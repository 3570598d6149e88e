#pragma once

// Test-only reference computations. None of these call into the library's
// exact or quadrature code paths; they exist to check them.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// C_0..C_count-1 via Segner: C_{m+1} = sum_{i=0}^{m} C_i C_{m-i}.
inline std::vector<mpz_class> segner_catalan(std::size_t count) {
    std::vector<mpz_class> c(count);
    if (count == 0) {
        return c;
    }
    c[0] = 1;
    for (std::size_t m = 0; m + 1 < count; ++m) {
        mpz_class s = 0;
        for (std::size_t i = 0; i <= m; ++i) {
            s += c[i] * c[m - i];
        }
        c[m + 1] = s;
    }
    return c;
}

/// Rows 0..n_max of Pascal's triangle by repeated addition.
inline std::vector<std::vector<mpz_class>> pascal(std::size_t n_max) {
    std::vector<std::vector<mpz_class>> rows(n_max + 1);
    rows[0] = {1};
    for (std::size_t n = 1; n <= n_max; ++n) {
        rows[n].assign(n + 1, 0);
        rows[n][0] = 1;
        rows[n][n] = 1;
        for (std::size_t k = 1; k < n; ++k) {
            rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
        }
    }
    return rows;
}

inline mpq_class power(const mpq_class& q, unsigned e) {
    mpq_class r = 1;
    for (unsigned i = 0; i < e; ++i) {
        r *= q;
    }
    return r;
}

/// Term-by-term sum_{k} binom(n,2k) w(k) x^k b^(n-2k) with repeated multiplication.
inline mpq_class even_binomial_terms(const mpq_class& x, const mpq_class& b, unsigned n, bool k_weighted,
                                     const std::vector<std::vector<mpz_class>>& tri) {
    mpq_class s = 0;
    for (unsigned k = 0; 2 * k <= n; ++k) {
        mpq_class term = power(x, k) * power(b, n - 2 * k);
        term *= tri[n][2 * k];
        if (k_weighted) {
            term *= k;
        }
        s += term;
    }
    return s;
}

/// Deterministic rational generator for property tests.
class RationalGen {
public:
    explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

    mpq_class any() {
        std::uniform_int_distribution<int> num(-20, 20);
        std::uniform_int_distribution<int> den(1, 12);
        mpq_class q(num(rng_), den(rng_));
        q.canonicalize();
        return q;
    }

    /// A nonnegative root r; use a = r^2.
    mpq_class root() {
        std::uniform_int_distribution<int> num(0, 20);
        std::uniform_int_distribution<int> den(1, 12);
        mpq_class q(num(rng_), den(rng_));
        q.canonicalize();
        return q;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

struct KnownIntegral {
    std::string name;
    std::function<double(double)> f;
    double lo;
    double hi;  // infinity marks the half-line
    double exact;
};

/// Twenty integrands with closed-form integrals.
inline std::vector<KnownIntegral> known_integrals() {
    using std::numbers::pi;
    using std::numbers::e;
    const double inf = INFINITY;
    return {
        {"x^2 on [0,1]", [](double x) { return x * x; }, 0.0, 1.0, 1.0 / 3.0},
        {"sqrt(1-x^2) on [-1,1]", [](double x) { return std::sqrt((1 - x) * (1 + x)); }, -1.0, 1.0, pi / 2},
        {"exp(x) on [0,1]", [](double x) { return std::exp(x); }, 0.0, 1.0, e - 1.0},
        {"sin(x) on [0,pi]", [](double x) { return std::sin(x); }, 0.0, pi, 2.0},
        {"1/(1+x^2) on [0,1]", [](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0, pi / 4},
        {"log(x) on [1,2]", [](double x) { return std::log(x); }, 1.0, 2.0, 2.0 * std::log(2.0) - 1.0},
        {"cos(x) on [0,pi/2]", [](double x) { return std::cos(x); }, 0.0, pi / 2, 1.0},
        {"sqrt(x) on [0,1]", [](double x) { return std::sqrt(x); }, 0.0, 1.0, 2.0 / 3.0},
        {"x^5-3x^2 on [-1,2]", [](double x) { return std::pow(x, 5) - 3 * x * x; }, -1.0, 2.0, 1.5},
        {"1/x on [1,e]", [](double x) { return 1.0 / x; }, 1.0, e, 1.0},
        {"|x| on [-1,2]", [](double x) { return std::abs(x); }, -1.0, 2.0, 2.5},
        {"x exp(x) on [0,1]", [](double x) { return x * std::exp(x); }, 0.0, 1.0, 1.0},
        {"1/(1+x)^2 on [0,1]", [](double x) { return 1.0 / ((1 + x) * (1 + x)); }, 0.0, 1.0, 0.5},
        {"sin(x)^2 on [0,pi]", [](double x) { return std::sin(x) * std::sin(x); }, 0.0, pi, pi / 2},
        {"cos(10x) on [0,1]", [](double x) { return std::cos(10 * x); }, 0.0, 1.0, std::sin(10.0) / 10.0},
        {"exp(-t) on [0,inf)", [](double t) { return std::exp(-t); }, 0.0, inf, 1.0},
        {"exp(-t^2) on [0,inf)", [](double t) { return std::exp(-t * t); }, 0.0, inf, std::sqrt(pi) / 2},
        {"t^2/(t^2+1/4)^2 on [0,inf)",
         [](double t) {
             const double u = t * t + 0.25;
             return t * t / (u * u);
         },
         0.0, inf, pi / 2},
        {"1/(1+t^2) on [0,inf)", [](double t) { return 1.0 / (1.0 + t * t); }, 0.0, inf, pi / 2},
        {"t^3 exp(-t) on [0,inf)", [](double t) { return t * t * t * std::exp(-t); }, 0.0, inf, 6.0},
    };
}

}  // namespace oracle
