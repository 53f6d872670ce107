#pragma once

// Test-only reference implementations, deliberately independent of the
// library's evaluation paths: straight power series in extended precision,
// quadrature, and finite differences. Expected values frozen in the test
// files were produced by these.

#include <cmath>
#include <functional>

namespace sevo::test_oracles {

inline constexpr long double kPi = 3.141592653589793238462643383279502884L;
inline constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;

// 40-term ascending power series for J_nu in long double.
inline long double j_power_series(long double nu, long double x, int terms = 40) {
    if (x == 0.0L) return nu == 0.0L ? 1.0L : 0.0L;
    long double c = powl(0.5L * x, nu) / tgammal(nu + 1.0L);
    long double sum = c;
    const long double q = -0.25L * x * x;
    for (int m = 1; m < terms; ++m) {
        c *= q / (static_cast<long double>(m) * (nu + m));
        sum += c;
    }
    return sum;
}

// Logarithmic series for Y_n at integer n >= 0.
inline long double y_integer_log_series(long n, long double x, int terms = 40) {
    long double jn = j_power_series(static_cast<long double>(n), x, terms);
    long double out = (2.0L / kPi) * logl(0.5L * x) * jn;
    if (n > 0) {
        long double t = tgammal(static_cast<long double>(n)) * powl(0.5L * x, static_cast<long double>(-n));
        long double finite = t;
        for (long m = 1; m <= n - 1; ++m) {
            t *= 0.25L * x * x / (static_cast<long double>(m) * static_cast<long double>(n - m));
            finite += t;
        }
        out -= finite / kPi;
    }
    long double h1 = -kEulerGamma;
    long double h2 = -kEulerGamma;
    for (long k = 1; k <= n; ++k) h2 += 1.0L / k;
    long double c = powl(0.5L * x, static_cast<long double>(n)) / tgammal(static_cast<long double>(n) + 1.0L);
    long double s = c * (h1 + h2);
    const long double q = -0.25L * x * x;
    for (int m = 1; m < terms; ++m) {
        c *= q / (static_cast<long double>(m) * static_cast<long double>(m + n));
        h1 += 1.0L / m;
        h2 += 1.0L / (m + n);
        s += c * (h1 + h2);
    }
    return out - s / kPi;
}

// Composite-Simpson quadrature of u(t) = int_s^t (1+s)^mu (1+tau)^-mu dtau,
// the zero-mode solution of u'' + mu/(1+t) u' = 0 with u(s)=0, u'(s)=1.
inline long double zero_mode_quadrature(long double mu, long double s, long double t,
                                        int panels = 20000) {
    if (t == s) return 0.0L;
    const long double h = (t - s) / (2 * panels);
    auto f = [&](long double tau) { return powl((1.0L + s) / (1.0L + tau), mu); };
    long double acc = f(s) + f(t);
    for (int i = 1; i < 2 * panels; ++i) {
        acc += f(s + h * i) * ((i % 2) ? 4.0L : 2.0L);
    }
    return acc * h / 3.0L;
}

// Five-point central difference, O(h^4).
inline double central_difference(const std::function<double(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

}  // namespace sevo::test_oracles
