#include "sevo/specfun.hpp"

#include <cmath>
#include <limits>

#include "sevo/errors.hpp"

// Evaluation strategy: ascending power series up to x_switch = max(12, nu^2),
// phase-amplitude asymptotics beyond. All accumulation happens in long double;
// the series around x_switch cancels down from terms of size ~e^x, so the
// extra mantissa bits are what keeps the seam at 1e-8.

namespace sevo::specfun {

namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;
constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;

bool near_integer(double nu, long& n) {
    const double r = std::round(nu);
    if (std::abs(nu - r) < BesselOrder::integer_tolerance) {
        n = static_cast<long>(r);
        return true;
    }
    return false;
}

// sin(nu*pi), cos(nu*pi) with the integer part removed exactly. The reflection
// formula feeds on these near integer orders, where naive sinl(nu*pi) wastes
// the argument reduction.
long double sin_pi(long double nu) {
    const long double r = nu - roundl(nu);
    const long double s = sinl(r * kPi);
    return (static_cast<long long>(roundl(nu)) % 2 == 0) ? s : -s;
}

long double cos_pi(long double nu) {
    const long double r = nu - roundl(nu);
    const long double c = cosl(r * kPi);
    return (static_cast<long long>(roundl(nu)) % 2 == 0) ? c : -c;
}

// Ascending series, nu not a negative integer.
//   J_nu(x) = sum_m (-x^2/4)^m / (m! Gamma(nu+m+1)) * (x/2)^nu
long double j_series_ld(long double nu, long double x) {
    if (x == 0.0L) return nu == 0.0L ? 1.0L : 0.0L;
    const long double q = -0.25L * x * x;
    long double c = powl(0.5L * x, nu) / tgammal(nu + 1.0L);
    long double sum = c;
    long double comp = 0.0L;  // Kahan correction
    for (int m = 1; m <= 500; ++m) {
        c *= q / (static_cast<long double>(m) * (nu + m));
        const long double y = c - comp;
        const long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (m > 4 && fabsl(c) < 1e-24L * (fabsl(sum) + 1e-300L)) break;
    }
    return sum;
}

// Y_n for integer n >= 0, small x:
//   Y_n = (2/pi) ln(x/2) J_n
//       - (1/pi) sum_{m=0}^{n-1} (n-m-1)!/m! (x/2)^{2m-n}
//       - (1/pi) sum_{m>=0} (-1)^m [psi(m+1)+psi(m+n+1)] (x/2)^{2m+n}/(m!(m+n)!)
long double y_integer_series_ld(long n, long double x) {
    const long double jn = j_series_ld(static_cast<long double>(n), x);
    const long double log_part = (2.0L / kPi) * logl(0.5L * x) * jn;

    long double finite = 0.0L;
    if (n > 0) {
        long double t = tgammal(static_cast<long double>(n)) * powl(0.5L * x, static_cast<long double>(-n));
        finite = t;
        for (long m = 1; m <= n - 1; ++m) {
            t *= 0.25L * x * x / (static_cast<long double>(m) * static_cast<long double>(n - m));
            finite += t;
        }
    }

    long double h1 = -kEulerGamma;  // psi(m+1) at m=0
    long double h2 = -kEulerGamma;  // psi(m+n+1) at m=0
    for (long k = 1; k <= n; ++k) h2 += 1.0L / k;
    long double c = powl(0.5L * x, static_cast<long double>(n)) / tgammal(static_cast<long double>(n) + 1.0L);
    long double s = c * (h1 + h2);
    long double comp = 0.0L;
    const long double q = -0.25L * x * x;
    for (long m = 1; m <= 500; ++m) {
        c *= q / (static_cast<long double>(m) * static_cast<long double>(m + n));
        h1 += 1.0L / m;
        h2 += 1.0L / (m + n);
        const long double term = c * (h1 + h2);
        const long double y = term - comp;
        const long double t = s + y;
        comp = (t - s) - y;
        s = t;
        if (m > 4 && fabsl(term) < 1e-24L * (fabsl(s) + 1e-300L)) break;
    }
    return log_part - finite / kPi - s / kPi;
}

// Hankel phase-amplitude expansion (valid for x above the switch point):
//   J_nu = sqrt(2/(pi x)) [P cos chi - Q sin chi]
//   Y_nu = sqrt(2/(pi x)) [P sin chi + Q cos chi],  chi = x - (nu/2 + 1/4) pi
// with P ~ 1 - a2 + a4 - ..., Q ~ a1 - a3 + ..., a_k = a_{k-1}(4nu^2-(2k-1)^2)/(8kx).
// The series is truncated at its smallest term.
struct PQ {
    long double p, q;
};

PQ pq_asymptotic(long double nu, long double x) {
    const long double mu4 = 4.0L * nu * nu;
    long double a = 1.0L;
    long double p = 1.0L, q = 0.0L;
    long double prev = std::numeric_limits<long double>::max();
    for (int k = 1; k <= 64; ++k) {
        a *= (mu4 - static_cast<long double>(2 * k - 1) * (2 * k - 1)) /
             (static_cast<long double>(k) * 8.0L * x);
        if (fabsl(a) >= prev) break;
        prev = fabsl(a);
        switch (k & 3) {
            case 1: q += a; break;
            case 2: p -= a; break;
            case 3: q -= a; break;
            case 0: p += a; break;
        }
        if (fabsl(a) < 1e-22L) break;
    }
    return {p, q};
}

JYExt jy_asymptotic_ld(long double nu, long double x) {
    const PQ pq = pq_asymptotic(nu, x);
    const long double chi = x - (0.5L * nu + 0.25L) * kPi;
    const long double c = cosl(chi);
    const long double s = sinl(chi);
    const long double amp = sqrtl(2.0L / (kPi * x));
    return {amp * (pq.p * c - pq.q * s), amp * (pq.p * s + pq.q * c)};
}

JYExt jy_series_pair_ld(double nu, long double x) {
    long n = 0;
    if (near_integer(nu, n)) {
        const long na = std::labs(n);
        const long double sign = (n >= 0 || n % 2 == 0) ? 1.0L : -1.0L;  // J_{-n} = (-1)^n J_n
        const long double j = sign * j_series_ld(static_cast<long double>(na), x);
        const long double y = sign * y_integer_series_ld(na, x);
        return {j, y};
    }
    const long double lnu = nu;
    const long double jp = j_series_ld(lnu, x);
    const long double jm = j_series_ld(-lnu, x);
    // Y_nu = (J_nu cos(nu pi) - J_{-nu}) / sin(nu pi); loses ~|log10 sin| digits
    // near integers, which the long double headroom absorbs.
    const long double y = (jp * cos_pi(lnu) - jm) / sin_pi(lnu);
    return {jp, y};
}

JYExt jy_ext_impl(double nu, long double x) {
    if (x > static_cast<long double>(series_asymptotic_switch(nu))) {
        return jy_asymptotic_ld(static_cast<long double>(nu), x);
    }
    return jy_series_pair_ld(nu, x);
}

}  // namespace

bool BesselOrder::is_integer() const {
    long n;
    return near_integer(nu, n);
}

long BesselOrder::nearest_int() const {
    return static_cast<long>(std::round(nu));
}

double series_asymptotic_switch(double nu) {
    return std::max(12.0, nu * nu);
}

JY bessel_jy_series(double nu, double x) {
    if (x <= 0.0) throw DomainError("bessel_jy_series: requires x > 0");
    const JYExt v = jy_series_pair_ld(nu, static_cast<long double>(x));
    return {static_cast<double>(v.j), static_cast<double>(v.y)};
}

JY bessel_jy_asymptotic(double nu, double x) {
    if (x <= 0.0) throw DomainError("bessel_jy_asymptotic: requires x > 0");
    const JYExt v = jy_asymptotic_ld(static_cast<long double>(nu), static_cast<long double>(x));
    return {static_cast<double>(v.j), static_cast<double>(v.y)};
}

JYExt bessel_jy_ext(double nu, double x) {
    if (x <= 0.0) throw DomainError("bessel_jy_ext: requires x > 0");
    if (!(std::isfinite(nu) && std::isfinite(x))) throw DomainError("bessel_jy_ext: non-finite argument");
    return jy_ext_impl(nu, static_cast<long double>(x));
}

JY bessel_jy(double nu, double x) {
    if (x <= 0.0) throw DomainError("bessel_jy: requires x > 0");
    if (!(std::isfinite(nu) && std::isfinite(x))) throw DomainError("bessel_jy: non-finite argument");
    const JYExt v = jy_ext_impl(nu, static_cast<long double>(x));
    return {static_cast<double>(v.j), static_cast<double>(v.y)};
}

double bessel_j(double nu, double x) {
    if (x < 0.0 || !std::isfinite(x) || !std::isfinite(nu)) {
        throw DomainError("bessel_j: requires finite nu and x >= 0");
    }
    if (x == 0.0) {
        if (nu < 0.0) throw SingularityError("bessel_j: x = 0 with nu < 0");
        long n;
        if (near_integer(nu, n) && n == 0) return 1.0;
        return 0.0;
    }
    return bessel_jy(nu, x).j;
}

double bessel_y(double nu, double x) {
    if (x <= 0.0 || !std::isfinite(x) || !std::isfinite(nu)) {
        throw DomainError("bessel_y: requires finite nu and x > 0");
    }
    return bessel_jy(nu, x).y;
}

HankelValue hankel(HankelKind kind, double nu, double x) {
    if (x <= 0.0 || !std::isfinite(x) || !std::isfinite(nu)) {
        throw DomainError("hankel: requires finite nu and x > 0");
    }
    const JY jy = bessel_jy(nu, x);
    const double sign = (kind == HankelKind::plus) ? 1.0 : -1.0;
    return {std::complex<double>(jy.j, sign * jy.y), kind, nu, x};
}

HankelValue hankel_derivative(HankelKind kind, double nu, double x) {
    if (x <= 0.0 || !std::isfinite(x) || !std::isfinite(nu)) {
        throw DomainError("hankel_derivative: requires finite nu and x > 0");
    }
    const HankelValue lo = hankel(kind, nu - 1.0, x);
    const HankelValue hi = hankel(kind, nu + 1.0, x);
    return {0.5 * (lo.value - hi.value), kind, nu, x};
}

}  // namespace sevo::specfun
