#pragma once

#include <complex>

namespace sevo::specfun {

/// Real Bessel/Hankel order. Orders within 1e-12 of an integer are routed to
/// the integer-order formulas (the reflection formula has a csc(nu*pi) pole
/// there), matching how the kernel module treats rho = (1-mu)/2.
struct BesselOrder {
    double nu = 0.0;

    bool is_integer() const;
    long nearest_int() const;

    static constexpr double integer_tolerance = 1e-12;
};

enum class HankelKind { plus, minus };

struct HankelValue {
    std::complex<double> value;
    HankelKind kind = HankelKind::plus;
    double order = 0.0;
    double arg = 0.0;
};

struct JY {
    double j;
    double y;
};

/// J and Y before the final rounding to double. All evaluation paths
/// accumulate in long double; cross-identities (Wronskian) that cancel
/// through many orders of magnitude are only meaningful at this precision.
struct JYExt {
    long double j;
    long double y;
};

/// J_nu(x) for real nu, x >= 0 (x = 0 requires nu >= 0).
double bessel_j(double nu, double x);

/// Y_nu(x) for real nu, x > 0. Integer orders use the logarithmic series,
/// non-integer orders the reflection formula.
double bessel_y(double nu, double x);

/// J and Y in one call; shares the series / asymptotic work.
JY bessel_jy(double nu, double x);

/// Extended-precision variant of bessel_jy.
JYExt bessel_jy_ext(double nu, double x);

/// H^+_nu = J_nu + iY_nu, H^-_nu = J_nu - iY_nu, x > 0.
HankelValue hankel(HankelKind kind, double nu, double x);

/// d/dx H^+-_nu(x) via 2H' = H_{nu-1} - H_{nu+1}.
HankelValue hankel_derivative(HankelKind kind, double nu, double x);

/// Argument at which evaluation switches from the ascending series to the
/// phase-amplitude asymptotic expansion: max(12, nu^2).
double series_asymptotic_switch(double nu);

// Single-path probes for the seam test. Both require x > 0 and are only
// accurate on their own side of the switch point (plus a margin around it).
JY bessel_jy_series(double nu, double x);
JY bessel_jy_asymptotic(double nu, double x);

}  // namespace sevo::specfun
