#ifndef SCENECLUST_TEST_ORACLES_HPP
#define SCENECLUST_TEST_ORACLES_HPP

#include <cmath>
#include <functional>

// Test-only reference computations, kept independent of the library paths
// they are used to check.

namespace oracles {

inline long double adaptive_simpson_rec(const std::function<long double(long double)>& f,
                                        long double a, long double b, long double fa,
                                        long double fb, long double fm, long double whole,
                                        long double eps, int depth) {
    const long double m = 0.5L * (a + b);
    const long double lm = 0.5L * (a + m);
    const long double rm = 0.5L * (m + b);
    const long double flm = f(lm);
    const long double frm = f(rm);
    const long double left = (m - a) / 6.0L * (fa + 4.0L * flm + fm);
    const long double right = (b - m) / 6.0L * (fm + 4.0L * frm + fb);
    if (depth <= 0 || std::fabs(left + right - whole) <= 15.0L * eps)
        return left + right + (left + right - whole) / 15.0L;
    return adaptive_simpson_rec(f, a, m, fa, fm, flm, left, 0.5L * eps, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, fb, frm, right, 0.5L * eps, depth - 1);
}

inline long double adaptive_simpson(const std::function<long double(long double)>& f,
                                    long double a, long double b, long double eps) {
    const long double fa = f(a), fb = f(b), fm = f(0.5L * (a + b));
    const long double whole = (b - a) / 6.0L * (fa + 4.0L * fm + fb);
    return adaptive_simpson_rec(f, a, b, fa, fb, fm, whole, eps, 48);
}

/// log I_nu(kappa) from the integral representation
/// I_nu(k) = (k/2)^nu / (sqrt(pi) Gamma(nu+1/2)) * Int_0^pi e^{k cos t} sin^{2 nu} t dt,
/// evaluated by peak-shifted adaptive Simpson in long double.
inline long double log_bessel_i_quadrature(long double nu, long double kappa) {
    const long double pi = 3.14159265358979323846264338327950288L;
    auto exponent = [&](long double t) -> long double {
        const long double s = std::sin(t);
        if (s <= 0.0L) return -1e30L;
        return kappa * (std::cos(t) - 1.0L) + 2.0L * nu * std::log(s);
    };
    long double peak = -1e30L;
    const int scan = 20000;
    for (int i = 1; i < scan; ++i) {
        const long double e = exponent(pi * i / scan);
        if (e > peak) peak = e;
    }
    auto f = [&](long double t) -> long double {
        const long double e = exponent(t);
        return e < peak - 12000.0L ? 0.0L : std::exp(e - peak);
    };
    const long double integral = adaptive_simpson(f, 0.0L, pi, 1e-17L);
    return nu * std::log(0.5L * kappa) - 0.5L * std::log(pi) - std::lgamma(nu + 0.5L) +
           kappa + peak + std::log(integral);
}

/// log of the vMF normalization constant via the quadrature oracle.
inline long double log_vmf_normalizer_quadrature(long double kappa, int dim) {
    const long double pi = 3.14159265358979323846264338327950288L;
    const long double nu = 0.5L * dim - 1.0L;
    return nu * std::log(kappa) - (nu + 1.0L) * std::log(2.0L * pi) -
           log_bessel_i_quadrature(nu, kappa);
}

}  // namespace oracles

#endif
