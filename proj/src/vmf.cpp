#include "sceneclust/vmf.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sceneclust {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Ascending series around x = 0. Every term is positive, so the sum carries
// no cancellation; a running rescale keeps it inside double range for large x.
double log_bessel_i_series(double nu, double x) {
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    double log_scale = 0.0;
    // terms grow until m ~ (sqrt((nu+1)^2 + x^2) - (nu+1)) / 2, then decay
    const long max_terms = 2000000;
    for (long m = 0; m < max_terms; ++m) {
        term *= q / ((m + 1.0) * (nu + m + 1.0));
        sum += term;
        if (sum > 1e280) {
            sum *= 1e-280;
            term *= 1e-280;
            log_scale += 280.0 * std::log(10.0);
        }
        if (term < sum * 1e-18 && q < (m + 1.0) * (nu + m + 1.0)) break;
    }
    return nu * std::log(0.5 * x) - std::lgamma(nu + 1.0) + std::log(sum) + log_scale;
}

// Large-argument expansion I_nu(x) ~ e^x / sqrt(2 pi x) * sum_k (-1)^k a_k / x^k,
// a_k = prod_{j=1..k} (mu - (2j-1)^2) / (8 j), mu = 4 nu^2. Truncated at the
// smallest term; usable when x dwarfs mu.
double log_bessel_i_asymptotic(double nu, double x) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    double prev_mag = std::numeric_limits<double>::max();
    for (int k = 1; k <= 40; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(mu - odd * odd) / (8.0 * k * x);
        const double mag = std::abs(term);
        if (mag >= prev_mag) break;  // divergent tail reached
        sum += term;
        prev_mag = mag;
        if (mag < 1e-19 * std::abs(sum)) break;
    }
    return x - 0.5 * std::log(2.0 * kPi * x) + std::log(sum);
}

}  // namespace

double log_bessel_i(double nu, double x) {
    if (nu < 0.0 || x < 0.0 || !std::isfinite(nu) || !std::isfinite(x))
        throw std::invalid_argument("log_bessel_i: need finite nu >= 0, x >= 0");
    if (x == 0.0) return nu == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
    if (x > 4e4 && 4.0 * nu * nu < 0.1 * x) return log_bessel_i_asymptotic(nu, x);
    return log_bessel_i_series(nu, x);
}

double log_vmf_normalizer(double kappa, int dim) {
    if (dim < 2) throw std::invalid_argument("log_vmf_normalizer: dim must be >= 2");
    if (kappa < 0.0 || !std::isfinite(kappa))
        throw std::invalid_argument("log_vmf_normalizer: kappa must be finite and >= 0");
    const double half_dim = 0.5 * dim;
    if (kappa == 0.0)
        return -std::log(2.0) - half_dim * std::log(kPi) + std::lgamma(half_dim);
    const double nu = half_dim - 1.0;
    return nu * std::log(kappa) - half_dim * std::log(2.0 * kPi) - log_bessel_i(nu, kappa);
}

double vmf_mean_resultant(double kappa, int dim) {
    if (dim < 2) throw std::invalid_argument("vmf_mean_resultant: dim must be >= 2");
    if (kappa < 0.0) throw std::invalid_argument("vmf_mean_resultant: kappa must be >= 0");
    if (kappa == 0.0) return 0.0;
    const double nu = 0.5 * dim - 1.0;
    return std::exp(log_bessel_i(nu + 1.0, kappa) - log_bessel_i(nu, kappa));
}

}  // namespace sceneclust
