#ifndef SCENECLUST_VMF_HPP
#define SCENECLUST_VMF_HPP

namespace sceneclust {

/// log I_nu(x) for nu >= 0, x >= 0, evaluated without overflow.
double log_bessel_i(double nu, double x);

/// log of the von Mises-Fisher normalization constant C_D(kappa) on S^{D-1}.
/// kappa = 0 gives the log inverse surface area of the unit sphere in R^D.
double log_vmf_normalizer(double kappa, int dim);

/// Mean resultant length A_D(kappa) = I_{D/2}(kappa) / I_{D/2-1}(kappa).
/// Equals -d/dkappa log C_D(kappa); lies in [0, 1).
double vmf_mean_resultant(double kappa, int dim);

}  // namespace sceneclust

#endif
