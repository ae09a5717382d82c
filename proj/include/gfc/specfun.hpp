#pragma once

// Special functions used by the kernel families: Gamma, and the Bessel
// functions J_nu / I_nu through their power series.

namespace gfc {

/// Truncation control for the Bessel power series.
struct SeriesTolerance {
  double rel_tol = 1e-15;
  int max_terms = 200;
};

/// Gamma function. Lanczos approximation, reflection below 1/2.
/// Throws PoleError at 0, -1, -2, ...
double gamma_fn(double x);

/// 1/Gamma(x); zero at the poles of Gamma.
double rgamma(double x);

/// sum_k (sign * z)^k / (k! Gamma(k + nu + 1)), sign = -1 or +1, z >= 0.
///
/// This is the Bessel series with the (x/2)^nu prefactor removed and
/// z = x^2/4; it is entire in z, so it stays well defined at z = 0 for
/// every nu > -1. Terms are summed in ascending order and the sum stops at
/// the first term whose magnitude drops below rel_tol * |partial sum|.
double bessel_reduced_series(double nu, double z, int sign,
                             const SeriesTolerance& tol = {});

namespace detail {
/// bessel_reduced_series with the leading term 1/Gamma(nu+1) supplied by the
/// caller (kernels cache it).
double bessel_reduced_series(double leading, double nu, double z, int sign,
                             const SeriesTolerance& tol);
}  // namespace detail

/// Bessel function of the first kind J_nu(t), nu > -1, t >= 0.
double bessel_j(double nu, double t, const SeriesTolerance& tol = {});

/// Modified Bessel function I_nu(t), nu > -1, t >= 0.
double bessel_i(double nu, double t, const SeriesTolerance& tol = {});

}  // namespace gfc
