#pragma once

// Kernels t^p * A(t) and the kernel pairs (kappa, k) of order n that satisfy
// (kappa * k)(t) = t^(n-1)/(n-1)!.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gfc/specfun.hpp"

namespace gfc {

enum class KernelFamily { power, bessel_j_scaled, bessel_i_scaled, series, lifted };

std::string_view to_string(KernelFamily family);
KernelFamily kernel_family_from_string(std::string_view tag);

/// A weakly singular kernel t^p * A(t), A analytic with A(0) != 0.
///
/// Every family is stored in the same shape: a leading exponent p > -1 and
/// the Taylor coefficients c_k of A, so that kernel(t) = sum_k c_k t^(k+p).
/// Power kernels carry a single coefficient 1/Gamma(alpha). The two Bessel
/// families evaluate A through the adaptive Bessel series and keep the
/// coefficient list for termwise calculus (derivatives, lifting,
/// convolution). `next_coefficient` is the first omitted coefficient and
/// feeds the truncation tail bound.
///
/// Kernels are immutable once built.
class Kernel {
 public:
  Kernel(KernelFamily family, double exponent, std::vector<double> params,
         std::vector<double> coefficients, double next_coefficient = 0.0);

  KernelFamily family() const { return family_; }
  double exponent() const { return exponent_; }
  std::span<const double> params() const { return params_; }
  std::span<const double> coefficients() const { return coefficients_; }
  double next_coefficient() const { return next_coefficient_; }

  /// The smooth factor A(t), t >= 0.
  double analytic_part(double t) const;

  /// Magnitude of the first omitted series term at t = horizon.
  double tail_bound(double horizon) const;

  friend bool operator==(const Kernel&, const Kernel&) = default;

 private:
  KernelFamily family_;
  double exponent_;
  std::vector<double> params_;
  std::vector<double> coefficients_;
  double next_coefficient_;
};

/// An ordered pair (kappa, k) of declared order n.
///
/// The constructor enforces the membership conditions that can be read off
/// the exponents: kappa in C_{-1} (p > -1) and k singular but integrable
/// (-1 < p < 0). The convolution identity itself is certified numerically
/// by check_pair_condition.
class KernelPair {
 public:
  KernelPair(Kernel kappa, Kernel k, int order);

  const Kernel& kappa() const { return kappa_; }
  const Kernel& k() const { return k_; }
  int order() const { return order_; }

  friend bool operator==(const KernelPair&, const KernelPair&) = default;

 private:
  Kernel kappa_;
  Kernel k_;
  int order_;
};

// --- constructors -----------------------------------------------------------

/// h_alpha(t) = t^(alpha-1) / Gamma(alpha), alpha > 0.
Kernel make_power_kernel(double alpha);

/// t^(nu/2) J_nu(2 sqrt t) = sum (-1)^k t^(k+nu) / (k! Gamma(k+nu+1)).
Kernel make_bessel_j_kernel(double nu);

/// t^(nu/2) I_nu(2 sqrt t) = sum t^(k+nu) / (k! Gamma(k+nu+1)).
Kernel make_bessel_i_kernel(double nu);

/// (h_alpha, h_{n-alpha}); requires n-1 < alpha < n.
KernelPair make_power_pair(double alpha, int n);

/// (t^(nu/2) J_nu(2 sqrt t), t^(n/2-nu/2-1) I_{n-nu-2}(2 sqrt t));
/// requires n-2 < nu < n-1.
KernelPair make_bessel_pair(double nu, int n);

/// Coefficients b_0..b_N of the associate series k_1 = sum b_k t^k for
/// kappa_1 = sum a_k t^k, from a_0 b_0 = 1 and
///   sum_{k=0}^{m} Gamma(k+1-alpha) Gamma(alpha+m-k) a_{m-k} b_k = 0.
/// Missing a_k are zero. The recursion is solved in 50-digit arithmetic;
/// see sonine_series.hpp for the precision-generic version and a note on
/// conditioning.
std::vector<double> solve_associated_coefficients(std::span<const double> a,
                                                  double alpha, int n_terms);

/// Relative residual of the coefficient recursion at each index m >= 1:
/// |sum_k T_k| / sum_k |T_k| with T_k the summands above. Index 0 holds
/// |a_0 b_0 - 1|.
std::vector<double> associated_recursion_residuals(std::span<const double> a,
                                                   std::span<const double> b,
                                                   double alpha);

/// Sonine pair kappa = h_alpha * sum a_k t^k, k = h_{1-alpha} * sum b_k t^k,
/// both truncated after index N; order 1.
KernelPair make_series_pair(std::span<const double> a, double alpha,
                            int n_terms);

/// (kappa_n, k_n) = ({1}^(n-1) * kappa, k) for an order-1 pair, n >= 2.
/// The convolution with {1}^(n-1) = h_{n-1} is done termwise:
/// h_{n-1} * t^q = Gamma(q+1)/Gamma(q+n) t^(q+n-1).
KernelPair lift_pair(const KernelPair& pair, int n);

// --- evaluation and calculus -----------------------------------------------

/// kernel(t). t must be positive when the exponent is negative.
double kernel_eval(const Kernel& kernel, double t);

/// m-th derivative at t > 0. Power kernels use h_alpha^(m) = h_{alpha-m};
/// the others differentiate termwise.
double kernel_derivative_eval(const Kernel& kernel, int m, double t);

/// The m-th derivative as a kernel in its own right. Throws DomainError if
/// the derivative is not locally integrable (exponent <= -1) or vanishes.
Kernel derivative_kernel(const Kernel& kernel, int m);

/// Closed-form Laplace convolution of two kernels. Power kernels give
/// h_a * h_b = h_{a+b}; otherwise the Cauchy product with Beta-function
/// weights, truncated to max_terms coefficients.
Kernel convolve_analytic(const Kernel& k1, const Kernel& k2,
                         int max_terms = 64);

// --- catalog records ---------------------------------------------------------

/// One-line text record: family tag, exponent, params, coefficients and the
/// next omitted coefficient, reals written with 17 significant digits.
std::string kernel_record(const Kernel& kernel);
Kernel parse_kernel_record(std::string_view record);

}  // namespace gfc
