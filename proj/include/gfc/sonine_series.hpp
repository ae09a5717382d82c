#pragma once

// Associate coefficients of Sonine's analytic kernel class, generic in the
// scalar type.
//
// The recursion is badly conditioned when a_k alternates: for the Bessel
// pair the solution b_k ~ 1/k! is recovered from partial sums of size
// ~2^k/k!, so a relative perturbation eps of the inputs can reach b_20 as
// ~1e9 * eps. Double-precision inputs therefore cannot pin b_20 beyond
// ~1e-7; callers who need more must supply the a_k in a wider type.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "gfc/errors.hpp"

namespace gfc {

template <class Real>
std::vector<Real> solve_associated_coefficients_generic(std::span<const Real> a,
                                                        Real alpha,
                                                        int n_terms) {
  if (a.empty() || a[0] == Real(0)) {
    throw DomainError("associated coefficients require a_0 != 0");
  }
  if (!(alpha > Real(0) && alpha < Real(1))) {
    throw DomainError("associated coefficients require 0 < alpha < 1");
  }
  if (n_terms < 0) throw DomainError("associated coefficients require N >= 0");

  const auto count = static_cast<std::size_t>(n_terms) + 1;
  auto coeff = [&](std::size_t j) { return j < a.size() ? a[j] : Real(0); };

  // Regroup the summands as A_{m-k} B_k with A_j = Gamma(alpha+j) a_j and
  // B_k = Gamma(k+1-alpha) b_k, so the m-th relation reads sum A_{m-k} B_k = 0.
  std::vector<Real> gamma_a(count);   // Gamma(alpha + j)
  std::vector<Real> gamma_b(count);   // Gamma(k + 1 - alpha)
  gamma_a[0] = boost::math::tgamma(alpha);
  gamma_b[0] = boost::math::tgamma(Real(1) - alpha);
  for (std::size_t j = 1; j < count; ++j) {
    gamma_a[j] = gamma_a[j - 1] * (alpha + Real(j - 1));
    gamma_b[j] = gamma_b[j - 1] * (Real(j) - alpha);
  }
  std::vector<Real> scaled_a(count);
  for (std::size_t j = 0; j < count; ++j) scaled_a[j] = gamma_a[j] * coeff(j);

  std::vector<Real> scaled_b(count);
  scaled_b[0] = gamma_b[0] / coeff(0);
  for (std::size_t m = 1; m < count; ++m) {
    Real sum = 0;
    for (std::size_t k = 0; k < m; ++k) sum += scaled_a[m - k] * scaled_b[k];
    scaled_b[m] = -sum / scaled_a[0];
  }

  std::vector<Real> b(count);
  b[0] = Real(1) / coeff(0);
  for (std::size_t k = 1; k < count; ++k) b[k] = scaled_b[k] / gamma_b[k];
  return b;
}

}  // namespace gfc
