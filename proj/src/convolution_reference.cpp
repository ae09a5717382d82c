#include <algorithm>
#include <cmath>

#include "gfc/convolution.hpp"
#include "gfc/errors.hpp"
#include "gfc/product_weights.hpp"

namespace gfc::reference {

std::vector<double> convolve_samples(const Kernel& kernel,
                                     std::span<const double> values,
                                     const Grid& grid) {
  const int N = grid.N();
  if (values.size() != static_cast<std::size_t>(N) + 1) {
    throw DomainError("convolve_samples: need one value per grid node");
  }
  const auto t = grid.nodes();
  std::vector<double> out(static_cast<std::size_t>(N) + 1, 0.0);
  for (int i = 1; i <= N; ++i) {
    double sum = 0.0;
    for (int j = 0; j < i; ++j) {
      const auto w = interval_weights(t[i] - t[j], t[j + 1] - t[j], kernel.exponent());
      const double left = kernel.analytic_part(t[i] - t[j]) * values[j];
      const double right = kernel.analytic_part(t[i] - t[j + 1]) * values[j + 1];
      sum += w.far * left + w.near * right;
    }
    out[i] = sum;
  }
  return out;
}

std::vector<double> convolve_kernels(const Kernel& k1, const Kernel& k2,
                                     const Grid& grid) {
  const int N = grid.N();
  const auto t = grid.nodes();
  std::vector<double> out(static_cast<std::size_t>(N) + 1, 0.0);
  for (int i = 1; i <= N; ++i) {
    const double half = 0.5 * t[i];
    std::vector<double> s;
    for (int j = 0; j < i && t[j] < half; ++j) s.push_back(t[j]);
    s.push_back(half);

    auto half_sum = [&](const Kernel& weight, const Kernel& other) {
      double sum = 0.0;
      for (std::size_t q = 0; q + 1 < s.size(); ++q) {
        const auto w = interval_weights(s[q + 1], s[q + 1] - s[q], weight.exponent());
        const double left = weight.analytic_part(s[q]) * kernel_eval(other, t[i] - s[q]);
        const double right =
            weight.analytic_part(s[q + 1]) * kernel_eval(other, t[i] - s[q + 1]);
        sum += w.near * left + w.far * right;
      }
      return sum;
    };
    out[i] = half_sum(k2, k1) + half_sum(k1, k2);
  }
  const double origin = detail::convolution_origin_limit(k1, k2);
  out[0] = std::isfinite(origin) ? origin : std::nan("");
  return out;
}

double laplace_value(const Kernel& kernel, double p, const Grid& mesh) {
  const auto tau = mesh.nodes();
  double sum = 0.0;
  for (int j = 0; j < mesh.N(); ++j) {
    const auto w = interval_weights(tau[j + 1], tau[j + 1] - tau[j], kernel.exponent());
    const double left = kernel.analytic_part(tau[j]) * std::exp(-p * tau[j]);
    const double right = kernel.analytic_part(tau[j + 1]) * std::exp(-p * tau[j + 1]);
    sum += w.near * left + w.far * right;
  }
  return sum;
}

}  // namespace gfc::reference
