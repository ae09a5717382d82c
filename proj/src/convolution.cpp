#include "gfc/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gfc/errors.hpp"
#include "gfc/product_weights.hpp"
#include "parallel.hpp"

namespace gfc {
namespace {

void require_finite(std::span<const double> values, const Grid& grid,
                    const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      std::ostringstream os;
      os << what << " is not finite at node " << i << " (t = "
         << grid.node(static_cast<int>(i)) << ")";
      throw EvaluationError(os.str(), static_cast<int>(i));
    }
  }
}

// int_0^{S.back()} s^p W.A(s) * other(t - s) ds over the breakpoints S,
// s^p integrated exactly.
double half_integral(const Kernel& weight, const Kernel& other, double t,
                     std::span<const double> breaks, std::vector<double>& g) {
  const double p = weight.exponent();
  const std::size_t n = breaks.size();
  g.resize(n);
  for (std::size_t q = 0; q < n; ++q) {
    g[q] = weight.analytic_part(breaks[q]) * kernel_eval(other, t - breaks[q]);
  }
  double sum = 0.0;
  for (std::size_t q = 0; q + 1 < n; ++q) {
    const double b = breaks[q + 1];
    const auto w = interval_weights(b, b - breaks[q], p);
    sum += w.near * g[q] + w.far * g[q + 1];
  }
  return sum;
}

}  // namespace

FunctionSpec SampledResult::as_function() const {
  if (!origin_defined) {
    throw CapabilityError(
        "sampled result is undefined at t = 0 and cannot be used as input");
  }
  const auto t = grid.nodes();
  return FunctionSpec::tabulated(std::vector<double>(t.begin(), t.end()), values);
}

std::vector<double> convolve_samples(const Kernel& kernel,
                                     std::span<const double> values,
                                     const Grid& grid) {
  const int N = grid.N();
  if (values.size() != static_cast<std::size_t>(N) + 1) {
    throw DomainError("convolve_samples: need one value per grid node");
  }
  const auto t = grid.nodes();
  const double p = kernel.exponent();
  const bool constant_part = kernel.family() == KernelFamily::power;
  const double a0 = kernel.analytic_part(0.0);
  std::vector<double> out(static_cast<std::size_t>(N) + 1, 0.0);

  detail::parallel_for(1, N + 1, [&](int i) {
    thread_local std::vector<double> g;
    g.resize(static_cast<std::size_t>(i) + 1);
    const double ti = t[i];
    for (int j = 0; j <= i; ++j) {
      const double a = constant_part ? a0 : kernel.analytic_part(ti - t[j]);
      g[j] = a * values[j];
    }
    double sum = 0.0;
    for (int j = 0; j < i; ++j) {
      const auto w = interval_weights(ti - t[j], t[j + 1] - t[j], p);
      sum += w.far * g[j] + w.near * g[j + 1];
    }
    out[i] = sum;
  });
  return out;
}

SampledResult convolve_kernel_function(const Kernel& kernel,
                                       const FunctionSpec& f, const Grid& grid) {
  const auto t = grid.nodes();
  std::vector<double> values(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    try {
      values[i] = f.value(t[i]);
    } catch (const std::exception& e) {
      std::ostringstream os;
      os << "function evaluation failed at node " << i << " (t = " << t[i]
         << "): " << e.what();
      throw EvaluationError(os.str(), static_cast<int>(i));
    }
  }
  require_finite(values, grid, "input function");
  auto out = convolve_samples(kernel, values, grid);
  require_finite(out, grid, "convolution");
  return SampledResult{grid, std::move(out)};
}

SampledResult convolve_kernels(const Kernel& k1, const Kernel& k2,
                               const Grid& grid) {
  const int N = grid.N();
  const auto t = grid.nodes();
  std::vector<double> out(static_cast<std::size_t>(N) + 1, 0.0);

  detail::parallel_for(1, N + 1, [&](int i) {
    thread_local std::vector<double> breaks;
    thread_local std::vector<double> g;
    const double ti = t[i];
    const double half = 0.5 * ti;
    const auto stop = std::lower_bound(t.begin(), t.begin() + i, half);
    breaks.assign(t.begin(), stop);
    breaks.push_back(half);
    const double lower = half_integral(k2, k1, ti, breaks, g);
    const double upper = half_integral(k1, k2, ti, breaks, g);
    out[i] = lower + upper;
  });

  const double origin = detail::convolution_origin_limit(k1, k2);
  out[0] = std::isfinite(origin) ? origin : std::numeric_limits<double>::quiet_NaN();
  require_finite(std::span<const double>(out).subspan(1), grid, "kernel convolution");
  SampledResult result{grid, std::move(out)};
  result.origin_defined = std::isfinite(origin);
  return result;
}

LaplaceResult laplace_transform(const Kernel& kernel, double p,
                                const LaplaceOptions& options) {
  if (!(p >= 1.0)) {
    throw DomainError("laplace_transform is restricted to real p >= 1");
  }
  if (options.grid_density < 2) throw DomainError("grid_density must be >= 2");
  const double t_max = options.t_max > 0.0 ? options.t_max : std::max(40.0 / p, 40.0);
  const Grid mesh = detail::laplace_mesh(t_max, options.grid_density);
  const auto tau = mesh.nodes();
  const int n = mesh.N();
  const double q = kernel.exponent();

  std::vector<double> g(tau.size());
  detail::parallel_for(0, n + 1, [&](int j) {
    g[j] = kernel.analytic_part(tau[j]) * std::exp(-p * tau[j]);
  });
  std::vector<double> piece(static_cast<std::size_t>(n));
  detail::parallel_for(0, n, [&](int j) {
    const double b = tau[j + 1];
    const auto w = interval_weights(b, b - tau[j], q);
    piece[j] = w.near * g[j] + w.far * g[j + 1];
  });
  double value = 0.0;
  for (double c : piece) value += c;

  LaplaceResult result;
  result.value = value;
  result.t_max = t_max;
  result.tail_estimate = detail::laplace_tail(kernel, p, t_max);
  result.tail_warning = !(result.tail_estimate <= options.tail_tolerance);
  return result;
}

namespace detail {

double convolution_origin_limit(const Kernel& k1, const Kernel& k2) {
  const double q = k1.exponent() + k2.exponent() + 1.0;
  if (q > 1e-12) return 0.0;
  if (q < -1e-12) return std::numeric_limits<double>::infinity();
  const double x = k1.exponent() + 1.0;
  const double y = k2.exponent() + 1.0;
  const double beta = std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
  return k1.analytic_part(0.0) * k2.analytic_part(0.0) * beta;
}

Grid laplace_mesh(double t_max, int density) { return Grid(t_max, density, 2.0); }

double laplace_tail(const Kernel& kernel, double p, double t_max) {
  double a_max = 0.0;
  constexpr int kSamples = 64;
  for (int i = 0; i <= kSamples; ++i) {
    const double t = t_max * (1.0 + static_cast<double>(i) / kSamples);
    a_max = std::max(a_max, std::abs(kernel.analytic_part(t)));
  }
  // int_T^inf t^q e^(-p t) dt <= T^q e^(-pT) / (p - max(q, 0)/T)
  const double q = kernel.exponent();
  const double rate = p - std::max(q, 0.0) / t_max;
  if (!(rate > 0.0)) return std::numeric_limits<double>::infinity();
  return a_max * std::pow(t_max, q) * std::exp(-p * t_max) / rate;
}

}  // namespace detail
}  // namespace gfc
