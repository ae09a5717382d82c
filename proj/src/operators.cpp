#include "gfc/operators.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gfc/errors.hpp"

namespace gfc {
namespace {

void require_derivatives(const KernelPair& pair, const FunctionSpec& f,
                         const char* op) {
  if (f.derivative_order_available() < pair.order()) {
    throw CapabilityError(std::string(op) + " of order n = " +
                          std::to_string(pair.order()) + " needs " +
                          std::to_string(pair.order()) +
                          " derivatives of the input; " + f.describe() +
                          " provides " +
                          std::to_string(f.derivative_order_available()));
  }
}

void drop_origin(SampledResult& r) {
  r.values[0] = std::numeric_limits<double>::quiet_NaN();
  r.origin_defined = false;
}

// d/dt applied to uniform samples: central differences inside, second-order
// one-sided stencils at both ends.
std::vector<double> differentiate_uniform(const std::vector<double>& v, double h) {
  const std::size_t n = v.size();
  std::vector<double> d(n);
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
  d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
  d[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * h);
  return d;
}

SampledResult gfd_rl_tabulated(const KernelPair& pair, const FunctionSpec& f,
                               const Grid& grid) {
  const int fine_n = 4 * grid.N();
  const Grid uniform(grid.T(), fine_n, 1.0);
  auto w = convolve_kernel_function(pair.k(), f, uniform).values;
  const double h = grid.T() / fine_n;
  for (int m = 0; m < pair.order(); ++m) w = differentiate_uniform(w, h);

  const FunctionSpec derivative = FunctionSpec::tabulated(
      std::vector<double>(uniform.nodes().begin(), uniform.nodes().end()), w);
  SampledResult out{grid, std::vector<double>(grid.nodes().size())};
  for (int i = 1; i <= grid.N(); ++i) out.values[i] = derivative.value(grid.node(i));
  drop_origin(out);
  out.accuracy = Accuracy::reduced;
  out.warnings.push_back(
      "tabulated input: derivative of k * f taken by finite differences "
      "(step T/(4N)); expect reduced accuracy, especially near t = 0");
  return out;
}

}  // namespace

SampledResult gfi(const Kernel& kappa, const FunctionSpec& f, const Grid& grid) {
  return convolve_kernel_function(kappa, f, grid);
}

SampledResult gfi(const KernelPair& pair, const FunctionSpec& f, const Grid& grid) {
  return gfi(pair.kappa(), f, grid);
}

SampledResult gfd_caputo(const KernelPair& pair, const FunctionSpec& f,
                         const Grid& grid) {
  if (f.is_tabulated()) {
    throw CapabilityError(
        "gfd_caputo needs exact derivatives and initial values; tabulated "
        "input only supports gfi and gfd_rl");
  }
  require_derivatives(pair, f, "gfd_caputo");
  const int n = pair.order();
  const auto t = grid.nodes();
  std::vector<double> dn(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) dn[i] = f.derivative(n, t[i]);
  SampledResult out{grid, convolve_samples(pair.k(), dn, grid)};
  drop_origin(out);
  return out;
}

SampledResult gfd_rl(const KernelPair& pair, const FunctionSpec& f,
                     const Grid& grid) {
  if (f.is_tabulated()) return gfd_rl_tabulated(pair, f, grid);
  SampledResult out = gfd_caputo(pair, f, grid);
  const int n = pair.order();
  const auto init = f.initial_values(n);
  for (int i = 1; i <= grid.N(); ++i) {
    double correction = 0.0;
    for (int j = 0; j < n; ++j) {
      if (init[j] != 0.0) {
        correction += init[j] * kernel_derivative_eval(pair.k(), n - 1 - j, grid.node(i));
      }
    }
    out.values[i] += correction;
  }
  return out;
}

SampledResult apply(const OperatorRequest& request) {
  switch (request.op) {
    case OperatorKind::gfi: return gfi(request.pair, request.f, request.grid);
    case OperatorKind::gfd_rl: return gfd_rl(request.pair, request.f, request.grid);
    case OperatorKind::gfd_caputo:
      return gfd_caputo(request.pair, request.f, request.grid);
  }
  throw DomainError("unknown operator");
}

SampledResult rl_integral(double alpha, const FunctionSpec& f, const Grid& grid) {
  if (!(alpha >= 0.0)) {
    throw DomainError("Riemann-Liouville integral requires order alpha >= 0");
  }
  if (alpha == 0.0) {
    const auto t = grid.nodes();
    std::vector<double> v(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) v[i] = f.value(t[i]);
    return SampledResult{grid, std::move(v)};
  }
  return gfi(make_power_kernel(alpha), f, grid);
}

SampledResult classical_derivative(double alpha, DerivativeFlavor flavor,
                                   const FunctionSpec& f, const Grid& grid) {
  if (!(alpha > 0.0)) throw DomainError("fractional derivative order must be > 0");
  if (alpha == std::floor(alpha)) {
    throw DomainError("order alpha = " + std::to_string(static_cast<long>(alpha)) +
                      " is an integer; integer-order derivatives are ordinary "
                      "derivatives, use FunctionSpec::derivative instead");
  }
  const int n = static_cast<int>(std::ceil(alpha));
  const KernelPair pair = make_power_pair(alpha, n);
  return flavor == DerivativeFlavor::caputo ? gfd_caputo(pair, f, grid)
                                            : gfd_rl(pair, f, grid);
}

}  // namespace gfc
