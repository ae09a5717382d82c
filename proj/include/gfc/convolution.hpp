#pragma once

// Product-integration quadrature of Laplace convolutions
//   (K * f)(t) = int_0^t K(t - tau) f(tau) dtau
// with weakly singular kernels K(s) = s^p A(s) on graded meshes, and a
// truncated Laplace transform built on the same rule.
//
// On each mesh interval the smooth product A * f is replaced by its linear
// interpolant and integrated against s^p exactly (product trapezoidal rule).
// Nodes are independent and are distributed over OpenMP threads; the sum
// inside a node always runs in ascending interval order, so the results do
// not depend on scheduling and match gfc::reference bit for bit.

#include <span>
#include <string>
#include <vector>

#include "gfc/function.hpp"
#include "gfc/grid.hpp"
#include "gfc/kernels.hpp"

namespace gfc {

enum class Accuracy { nominal, reduced };

/// Values of a computed function at every grid node. When the function is
/// unbounded or undefined at t = 0, `origin_defined` is false and values[0]
/// is NaN.
struct SampledResult {
  SampledResult(Grid g, std::vector<double> v)
      : grid(std::move(g)), values(std::move(v)) {}

  Grid grid;
  std::vector<double> values;
  bool origin_defined = true;
  Accuracy accuracy = Accuracy::nominal;
  std::vector<std::string> warnings;

  /// Values at t_1..t_N.
  std::span<const double> interior() const {
    return std::span<const double>(values).subspan(1);
  }
  /// Piecewise-linear view of the samples, usable as operator input.
  FunctionSpec as_function() const;
};

/// (kernel * g) at every node, g given by its values at all nodes t_0..t_N.
/// Entry 0 is 0.
std::vector<double> convolve_samples(const Kernel& kernel,
                                     std::span<const double> values,
                                     const Grid& grid);

/// (kernel * f) at every node. Non-finite values of f or the kernel raise
/// EvaluationError carrying the node index.
SampledResult convolve_kernel_function(const Kernel& kernel,
                                       const FunctionSpec& f, const Grid& grid);

/// (k1 * k2) at every node. The integral at t is split at t/2; the lower
/// half integrates the singularity of k2 at the origin exactly and the upper
/// half (mirrored) that of k1, so both endpoint singularities are handled.
/// Exactly symmetric in (k1, k2). The origin value is the t -> 0 limit of
/// the leading term.
SampledResult convolve_kernels(const Kernel& k1, const Kernel& k2,
                               const Grid& grid);

struct LaplaceOptions {
  /// Truncation point; <= 0 selects max(40/p, 40).
  double t_max = 0.0;
  /// Intervals of the graded (r = 2) mesh on [0, t_max].
  int grid_density = 8192;
  /// Tail estimates above this raise the warning flag.
  double tail_tolerance = 1e-12;
};

struct LaplaceResult {
  double value = 0.0;
  /// max |A| on [t_max, 2 t_max] times int_{t_max}^inf t^q e^(-p t) dt.
  double tail_estimate = 0.0;
  double t_max = 0.0;
  bool tail_warning = false;
};

/// int_0^t_max kernel(t) e^(-p t) dt for real p >= 1.
LaplaceResult laplace_transform(const Kernel& kernel, double p,
                                const LaplaceOptions& options = {});

/// Plain serial loop nests of the same rules. Kept as the reference the
/// parallel versions are tested (and benchmarked) against.
namespace reference {
std::vector<double> convolve_samples(const Kernel& kernel,
                                     std::span<const double> values,
                                     const Grid& grid);
std::vector<double> convolve_kernels(const Kernel& k1, const Kernel& k2,
                                     const Grid& grid);
double laplace_value(const Kernel& kernel, double p, const Grid& mesh);
}  // namespace reference

namespace detail {
/// t -> 0 limit of (k1 * k2)(t): 0, A1(0) A2(0) B(p1+1, p2+1), or +inf.
double convolution_origin_limit(const Kernel& k1, const Kernel& k2);
/// Mesh used by laplace_transform.
Grid laplace_mesh(double t_max, int density);
double laplace_tail(const Kernel& kernel, double p, double t_max);
}  // namespace detail

}  // namespace gfc
