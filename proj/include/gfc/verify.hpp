#pragma once

// Numerical certification of kernel-pair conditions and of the fundamental
// theorems relating the general fractional integral and derivatives.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gfc/convolution.hpp"
#include "gfc/function.hpp"
#include "gfc/grid.hpp"
#include "gfc/kernels.hpp"

namespace gfc {

struct ResidualReport {
  std::string check_name;
  std::vector<double> nodes;
  std::vector<double> residuals;
  double max_abs = 0.0;
  /// Trapezoidal integral of |residual| over the reported nodes.
  double l1 = 0.0;
  double tolerance_used = 0.0;
  bool passed = false;
  std::vector<std::string> warnings;
};

/// Fills max_abs, l1 and passed (max_abs <= tolerance) from the residuals.
ResidualReport make_report(std::string name, std::vector<double> nodes,
                           std::vector<double> residuals, double tolerance);

struct CheckOptions {
  double tolerance = 1e-3;
  /// Residuals are reported on nodes t >= t_cut; negative selects T/20.
  double t_cut = -1.0;
};

enum class Branch { riemann_liouville, caputo };

/// (kappa * k)(t_i) - t_i^(n-1)/(n-1)!.
ResidualReport check_pair_condition(const KernelPair& pair, const Grid& grid,
                                    const CheckOptions& options = {});

/// |L kappa(p) L k(p) - p^(-n)| for each p (the report's nodes are the p).
ResidualReport check_laplace_condition(const KernelPair& pair,
                                       std::span<const double> p_values,
                                       double tolerance = 1e-4,
                                       const LaplaceOptions& laplace = {});

/// First fundamental theorem. RL branch: D_(k) I_(kappa) f - f. Caputo
/// branch: *D_(k) I_(kappa) F - F for the constructed input F = k * f.
ResidualReport check_ftc1(const KernelPair& pair, const FunctionSpec& f,
                          const Grid& grid, Branch branch,
                          const CheckOptions& options = {});

/// Second fundamental theorem. Caputo branch: I_(kappa) *D_(k) f minus
/// f - sum_{j<n} f^(j)(0) h_{j+1}. RL branch: I_(kappa) D_(k) F - F for the
/// constructed input F = kappa * f.
ResidualReport check_ftc2(const KernelPair& pair, const FunctionSpec& f,
                          const Grid& grid, Branch branch,
                          const CheckOptions& options = {});

/// I_(k1) I_(k2) f - I_(k1*k2) f, with k1*k2 in closed form.
ResidualReport check_index_law(const Kernel& k1, const Kernel& k2,
                               const FunctionSpec& f, const Grid& grid,
                               const CheckOptions& options = {});

struct ConvergenceRow {
  int N = 0;
  double max_abs = 0.0;
};

struct ConvergenceStudy {
  std::string check_name;
  std::vector<ConvergenceRow> rows;
  /// Least-squares slope of -log(max_abs) against log(N).
  double fitted_order = 0.0;
  /// Set when the errors sit at rounding level and no order can be fitted.
  bool fit_skipped = false;
  bool monotone_decreasing = false;
};

using GridCheck = std::function<ResidualReport(const Grid&)>;

ConvergenceStudy convergence_study(const GridCheck& check,
                                   std::span<const int> n_values, double T,
                                   double r);

/// Pairs the fundamental-theorem checks are certified on: power pairs of
/// order 1, 2, 3, Bessel pairs of order 1 and 2, the series pair a = (1, -1),
/// alpha = 0.3, N = 12, and the Bessel pair nu = -0.5 lifted to order 2.
std::vector<KernelPair> catalog_pairs();
/// 1, t, t^2, e^t, sin t.
std::vector<FunctionSpec> catalog_functions();

/// Summary line followed by one {"t", "residual"} line per node.
std::string report_json_lines(const ResidualReport& report);
/// "# key=value" header lines, then "t,residual" rows (17 digits).
std::string report_csv(const ResidualReport& report);

}  // namespace gfc
