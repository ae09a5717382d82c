#include "gfc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "gfc/errors.hpp"
#include "gfc/operators.hpp"

namespace gfc {
namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double t_cut_for(const Grid& grid, const CheckOptions& options) {
  return options.t_cut >= 0.0 ? options.t_cut : grid.T() / 20.0;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::vector<double> derivative_samples(const FunctionSpec& f, int order,
                                       const Grid& grid) {
  const auto t = grid.nodes();
  std::vector<double> v(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) v[i] = f.derivative(order, t[i]);
  return v;
}

void add_scaled(std::vector<double>& acc, double c, std::span<const double> v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * v[i];
}

// D_(k) I_(kappa) f at every node.
//
// kappa has exponent in (n-2, n-1), so kappa, ..., kappa^(n-2) vanish at 0
// and kappa^(n-1) is still integrable. Hence every derivative of order < n
// of kappa * f vanishes at 0 and
//   (kappa * f)^(n) = kappa * f^(n) + sum_{j<n} f^(j)(0) kappa^(n-1-j),
//   D_(k) (kappa * f) = k * (kappa * f^(n)) + sum_{j<n} f^(j)(0) (k * kappa^(n-1-j)).
// Every term is a quadrature; none presumes the pair condition.
std::vector<double> rl_derivative_of_integral(const KernelPair& pair,
                                              const FunctionSpec& f,
                                              const Grid& grid) {
  const int n = pair.order();
  const auto inner = convolve_samples(pair.kappa(), derivative_samples(f, n, grid), grid);
  auto out = convolve_samples(pair.k(), inner, grid);
  for (int j = 0; j < n; ++j) {
    const double c = f.initial_value(j);
    if (c == 0.0) continue;
    const Kernel dkappa = derivative_kernel(pair.kappa(), n - 1 - j);
    const auto conv = convolve_kernels(pair.k(), dkappa, grid);
    if (!conv.origin_defined) {
      throw EvaluationError("k * kappa^(m) unbounded at the origin", 0);
    }
    add_scaled(out, c, conv.values);
  }
  return out;
}

// *D_(k) I_(kappa) F for F = k * phi, at every node.
//
// With g = kappa * k * phi, move n-1 derivatives onto kappa (it vanishes to
// that order at 0) and the last one onto phi:
//   g^(n) = kappa^(n-1) * (k * phi') + phi(0) (kappa^(n-1) * k),
// and the Caputo derivative of g is k * g^(n).
std::vector<double> caputo_derivative_of_integral_of_associate(
    const KernelPair& pair, const FunctionSpec& phi, const Grid& grid) {
  const int n = pair.order();
  const Kernel top = derivative_kernel(pair.kappa(), n - 1);
  const auto a = convolve_samples(pair.k(), derivative_samples(phi, 1, grid), grid);
  const auto b = convolve_samples(top, a, grid);
  auto out = convolve_samples(pair.k(), b, grid);
  const double phi0 = phi.initial_value(0);
  if (phi0 != 0.0) {
    const auto unit = convolve_kernels(top, pair.k(), grid);
    if (!unit.origin_defined) {
      throw EvaluationError("kappa^(n-1) * k unbounded at the origin", 0);
    }
    add_scaled(out, phi0, convolve_samples(pair.k(), unit.values, grid));
  }
  return out;
}

ResidualReport residual_report(std::string name, const Grid& grid,
                               std::span<const double> computed,
                               std::span<const double> expected,
                               const CheckOptions& options) {
  const double cut = t_cut_for(grid, options);
  std::vector<double> nodes, residuals;
  for (int i = 1; i <= grid.N(); ++i) {
    if (grid.node(i) < cut) continue;
    nodes.push_back(grid.node(i));
    residuals.push_back(computed[i] - expected[i]);
  }
  return make_report(std::move(name), std::move(nodes), std::move(residuals),
                     options.tolerance);
}

std::vector<double> function_samples(const FunctionSpec& f, const Grid& grid) {
  return derivative_samples(f, 0, grid);
}

void require_analytic(const FunctionSpec& f, int n, const char* check) {
  if (f.derivative_order_available() < n) {
    throw CapabilityError(std::string(check) + " needs " + std::to_string(n) +
                          " exact derivatives of the input function");
  }
}

}  // namespace

ResidualReport make_report(std::string name, std::vector<double> nodes,
                           std::vector<double> residuals, double tolerance) {
  ResidualReport r;
  r.check_name = std::move(name);
  r.nodes = std::move(nodes);
  r.residuals = std::move(residuals);
  r.tolerance_used = tolerance;
  bool finite = true;
  for (double x : r.residuals) {
    if (!std::isfinite(x)) finite = false;
    r.max_abs = std::max(r.max_abs, std::abs(x));
  }
  if (!finite) r.max_abs = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < r.nodes.size(); ++i) {
    r.l1 += 0.5 * (std::abs(r.residuals[i]) + std::abs(r.residuals[i + 1])) *
            (r.nodes[i + 1] - r.nodes[i]);
  }
  r.passed = r.max_abs <= tolerance;
  return r;
}

ResidualReport check_pair_condition(const KernelPair& pair, const Grid& grid,
                                    const CheckOptions& options) {
  const auto conv = convolve_kernels(pair.kappa(), pair.k(), grid);
  const int n = pair.order();
  const double norm = factorial(n - 1);
  std::vector<double> target(grid.nodes().size());
  for (std::size_t i = 0; i < target.size(); ++i) {
    target[i] = std::pow(grid.nodes()[i], n - 1) / norm;
  }
  return residual_report("pair_condition", grid, conv.values, target, options);
}

ResidualReport check_laplace_condition(const KernelPair& pair,
                                       std::span<const double> p_values,
                                       double tolerance,
                                       const LaplaceOptions& laplace) {
  std::vector<double> nodes, residuals;
  std::vector<std::string> warnings;
  for (double p : p_values) {
    const auto lk = laplace_transform(pair.kappa(), p, laplace);
    const auto lkk = laplace_transform(pair.k(), p, laplace);
    nodes.push_back(p);
    residuals.push_back(lk.value * lkk.value - std::pow(p, -pair.order()));
    for (const auto* r : {&lk, &lkk}) {
      if (r->tail_warning) {
        warnings.push_back("Laplace tail estimate " + fmt17(r->tail_estimate) +
                           " at p = " + fmt17(p) + " exceeds tolerance");
      }
    }
  }
  auto report = make_report("laplace_condition", std::move(nodes),
                            std::move(residuals), tolerance);
  report.warnings = std::move(warnings);
  return report;
}

ResidualReport check_ftc1(const KernelPair& pair, const FunctionSpec& f,
                          const Grid& grid, Branch branch,
                          const CheckOptions& options) {
  if (branch == Branch::riemann_liouville) {
    require_analytic(f, pair.order(), "check_ftc1");
    const auto lhs = rl_derivative_of_integral(pair, f, grid);
    return residual_report("ftc1_rl", grid, lhs, function_samples(f, grid), options);
  }
  require_analytic(f, 1, "check_ftc1");
  const auto input = convolve_kernel_function(pair.k(), f, grid).values;
  const auto lhs = caputo_derivative_of_integral_of_associate(pair, f, grid);
  return residual_report("ftc1_caputo", grid, lhs, input, options);
}

ResidualReport check_ftc2(const KernelPair& pair, const FunctionSpec& f,
                          const Grid& grid, Branch branch,
                          const CheckOptions& options) {
  const int n = pair.order();
  require_analytic(f, n, "check_ftc2");
  if (branch == Branch::caputo) {
    // k * f^(n) is bounded and vanishes at the origin, so it can feed the
    // outer quadrature directly.
    const auto caputo = convolve_samples(pair.k(), derivative_samples(f, n, grid), grid);
    const auto lhs = convolve_samples(pair.kappa(), caputo, grid);
    const auto init = f.initial_values(n);
    std::vector<double> target = function_samples(f, grid);
    for (std::size_t i = 0; i < target.size(); ++i) {
      const double t = grid.nodes()[i];
      for (int j = 0; j < n; ++j) target[i] -= init[j] * std::pow(t, j) / factorial(j);
    }
    return residual_report("ftc2_caputo", grid, lhs, target, options);
  }
  const auto input = convolve_kernel_function(pair.kappa(), f, grid).values;
  const auto derivative = rl_derivative_of_integral(pair, f, grid);
  const auto lhs = convolve_samples(pair.kappa(), derivative, grid);
  return residual_report("ftc2_rl", grid, lhs, input, options);
}

ResidualReport check_index_law(const Kernel& k1, const Kernel& k2,
                               const FunctionSpec& f, const Grid& grid,
                               const CheckOptions& options) {
  const auto inner = convolve_kernel_function(k2, f, grid).values;
  const auto nested = convolve_samples(k1, inner, grid);
  const auto direct = convolve_kernel_function(convolve_analytic(k1, k2), f, grid).values;
  return residual_report("index_law", grid, nested, direct, options);
}

ConvergenceStudy convergence_study(const GridCheck& check,
                                   std::span<const int> n_values, double T,
                                   double r) {
  if (n_values.size() < 3) {
    throw DomainError("convergence_study needs at least three grid sizes");
  }
  for (std::size_t i = 1; i < n_values.size(); ++i) {
    if (n_values[i] <= n_values[i - 1]) {
      throw DomainError("convergence_study grid sizes must increase");
    }
  }
  ConvergenceStudy study;
  for (int n : n_values) {
    const auto report = check(Grid(T, n, r));
    study.check_name = report.check_name;
    study.rows.push_back({n, report.max_abs});
  }
  study.monotone_decreasing = true;
  for (std::size_t i = 1; i < study.rows.size(); ++i) {
    if (!(study.rows[i].max_abs < study.rows[i - 1].max_abs)) {
      study.monotone_decreasing = false;
    }
  }
  constexpr double kRoundingLevel = 1e-13;
  for (const auto& row : study.rows) {
    if (!(row.max_abs > kRoundingLevel)) study.fit_skipped = true;
  }
  if (study.fit_skipped) return study;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(study.rows.size());
  for (const auto& row : study.rows) {
    const double x = std::log(static_cast<double>(row.N));
    const double y = std::log(row.max_abs);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  study.fitted_order = -(m * sxy - sx * sy) / (m * sxx - sx * sx);
  return study;
}

std::string report_json_lines(const ResidualReport& report) {
  nlohmann::ordered_json head;
  head["check_name"] = report.check_name;
  head["tolerance_used"] = report.tolerance_used;
  head["max_abs"] = report.max_abs;
  head["l1"] = report.l1;
  head["passed"] = report.passed;
  head["warnings"] = report.warnings;
  std::string out = head.dump() + "\n";
  for (std::size_t i = 0; i < report.nodes.size(); ++i) {
    nlohmann::ordered_json row;
    row["t"] = report.nodes[i];
    row["residual"] = report.residuals[i];
    out += row.dump() + "\n";
  }
  return out;
}

std::string report_csv(const ResidualReport& report) {
  std::ostringstream os;
  os << "# check_name=" << report.check_name << "\n";
  os << "# tolerance_used=" << fmt17(report.tolerance_used) << "\n";
  os << "# max_abs=" << fmt17(report.max_abs) << "\n";
  os << "# l1=" << fmt17(report.l1) << "\n";
  os << "# passed=" << (report.passed ? "true" : "false") << "\n";
  for (const auto& w : report.warnings) os << "# warning=" << w << "\n";
  os << "t,residual\n";
  for (std::size_t i = 0; i < report.nodes.size(); ++i) {
    os << fmt17(report.nodes[i]) << "," << fmt17(report.residuals[i]) << "\n";
  }
  return os.str();
}

std::vector<KernelPair> catalog_pairs() {
  return {make_power_pair(0.5, 1),
          make_power_pair(1.5, 2),
          make_power_pair(2.5, 3),
          make_bessel_pair(-0.5, 1),
          make_bessel_pair(0.5, 2),
          make_series_pair(std::vector<double>{1.0, -1.0}, 0.3, 12),
          lift_pair(make_bessel_pair(-0.5, 1), 2)};
}

std::vector<FunctionSpec> catalog_functions() {
  return {FunctionSpec::one(), FunctionSpec::monomial(1), FunctionSpec::monomial(2),
          FunctionSpec::exponential(1.0), FunctionSpec::sinusoid(1.0)};
}

}  // namespace gfc
