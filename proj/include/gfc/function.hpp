#pragma once

// Input functions for the operators: analytic kinds with exact derivatives
// and initial values, and tabulated samples.

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace gfc {

enum class FunctionKind { monomial, polynomial, exponential, sinusoid, tabulated };

class FunctionSpec {
 public:
  /// Derivative order reported by the analytic kinds (they have all of them).
  static constexpr int kAnalyticDerivativeOrder = 64;

  static FunctionSpec one();
  static FunctionSpec monomial(int m);
  static FunctionSpec polynomial(std::vector<double> coefficients);
  static FunctionSpec exponential(double lambda);
  static FunctionSpec sinusoid(double omega);
  /// Piecewise-linear through (t_i, v_i); t strictly increasing. Exact at the
  /// sample points, undefined outside [t_front, t_back].
  static FunctionSpec tabulated(std::vector<double> t, std::vector<double> v);

  FunctionKind kind() const;
  bool is_tabulated() const { return kind() == FunctionKind::tabulated; }
  int derivative_order_available() const;

  double value(double t) const;
  /// d^order f / dt^order; CapabilityError for tabulated input beyond order 0.
  double derivative(int order, double t) const;
  /// f^(j)(0).
  double initial_value(int j) const;
  /// f(0), f'(0), ..., f^(n-1)(0).
  std::vector<double> initial_values(int n) const;

  std::string describe() const;

 private:
  struct Monomial { int m; };
  struct Polynomial { std::vector<double> c; };
  struct Exponential { double lambda; };
  struct Sinusoid { double omega; };
  struct Table { std::vector<double> t, v; };
  using Repr = std::variant<Monomial, Polynomial, Exponential, Sinusoid, Table>;

  explicit FunctionSpec(Repr r) : repr_(std::move(r)) {}
  Repr repr_;
};

}  // namespace gfc
