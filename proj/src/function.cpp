#include "gfc/function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gfc/errors.hpp"

namespace gfc {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double falling(int m, int j) {
  double r = 1.0;
  for (int i = 0; i < j; ++i) r *= m - i;
  return r;
}

// d^j/dt^j sin(w t) = w^j sin(w t + j pi/2)
double sin_derivative(double omega, int j, double t) {
  const double scale = std::pow(omega, j);
  switch (j % 4) {
    case 0: return scale * std::sin(omega * t);
    case 1: return scale * std::cos(omega * t);
    case 2: return -scale * std::sin(omega * t);
    default: return -scale * std::cos(omega * t);
  }
}

}  // namespace

FunctionSpec FunctionSpec::one() { return FunctionSpec(Polynomial{{1.0}}); }

FunctionSpec FunctionSpec::monomial(int m) {
  if (m < 0) throw DomainError("monomial degree must be >= 0");
  return FunctionSpec(Monomial{m});
}

FunctionSpec FunctionSpec::polynomial(std::vector<double> coefficients) {
  if (coefficients.empty()) coefficients.push_back(0.0);
  return FunctionSpec(Polynomial{std::move(coefficients)});
}

FunctionSpec FunctionSpec::exponential(double lambda) {
  return FunctionSpec(Exponential{lambda});
}

FunctionSpec FunctionSpec::sinusoid(double omega) {
  return FunctionSpec(Sinusoid{omega});
}

FunctionSpec FunctionSpec::tabulated(std::vector<double> t,
                                     std::vector<double> v) {
  if (t.size() != v.size()) {
    throw DomainError("tabulated function: t and value columns differ in length");
  }
  if (t.size() < 2) throw DomainError("tabulated function needs >= 2 samples");
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(t[i] > t[i - 1])) {
      throw DomainError("tabulated function: t must be strictly increasing (row " +
                        std::to_string(i + 1) + ")");
    }
  }
  return FunctionSpec(Table{std::move(t), std::move(v)});
}

FunctionKind FunctionSpec::kind() const {
  return std::visit(
      overloaded{[](const Monomial&) { return FunctionKind::monomial; },
                 [](const Polynomial&) { return FunctionKind::polynomial; },
                 [](const Exponential&) { return FunctionKind::exponential; },
                 [](const Sinusoid&) { return FunctionKind::sinusoid; },
                 [](const Table&) { return FunctionKind::tabulated; }},
      repr_);
}

int FunctionSpec::derivative_order_available() const {
  return is_tabulated() ? 0 : kAnalyticDerivativeOrder;
}

double FunctionSpec::value(double t) const { return derivative(0, t); }

double FunctionSpec::derivative(int order, double t) const {
  if (order < 0) throw DomainError("derivative order must be >= 0");
  return std::visit(
      overloaded{
          [&](const Monomial& f) {
            if (order > f.m) return 0.0;
            return falling(f.m, order) * std::pow(t, f.m - order);
          },
          [&](const Polynomial& f) {
            // Horner on the differentiated coefficients.
            double acc = 0.0;
            const int deg = static_cast<int>(f.c.size()) - 1;
            for (int k = deg; k >= order; --k) {
              acc = acc * t + f.c[static_cast<std::size_t>(k)] * falling(k, order);
            }
            return acc;
          },
          [&](const Exponential& f) {
            return std::pow(f.lambda, order) * std::exp(f.lambda * t);
          },
          [&](const Sinusoid& f) { return sin_derivative(f.omega, order, t); },
          [&](const Table& f) {
            if (order > 0) {
              throw CapabilityError(
                  "tabulated input has no derivatives (derivative order " +
                  std::to_string(order) + " requested)");
            }
            if (t < f.t.front() || t > f.t.back()) {
              std::ostringstream os;
              os << "tabulated function evaluated at t = " << t
                 << " outside the table range [" << f.t.front() << ", "
                 << f.t.back() << "]";
              throw DomainError(os.str());
            }
            const auto it = std::lower_bound(f.t.begin(), f.t.end(), t);
            const auto i = static_cast<std::size_t>(it - f.t.begin());
            if (*it == t) return f.v[i];
            const double w = (t - f.t[i - 1]) / (f.t[i] - f.t[i - 1]);
            return (1.0 - w) * f.v[i - 1] + w * f.v[i];
          }},
      repr_);
}

double FunctionSpec::initial_value(int j) const {
  if (is_tabulated() && j > 0) {
    throw CapabilityError("tabulated input has no derivative initial values");
  }
  return derivative(j, 0.0);
}

std::vector<double> FunctionSpec::initial_values(int n) const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int j = 0; j < n; ++j) out.push_back(initial_value(j));
  return out;
}

std::string FunctionSpec::describe() const {
  std::ostringstream os;
  std::visit(overloaded{[&](const Monomial& f) { os << "t^" << f.m; },
                        [&](const Polynomial& f) {
                          os << "poly(";
                          for (std::size_t i = 0; i < f.c.size(); ++i) {
                            os << (i ? "," : "") << f.c[i];
                          }
                          os << ")";
                        },
                        [&](const Exponential& f) { os << "exp(" << f.lambda << " t)"; },
                        [&](const Sinusoid& f) { os << "sin(" << f.omega << " t)"; },
                        [&](const Table& f) { os << "table[" << f.t.size() << "]"; }},
             repr_);
  return os.str();
}

}  // namespace gfc
