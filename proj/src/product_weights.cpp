#include "gfc/product_weights.hpp"

#include <cmath>

namespace gfc {
namespace {

constexpr double kSeriesThreshold = 0.25;

// int_0^1 (1 - x v)^p dv
double zeroth(double x, double q) {
  if (x >= 1.0) return 1.0 / q;
  return -std::expm1(q * std::log1p(-x)) / (q * x);
}

// int_0^1 v (1 - x v)^p dv
double first(double x, double p) {
  const double q = p + 1.0;
  if (x >= kSeriesThreshold) {
    const double lead = (x >= 1.0) ? 1.0 / q : -std::expm1(q * std::log1p(-x)) / q;
    const double next =
        (x >= 1.0) ? 1.0 / (q + 1.0) : -std::expm1((q + 1.0) * std::log1p(-x)) / (q + 1.0);
    return (lead - next) / (x * x);
  }
  // sum_m (-1)^m C(p, m) x^m / (m + 2)
  double coef = 1.0;
  double xm = 1.0;
  double sum = 0.5;
  for (int m = 1; m < 80; ++m) {
    coef *= (static_cast<double>(m) - 1.0 - p) / static_cast<double>(m);
    xm *= x;
    const double term = coef * xm / (static_cast<double>(m) + 2.0);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

IntervalWeights interval_weights(double b, double h, double p) {
  const double x = h >= b ? 1.0 : h / b;
  const double scale = std::pow(b, p + 1.0) * x;
  const double total = scale * zeroth(x, p + 1.0);
  const double near = scale * first(x, p);
  return {near, total - near};
}

}  // namespace gfc
