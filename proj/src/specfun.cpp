#include "gfc/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "gfc/errors.hpp"

namespace gfc {
namespace {

// Lanczos g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_pole(double x) { return x <= 0.0 && x == std::floor(x); }

// sin(pi x) with the argument reduced exactly to [0, 2) first.
double sin_pi(double x) {
  double r = x - 2.0 * std::floor(x / 2.0);
  double sign = 1.0;
  if (r >= 1.0) {
    r -= 1.0;
    sign = -1.0;
  }
  if (r > 0.5) r = 1.0 - r;
  return sign * std::sin(std::numbers::pi * r);
}

double lanczos_gamma(double x) {
  x -= 1.0;
  double acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    acc += kLanczos[i] / (x + static_cast<double>(i));
  }
  const double t = x + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) *
         std::exp(-t) * acc;
}

}  // namespace

double gamma_fn(double x) {
  if (std::isnan(x)) return x;
  if (is_pole(x)) {
    throw PoleError("gamma_fn: pole at non-positive integer x = " +
                    std::to_string(x));
  }
  if (x == std::floor(x) && x <= 171.0) {
    double f = 1.0;  // (x-1)!, exact through 22!
    for (double k = 2.0; k < x; k += 1.0) f *= k;
    return f;
  }
  if (x < 0.5) {
    return std::numbers::pi / (sin_pi(x) * lanczos_gamma(1.0 - x));
  }
  return lanczos_gamma(x);
}

double rgamma(double x) {
  if (is_pole(x)) return 0.0;
  return 1.0 / gamma_fn(x);
}

double bessel_reduced_series(double nu, double z, int sign,
                             const SeriesTolerance& tol) {
  if (!(nu > -1.0)) throw DomainError("Bessel series requires nu > -1");
  return detail::bessel_reduced_series(rgamma(nu + 1.0), nu, z, sign, tol);
}

double detail::bessel_reduced_series(double leading, double nu, double z,
                                     int sign, const SeriesTolerance& tol) {
  if (z < 0.0) throw DomainError("Bessel series requires z >= 0");
  if (!(tol.rel_tol > 0.0) || tol.max_terms < 1) {
    throw DomainError("SeriesTolerance requires rel_tol > 0, max_terms >= 1");
  }
  const double step = sign < 0 ? -z : z;
  double term = leading;
  double sum = term;
  for (int k = 1; k < tol.max_terms; ++k) {
    term *= step / (static_cast<double>(k) * (static_cast<double>(k) + nu));
    sum += term;
    if (std::abs(term) < tol.rel_tol * std::abs(sum)) return sum;
  }
  throw ConvergenceError("Bessel series did not converge within " +
                         std::to_string(tol.max_terms) + " terms (z = " +
                         std::to_string(z) + ")");
}

double bessel_j(double nu, double t, const SeriesTolerance& tol) {
  if (t < 0.0) throw DomainError("bessel_j requires t >= 0");
  const double half = 0.5 * t;
  return std::pow(half, nu) * bessel_reduced_series(nu, half * half, -1, tol);
}

double bessel_i(double nu, double t, const SeriesTolerance& tol) {
  if (t < 0.0) throw DomainError("bessel_i requires t >= 0");
  const double half = 0.5 * t;
  return std::pow(half, nu) * bessel_reduced_series(nu, half * half, +1, tol);
}

}  // namespace gfc
