#include "gfc/kernels.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "gfc/errors.hpp"
#include "gfc/sonine_series.hpp"

namespace gfc {
namespace {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

// Coefficient lists of the Bessel kernels are kept long enough that the
// neglected terms are below 1e-17 of the largest one up to this argument
// (twice the Laplace truncation point).
constexpr double kBesselHorizon = 80.0;
constexpr int kBesselMaxTerms = 160;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string interval_text(double lo, double hi) {
  std::ostringstream os;
  os << "(" << lo << ", " << hi << ")";
  return os.str();
}

// c_0 = 1/Gamma(nu+1), c_k = c_{k-1} * sign / (k (k+nu)).
std::pair<std::vector<double>, double> bessel_coefficients(double nu, int sign) {
  std::vector<double> c;
  double term = rgamma(nu + 1.0);
  double scale = 1.0;  // horizon^k
  double peak = 0.0;
  for (int k = 0; k < kBesselMaxTerms; ++k) {
    if (k > 0) {
      term *= static_cast<double>(sign) /
              (static_cast<double>(k) * (static_cast<double>(k) + nu));
      scale *= kBesselHorizon;
    }
    const double size = std::abs(term) * scale;
    peak = std::max(peak, size);
    if (k > 8 && size < 1e-17 * peak) return {c, term};
    c.push_back(term);
  }
  return {c, 0.0};
}

double falling_factorial(double x, int m) {
  double r = 1.0;
  for (int i = 0; i < m; ++i) r *= x - static_cast<double>(i);
  return r;
}

// sum_k c_k t^k, ascending.
double power_series(std::span<const double> c, double t) {
  double sum = 0.0;
  double tk = 1.0;
  for (double ck : c) {
    sum += ck * tk;
    tk *= t;
  }
  return sum;
}

}  // namespace

std::string_view to_string(KernelFamily family) {
  switch (family) {
    case KernelFamily::power: return "power";
    case KernelFamily::bessel_j_scaled: return "bessel_j_scaled";
    case KernelFamily::bessel_i_scaled: return "bessel_i_scaled";
    case KernelFamily::series: return "series";
    case KernelFamily::lifted: return "lifted";
  }
  return "unknown";
}

KernelFamily kernel_family_from_string(std::string_view tag) {
  for (auto f : {KernelFamily::power, KernelFamily::bessel_j_scaled,
                 KernelFamily::bessel_i_scaled, KernelFamily::series,
                 KernelFamily::lifted}) {
    if (to_string(f) == tag) return f;
  }
  throw DomainError("unknown kernel family '" + std::string(tag) + "'");
}

Kernel::Kernel(KernelFamily family, double exponent, std::vector<double> params,
               std::vector<double> coefficients, double next_coefficient)
    : family_(family),
      exponent_(exponent),
      params_(std::move(params)),
      coefficients_(std::move(coefficients)),
      next_coefficient_(next_coefficient) {
  if (!(exponent_ > -1.0) || !std::isfinite(exponent_)) {
    throw DomainError("kernel exponent must be > -1 (got " + fmt17(exponent_) +
                      ")");
  }
  if (coefficients_.empty() || coefficients_.front() == 0.0) {
    throw DomainError("kernel needs a nonzero leading coefficient A(0)");
  }
  if ((family_ == KernelFamily::power || family_ == KernelFamily::bessel_j_scaled ||
       family_ == KernelFamily::bessel_i_scaled) &&
      params_.empty()) {
    throw DomainError(std::string(to_string(family_)) +
                      " kernel needs its order parameter");
  }
}

double Kernel::analytic_part(double t) const {
  switch (family_) {
    case KernelFamily::power:
      return coefficients_.front();
    case KernelFamily::bessel_j_scaled:
      return detail::bessel_reduced_series(coefficients_.front(), params_[0], t, -1, {});
    case KernelFamily::bessel_i_scaled:
      return detail::bessel_reduced_series(coefficients_.front(), params_[0], t, +1, {});
    case KernelFamily::series:
    case KernelFamily::lifted:
      return power_series(coefficients_, t);
  }
  return 0.0;
}

double Kernel::tail_bound(double horizon) const {
  if (next_coefficient_ == 0.0) return 0.0;
  const double k = static_cast<double>(coefficients_.size());
  return std::abs(next_coefficient_) * std::pow(horizon, k + exponent_);
}

KernelPair::KernelPair(Kernel kappa, Kernel k, int order)
    : kappa_(std::move(kappa)), k_(std::move(k)), order_(order) {
  if (order_ < 1) throw DomainError("kernel pair order must be >= 1");
  if (!(k_.exponent() < 0.0)) {
    throw DomainError(
        "associate kernel k must be integrably singular at 0: exponent in "
        "(-1, 0), got " + fmt17(k_.exponent()));
  }
}

Kernel make_power_kernel(double alpha) {
  if (!(alpha > 0.0)) {
    throw DomainError("power kernel h_alpha requires alpha > 0 (got " +
                      fmt17(alpha) + ")");
  }
  return Kernel(KernelFamily::power, alpha - 1.0, {alpha}, {rgamma(alpha)});
}

Kernel make_bessel_j_kernel(double nu) {
  if (!(nu > -1.0)) throw DomainError("Bessel kernel requires nu > -1");
  auto [c, next] = bessel_coefficients(nu, -1);
  return Kernel(KernelFamily::bessel_j_scaled, nu, {nu}, std::move(c), next);
}

Kernel make_bessel_i_kernel(double nu) {
  if (!(nu > -1.0)) throw DomainError("Bessel kernel requires nu > -1");
  auto [c, next] = bessel_coefficients(nu, +1);
  return Kernel(KernelFamily::bessel_i_scaled, nu, {nu}, std::move(c), next);
}

KernelPair make_power_pair(double alpha, int n) {
  if (n < 1) throw DomainError("power pair order n must be >= 1");
  const double lo = n - 1;
  const double hi = n;
  if (!(alpha > lo && alpha < hi)) {
    throw DomainError("power pair of order n = " + std::to_string(n) +
                      " requires alpha in " + interval_text(lo, hi) +
                      " (got " + fmt17(alpha) + ")");
  }
  return KernelPair(make_power_kernel(alpha), make_power_kernel(n - alpha), n);
}

KernelPair make_bessel_pair(double nu, int n) {
  if (n < 1) throw DomainError("Bessel pair order n must be >= 1");
  const double lo = n - 2;
  const double hi = n - 1;
  if (!(nu > lo && nu < hi)) {
    throw DomainError("Bessel pair of order n = " + std::to_string(n) +
                      " requires nu in " + interval_text(lo, hi) + " (got " +
                      fmt17(nu) + ")");
  }
  return KernelPair(make_bessel_j_kernel(nu), make_bessel_i_kernel(n - nu - 2.0),
                    n);
}

std::vector<double> solve_associated_coefficients(std::span<const double> a,
                                                  double alpha, int n_terms) {
  std::vector<HighPrecision> wide(a.begin(), a.end());
  auto b = solve_associated_coefficients_generic<HighPrecision>(
      wide, HighPrecision(alpha), n_terms);
  std::vector<double> out;
  out.reserve(b.size());
  for (const auto& x : b) out.push_back(static_cast<double>(x));
  return out;
}

std::vector<double> associated_recursion_residuals(std::span<const double> a,
                                                   std::span<const double> b,
                                                   double alpha) {
  auto coeff = [&](std::size_t j) { return j < a.size() ? a[j] : 0.0; };
  std::vector<double> res(b.size(), 0.0);
  if (b.empty()) return res;
  res[0] = std::abs(coeff(0) * b[0] - 1.0);
  for (std::size_t m = 1; m < b.size(); ++m) {
    double sum = 0.0;
    double mag = 0.0;
    for (std::size_t k = 0; k <= m; ++k) {
      const double term = gamma_fn(static_cast<double>(k) + 1.0 - alpha) *
                          gamma_fn(alpha + static_cast<double>(m - k)) *
                          coeff(m - k) * b[k];
      sum += term;
      mag += std::abs(term);
    }
    res[m] = mag > 0.0 ? std::abs(sum) / mag : 0.0;
  }
  return res;
}

KernelPair make_series_pair(std::span<const double> a, double alpha,
                            int n_terms) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("series pair requires alpha in (0, 1) (got " +
                      fmt17(alpha) + ")");
  }
  if (n_terms < 0) throw DomainError("series pair requires N >= 0");
  // One coefficient beyond the truncation for the tail bound.
  const auto b = solve_associated_coefficients(a, alpha, n_terms + 1);
  const auto count = static_cast<std::size_t>(n_terms) + 1;
  auto coeff = [&](std::size_t j) { return j < a.size() ? a[j] : 0.0; };

  const double ga = rgamma(alpha);
  const double gb = rgamma(1.0 - alpha);
  std::vector<double> kappa_c(count), k_c(count);
  for (std::size_t j = 0; j < count; ++j) {
    kappa_c[j] = coeff(j) * ga;
    k_c[j] = b[j] * gb;
  }
  Kernel kappa(KernelFamily::series, alpha - 1.0, {alpha}, std::move(kappa_c),
               coeff(count) * ga);
  Kernel k(KernelFamily::series, -alpha, {1.0 - alpha}, std::move(k_c),
           b[count] * gb);
  return KernelPair(std::move(kappa), std::move(k), 1);
}

KernelPair lift_pair(const KernelPair& pair, int n) {
  if (pair.order() != 1) {
    throw DomainError("lift_pair needs a Sonine pair of order 1 (got order " +
                      std::to_string(pair.order()) + ")");
  }
  if (n < 2) throw DomainError("lift_pair needs target order n >= 2");
  const Kernel& kappa = pair.kappa();
  if (kappa.family() == KernelFamily::power) {
    return KernelPair(make_power_kernel(kappa.params()[0] + (n - 1)), pair.k(),
                      n);
  }
  const double p = kappa.exponent();
  // h_{n-1} * t^q = t^(q+n-1) / ((q+1)(q+2)...(q+n-1))
  auto shift = [&](double q) {
    double denom = 1.0;
    for (int i = 1; i < n; ++i) denom *= q + static_cast<double>(i);
    return 1.0 / denom;
  };
  const auto c = kappa.coefficients();
  std::vector<double> lifted(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    lifted[j] = c[j] * shift(p + static_cast<double>(j));
  }
  const double next =
      kappa.next_coefficient() * shift(p + static_cast<double>(c.size()));
  std::vector<double> params{static_cast<double>(n)};
  params.insert(params.end(), kappa.params().begin(), kappa.params().end());
  return KernelPair(Kernel(KernelFamily::lifted, p + (n - 1), std::move(params),
                           std::move(lifted), next),
                    pair.k(), n);
}

double kernel_eval(const Kernel& kernel, double t) {
  const double p = kernel.exponent();
  if (t < 0.0 || (t == 0.0 && p < 0.0) || std::isnan(t)) {
    throw DomainError("kernel_eval: t = " + fmt17(t) +
                      " outside the domain (t > 0 required for exponent " +
                      fmt17(p) + ")");
  }
  return std::pow(t, p) * kernel.analytic_part(t);
}

double kernel_derivative_eval(const Kernel& kernel, int m, double t) {
  if (m < 0) throw DomainError("derivative order must be >= 0");
  if (m == 0) return kernel_eval(kernel, t);
  if (!(t > 0.0)) {
    throw DomainError("kernel_derivative_eval requires t > 0 (got " + fmt17(t) +
                      ")");
  }
  if (kernel.family() == KernelFamily::power) {
    const double alpha = kernel.params()[0] - m;
    return rgamma(alpha) * std::pow(t, alpha - 1.0);
  }
  const double p = kernel.exponent();
  const auto c = kernel.coefficients();
  double sum = 0.0;
  double tk = 1.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double q = static_cast<double>(k) + p;
    sum += c[k] * falling_factorial(q, m) * tk;
    tk *= t;
  }
  return sum * std::pow(t, p - m);
}

Kernel derivative_kernel(const Kernel& kernel, int m) {
  if (m < 0) throw DomainError("derivative order must be >= 0");
  if (m == 0) return kernel;
  if (kernel.family() == KernelFamily::power) {
    const double alpha = kernel.params()[0] - m;
    if (!(alpha > 0.0)) {
      throw DomainError("derivative of order " + std::to_string(m) +
                        " of h_" + fmt17(kernel.params()[0]) +
                        " is not a locally integrable kernel");
    }
    return make_power_kernel(alpha);
  }
  const double p = kernel.exponent();
  const auto c = kernel.coefficients();
  std::vector<double> d(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    d[k] = c[k] * falling_factorial(static_cast<double>(k) + p, m);
  }
  // Integer exponents can annihilate leading terms.
  std::size_t lead = 0;
  while (lead < d.size() && d[lead] == 0.0) ++lead;
  if (lead == d.size()) {
    throw DomainError("kernel derivative vanishes identically");
  }
  d.erase(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(lead));
  const double exponent = p - m + static_cast<double>(lead);
  if (!(exponent > -1.0)) {
    throw DomainError("derivative of order " + std::to_string(m) +
                      " has exponent " + fmt17(exponent) +
                      " <= -1 and is not locally integrable");
  }
  const double next =
      kernel.next_coefficient() *
      falling_factorial(static_cast<double>(c.size()) + p, m);
  return Kernel(KernelFamily::series, exponent, {}, std::move(d), next);
}

Kernel convolve_analytic(const Kernel& k1, const Kernel& k2, int max_terms) {
  if (k1.family() == KernelFamily::power && k2.family() == KernelFamily::power) {
    return make_power_kernel(k1.params()[0] + k2.params()[0]);
  }
  const double p1 = k1.exponent();
  const double p2 = k2.exponent();
  const auto a = k1.coefficients();
  const auto b = k2.coefficients();
  const std::size_t count =
      std::min<std::size_t>(a.size() + b.size() - 1,
                            static_cast<std::size_t>(std::max(1, max_terms)));
  // t^(p1+j) * t^(p2+k) = B(p1+j+1, p2+k+1) t^(p1+p2+j+k+1)
  auto beta = [](double x, double y) {
    return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
  };
  std::vector<double> c(count, 0.0);
  for (std::size_t m = 0; m < count; ++m) {
    for (std::size_t j = 0; j <= m; ++j) {
      const std::size_t k = m - j;
      if (j >= a.size() || k >= b.size()) continue;
      c[m] += a[j] * b[k] *
              beta(p1 + static_cast<double>(j) + 1.0,
                   p2 + static_cast<double>(k) + 1.0);
    }
  }
  return Kernel(KernelFamily::series, p1 + p2 + 1.0, {}, std::move(c));
}

std::string kernel_record(const Kernel& kernel) {
  auto join = [](std::span<const double> xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ',';
      s += fmt17(xs[i]);
    }
    return s;
  };
  std::string out = "family=";
  out += to_string(kernel.family());
  out += ";exponent=" + fmt17(kernel.exponent());
  out += ";params=" + join(kernel.params());
  out += ";coefficients=" + join(kernel.coefficients());
  out += ";next=" + fmt17(kernel.next_coefficient());
  return out;
}

Kernel parse_kernel_record(std::string_view record) {
  auto parse_real = [](std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw DomainError("kernel record: bad number '" + std::string(s) + "'");
    }
    return v;
  };
  auto parse_list = [&](std::string_view s) {
    std::vector<double> xs;
    while (!s.empty()) {
      const auto comma = s.find(',');
      xs.push_back(parse_real(s.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      s.remove_prefix(comma + 1);
    }
    return xs;
  };

  std::string family, exponent, params, coefficients, next;
  bool seen[5] = {false, false, false, false, false};
  while (!record.empty()) {
    const auto semi = record.find(';');
    const auto field = record.substr(0, semi);
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("kernel record: field without '=': " +
                        std::string(field));
    }
    const auto key = field.substr(0, eq);
    const std::string value(field.substr(eq + 1));
    if (key == "family") family = value, seen[0] = true;
    else if (key == "exponent") exponent = value, seen[1] = true;
    else if (key == "params") params = value, seen[2] = true;
    else if (key == "coefficients") coefficients = value, seen[3] = true;
    else if (key == "next") next = value, seen[4] = true;
    else throw DomainError("kernel record: unknown key '" + std::string(key) + "'");
    if (semi == std::string_view::npos) break;
    record.remove_prefix(semi + 1);
  }
  for (bool s : seen) {
    if (!s) throw DomainError("kernel record: missing field");
  }
  return Kernel(kernel_family_from_string(family), parse_real(exponent),
                parse_list(params), parse_list(coefficients), parse_real(next));
}

}  // namespace gfc
