#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "gfc/errors.hpp"
#include "gfc/function.hpp"
#include "gfc/operators.hpp"

namespace {

using gfc::FunctionSpec;

const gfc::Grid kGrid(1.0, 1024, 2.0);

double max_rel_error(const gfc::SampledResult& r, const std::function<double(double)>& exact,
                     double t_cut = 0.0) {
  double err = 0.0;
  const auto t = r.grid.nodes();
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i] < t_cut) continue;
    const double e = exact(t[i]);
    err = std::max(err, std::abs(r.values[i] - e) / std::max(std::abs(e), 1e-300));
  }
  return err;
}

double max_abs(const gfc::SampledResult& r) {
  double m = 0.0;
  for (double v : r.interior()) m = std::max(m, std::abs(v));
  return m;
}

TEST(FunctionSpec, AnalyticKinds) {
  const auto one = FunctionSpec::one();
  EXPECT_EQ(one.value(0.7), 1.0);
  EXPECT_EQ(one.derivative(1, 0.7), 0.0);
  EXPECT_EQ(one.initial_value(0), 1.0);

  const auto p = FunctionSpec::polynomial({2.0, 3.0, 1.0});
  EXPECT_EQ(p.initial_values(3), (std::vector<double>{2.0, 3.0, 2.0}));
  EXPECT_EQ(p.value(2.0), 12.0);
  EXPECT_EQ(p.derivative(3, 1.0), 0.0);

  const auto e = FunctionSpec::exponential(-2.0);
  EXPECT_NEAR(e.derivative(2, 0.5), 4.0 * std::exp(-1.0), 1e-15);
  const auto s = FunctionSpec::sinusoid(3.0);
  EXPECT_NEAR(s.derivative(1, 0.2), 3.0 * std::cos(0.6), 1e-15);
  EXPECT_NEAR(s.derivative(2, 0.2), -9.0 * std::sin(0.6), 1e-14);
  EXPECT_EQ(s.initial_values(4), (std::vector<double>{0.0, 3.0, 0.0, -27.0}));

  const auto m = FunctionSpec::monomial(3);
  EXPECT_EQ(m.derivative(2, 2.0), 12.0);
  EXPECT_EQ(m.initial_value(3), 6.0);
  EXPECT_GE(m.derivative_order_available(), 4);
}

TEST(FunctionSpec, Tabulated) {
  const auto f = FunctionSpec::tabulated({0.0, 0.5, 1.0}, {1.0, 2.0, 0.0});
  EXPECT_EQ(f.derivative_order_available(), 0);
  EXPECT_EQ(f.value(0.5), 2.0);
  EXPECT_EQ(f.value(0.75), 1.0);
  EXPECT_EQ(f.initial_values(0).size(), 0u);
  EXPECT_THROW(f.derivative(1, 0.3), gfc::CapabilityError);
  EXPECT_THROW(f.value(1.5), gfc::DomainError);
  EXPECT_THROW(FunctionSpec::tabulated({0.0, 0.0, 1.0}, {1.0, 1.0, 1.0}), gfc::DomainError);
}

TEST(Gfi, Examples) {
  const auto one = gfc::gfi(gfc::make_power_kernel(1.0), FunctionSpec::one(), kGrid);
  EXPECT_LE(max_rel_error(one, [](double t) { return t; }), 1e-14);
  const auto abel = gfc::gfi(gfc::make_power_pair(0.5, 1), FunctionSpec::one(), kGrid);
  EXPECT_LE(max_rel_error(abel, [](double t) { return std::sqrt(t) / std::tgamma(1.5); }), 1e-12);
  const auto zero = gfc::gfi(gfc::make_power_kernel(0.5), FunctionSpec::polynomial({0.0}), kGrid);
  EXPECT_EQ(max_abs(zero), 0.0);
}

TEST(Gfi, FiniteOnOpenInterval) {
  for (const auto& pair : {gfc::make_power_pair(0.3, 1), gfc::make_bessel_pair(-0.5, 1),
                           gfc::make_bessel_pair(0.5, 2)}) {
    const auto r = gfc::gfi(pair, FunctionSpec::exponential(1.0), kGrid);
    for (double v : r.interior()) EXPECT_TRUE(std::isfinite(v));
  }
}

TEST(Gfi, Linearity) {
  const auto kappa = gfc::make_bessel_j_kernel(-0.3);
  const auto f = FunctionSpec::sinusoid(2.0);
  const auto g = FunctionSpec::exponential(0.5);
  const auto fg = gfc::gfi(kappa, f, kGrid);
  const auto gg = gfc::gfi(kappa, g, kGrid);
  std::vector<double> mix_values;
  for (double t : kGrid.nodes()) mix_values.push_back(3.0 * f.value(t) - 2.0 * g.value(t));
  const auto mix = gfc::convolve_samples(kappa, mix_values, kGrid);
  for (std::size_t i = 1; i < mix.size(); ++i) {
    const double expected = 3.0 * fg.values[i] - 2.0 * gg.values[i];
    EXPECT_NEAR(mix[i], expected, 1e-12 * std::max(1.0, std::abs(expected)));
  }
}

TEST(Gfi, Commutativity) {
  const auto k1 = gfc::make_power_kernel(0.4);
  const auto k2 = gfc::make_bessel_j_kernel(-0.3);
  const auto f = FunctionSpec::exponential(1.0);
  const auto a = gfc::gfi(k2, gfc::gfi(k1, f, kGrid).as_function(), kGrid);
  const auto b = gfc::gfi(k1, gfc::gfi(k2, f, kGrid).as_function(), kGrid);
  for (std::size_t i = 1; i < a.values.size(); ++i) EXPECT_NEAR(a.values[i], b.values[i], 1e-5);
}

TEST(GfdCaputo, Examples) {
  const auto pair = gfc::make_power_pair(1.5, 2);
  const auto r = gfc::gfd_caputo(pair, FunctionSpec::monomial(2), kGrid);
  EXPECT_FALSE(r.origin_defined);
  EXPECT_TRUE(std::isnan(r.values[0]));
  EXPECT_LE(max_rel_error(r, [](double t) { return 2.0 * std::sqrt(t) / std::tgamma(1.5); }), 1e-12);

  for (const auto& p : {gfc::make_power_pair(0.5, 1), gfc::make_bessel_pair(0.5, 2)}) {
    EXPECT_EQ(max_abs(gfc::gfd_caputo(p, FunctionSpec::polynomial({4.0}), kGrid)), 0.0);
  }
  // h_{j+1} for j < n is part of the subtracted Taylor polynomial.
  const auto p3 = gfc::make_power_pair(2.5, 3);
  for (int j = 0; j < 3; ++j) {
    EXPECT_EQ(max_abs(gfc::gfd_caputo(p3, FunctionSpec::monomial(j), kGrid)), 0.0);
  }
}

TEST(GfdCaputo, RejectsTabulatedInput) {
  const auto f = FunctionSpec::tabulated({0.0, 1.0}, {0.0, 1.0});
  EXPECT_THROW(gfc::gfd_caputo(gfc::make_power_pair(0.5, 1), f, kGrid), gfc::CapabilityError);
}

TEST(GfdRl, Examples) {
  const auto abel = gfc::gfd_rl(gfc::make_power_pair(0.5, 1), FunctionSpec::one(), kGrid);
  EXPECT_LE(max_rel_error(abel, [](double t) { return 1.0 / std::sqrt(std::numbers::pi * t); }),
            1e-14);

  const auto pair = gfc::make_power_pair(1.5, 2);
  const auto rl = gfc::gfd_rl(pair, FunctionSpec::monomial(2), kGrid);
  const auto caputo = gfc::gfd_caputo(pair, FunctionSpec::monomial(2), kGrid);
  for (std::size_t i = 1; i < rl.values.size(); ++i) EXPECT_EQ(rl.values[i], caputo.values[i]);
}

TEST(GfdRl, EqualsCaputoForVanishingInitialValues) {
  for (const auto& pair : {gfc::make_bessel_pair(-0.3, 1), gfc::make_bessel_pair(0.5, 2)}) {
    const auto f = FunctionSpec::monomial(3);
    const auto rl = gfc::gfd_rl(pair, f, kGrid);
    const auto caputo = gfc::gfd_caputo(pair, f, kGrid);
    for (std::size_t i = 1; i < rl.values.size(); ++i) {
      EXPECT_NEAR(rl.values[i], caputo.values[i], 1e-14 * std::abs(caputo.values[i]));
    }
  }
}

TEST(GfdRl, OrderOneRepresentation) {
  // D_(k) f = k * f' + f(0) k(t).
  const auto pair = gfc::make_bessel_pair(-0.3, 1);
  const auto f = FunctionSpec::exponential(1.0);
  const auto rl = gfc::gfd_rl(pair, f, kGrid);
  const auto k_fprime = gfc::gfi(pair.k(), FunctionSpec::exponential(1.0), kGrid);
  for (int i = 1; i <= kGrid.N(); ++i) {
    const double t = kGrid.node(i);
    const double expected = k_fprime.values[static_cast<std::size_t>(i)] + gfc::kernel_eval(pair.k(), t);
    EXPECT_NEAR(rl.values[static_cast<std::size_t>(i)], expected, 1e-13 * std::abs(expected));
  }
}

TEST(GfdRl, Linearity) {
  const auto pair = gfc::make_bessel_pair(0.5, 2);
  const auto a = gfc::gfd_rl(pair, FunctionSpec::polynomial({1.0, 2.0}), kGrid);
  const auto b = gfc::gfd_rl(pair, FunctionSpec::polynomial({3.0, 6.0}), kGrid);
  for (std::size_t i = 1; i < a.values.size(); ++i) {
    EXPECT_NEAR(b.values[i], 3.0 * a.values[i], 1e-12 * std::abs(b.values[i]));
  }
}

TEST(GfdRl, TabulatedFallbackIsFlagged) {
  const gfc::Grid grid(1.0, 256, 2.0);
  std::vector<double> t, v;
  for (int i = 0; i <= 400; ++i) {
    t.push_back(i / 400.0);
    v.push_back(t.back() * t.back());
  }
  const auto r = gfc::gfd_rl(gfc::make_power_pair(0.5, 1), FunctionSpec::tabulated(t, v), grid);
  EXPECT_EQ(r.accuracy, gfc::Accuracy::reduced);
  EXPECT_FALSE(r.warnings.empty());
  // D^0.5 t^2 = 2 t^1.5 / Gamma(2.5).
  EXPECT_LE(max_rel_error(r, [](double x) { return 2.0 * std::pow(x, 1.5) / std::tgamma(2.5); }, 0.2),
            1e-2);
}

TEST(Apply, Dispatch) {
  const auto pair = gfc::make_power_pair(0.5, 1);
  const auto f = FunctionSpec::sinusoid(1.0);
  EXPECT_EQ(gfc::apply({pair, gfc::OperatorKind::gfi, f, kGrid}).values, gfc::gfi(pair, f, kGrid).values);
  const auto caputo = gfc::apply({pair, gfc::OperatorKind::gfd_caputo, f, kGrid});
  const auto direct = gfc::gfd_caputo(pair, f, kGrid);
  for (std::size_t i = 1; i < caputo.values.size(); ++i) EXPECT_EQ(caputo.values[i], direct.values[i]);
}

TEST(RlIntegral, Examples) {
  const auto f = FunctionSpec::sinusoid(1.0);
  const auto id = gfc::rl_integral(0.0, f, kGrid);
  for (int i = 0; i <= kGrid.N(); ++i) EXPECT_EQ(id.values[static_cast<std::size_t>(i)], f.value(kGrid.node(i)));
  const auto one = gfc::rl_integral(1.0, FunctionSpec::one(), kGrid);
  EXPECT_LE(max_rel_error(one, [](double t) { return t; }), 1e-14);
  EXPECT_THROW(gfc::rl_integral(-0.5, f, kGrid), gfc::DomainError);
}

TEST(RlIntegral, ZeroOrderLimit) {
  const auto f = FunctionSpec::sinusoid(1.0);
  const auto r = gfc::rl_integral(0.001, f, kGrid);
  const auto t = kGrid.nodes();
  double l1 = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    const double a = std::abs(r.values[i - 1] - f.value(t[i - 1]));
    const double b = std::abs(r.values[i] - f.value(t[i]));
    l1 += 0.5 * (a + b) * (t[i] - t[i - 1]);
  }
  EXPECT_LE(l1, 0.01);
}

TEST(ClassicalDerivative, Examples) {
  const auto c = gfc::classical_derivative(0.5, gfc::DerivativeFlavor::caputo, FunctionSpec::monomial(1), kGrid);
  EXPECT_LE(max_rel_error(c, [](double t) { return std::sqrt(t) / std::tgamma(1.5); }), 1e-12);
  const auto rl = gfc::classical_derivative(1.5, gfc::DerivativeFlavor::riemann_liouville,
                                            FunctionSpec::one(), kGrid);
  EXPECT_LE(max_rel_error(rl, [](double t) { return std::pow(t, -1.5) / std::tgamma(-0.5); }), 1e-13);
  const auto zero = gfc::classical_derivative(1.5, gfc::DerivativeFlavor::caputo, FunctionSpec::one(), kGrid);
  EXPECT_EQ(max_abs(zero), 0.0);
  EXPECT_THROW(gfc::classical_derivative(2.0, gfc::DerivativeFlavor::caputo, FunctionSpec::one(), kGrid),
               gfc::DomainError);
  EXPECT_THROW(gfc::classical_derivative(-0.5, gfc::DerivativeFlavor::caputo, FunctionSpec::one(), kGrid),
               gfc::DomainError);
}

}  // namespace
