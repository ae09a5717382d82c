#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "gfc/convolution.hpp"
#include "gfc/errors.hpp"
#include "gfc/kernels.hpp"

namespace {

using gfc::KernelFamily;

const double kSqrtPi = std::sqrt(std::numbers::pi);

// Taylor coefficients of the Bessel-J kappa of order alpha - 1, scaled so
// that kappa = h_alpha * sum a_k t^k.
std::vector<double> bessel_a(double alpha, int count) {
  std::vector<double> a;
  for (int k = 0; k < count; ++k) {
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    a.push_back(sign * std::exp(std::lgamma(alpha) - std::lgamma(k + 1.0) -
                                std::lgamma(k + alpha)));
  }
  return a;
}

TEST(PowerKernel, Examples) {
  const auto one = gfc::make_power_kernel(1.0);
  for (double t : {0.0, 0.3, 3.0}) EXPECT_EQ(gfc::kernel_eval(one, t), 1.0);
  const auto h2 = gfc::make_power_kernel(2.0);
  for (double t : {0.0, 0.3, 3.0}) EXPECT_NEAR(gfc::kernel_eval(h2, t), t, 1e-15);
  const auto h05 = gfc::make_power_kernel(0.5);
  EXPECT_NEAR(gfc::kernel_eval(h05, 1.0), 1.0 / kSqrtPi, 1e-15);
  EXPECT_NEAR(gfc::kernel_eval(h05, 0.25), 2.0 / kSqrtPi, 1e-14);
  EXPECT_THROW(gfc::kernel_eval(h05, 0.0), gfc::DomainError);
  EXPECT_THROW(gfc::make_power_kernel(0.0), gfc::DomainError);
}

TEST(KernelInvariants, ExponentAndLeadingCoefficient) {
  EXPECT_THROW(gfc::Kernel(KernelFamily::series, -1.0, {}, {1.0}), gfc::DomainError);
  EXPECT_THROW(gfc::Kernel(KernelFamily::series, 0.5, {}, {0.0, 1.0}), gfc::DomainError);
  EXPECT_NO_THROW(gfc::Kernel(KernelFamily::series, -0.5, {}, {1.0}));
}

TEST(PowerPair, Examples) {
  const auto abel = gfc::make_power_pair(0.5, 1);
  EXPECT_EQ(abel.kappa(), gfc::make_power_kernel(0.5));
  EXPECT_EQ(abel.k(), gfc::make_power_kernel(0.5));
  EXPECT_NEAR(gfc::kernel_eval(abel.kappa(), 1.0), 1.0 / kSqrtPi, 1e-15);

  const auto p2 = gfc::make_power_pair(1.5, 2);
  EXPECT_EQ(p2.order(), 2);
  EXPECT_EQ(p2.kappa(), gfc::make_power_kernel(1.5));
  EXPECT_EQ(p2.k(), gfc::make_power_kernel(0.5));

  try {
    gfc::make_power_pair(0.5, 2);
    FAIL() << "expected DomainError";
  } catch (const gfc::DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("(1, 2)"), std::string::npos) << e.what();
  }
  EXPECT_THROW(gfc::make_power_pair(2.0, 2), gfc::DomainError);
}

TEST(PowerPair, ExponentSum) {
  for (int n = 1; n <= 4; ++n) {
    const double alpha = n - 0.35;
    const auto pair = gfc::make_power_pair(alpha, n);
    EXPECT_NEAR(pair.kappa().exponent() + pair.k().exponent(), n - 2.0, 1e-15);
  }
}

TEST(BesselPair, Examples) {
  const auto pair = gfc::make_bessel_pair(-0.3, 1);
  // kappa = t^((alpha-1)/2) J_{alpha-1}(2 sqrt t), k = t^(-alpha/2) I_{-alpha}(2 sqrt t).
  const double alpha = 0.7;
  for (double t : {0.1, 0.5, 1.0, 3.0}) {
    const double s = std::sqrt(t);
    EXPECT_NEAR(gfc::kernel_eval(pair.kappa(), t),
                std::pow(s, alpha - 1.0) * gfc::bessel_j(alpha - 1.0, 2.0 * s), 1e-13);
    EXPECT_NEAR(gfc::kernel_eval(pair.k(), t),
                std::pow(s, -alpha) * gfc::bessel_i(-alpha, 2.0 * s), 1e-13);
  }

  const auto p2 = gfc::make_bessel_pair(0.5, 2);
  EXPECT_DOUBLE_EQ(p2.kappa().exponent(), 0.5);
  EXPECT_DOUBLE_EQ(p2.k().exponent(), -0.5);
  EXPECT_THROW(gfc::make_bessel_pair(1.5, 2), gfc::DomainError);
  EXPECT_THROW(gfc::make_bessel_pair(-1.5, 1), gfc::DomainError);
}

TEST(BesselKernel, OriginLimit) {
  const auto kappa = gfc::make_bessel_j_kernel(0.0);
  EXPECT_EQ(gfc::kernel_eval(kappa, 0.0), 1.0);
}

TEST(PairConstruction, RejectsNonIntegrableSecondKernel) {
  // k^n = h_{n(1-alpha)} leaves (-1, 0) for alpha = 0.3, n = 2.
  EXPECT_THROW(gfc::KernelPair(gfc::make_power_kernel(0.6), gfc::make_power_kernel(1.4), 2),
               gfc::DomainError);
  EXPECT_THROW(gfc::KernelPair(gfc::make_power_kernel(0.5), gfc::make_power_kernel(0.5), 0),
               gfc::DomainError);
}

TEST(AssociatedCoefficients, TrivialCases) {
  const std::vector<double> a1{1.0};
  const auto b1 = gfc::solve_associated_coefficients(a1, 0.4, 6);
  ASSERT_EQ(b1.size(), 7u);
  EXPECT_EQ(b1[0], 1.0);
  for (std::size_t k = 1; k < b1.size(); ++k) EXPECT_EQ(b1[k], 0.0);

  const std::vector<double> a2{2.0, 0.0, 0.0};
  const auto b2 = gfc::solve_associated_coefficients(a2, 0.5, 4);
  EXPECT_EQ(b2[0], 0.5);
  for (std::size_t k = 1; k < b2.size(); ++k) EXPECT_EQ(b2[k], 0.0);

  EXPECT_THROW(gfc::solve_associated_coefficients(std::vector<double>{0.0, 1.0}, 0.5, 3),
               gfc::DomainError);
  EXPECT_THROW(gfc::solve_associated_coefficients(a1, 1.0, 3), gfc::DomainError);
}

TEST(AssociatedCoefficients, BesselPairFromDoubleInputs) {
  // The recursion amplifies the rounding of the a_k; double inputs pin the
  // low-order b_k tightly and b_20 only to ~1e-7 (50-digit inputs are
  // checked in the acceptance suite).
  const double alpha = 0.7;
  const auto a = bessel_a(alpha, 21);
  const auto b = gfc::solve_associated_coefficients(a, alpha, 20);
  for (int k = 0; k <= 20; ++k) {
    const double expected = std::exp(std::lgamma(1.0 - alpha) - std::lgamma(k + 1.0) -
                                     std::lgamma(k + 1.0 - alpha));
    const double tol = k <= 8 ? 1e-12 : 1e-5;
    EXPECT_NEAR(b[static_cast<std::size_t>(k)] / expected, 1.0, tol) << "k=" << k;
  }
}

TEST(AssociatedCoefficients, ResubstitutionResidual) {
  for (const auto& a : {bessel_a(0.7, 21), std::vector<double>{1.0, -1.0},
                        std::vector<double>{1.0, 0.5, 0.25, -0.3}}) {
    for (double alpha : {0.2, 0.5, 0.7}) {
      const auto b = gfc::solve_associated_coefficients(a, alpha, 20);
      const auto res = gfc::associated_recursion_residuals(a, b, alpha);
      for (std::size_t m = 0; m < res.size(); ++m) EXPECT_LE(res[m], 1e-12) << "m=" << m;
    }
  }
}

TEST(SeriesPair, TrivialCoefficientsGiveAbelPair) {
  const std::vector<double> a{1.0};
  const auto pair = gfc::make_series_pair(a, 0.5, 5);
  for (double t : {0.01, 0.3, 1.0, 2.5}) {
    EXPECT_NEAR(gfc::kernel_eval(pair.kappa(), t), gfc::kernel_eval(gfc::make_power_kernel(0.5), t),
                1e-15);
    EXPECT_NEAR(gfc::kernel_eval(pair.k(), t), gfc::kernel_eval(gfc::make_power_kernel(0.5), t),
                1e-15);
  }
}

TEST(SeriesPair, MatchesBesselConstruction) {
  const double alpha = 0.7;
  const auto series = gfc::make_series_pair(bessel_a(alpha, 26), alpha, 25);
  const auto bessel = gfc::make_bessel_pair(alpha - 1.0, 1);
  for (double t = 0.05; t <= 4.0; t += 0.05) {
    EXPECT_NEAR(gfc::kernel_eval(series.kappa(), t), gfc::kernel_eval(bessel.kappa(), t), 1e-8)
        << "t=" << t;
    EXPECT_NEAR(gfc::kernel_eval(series.k(), t), gfc::kernel_eval(bessel.k(), t), 1e-8)
        << "t=" << t;
  }
}

TEST(SeriesPair, TailBoundIsNextTermAtHorizon) {
  const auto pair = gfc::make_series_pair(std::vector<double>{1.0, -1.0}, 0.3, 12);
  const auto& k = pair.k();
  EXPECT_NE(k.next_coefficient(), 0.0);
  const double T = 2.0;
  EXPECT_NEAR(k.tail_bound(T), std::abs(k.next_coefficient()) * std::pow(T, 13 + k.exponent()),
              1e-15);
}

TEST(LiftPair, PowerPairs) {
  const auto base = gfc::make_power_pair(0.6, 1);
  const auto l2 = gfc::lift_pair(base, 2);
  const auto l3 = gfc::lift_pair(base, 3);
  EXPECT_EQ(l2.order(), 2);
  EXPECT_EQ(l3.order(), 3);
  EXPECT_EQ(l2.kappa(), gfc::make_power_kernel(1.6));
  EXPECT_EQ(l3.kappa(), gfc::make_power_kernel(2.6));
  EXPECT_EQ(l3.k(), base.k());
  EXPECT_THROW(gfc::lift_pair(base, 1), gfc::DomainError);
  EXPECT_THROW(gfc::lift_pair(l2, 3), gfc::DomainError);
}

TEST(LiftPair, BesselPairAgainstNumericalConvolution) {
  const auto base = gfc::make_bessel_pair(-0.5, 1);
  const auto lifted = gfc::lift_pair(base, 2);
  EXPECT_DOUBLE_EQ(lifted.kappa().exponent(), 0.5);
  EXPECT_EQ(lifted.k(), base.k());
  const gfc::Grid grid(2.0, 1024, 2.0);
  const auto numeric = gfc::convolve_kernels(gfc::make_power_kernel(1.0), base.kappa(), grid);
  for (int i = 64; i <= grid.N(); i += 64) {
    const double t = grid.node(i);
    EXPECT_NEAR(gfc::kernel_eval(lifted.kappa(), t), numeric.values[static_cast<std::size_t>(i)],
                1e-5)
        << "t=" << t;
  }
}

TEST(LiftPair, ExponentRaisedAndKUnchangedForSeries) {
  const auto base = gfc::make_series_pair(std::vector<double>{1.0, -1.0}, 0.3, 12);
  for (int n = 2; n <= 4; ++n) {
    const auto lifted = gfc::lift_pair(base, n);
    EXPECT_EQ(lifted.kappa().exponent(), base.kappa().exponent() + (n - 1));
    EXPECT_EQ(lifted.k(), base.k());
  }
}

TEST(KernelDerivative, Examples) {
  const auto h2 = gfc::make_power_kernel(2.0);
  for (double t : {0.1, 1.0, 7.0}) {
    EXPECT_EQ(gfc::kernel_derivative_eval(h2, 0, t), gfc::kernel_eval(h2, t));
    EXPECT_NEAR(gfc::kernel_derivative_eval(h2, 1, t), 1.0, 1e-15);
  }
  const auto k = gfc::make_bessel_pair(0.5, 2).k();
  const double step = 1e-5;
  const double fd = (gfc::kernel_eval(k, 1.0 + step) - gfc::kernel_eval(k, 1.0 - step)) / (2 * step);
  EXPECT_NEAR(gfc::kernel_derivative_eval(k, 1, 1.0), fd, 1e-6);
}

TEST(KernelDerivative, AgreesWithFiniteDifferencesAcrossFamilies) {
  const std::vector<gfc::Kernel> kernels = {
      gfc::make_power_kernel(2.7), gfc::make_bessel_j_kernel(0.4), gfc::make_bessel_i_kernel(-0.3),
      gfc::make_series_pair(std::vector<double>{1.0, -1.0}, 0.3, 12).k(),
      gfc::lift_pair(gfc::make_bessel_pair(-0.5, 1), 3).kappa()};
  for (const auto& kernel : kernels) {
    for (double t : {0.3, 0.8, 1.7}) {
      const double step = 1e-5;
      const double fd =
          (gfc::kernel_eval(kernel, t + step) - gfc::kernel_eval(kernel, t - step)) / (2 * step);
      EXPECT_NEAR(gfc::kernel_derivative_eval(kernel, 1, t), fd, 1e-6 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST(KernelDerivative, AsKernel) {
  const auto d = gfc::derivative_kernel(gfc::make_power_kernel(2.5), 1);
  EXPECT_EQ(d, gfc::make_power_kernel(1.5));
  EXPECT_THROW(gfc::derivative_kernel(gfc::make_power_kernel(0.5), 1), gfc::DomainError);
  EXPECT_THROW(gfc::derivative_kernel(gfc::make_power_kernel(1.0), 1), gfc::DomainError);
  const auto lifted = gfc::lift_pair(gfc::make_bessel_pair(-0.5, 1), 2).kappa();
  const auto dl = gfc::derivative_kernel(lifted, 1);
  for (double t : {0.2, 1.0}) {
    EXPECT_NEAR(gfc::kernel_eval(dl, t), gfc::kernel_derivative_eval(lifted, 1, t), 1e-13);
  }
}

TEST(AnalyticConvolution, PowerKernelsAddOrders) {
  EXPECT_EQ(gfc::convolve_analytic(gfc::make_power_kernel(0.3), gfc::make_power_kernel(0.9)),
            gfc::make_power_kernel(1.2));
}

TEST(AnalyticConvolution, SoninePairsGiveTruncatedPower) {
  for (const auto& pair : {gfc::make_bessel_pair(-0.3, 1), gfc::make_bessel_pair(0.5, 2),
                           gfc::make_series_pair(std::vector<double>{1.0, -1.0}, 0.3, 20)}) {
    const auto conv = gfc::convolve_analytic(pair.kappa(), pair.k());
    const auto target = gfc::make_power_kernel(pair.order());
    for (double t : {0.1, 0.5, 1.0, 2.0}) {
      EXPECT_NEAR(gfc::kernel_eval(conv, t), gfc::kernel_eval(target, t), 1e-10) << "t=" << t;
    }
  }
}

TEST(KernelRecord, RoundTrip) {
  const std::vector<gfc::Kernel> kernels = {
      gfc::make_power_kernel(0.5), gfc::make_bessel_j_kernel(-0.3), gfc::make_bessel_i_kernel(0.5),
      gfc::make_series_pair(std::vector<double>{1.0, -1.0}, 0.3, 12).k(),
      gfc::lift_pair(gfc::make_power_pair(0.6, 1), 3).kappa()};
  for (const auto& kernel : kernels) {
    const auto record = gfc::kernel_record(kernel);
    EXPECT_EQ(gfc::parse_kernel_record(record), kernel) << record;
  }
  EXPECT_THROW(gfc::parse_kernel_record("family=bogus;exponent=0"), gfc::DomainError);
}

TEST(KernelFamily, TagRoundTrip) {
  for (auto f : {KernelFamily::power, KernelFamily::bessel_j_scaled, KernelFamily::bessel_i_scaled,
                 KernelFamily::series, KernelFamily::lifted}) {
    EXPECT_EQ(gfc::kernel_family_from_string(gfc::to_string(f)), f);
  }
}

}  // namespace
