#pragma once

// General fractional integral and the Riemann-Liouville / Caputo type
// general fractional derivatives of order n for a pair (kappa, k), plus the
// classical fractional operators as the power-kernel special case.
//
//   I_(kappa) f   = kappa * f
//   D_(k) f       = d^n/dt^n (k * f)
//   *D_(k) f      = D_(k) (f - sum_{j<n} f^(j)(0) h_{j+1})
//
// For f with n derivatives both derivatives are evaluated without numerical
// differentiation:
//   *D_(k) f = k * f^(n)
//   D_(k) f  = k * f^(n) + sum_{j<n} f^(j)(0) k^(n-1-j)(t).
// Derivative outputs leave t = 0 undefined.

#include "gfc/convolution.hpp"
#include "gfc/function.hpp"
#include "gfc/grid.hpp"
#include "gfc/kernels.hpp"

namespace gfc {

enum class OperatorKind { gfi, gfd_rl, gfd_caputo };
enum class DerivativeFlavor { riemann_liouville, caputo };

struct OperatorRequest {
  KernelPair pair;
  OperatorKind op;
  FunctionSpec f;
  Grid grid;
};

SampledResult gfi(const Kernel& kappa, const FunctionSpec& f, const Grid& grid);
SampledResult gfi(const KernelPair& pair, const FunctionSpec& f, const Grid& grid);

/// Throws CapabilityError for tabulated input.
SampledResult gfd_caputo(const KernelPair& pair, const FunctionSpec& f,
                         const Grid& grid);

/// Tabulated input falls back to n repeated second-order differences of
/// k * f on a uniform mesh with step T/(4N); the result is marked
/// Accuracy::reduced and carries a warning.
SampledResult gfd_rl(const KernelPair& pair, const FunctionSpec& f,
                     const Grid& grid);

SampledResult apply(const OperatorRequest& request);

/// Riemann-Liouville integral of order alpha >= 0; alpha = 0 is the identity.
SampledResult rl_integral(double alpha, const FunctionSpec& f, const Grid& grid);

/// Riemann-Liouville or Caputo derivative of non-integer order alpha > 0,
/// through the pair (h_alpha, h_{n-alpha}), n = ceil(alpha).
SampledResult classical_derivative(double alpha, DerivativeFlavor flavor,
                                   const FunctionSpec& f, const Grid& grid);

}  // namespace gfc
