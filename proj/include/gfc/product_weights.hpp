#pragma once

// Exact moments of the singular weight s^p against a linear interpolant.

namespace gfc {

struct IntervalWeights {
  double near;  // multiplies the value at s = b - h (closer to the singularity)
  double far;   // multiplies the value at s = b
};

/// For the interval s in [b - h, b] (0 < h <= b) and p > -1,
///   near = int s^p (b - s)/h ds,   far = int s^p (s - (b - h))/h ds,
/// so that near * g(b-h) + far * g(b) integrates s^p times the linear
/// interpolant of g exactly. Written in x = h/b with expm1/log1p and a
/// binomial series for small x, which keeps both weights accurate to a few
/// ulp even when h << b.
IntervalWeights interval_weights(double b, double h, double p);

}  // namespace gfc
