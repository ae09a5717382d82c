#pragma once

#include <span>
#include <vector>

namespace gfc {

/// Graded mesh t_i = T (i/N)^r, i = 0..N, on [0, T]. r = 1 is uniform.
class Grid {
 public:
  Grid(double T, int N, double r);

  double T() const { return T_; }
  int N() const { return N_; }
  double r() const { return r_; }
  std::span<const double> nodes() const { return nodes_; }
  double node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double T_;
  int N_;
  double r_;
  std::vector<double> nodes_;
};

Grid make_graded_grid(double T, int N, double r);

/// T = 1, N = 2048, r = 2.
Grid default_grid();

}  // namespace gfc
