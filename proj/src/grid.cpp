#include "gfc/grid.hpp"

#include <cmath>
#include <string>

#include "gfc/errors.hpp"

namespace gfc {

Grid::Grid(double T, int N, double r) : T_(T), N_(N), r_(r) {
  if (!(T > 0.0) || !std::isfinite(T)) {
    throw DomainError("grid endpoint T must be a positive real");
  }
  if (N < 2) throw DomainError("grid needs N >= 2 intervals");
  if (!(r >= 1.0) || !std::isfinite(r)) {
    throw DomainError("grid grading exponent r must be >= 1");
  }
  nodes_.resize(static_cast<std::size_t>(N) + 1);
  for (int i = 0; i <= N; ++i) {
    const double u = static_cast<double>(i) / N;
    nodes_[static_cast<std::size_t>(i)] = T * std::pow(u, r);
  }
  nodes_.back() = T;
  for (int i = 1; i <= N; ++i) {
    if (!(nodes_[i] > nodes_[i - 1])) {
      throw DomainError("grid nodes are not strictly increasing (N = " +
                        std::to_string(N) + " too large for r)");
    }
  }
}

Grid make_graded_grid(double T, int N, double r) { return Grid(T, N, r); }

Grid default_grid() { return Grid(1.0, 2048, 2.0); }

}  // namespace gfc
