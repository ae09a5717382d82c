// Refinement run behind the default check tolerances. Prints a JSON
// document; the checked-in copy lives in tests/fixtures/calibration.json
// and is regenerated with
//   gfc_calibrate > tests/fixtures/calibration.json

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <vector>

#include "json.hpp"

#include "gfc/verify.hpp"

namespace {

using Json = nlohmann::ordered_json;

template <class Check>
Json refinement(const std::vector<int>& ns, double tolerance, Check worst_at) {
  Json entry;
  entry["default_tolerance"] = tolerance;
  entry["N"] = ns;
  std::vector<double> worst;
  for (int n : ns) {
    worst.push_back(worst_at(gfc::Grid(1.0, n, 2.0)));
    std::fprintf(stderr, "  N=%d worst=%.3e\n", n, worst.back());
  }
  entry["worst_max_abs"] = worst;
  auto it = std::max_element(worst.begin(), worst.end());
  entry["margin"] = tolerance / *it;
  return entry;
}

}  // namespace

int main() {
  const auto pairs = gfc::catalog_pairs();
  const auto functions = gfc::catalog_functions();
  const gfc::CheckOptions defaults;
  Json doc;
  doc["grid"] = {{"T", 1.0}, {"r", 2.0}, {"t_cut", "T/20"}};
  doc["pairs"] = pairs.size();
  doc["functions"] = functions.size();

  std::fprintf(stderr, "pair_condition\n");
  doc["pair_condition"] = refinement({256, 512, 1024, 2048}, defaults.tolerance, [&](const gfc::Grid& g) {
    double worst = 0.0;
    for (const auto& pair : pairs) worst = std::max(worst, gfc::check_pair_condition(pair, g).max_abs);
    return worst;
  });

  for (int theorem : {1, 2}) {
    std::fprintf(stderr, "ftc%d\n", theorem);
    doc[theorem == 1 ? "ftc1" : "ftc2"] =
        refinement({128, 256, 512, 1024}, defaults.tolerance, [&](const gfc::Grid& g) {
          double worst = 0.0;
          for (const auto& pair : pairs) {
            for (const auto& f : functions) {
              for (auto b : {gfc::Branch::riemann_liouville, gfc::Branch::caputo}) {
                const auto r = theorem == 1 ? gfc::check_ftc1(pair, f, g, b) : gfc::check_ftc2(pair, f, g, b);
                worst = std::max(worst, r.max_abs);
              }
            }
          }
          return worst;
        });
  }

  std::fprintf(stderr, "laplace_condition\n");
  const std::vector<double> ps{1.0, 2.0, 5.0, 10.0};
  Json laplace;
  const double laplace_tol = 1e-4;
  laplace["default_tolerance"] = laplace_tol;
  laplace["p"] = ps;
  std::vector<int> densities{2048, 4096, 8192};
  laplace["grid_density"] = densities;
  std::vector<double> worst;
  for (int density : densities) {
    gfc::LaplaceOptions options;
    options.grid_density = density;
    double w = 0.0;
    for (const auto& pair : pairs) {
      w = std::max(w, gfc::check_laplace_condition(pair, ps, laplace_tol, options).max_abs);
    }
    worst.push_back(w);
    std::fprintf(stderr, "  density=%d worst=%.3e\n", density, w);
  }
  laplace["worst_max_abs"] = worst;
  laplace["margin"] = laplace_tol / *std::max_element(worst.begin(), worst.end());
  doc["laplace_condition"] = laplace;

  std::cout << doc.dump(2) << '\n';
  return 0;
}
