#pragma once

// Command-line front end. Everything except argv handling lives here so the
// tests can drive commands in-process.
//
// Exit status: 0 success, 1 verification failed (the report is still
// written), 2 configuration or input error.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gfc/function.hpp"
#include "gfc/kernels.hpp"

namespace gfc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitConfigError = 2;

/// Invalid command-line or config-file input.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { kernels, apply, verify_pair, laplace_check, ftc_check, converge };
enum class OutputFormat { csv, json_lines };

struct GridSpec {
  double T = 1.0;
  int N = 2048;
  double r = 2.0;
};

struct RunConfig {
  Command command = Command::kernels;
  std::string pair;
  std::string function = "one";
  GridSpec grid;
  std::string op = "gfi";
  std::string output;  // empty: standard output
  OutputFormat format = OutputFormat::csv;
  std::optional<double> tolerance;
  std::optional<double> t_cut;
  std::vector<double> p_values{1.0, 2.0, 5.0, 10.0};
  std::vector<int> n_values{256, 512, 1024, 2048};
  std::string check = "pair";  // converge: pair | ftc1 | ftc2
  int theorem = 1;             // ftc-check: 1 | 2
  std::string branch = "both"; // rl | caputo | both
};

/// `power:alpha=<a>,n=<n>` | `bessel:nu=<v>,n=<n>` |
/// `series:alpha=<a>,a=<a0>:<a1>:...,terms=<N>`; any order-1 pair accepts
/// `lift=<m>` to build the order-m lifted pair.
KernelPair parse_pair(std::string_view text);

/// `one | monomial:m=<int> | poly:c0,c1,... | exp:lambda=<real> |
/// sin:omega=<real> | table:<path>`. Tables are two-column CSV (t, value)
/// with strictly increasing t; a header row and `#` comments are skipped.
FunctionSpec parse_function(std::string_view text);

/// `T=<real>,N=<int>,r=<real>`, any subset.
GridSpec parse_grid(std::string_view text, GridSpec base = {});

/// GFC_DEFAULT_GRID format: `T,N,r`.
GridSpec parse_grid_env(std::string_view text);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point: flags, optional --config JSON file (flags win), and
/// the GFC_DEFAULT_GRID environment variable.
int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err);

}  // namespace gfc::cli
