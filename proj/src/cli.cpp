#include "gfc/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gfc/errors.hpp"
#include "gfc/operators.hpp"
#include "gfc/verify.hpp"

namespace gfc::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto pos = s.find(sep);
    parts.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return parts;
}

std::optional<double> to_real(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<int> to_int(std::string_view s) {
  s = trim(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

double real_field(std::string_view value, std::string_view field) {
  if (auto v = to_real(value)) return *v;
  throw ConfigError("field '" + std::string(field) + "': expected a real number, got '" +
                    std::string(value) + "'");
}

int int_field(std::string_view value, std::string_view field) {
  if (auto v = to_int(value)) return *v;
  throw ConfigError("field '" + std::string(field) + "': expected an integer, got '" +
                    std::string(value) + "'");
}

// "key=value,key=value" with the offset of each value in the original text.
struct KeyValue {
  std::string_view key;
  std::string_view value;
  std::size_t position;
};

std::vector<KeyValue> key_values(std::string_view text, std::size_t offset,
                                 std::string_view what) {
  std::vector<KeyValue> kvs;
  if (text.empty()) return kvs;
  std::size_t pos = offset;
  for (auto part : split(text, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(std::string(what) + ": parse error at position " +
                        std::to_string(pos) + ": expected key=value, got '" +
                        std::string(part) + "'");
    }
    kvs.push_back({trim(part.substr(0, eq)), trim(part.substr(eq + 1)), pos + eq + 1});
    pos += part.size() + 1;
  }
  return kvs;
}

std::vector<double> read_table(const std::string& path, std::vector<double>& values) {
  std::ifstream in(path);
  if (!in) throw ConfigError("table: cannot open '" + path + "'");
  std::vector<double> t;
  std::string line;
  int line_no = 0;
  bool data_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto row = trim(line);
    if (row.empty() || row.front() == '#') continue;
    const auto cols = split(row, ',');
    if (cols.size() != 2) {
      throw ConfigError("table " + path + " line " + std::to_string(line_no) +
                        ": expected two columns (t, value)");
    }
    const auto tv = to_real(cols[0]);
    const auto vv = to_real(cols[1]);
    if (!tv || !vv) {
      if (!data_seen) continue;  // header row
      throw ConfigError("table " + path + " line " + std::to_string(line_no) +
                        ": not a pair of numbers");
    }
    data_seen = true;
    if (!t.empty() && !(*tv > t.back())) {
      throw ConfigError("table " + path + " line " + std::to_string(line_no) +
                        ": t must be strictly increasing");
    }
    t.push_back(*tv);
    values.push_back(*vv);
  }
  if (t.size() < 2) throw ConfigError("table " + path + ": needs at least two rows");
  return t;
}

double tolerance_or(const RunConfig& config, double fallback) {
  return config.tolerance.value_or(fallback);
}

CheckOptions check_options(const RunConfig& config, double tolerance) {
  CheckOptions o;
  o.tolerance = tolerance;
  if (config.t_cut) o.t_cut = *config.t_cut;
  return o;
}

Grid make_grid(const GridSpec& g) {
  try {
    return Grid(g.T, g.N, g.r);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("grid: ") + e.what());
  }
}

void write_sampled(const SampledResult& r, OutputFormat format, std::ostream& os) {
  const auto t = r.grid.nodes();
  const std::size_t first = r.origin_defined ? 0 : 1;
  if (format == OutputFormat::csv) {
    os << "t,value\n";
    for (std::size_t i = first; i < t.size(); ++i) {
      os << fmt17(t[i]) << ',' << fmt17(r.values[i]) << '\n';
    }
    return;
  }
  for (std::size_t i = first; i < t.size(); ++i) {
    Json row;
    row["t"] = t[i];
    row["value"] = r.values[i];
    os << row.dump() << '\n';
  }
}

void write_report(const ResidualReport& report, OutputFormat format, std::ostream& os) {
  os << (format == OutputFormat::csv ? report_csv(report) : report_json_lines(report));
}

void write_kernels(const KernelPair& pair, OutputFormat format, double horizon,
                   std::ostream& os) {
  if (format == OutputFormat::csv) {
    os << "# order=" << pair.order() << '\n';
    os << "kappa " << kernel_record(pair.kappa()) << '\n';
    os << "k " << kernel_record(pair.k()) << '\n';
    return;
  }
  for (auto [role, kernel] : {std::pair{"kappa", &pair.kappa()}, std::pair{"k", &pair.k()}}) {
    Json j;
    j["role"] = role;
    j["order"] = pair.order();
    j["family"] = std::string(to_string(kernel->family()));
    j["exponent"] = kernel->exponent();
    j["params"] = std::vector<double>(kernel->params().begin(), kernel->params().end());
    j["coefficients"] = std::vector<double>(kernel->coefficients().begin(),
                                            kernel->coefficients().end());
    j["next"] = kernel->next_coefficient();
    j["tail_bound"] = kernel->tail_bound(horizon);
    os << j.dump() << '\n';
  }
}

void write_study(const ConvergenceStudy& s, OutputFormat format, std::ostream& os) {
  if (format == OutputFormat::csv) {
    os << "# check_name=" << s.check_name << '\n';
    os << "# fitted_order=" << fmt17(s.fitted_order) << '\n';
    os << "# fit_skipped=" << (s.fit_skipped ? "true" : "false") << '\n';
    os << "# monotone_decreasing=" << (s.monotone_decreasing ? "true" : "false") << '\n';
    os << "N,max_abs\n";
    for (const auto& row : s.rows) os << row.N << ',' << fmt17(row.max_abs) << '\n';
    return;
  }
  Json head;
  head["check_name"] = s.check_name;
  head["fitted_order"] = s.fitted_order;
  head["fit_skipped"] = s.fit_skipped;
  head["monotone_decreasing"] = s.monotone_decreasing;
  os << head.dump() << '\n';
  for (const auto& row : s.rows) {
    Json j;
    j["N"] = row.N;
    j["max_abs"] = row.max_abs;
    os << j.dump() << '\n';
  }
}

std::vector<Branch> branches(const std::string& name) {
  if (name == "rl") return {Branch::riemann_liouville};
  if (name == "caputo") return {Branch::caputo};
  if (name == "both") return {Branch::riemann_liouville, Branch::caputo};
  throw ConfigError("field 'branch': expected rl, caputo or both, got '" + name + "'");
}

int execute(const RunConfig& config, std::ostream& os, std::ostream& err) {
  auto need_pair = [&]() {
    if (config.pair.empty()) throw ConfigError("field 'pair' is required");
    return parse_pair(config.pair);
  };

  switch (config.command) {
    case Command::kernels: {
      write_kernels(need_pair(), config.format, config.grid.T, os);
      return kExitOk;
    }
    case Command::apply: {
      const auto pair = need_pair();
      OperatorKind op;
      if (config.op == "gfi") op = OperatorKind::gfi;
      else if (config.op == "gfd_rl") op = OperatorKind::gfd_rl;
      else if (config.op == "gfd_caputo") op = OperatorKind::gfd_caputo;
      else throw ConfigError("field 'op': expected gfi, gfd_rl or gfd_caputo, got '" + config.op + "'");
      const auto result =
          apply(OperatorRequest{pair, op, parse_function(config.function), make_grid(config.grid)});
      for (const auto& w : result.warnings) err << "warning: " << w << '\n';
      write_sampled(result, config.format, os);
      return kExitOk;
    }
    case Command::verify_pair: {
      const auto report = check_pair_condition(need_pair(), make_grid(config.grid),
                                               check_options(config, tolerance_or(config, 1e-3)));
      write_report(report, config.format, os);
      return report.passed ? kExitOk : kExitVerificationFailed;
    }
    case Command::laplace_check: {
      for (double p : config.p_values) {
        if (!(p >= 1.0)) throw ConfigError("field 'p': Laplace checks need p >= 1, got " + fmt17(p));
      }
      const auto report =
          check_laplace_condition(need_pair(), config.p_values, tolerance_or(config, 1e-4));
      write_report(report, config.format, os);
      return report.passed ? kExitOk : kExitVerificationFailed;
    }
    case Command::ftc_check: {
      if (config.theorem != 1 && config.theorem != 2) {
        throw ConfigError("field 'theorem': expected 1 or 2");
      }
      const auto pair = need_pair();
      const auto f = parse_function(config.function);
      const auto grid = make_grid(config.grid);
      const auto options = check_options(config, tolerance_or(config, 1e-3));
      bool passed = true;
      for (auto b : branches(config.branch)) {
        const auto report = config.theorem == 1 ? check_ftc1(pair, f, grid, b, options)
                                                : check_ftc2(pair, f, grid, b, options);
        passed = passed && report.passed;
        write_report(report, config.format, os);
      }
      return passed ? kExitOk : kExitVerificationFailed;
    }
    case Command::converge: {
      const auto pair = need_pair();
      const auto options = check_options(config, tolerance_or(config, 1e-3));
      GridCheck check;
      if (config.check == "pair") {
        check = [&](const Grid& g) { return check_pair_condition(pair, g, options); };
      } else if (config.check == "ftc1" || config.check == "ftc2") {
        const auto f = parse_function(config.function);
        const auto b = branches(config.branch == "both" ? "rl" : config.branch).front();
        const bool first = config.check == "ftc1";
        check = [&, f, b, first](const Grid& g) {
          return first ? check_ftc1(pair, f, g, b, options) : check_ftc2(pair, f, g, b, options);
        };
      } else {
        throw ConfigError("field 'check': expected pair, ftc1 or ftc2, got '" + config.check + "'");
      }
      std::vector<int> ns = config.n_values;
      if (ns.size() < 3) throw ConfigError("field 'N_values': need at least three grid sizes");
      write_study(convergence_study(check, ns, config.grid.T, config.grid.r), config.format, os);
      return kExitOk;
    }
  }
  return kExitConfigError;
}

// Raw textual settings, keyed by config-file name.
using RawSettings = std::map<std::string, std::string>;

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "pair", "fn", "grid", "op", "output", "format", "tol", "t_cut",
      "p", "N_values", "check", "theorem", "branch"};
  return keys;
}

std::string json_to_raw(const std::string& key, const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return fmt17(v.get<double>());
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += json_to_raw(key, v[i]);
    }
    return s;
  }
  if (v.is_object() && key == "grid") {
    std::string s;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!s.empty()) s += ',';
      s += it.key() + "=" + json_to_raw(key, it.value());
    }
    return s;
  }
  throw ConfigError("config key '" + key + "': unsupported value type");
}

RawSettings load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const std::exception& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config file must hold a JSON object");
  RawSettings raw;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const auto& keys = known_keys();
    if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) {
      throw ConfigError("config file: unknown key '" + it.key() + "'");
    }
    raw[it.key()] = json_to_raw(it.key(), it.value());
  }
  return raw;
}

void apply_setting(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "pair") c.pair = value;
  else if (key == "fn") c.function = value;
  else if (key == "grid") c.grid = parse_grid(value, c.grid);
  else if (key == "op") c.op = value;
  else if (key == "output") c.output = value;
  else if (key == "format") {
    if (value == "csv") c.format = OutputFormat::csv;
    else if (value == "json-lines" || value == "jsonl") c.format = OutputFormat::json_lines;
    else throw ConfigError("field 'format': expected csv or json-lines, got '" + value + "'");
  } else if (key == "tol") {
    c.tolerance = real_field(value, key);
    if (!(*c.tolerance > 0.0)) throw ConfigError("field 'tol': must be > 0");
  } else if (key == "t_cut") {
    c.t_cut = real_field(value, key);
    if (!(*c.t_cut >= 0.0)) throw ConfigError("field 't_cut': must be >= 0");
  } else if (key == "p") {
    c.p_values.clear();
    for (auto part : split(value, ',')) c.p_values.push_back(real_field(part, key));
  } else if (key == "N_values") {
    c.n_values.clear();
    for (auto part : split(value, ',')) c.n_values.push_back(int_field(part, key));
  } else if (key == "check") c.check = value;
  else if (key == "theorem") c.theorem = int_field(value, key);
  else if (key == "branch") c.branch = value;
  else throw ConfigError("unknown setting '" + key + "'");
}

}  // namespace

KernelPair parse_pair(std::string_view text) {
  const auto colon = text.find(':');
  const auto family = trim(text.substr(0, colon));
  const std::string_view rest =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  std::map<std::string, std::string> kv;
  for (const auto& p : key_values(rest, colon + 1, "pair")) {
    if (!kv.emplace(std::string(p.key), std::string(p.value)).second) {
      throw ConfigError("pair: duplicate key '" + std::string(p.key) + "'");
    }
  }
  auto take = [&](const std::string& key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    auto v = it->second;
    kv.erase(it);
    return v;
  };
  auto required = [&](const std::string& key) {
    auto v = take(key);
    if (!v) throw ConfigError("pair '" + std::string(family) + "' needs '" + key + "'");
    return *v;
  };

  std::optional<KernelPair> pair;
  if (family == "power") {
    const double alpha = real_field(required("alpha"), "pair.alpha");
    const int n = int_field(required("n"), "pair.n");
    pair.emplace(make_power_pair(alpha, n));
  } else if (family == "bessel") {
    const double nu = real_field(required("nu"), "pair.nu");
    const int n = int_field(required("n"), "pair.n");
    pair.emplace(make_bessel_pair(nu, n));
  } else if (family == "series") {
    const double alpha = real_field(required("alpha"), "pair.alpha");
    std::vector<double> a;
    for (auto part : split(take("a").value_or("1"), ':')) a.push_back(real_field(part, "pair.a"));
    const int terms = int_field(take("terms").value_or("20"), "pair.terms");
    pair.emplace(make_series_pair(a, alpha, terms));
  } else {
    throw ConfigError("pair: unknown family '" + std::string(family) +
                      "' (expected power, bessel or series)");
  }
  if (auto lift = take("lift")) pair.emplace(lift_pair(*pair, int_field(*lift, "pair.lift")));
  if (!kv.empty()) {
    throw ConfigError("pair '" + std::string(family) + "': unknown key '" + kv.begin()->first + "'");
  }
  return *pair;
}

FunctionSpec parse_function(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  const auto head = text.substr(0, colon);
  const std::size_t body_pos = colon == std::string_view::npos ? text.size() : colon + 1;
  const std::string_view body = text.substr(body_pos);
  auto single = [&](std::string_view key) {
    const auto kvs = key_values(body, body_pos, "function");
    if (kvs.size() != 1 || kvs[0].key != key) {
      throw ConfigError("function: parse error at position " + std::to_string(body_pos) +
                        ": expected '" + std::string(head) + ":" + std::string(key) + "=<value>'");
    }
    return kvs[0];
  };
  auto number = [&](const KeyValue& kv) {
    if (auto v = to_real(kv.value)) return *v;
    throw ConfigError("function: parse error at position " + std::to_string(kv.position) +
                      ": not a number: '" + std::string(kv.value) + "'");
  };

  if (head == "one" && colon == std::string_view::npos) return FunctionSpec::one();
  if (head == "monomial") {
    const auto kv = single("m");
    const auto m = to_int(kv.value);
    if (!m || *m < 0) {
      throw ConfigError("function: parse error at position " + std::to_string(kv.position) +
                        ": monomial degree must be a non-negative integer");
    }
    return FunctionSpec::monomial(*m);
  }
  if (head == "poly") {
    std::vector<double> c;
    std::size_t pos = body_pos;
    for (auto part : split(body, ',')) {
      const auto v = to_real(part);
      if (!v) {
        throw ConfigError("function: parse error at position " + std::to_string(pos) +
                          ": not a number: '" + std::string(part) + "'");
      }
      c.push_back(*v);
      pos += part.size() + 1;
    }
    return FunctionSpec::polynomial(std::move(c));
  }
  if (head == "exp") return FunctionSpec::exponential(number(single("lambda")));
  if (head == "sin") return FunctionSpec::sinusoid(number(single("omega")));
  if (head == "table") {
    if (body.empty()) throw ConfigError("function: parse error at position " +
                                        std::to_string(body_pos) + ": table needs a path");
    std::vector<double> v;
    auto t = read_table(std::string(body), v);
    return FunctionSpec::tabulated(std::move(t), std::move(v));
  }
  throw ConfigError("function: parse error at position 0: unknown function '" +
                    std::string(text) +
                    "' (expected one, monomial:m=, poly:, exp:lambda=, sin:omega=, table:)");
}

GridSpec parse_grid(std::string_view text, GridSpec base) {
  for (const auto& kv : key_values(trim(text), 0, "grid")) {
    if (kv.key == "T") base.T = real_field(kv.value, "grid.T");
    else if (kv.key == "N") base.N = int_field(kv.value, "grid.N");
    else if (kv.key == "r") base.r = real_field(kv.value, "grid.r");
    else throw ConfigError("grid: unknown key '" + std::string(kv.key) + "' (expected T, N, r)");
  }
  if (!(base.T > 0.0)) throw ConfigError("grid.T must be > 0");
  if (base.N < 2) throw ConfigError("grid.N must be >= 2");
  if (!(base.r >= 1.0)) throw ConfigError("grid.r must be >= 1");
  return base;
}

GridSpec parse_grid_env(std::string_view text) {
  const auto parts = split(trim(text), ',');
  if (parts.size() != 3) throw ConfigError("GFC_DEFAULT_GRID must be 'T,N,r'");
  return parse_grid("T=" + std::string(parts[0]) + ",N=" + std::string(parts[1]) +
                    ",r=" + std::string(parts[2]));
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.output.empty()) return execute(config, out, err);
    std::ofstream file(config.output);
    if (!file) throw ConfigError("cannot open output file '" + config.output + "'");
    const int status = execute(config, file, err);
    file.flush();
    if (!file) throw ConfigError("failed writing '" + config.output + "'");
    return status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"gfc: general fractional integrals and derivatives with Sonine-type kernel pairs"};
  app.require_subcommand(1);

  std::map<std::string, std::string> flags;
  std::string config_path;
  std::map<CLI::App*, Command> commands;

  auto flag = [&](CLI::App* sub, const std::string& name, const std::string& key,
                  const std::string& help) {
    sub->add_option_function<std::string>(
        name, [&flags, key](const std::string& v) { flags[key] = v; }, help);
  };
  auto sub = [&](const std::string& name, Command command, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    commands[s] = command;
    flag(s, "--pair", "pair", "kernel pair, e.g. power:alpha=0.5,n=1");
    flag(s, "-o,--output", "output", "output file (default: stdout)");
    flag(s, "--format", "format", "csv | json-lines");
    s->add_option("--config", config_path, "JSON config file; flags win on conflict");
    return s;
  };

  sub("kernels", Command::kernels, "print the kernel records of a pair");
  auto* apply_cmd = sub("apply", Command::apply, "apply gfi / gfd_rl / gfd_caputo to a function");
  flag(apply_cmd, "--op", "op", "gfi | gfd_rl | gfd_caputo");
  flag(apply_cmd, "--fn", "fn", "input function");
  flag(apply_cmd, "--grid", "grid", "T=..,N=..,r=..");
  auto* verify_cmd = sub("verify-pair", Command::verify_pair, "check (kappa*k)(t) = t^(n-1)/(n-1)!");
  flag(verify_cmd, "--grid", "grid", "T=..,N=..,r=..");
  flag(verify_cmd, "--tol", "tol", "tolerance (default 1e-3)");
  flag(verify_cmd, "--t-cut", "t_cut", "report nodes t >= t_cut (default T/20)");
  auto* laplace_cmd = sub("laplace-check", Command::laplace_check, "check L(kappa) L(k) = p^-n");
  flag(laplace_cmd, "--p", "p", "comma-separated p values >= 1");
  flag(laplace_cmd, "--tol", "tol", "tolerance (default 1e-4)");
  auto* ftc_cmd = sub("ftc-check", Command::ftc_check, "fundamental theorem checks");
  flag(ftc_cmd, "--fn", "fn", "input function");
  flag(ftc_cmd, "--grid", "grid", "T=..,N=..,r=..");
  flag(ftc_cmd, "--theorem", "theorem", "1 | 2");
  flag(ftc_cmd, "--branch", "branch", "rl | caputo | both");
  flag(ftc_cmd, "--tol", "tol", "tolerance (default 1e-3)");
  flag(ftc_cmd, "--t-cut", "t_cut", "report nodes t >= t_cut (default T/20)");
  auto* conv_cmd = sub("converge", Command::converge, "mesh refinement study");
  flag(conv_cmd, "--check", "check", "pair | ftc1 | ftc2");
  flag(conv_cmd, "--fn", "fn", "input function (ftc checks)");
  flag(conv_cmd, "--grid", "grid", "T and r of the meshes");
  flag(conv_cmd, "--N-values", "N_values", "comma-separated increasing N");
  flag(conv_cmd, "--branch", "branch", "rl | caputo");
  flag(conv_cmd, "--t-cut", "t_cut", "report nodes t >= t_cut (default T/20)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfigError;
  }

  try {
    RunConfig config;
    for (auto* s : app.get_subcommands()) config.command = commands.at(s);
    if (const char* env = std::getenv("GFC_DEFAULT_GRID"); env && *env) {
      config.grid = parse_grid_env(env);
    }
    if (!config_path.empty()) {
      for (const auto& [key, value] : load_config_file(config_path)) {
        if (!flags.count(key)) apply_setting(config, key, value);
      }
    }
    for (const auto& [key, value] : flags) apply_setting(config, key, value);
    return run(config, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
}

}  // namespace gfc::cli
