// rhodonea: command-line front end for node generation, interpolation,
// quadrature and Lebesgue estimation on the rhodonea nodes.
//
// Exit codes: 0 success, 2 usage or validation error, 1 runtime error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include "rhodonea/rhodonea.hpp"

namespace {

using namespace rhodonea;
using io::json;

struct CliConfig {
  int m1 = 0;
  int m2 = 0;
  double alpha = 0.0;
  std::string spectral = "rect";
  std::string basis = "real";
  int grid_r = 1000;
  int grid_theta = 1000;
  std::string input;
  std::string output;
  std::string format = "csv";
  std::string function;
  std::string eval_grid;
};

// Distinguishes bad user input (exit 2) from failures while running (exit 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SpectralKind parse_spectral(const std::string& s) {
  if (s == "rect") return SpectralKind::rectangular;
  if (s == "triangle") return SpectralKind::triangular;
  throw UsageError("--spectral must be rect or triangle");
}

FrequencyPair require_freq(const CliConfig& c) {
  if (c.m1 < 1 || c.m2 < 1) throw UsageError("--m1 and --m2 must be positive integers");
  return FrequencyPair(c.m1, c.m2);
}

PolarGrid require_grid(const CliConfig& c) {
  if (c.grid_r < 2 || c.grid_theta < 2) throw UsageError("--grid-r and --grid-theta must be at least 2");
  return PolarGrid{c.grid_r, c.grid_theta};
}

/// Output sink: the named file, or stdout when the path is empty or "-".
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::binary);
    if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  bool is_stdout() const { return !file_.is_open(); }
  void finish() {
    stream().flush();
    if (!stream()) throw std::runtime_error("write failed");
  }

 private:
  std::ofstream file_;
};

/// Where summaries go: stdout, unless stdout already carries the main output.
std::ostream& summary_stream(const Sink& sink) { return sink.is_stdout() ? std::cerr : std::cout; }

// Builtin functions, evaluated in polar coordinates.
struct Builtin {
  std::function<complex(double, double)> eval;
  bool is_real = true;
  std::optional<std::function<double(Point2)>> cartesian;  // enables the reference integral
};

Builtin lookup_builtin(const std::string& name, bool complex_basis) {
  if (name == "const1") {
    Builtin b{[](double, double) { return complex(1.0, 0.0); }, true, std::function<double(Point2)>([](Point2) { return 1.0; })};
    return b;
  }
  if (name == "fig7") {
    return Builtin{[](double r, double t) { return complex(test_function({r * std::cos(t), r * std::sin(t)}), 0.0); },
                   true, std::function<double(Point2)>(test_function)};
  }
  const std::string prefix = "chebfourier:";
  if (name.rfind(prefix, 0) == 0) {
    int g1 = 0, g2 = 0;
    char comma = 0;
    std::istringstream is(name.substr(prefix.size()));
    if (!(is >> g1 >> comma >> g2) || comma != ',' || !is.eof() || g1 < 0)
      throw UsageError("builtin chebfourier expects chebfourier:g1,g2 with g1 >= 0");
    if (complex_basis)
      return Builtin{[g1, g2](double r, double t) { return chebyshev_t(g1, r) * std::polar(1.0, g2 * t); }, false,
                     std::nullopt};
    return Builtin{[g1, g2](double r, double t) { return complex(chebyshev_t(g1, r) * std::cos(g2 * t), 0.0); }, true,
                   std::nullopt};
  }
  throw UsageError("unknown function '" + name + "' (builtins: const1, chebfourier:g1,g2, fig7)");
}

struct Input {
  ComplexGrid data;
  std::optional<Builtin> builtin;
};

Input load_input(const CliConfig& c, const FrequencyPair& freq) {
  if (!c.input.empty() && !c.function.empty()) throw UsageError("--in and --function are mutually exclusive");
  if (!c.input.empty()) {
    std::ifstream in(c.input);
    if (!in) throw std::runtime_error("cannot open '" + c.input + "'");
    try {
      return {io::read_samples(in, freq), std::nullopt};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (c.function.empty()) throw UsageError("one of --in or --function is required");
  Builtin b = lookup_builtin(c.function, c.basis == "complex");
  ComplexGrid data = sample_function(b.eval, freq);
  return {std::move(data), std::move(b)};
}

RealGrid require_real(const ComplexGrid& f) {
  RealGrid out(f.freq());
  for (std::size_t p = 0; p < f.size(); ++p) {
    if (f[p].imag() != 0.0) throw UsageError("the real basis needs real-valued samples");
    out[p] = f[p].real();
  }
  return out;
}

template <class T>
double node_residual(const Interpolant<T>& p, const DataGrid<T>& f) {
  const auto at_nodes = evaluate_at_nodes(p);
  double worst = 0.0;
  for (std::size_t q = 0; q < f.size(); ++q) worst = std::max(worst, std::abs(at_nodes[q] - f[q]));
  return worst;
}

template <class T>
void write_eval_grid(const Interpolant<T>& p, const CliConfig& c) {
  if (c.eval_grid.empty()) return;
  const PolarGrid grid = require_grid(c);
  const auto radii = grid.radii();
  const auto angles = grid.angles();
  const auto values = p.evaluate_grid(radii, angles);
  Sink sink(c.eval_grid);
  io::write_grid_csv<T>(sink.stream(), radii, angles, values);
  sink.finish();
}

int cmd_nodes(const CliConfig& c) {
  const FrequencyPair freq = require_freq(c);
  if (c.format != "csv" && c.format != "json") throw UsageError("--format must be csv or json");
  json meta = io::nodes_metadata(freq);
  if (freq.coprime()) meta["curve_point_count"] = curve_nodes({freq, c.alpha}).size();
  Sink sink(c.output);
  if (c.format == "csv") {
    io::write_nodes_csv(sink.stream(), freq);
    sink.finish();
    summary_stream(sink) << meta.dump() << '\n';
  } else {
    json out = io::nodes_json(freq);
    if (meta.contains("curve_point_count")) out["curve_point_count"] = meta["curve_point_count"];
    sink.stream() << out.dump(2) << '\n';
    sink.finish();
  }
  return 0;
}

int cmd_interpolate(const CliConfig& c) {
  const FrequencyPair freq = require_freq(c);
  const SpectralIndexSet gamma = make_spectral_set(freq, parse_spectral(c.spectral));
  const Input in = load_input(c, freq);
  Sink sink(c.output);
  double residual = 0.0;
  if (c.basis == "real") {
    const RealGrid f = require_real(in.data);
    const auto p = interpolate_real(f, gamma);
    residual = node_residual(p, f);
    sink.stream() << io::coefficients_json(p.coeffs()).dump(2) << '\n';
    write_eval_grid(p, c);
  } else if (c.basis == "complex") {
    const auto p = interpolate(in.data, gamma);
    residual = node_residual(p, in.data);
    sink.stream() << io::coefficients_json(p.coeffs()).dump(2) << '\n';
    write_eval_grid(p, c);
  } else {
    throw UsageError("--basis must be real or complex");
  }
  sink.finish();
  summary_stream(sink) << json{{"m1", freq.m1()}, {"m2", freq.m2()}, {"max_node_residual", residual}}.dump() << '\n';
  return 0;
}

int cmd_quadrature(const CliConfig& c) {
  const FrequencyPair freq = require_freq(c);
  const Input in = load_input(c, freq);
  const bool is_real = std::all_of(in.data.values().begin(), in.data.values().end(),
                                   [](const complex& v) { return v.imag() == 0.0; });
  // Real data takes the real path so no rounding-level imaginary part shows up.
  const complex qv = is_real ? complex(clenshaw_curtis(require_real(in.data)).value, 0.0) : clenshaw_curtis(in.data).value;
  json out{{"m1", freq.m1()}, {"m2", freq.m2()}, {"Q", qv.real()}, {"integral", qv.real() * std::numbers::pi}};
  if (!is_real) out["Q_imag"] = qv.imag();
  if (in.builtin && in.builtin->cartesian) {
    const double ref = reference_integral(*in.builtin->cartesian);
    out["I_ref"] = ref;
    out["I_ref_integral"] = ref * std::numbers::pi;
    out["rel_error"] = std::abs(qv.real() - ref) / std::abs(ref);
  }
  Sink sink(c.output);
  sink.stream() << out.dump(2) << '\n';
  sink.finish();
  return 0;
}

int cmd_lebesgue(const CliConfig& c) {
  const FrequencyPair freq = require_freq(c);
  const SpectralIndexSet gamma = make_spectral_set(freq, parse_spectral(c.spectral));
  const PolarGrid grid = require_grid(c);
  const double est = lebesgue_estimate(gamma, grid);
  Sink sink(c.output);
  sink.stream() << json{{"m1", freq.m1()},
                        {"m2", freq.m2()},
                        {"spectral", std::string(to_string(gamma.kind()))},
                        {"grid", {grid.n_r, grid.n_theta}},
                        {"lebesgue_estimate", est}}
                       .dump(2)
                << '\n';
  sink.finish();
  return 0;
}

int cmd_reproduce_fig7(const CliConfig& c) {
  const PolarGrid grid = require_grid(c);
  if (c.format != "csv" && c.format != "json") throw UsageError("--format must be csv or json");
  const std::vector<FrequencyPair> ms{{10, 11}, {20, 21}, {30, 31}};
  StudyOptions opts;
  opts.grid = grid;
  opts.reference = reference_integral(test_function);
  Sink sink(c.output);
  if (c.format == "csv") {
    sink.stream() << "spectral,m1,m2,sup_error,Q,integral,I_ref_integral,rel_error\n";
  }
  json rows = json::array();
  for (auto kind : {SpectralKind::triangular, SpectralKind::rectangular}) {
    const auto rep = convergence_study(test_function, ms, kind, opts);
    for (const auto& row : rep.rows) {
      const double integral = row.q * std::numbers::pi;
      const double ref_integral = rep.reference * std::numbers::pi;
      if (c.format == "csv") {
        sink.stream() << to_string(kind) << ',' << row.freq.m1() << ',' << row.freq.m2() << ','
                      << io::format_double(row.sup_error) << ',' << io::format_double(row.q) << ','
                      << io::format_double(integral) << ',' << io::format_double(ref_integral) << ','
                      << io::format_double(row.rel_quad_error) << '\n';
      } else {
        rows.push_back(json{{"spectral", std::string(to_string(kind))},
                            {"m1", row.freq.m1()},
                            {"m2", row.freq.m2()},
                            {"sup_error", row.sup_error},
                            {"Q", row.q},
                            {"integral", integral},
                            {"I_ref_integral", ref_integral},
                            {"rel_error", row.rel_quad_error}});
      }
    }
  }
  if (c.format == "json")
    sink.stream() << json{{"basis", "real"}, {"grid", {grid.n_r, grid.n_theta}}, {"rows", rows}}.dump(2) << '\n';
  sink.finish();
  return 0;
}

void add_freq(CLI::App* sub, CliConfig& c) {
  sub->add_option("--m1", c.m1, "angular frequency m1 (>= 1)")->required();
  sub->add_option("--m2", c.m2, "radial frequency m2 (>= 1)")->required();
}

void add_spectral(CLI::App* sub, CliConfig& c) {
  sub->add_option("--spectral", c.spectral, "spectral index set: rect | triangle")
      ->check(CLI::IsMember({"rect", "triangle"}));
}

void add_grid(CLI::App* sub, CliConfig& c) {
  sub->add_option("--grid-r", c.grid_r, "radial grid size (>= 2)");
  sub->add_option("--grid-theta", c.grid_theta, "angular grid size (>= 2)");
}

void add_source(CLI::App* sub, CliConfig& c) {
  sub->add_option("--in", c.input, "samples file, one value per node in canonical order (or i1,i2,value rows)");
  sub->add_option("--function", c.function, "builtin function: const1 | chebfourier:g1,g2 | fig7");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral interpolation and quadrature on rhodonea nodes"};
  app.require_subcommand(1);
  CliConfig c;

  auto* nodes = app.add_subcommand("nodes", "write the node table");
  add_freq(nodes, c);
  nodes->add_option("--alpha", c.alpha, "curve rotation in units of pi (coprime m only)");
  nodes->add_option("--format", c.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  nodes->add_option("--out", c.output, "output path (default stdout)");

  auto* interp = app.add_subcommand("interpolate", "compute interpolation coefficients");
  add_freq(interp, c);
  add_spectral(interp, c);
  interp->add_option("--basis", c.basis, "real | complex")->check(CLI::IsMember({"real", "complex"}));
  add_source(interp, c);
  interp->add_option("--out", c.output, "coefficient JSON path (default stdout)");
  interp->add_option("--eval-grid", c.eval_grid, "also write the interpolant on the polar grid to this CSV");
  add_grid(interp, c);

  auto* quad = app.add_subcommand("quadrature", "Clenshaw-Curtis quadrature on the nodes");
  add_freq(quad, c);
  add_source(quad, c);
  quad->add_option("--out", c.output, "output path (default stdout)");

  auto* leb = app.add_subcommand("lebesgue", "estimate the Lebesgue constant on a polar grid");
  add_freq(leb, c);
  add_spectral(leb, c);
  add_grid(leb, c);
  leb->add_option("--out", c.output, "output path (default stdout)");

  auto* fig = app.add_subcommand("reproduce-fig7", "convergence table for the builtin test function");
  add_grid(fig, c);
  fig->add_option("--format", c.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  fig->add_option("--out", c.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*nodes) return cmd_nodes(c);
    if (*interp) return cmd_interpolate(c);
    if (*quad) return cmd_quadrature(c);
    if (*leb) return cmd_lebesgue(c);
    if (*fig) return cmd_reproduce_fig7(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
