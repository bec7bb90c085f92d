// zetaperiod: command-line front end.
//
//   zetaperiod <command> [--weight K] [--sign +-1] [--input PATH] [--precision E]
//                        [--emit json,csv,svg] [--output DIR] [--max-dilate M]
//
// Exit codes: 0 success, 1 a mathematical check failed, 2 usage or input error.

#include "zetaperiod/acceptance.hpp"
#include "zetaperiod/errors.hpp"
#include "zetaperiod/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>

namespace fs = std::filesystem;
using namespace zetaperiod;
using json = nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct RunConfig {
  std::string command;
  std::string source;  // positional argument of analyze / roots
  std::string input;
  std::string output = ".";
  std::vector<std::string> emit{"json"};
  double precision = 1e-12;
  int weight = 0;
  int sign = 0;
  int max_dilate = 5;

  bool wants(const std::string& format) const {
    return std::find(emit.begin(), emit.end(), format) != emit.end();
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ofstream open_output(const RunConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.output);
  const auto path = fs::path(cfg.output) / name;
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  std::cerr << "wrote " << path.string() << '\n';
  return out;
}

void write_json(const RunConfig& cfg, const std::string& name, const json& doc) {
  auto out = open_output(cfg, name);
  out << doc.dump(2) << '\n';
}

std::string complex_text(const std::complex<double>& z) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return s.str();
}

NewformData load_source(const RunConfig& cfg) {
  if (cfg.source == "delta") {
    if (!cfg.input.empty()) throw UsageError("give either 'delta' or --input, not both");
    return delta_for_precision(cfg.precision);
  }
  if (!cfg.source.empty()) throw UsageError("unknown source '" + cfg.source + "'; use 'delta' or --input PATH");
  if (cfg.input.empty()) throw UsageError("no input: use 'delta' or --input PATH");
  if (!fs::exists(cfg.input)) throw UsageError("input file not found: " + cfg.input);
  auto form = load_newform_file(cfg.input);
  if (cfg.sign != 0) {
    if (form.sign && *form.sign != cfg.sign) throw UsageError("--sign contradicts the sign recorded in the file");
    form.sign = cfg.sign;
  }
  return form;
}

void print_summary(const Analysis& a) {
  const auto& f = a.form;
  std::cout << "newform " << f.label << "  level " << f.level << "  weight " << f.weight << "  sign " << std::showpos
            << *f.sign << std::noshowpos << (a.sign_detected ? " (detected)" : "") << '\n';
  std::cout << std::setprecision(12);
  std::cout << "Lambda(f, s), s = 1.." << f.weight - 1 << " (error bound " << a.lvalues.err_bound << "):\n";
  for (int s = 1; s <= a.lvalues.size(); ++s) std::cout << "  " << s << "  " << a.lvalues.at(s) << '\n';
  std::cout << "zeta-polynomial roots:\n";
  for (const auto& z : a.verification.roots.roots) std::cout << "  " << complex_text(z) << '\n';
  const auto& v = a.verification;
  std::cout << std::setprecision(3) << "functional residual " << v.functional_residual << ", max |Re - 1/2| "
            << v.max_re_deviation << ", route discrepancy " << v.cross_route.value_or(0.0) << '\n';
  std::cout << (a.passed() ? "verification passed" : "verification FAILED") << '\n';
  for (const auto& msg : v.failures) std::cout << "  " << msg << '\n';
}

void write_root_plots(const RunConfig& cfg, const Analysis& a) {
  {
    auto out = open_output(cfg, "period_roots.svg");
    write_scatter_svg(out, "roots of R_f(z), " + a.form.label, {{"R_f roots", "#c0392b", a.period_roots.roots}},
                      PlotGuide::unit_circle);
  }
  auto out = open_output(cfg, "zeta_roots.svg");
  write_scatter_svg(out, "roots of Z_f(s), " + a.form.label, {{"Z_f roots", "#27ae60", a.verification.roots.roots}},
                    PlotGuide::critical_line);
}

int cmd_analyze(const RunConfig& cfg) {
  const auto a = analyze(load_source(cfg), cfg.precision);
  print_summary(a);
  if (cfg.wants("json")) write_json(cfg, "report.json", to_json(a));
  if (cfg.wants("csv")) {
    auto roots = open_output(cfg, "roots.csv");
    write_roots_csv(a, roots);
    auto coeffs = open_output(cfg, "zeta_coefficients.csv");
    coeffs << std::setprecision(17) << "power,direct,rv,period\n";
    const int top = std::max({a.direct.poly.degree(), a.rv.poly.degree(), a.period.degree()});
    for (int i = 0; i <= top; ++i) {
      coeffs << i << ',' << a.direct.poly.coeff(i) << ',' << a.rv.poly.coeff(i) << ',' << a.period.coeff(i) << '\n';
    }
  }
  if (cfg.wants("svg")) write_root_plots(cfg, a);
  return a.passed() ? kOk : kCheckFailed;
}

int cmd_roots(const RunConfig& cfg) {
  const auto a = analyze(load_source(cfg), cfg.precision);
  std::cout << "roots of R_f(z):\n";
  for (const auto& z : a.period_roots.roots) std::cout << "  " << complex_text(z) << "   |z| = " << std::abs(z) << '\n';
  std::cout << "roots of Z_f(s):\n";
  for (const auto& z : a.verification.roots.roots) std::cout << "  " << complex_text(z) << '\n';
  if (cfg.wants("json")) {
    write_json(cfg, "roots.json",
               {{"label", a.form.label},
                {"period_poly", roots_json(a.period_roots.roots)},
                {"zeta_poly", roots_json(a.verification.roots.roots)}});
  }
  if (cfg.wants("csv")) {
    auto out = open_output(cfg, "roots.csv");
    write_roots_csv(a, out);
  }
  if (cfg.wants("svg")) write_root_plots(cfg, a);
  return a.passed() ? kOk : kCheckFailed;
}

std::vector<std::string> coefficient_strings_high_first(const Poly<Rational>& p) {
  std::vector<std::string> out;
  for (int i = p.degree(); i >= 0; --i) out.push_back(to_string(p[i]));
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out;
}

int cmd_hk(const RunConfig& cfg) {
  if (cfg.weight < 6 || cfg.weight % 2) throw UsageError("hk needs an even --weight of at least 6");
  const auto h = build_h_polys(cfg.weight);
  json doc;
  doc["weight"] = cfg.weight;
  doc["coefficient_order"] = "highest degree first";
  const auto plus = coefficient_strings_high_first(h.h_plus);
  const auto minus = coefficient_strings_high_first(h.h_minus);
  doc["h_plus"] = plus;
  doc["h_minus"] = minus;
  std::cout << "h_plus:  " << join(plus) << '\n' << "h_minus: " << join(minus) << '\n';

  double worst = 0.0;
  std::vector<ScatterSeries> series;
  std::ostringstream csv;
  csv << std::setprecision(17) << "sign,target,height_bisection,height_polynomial\n";
  for (int sign : {-1, 1}) {
    const auto cot = solve_hk_zeros(cfg.weight, sign);
    auto poly = limiting_zeros(cfg.weight, sign);
    std::vector<double> poly_heights;
    for (const auto& z : poly) poly_heights.push_back(z.imag());
    std::sort(poly_heights.rbegin(), poly_heights.rend());
    double gap = poly_heights.size() == cot.heights.size() ? 0.0 : INFINITY;
    for (std::size_t i = 0; i < cot.heights.size() && i < poly_heights.size(); ++i) {
      gap = std::max(gap, std::abs(cot.heights[i] - poly_heights[i]));
      csv << sign << ',' << cot.targets[i] << ',' << cot.heights[i] << ',' << poly_heights[i] << '\n';
    }
    worst = std::max(worst, gap);
    const std::string key = sign == 1 ? "plus" : "minus";
    doc["zeros"][key] = {{"targets", cot.targets},
                         {"heights_bisection", cot.heights},
                         {"heights_polynomial", poly_heights},
                         {"max_gap", gap}};
    std::cout << "zeros of H_k^" << (sign == 1 ? '+' : '-') << "(-s) at 1/2 + it, t =";
    for (double t : cot.heights) std::cout << ' ' << std::setprecision(10) << t;
    std::cout << std::setprecision(3) << "   (solver gap " << gap << ")\n";
    series.push_back({sign == 1 ? "H+ zeros" : "H- zeros", sign == 1 ? "#8e44ad" : "#d35400", cot.zeros()});
  }
  doc["max_gap"] = worst;
  if (cfg.wants("json")) write_json(cfg, "hk.json", doc);
  if (cfg.wants("csv")) open_output(cfg, "hk.csv") << csv.str();
  if (cfg.wants("svg")) {
    auto out = open_output(cfg, "hk_zeros.svg");
    write_scatter_svg(out, "zeros of H_" + std::to_string(cfg.weight) + "(-s)", series, PlotGuide::critical_line);
  }
  return worst < 1e-9 ? kOk : kCheckFailed;
}

int cmd_ehrhart(const RunConfig& cfg) {
  if (cfg.weight < 4 || cfg.weight % 2) throw UsageError("ehrhart needs an even --weight of at least 4");
  if (cfg.max_dilate < 0) throw UsageError("--max-dilate must be non-negative");
  const auto h = h_minus_poly(cfg.weight);
  json rows = json::array();
  bool all_match = true;
  std::ostringstream csv;
  csv << "m,count,polynomial,match\n";
  std::cout << "   m        count   H_k^-(m)\n";
  for (int m = 0; m <= cfg.max_dilate; ++m) {
    const auto count = ehrhart_count(cfg.weight, m);
    const Rational value = evaluate(h, Rational(m));
    const bool match = Rational(count) == value;
    all_match = all_match && match;
    rows.push_back({{"m", m}, {"count", count}, {"polynomial", to_string(value)}, {"match", match}});
    csv << m << ',' << count << ',' << to_string(value) << ',' << (match ? "true" : "false") << '\n';
    std::cout << std::setw(4) << m << std::setw(13) << count << "   " << to_string(value) << (match ? "" : "  MISMATCH")
              << '\n';
  }
  if (cfg.wants("json")) {
    write_json(cfg, "ehrhart.json",
               {{"weight", cfg.weight}, {"dimension", cfg.weight - 3}, {"rows", rows}, {"all_match", all_match}});
  }
  if (cfg.wants("csv")) open_output(cfg, "ehrhart.csv") << csv.str();
  return all_match ? kOk : kCheckFailed;
}

int cmd_convergence(const RunConfig& cfg) {
  if (cfg.input.empty()) throw UsageError("convergence needs --input DIR (or a single newform file)");
  if (!fs::exists(cfg.input)) throw UsageError("input not found: " + cfg.input);
  std::vector<fs::path> paths;
  if (fs::is_directory(cfg.input)) {
    for (const auto& e : fs::directory_iterator(cfg.input)) {
      if (e.path().extension() == ".json" || e.path().extension() == ".csv") paths.push_back(e.path());
    }
  } else {
    paths.push_back(cfg.input);
  }
  std::sort(paths.begin(), paths.end());
  std::vector<NewformData> family;
  for (const auto& p : paths) {
    auto form = load_newform_file(p.string());
    if (cfg.weight != 0 && form.weight != cfg.weight) continue;
    if (cfg.sign != 0 && resolve_sign(form) != cfg.sign) continue;
    family.push_back(std::move(form));
  }
  if (family.empty()) throw UsageError("no newform in " + cfg.input + " matches the requested weight and sign");
  const auto table = convergence_study(family);
  std::cout << "weight " << table.weight << ", sign " << std::showpos << table.sign << std::noshowpos << ", "
            << table.rows.size() << " forms\n";
  std::cout << "  level  label            distance\n";
  for (const auto& r : table.rows) {
    std::cout << std::setw(7) << r.level << "  " << std::left << std::setw(16) << r.label << std::right << ' '
              << std::setprecision(6) << r.distance << '\n';
  }
  std::cout << "rank correlation (level vs distance) " << std::setprecision(3) << table.rank_correlation
            << ", last/first distance " << table.last_over_first << '\n';
  if (cfg.wants("json")) write_json(cfg, "convergence.json", to_json(table));
  if (cfg.wants("csv")) {
    auto out = open_output(cfg, "convergence.csv");
    out << std::setprecision(17) << "level,label,distance\n";
    for (const auto& r : table.rows) out << r.level << ',' << r.label << ',' << r.distance << '\n';
  }
  if (cfg.wants("svg")) {
    std::vector<std::complex<double>> pts;
    for (const auto& r : table.rows) pts.emplace_back(r.level, r.distance);
    auto out = open_output(cfg, "convergence.svg");
    write_scatter_svg(out, "root distance to the limit", {{"forms", "#2c3e50", pts}}, PlotGuide::none, "level N",
                      "distance");
  }
  return kOk;
}

int cmd_selftest(const RunConfig& cfg) {
  const std::string corpus = cfg.input.empty() ? std::string(ZETAPERIOD_CORPUS_DIR) : cfg.input;
  if (!fs::is_directory(corpus)) throw UsageError("corpus directory not found: " + corpus);
  const auto results = run_acceptance(corpus, std::cout);
  int failed = 0;
  for (const auto& r : results) failed += !r.passed;
  std::cout << results.size() - failed << "/" << results.size() << " acceptance criteria passed\n";
  return failed == 0 ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeta-polynomials of modular forms from critical L-values"};
  app.require_subcommand(1, 1);
  RunConfig cfg;

  app.add_option("--weight", cfg.weight, "Weight k (hk, ehrhart, convergence filter)");
  app.add_option("--sign", cfg.sign, "Sign of the functional equation")->check(CLI::IsMember({-1, 1}));
  app.add_option("--input", cfg.input, "Newform file (analyze, roots), directory (convergence, selftest)");
  app.add_option("--precision", cfg.precision, "Relative truncation target for the L-values")
      ->check(CLI::Range(1e-14, 1e-6));
  app.add_option("--emit", cfg.emit, "Output formats")
      ->delimiter(',')
      ->check(CLI::IsMember({"json", "csv", "svg"}));
  app.add_option("--output", cfg.output, "Output directory");
  app.add_option("--max-dilate", cfg.max_dilate, "Largest dilation for ehrhart");

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for 'delta' or --input")->fallthrough();
  analyze_cmd->add_option("source", cfg.source, "'delta' for the built-in discriminant form");
  auto* roots_cmd = app.add_subcommand("roots", "Roots of R_f and Z_f for 'delta' or --input")->fallthrough();
  roots_cmd->add_option("source", cfg.source, "'delta' for the built-in discriminant form");
  app.add_subcommand("hk", "H_k polynomials and the location of their zeros")->fallthrough();
  app.add_subcommand("ehrhart", "Lattice-point counts against H_k^-")->fallthrough();
  app.add_subcommand("convergence", "Root distance to the H_k limit across a family")->fallthrough();
  app.add_subcommand("selftest", "Run the acceptance suite")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  if (cfg.emit.empty()) {
    std::cerr << "error: --emit needs at least one format\n";
    return kInputError;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (cfg.command == "analyze") code = cmd_analyze(cfg);
    else if (cfg.command == "roots") code = cmd_roots(cfg);
    else if (cfg.command == "hk") code = cmd_hk(cfg);
    else if (cfg.command == "ehrhart") code = cmd_ehrhart(cfg);
    else if (cfg.command == "convergence") code = cmd_convergence(cfg);
    else code = cmd_selftest(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    code = kInputError;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    code = kInputError;
  } catch (const InsufficientCoefficients& e) {
    std::cerr << "input error: " << e.what() << '\n';
    code = kInputError;
  } catch (const UnknownSign& e) {
    std::cerr << "input error: " << e.what() << '\n';
    code = kInputError;
  } catch (const AmbiguousSign& e) {
    std::cerr << "input error: " << e.what() << '\n';
    code = kInputError;
  } catch (const TooLarge& e) {
    std::cerr << "input error: " << e.what() << '\n';
    code = kInputError;
  } catch (const ValidationError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    code = kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    code = kInputError;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    code = kCheckFailed;
  }
  std::cerr << "elapsed " << std::fixed << std::setprecision(3)
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
  return code;
}
