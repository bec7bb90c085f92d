#include "zetaperiod/report.hpp"

#include "zetaperiod/errors.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace zetaperiod {

using json = nlohmann::json;

bool Analysis::passed() const { return verification.passed(); }

NewformData delta_for_precision(double precision) {
  const int needed = truncation_point(1, 12, default_target_err(1, 12, precision));
  return delta_newform(std::max(64, needed));
}

namespace {

// Decreasing imaginary part, residuals kept alongside their roots.
void sort_by_height(RootSet& set) {
  std::vector<std::size_t> order(set.roots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const auto& x = set.roots[i];
    const auto& y = set.roots[j];
    return x.imag() != y.imag() ? x.imag() > y.imag() : x.real() < y.real();
  });
  RootSet sorted = set;
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted.roots[i] = set.roots[order[i]];
    if (order[i] < set.residuals.size()) sorted.residuals[i] = set.residuals[order[i]];
  }
  set = std::move(sorted);
}

}  // namespace

Analysis analyze(const NewformData& form, double precision) {
  validate(form);
  Analysis a;
  a.form = form;
  a.precision = precision;
  int sign = 0;
  if (form.sign) {
    sign = *form.sign;
  } else {
    sign = detect_sign(form);
    a.sign_detected = true;
    a.form.sign = sign;
  }
  a.lvalues = all_critical_values(form, sign, default_target_err(form.level, form.weight, precision));
  a.period_exact = period_polynomial<Rational>(a.lvalues, form.weight);
  a.period = poly_cast<double>(a.period_exact);
  a.period_roots = find_roots(a.period);
  a.direct = zeta_direct(a.lvalues);
  a.direct.source = form.label;
  a.rv = zeta_via_rv(a.period_exact, form.weight, sign);
  a.rv.source = form.label;
  a.verification = verify(a.direct, &a.rv);
  sort_by_height(a.period_roots);
  sort_by_height(a.verification.roots);

  a.generating_function_residual = generating_function_residual(a.direct, a.period_exact, 2 * (form.weight - 2) + 1);
  if (!(a.generating_function_residual < 1e-9)) {
    a.verification.failures.push_back("Z(-n) does not match the series of R_f / (1-z)^(k-1)");
  }
  a.bloch_kato = bloch_kato_moments(a.lvalues, form);
  a.moment_identity_residual = moment_identity_residual(a.bloch_kato, a.direct.moments);
  if (!(a.moment_identity_residual < 1e-10)) {
    a.verification.failures.push_back("moment identity through C~ fails");
  }
  return a;
}

json roots_json(const std::vector<std::complex<double>>& roots) {
  json out = json::array();
  for (const auto& z : roots) out.push_back(json::array({z.real(), z.imag()}));
  return out;
}

namespace {

json coeffs_json(const Poly<double>& p) {
  json out = json::array();
  for (double c : p.coeffs()) out.push_back(c);
  return out;
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json to_json(const Analysis& a) {
  json doc;
  const auto& f = a.form;
  doc["meta"] = {
      {"label", f.label},
      {"level", f.level},
      {"weight", f.weight},
      {"sign", *f.sign},
      {"sign_source", a.sign_detected ? "detected" : "declared"},
      {"precision", a.precision},
      {"coefficients_available", f.coefficient_count()},
      {"coefficient_order", "index 0 multiplies the zeroth power"},
  };

  json values = json::array();
  for (int s = 1; s <= a.lvalues.size(); ++s) values.push_back(a.lvalues.at(s));
  doc["lvalues"] = {{"s_from", 1}, {"values", values}, {"err_bound", a.lvalues.err_bound}};

  doc["period_poly"] = {{"coefficients", coeffs_json(a.period)}};

  const auto& n = a.direct.normalization;
  doc["zeta_poly"] = {
      {"direct",
       {{"coefficients", coeffs_json(a.direct.poly)},
        {"moments", a.direct.moments},
        {"normalization", {{"dropped", n.dropped}, {"threshold", n.threshold}, {"largest_dropped", n.largest_dropped}}}}},
      {"rv", {{"coefficients", coeffs_json(a.rv.poly)}, {"division_remainder", a.rv.division_remainder}}},
  };

  doc["roots"] = {
      {"period_poly",
       {{"values", roots_json(a.period_roots.roots)},
        {"method", to_string(a.period_roots.method)},
        {"max_residual", a.period_roots.max_residual()}}},
      {"zeta_poly",
       {{"values", roots_json(a.verification.roots.roots)},
        {"method", to_string(a.verification.roots.method)},
        {"max_residual", a.verification.roots.max_residual()}}},
  };

  const auto& v = a.verification;
  doc["verification"] = {
      {"passed", a.passed()},
      {"failures", v.failures},
      {"functional_residual", v.functional_residual},
      {"functional_ok", v.functional_ok},
      {"max_re_deviation", v.max_re_deviation},
      {"rh_ok", v.rh_ok},
      {"cross_route", optional_json(v.cross_route)},
      {"cross_ok", v.cross_ok},
      {"degree", v.degree},
      {"expected_degree", v.expected_degree},
      {"degree_ok", v.degree_ok},
      {"max_height", v.max_height},
      {"height_bound", optional_json(v.height_bound)},
      {"height_ok", v.height_ok},
      {"generating_function_residual", a.generating_function_residual},
      {"moment_identity_residual", a.moment_identity_residual},
  };

  doc["bloch_kato"] = {{"ctilde", a.bloch_kato.ctilde}, {"j_from", 0}};

  // Work counts only; wall-clock time would break byte-identical reports.
  doc["timing"] = {
      {"series_terms", a.lvalues.terms_used},
      {"zeta_root_sweeps", a.verification.roots.sweeps},
      {"period_root_sweeps", a.period_roots.sweeps},
  };
  return doc;
}

json to_json(const ConvergenceTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"label", r.label}, {"level", r.level}, {"distance", r.distance}, {"roots", roots_json(r.roots)}});
  }
  return {
      {"weight", t.weight},
      {"sign", t.sign},
      {"limit_roots", roots_json(t.limit_roots)},
      {"rows", rows},
      {"rank_correlation", t.rank_correlation},
      {"last_over_first", t.last_over_first},
  };
}

void write_roots_csv(const Analysis& a, std::ostream& out) {
  std::ostringstream body;
  body << std::setprecision(17);
  body << "kind,re,im\n";
  for (const auto& z : a.period_roots.roots) body << "period," << z.real() << ',' << z.imag() << '\n';
  for (const auto& z : a.verification.roots.roots) body << "zeta," << z.real() << ',' << z.imag() << '\n';
  out << body.str();
}

namespace {

struct Frame {
  double x0, x1, y0, y1;
  static constexpr double size = 480.0;
  static constexpr double margin = 48.0;

  double px(double x) const { return margin + (x - x0) / (x1 - x0) * (size - 2 * margin); }
  double py(double y) const { return size - margin - (y - y0) / (y1 - y0) * (size - 2 * margin); }
};

std::string fmt(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << v;
  return s.str();
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void write_scatter_svg(std::ostream& out, const std::string& title, const std::vector<ScatterSeries>& series,
                       PlotGuide guide, const std::string& x_label, const std::string& y_label) {
  double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
  bool first = true;
  auto include = [&](double x, double y) {
    if (first) {
      x0 = x1 = x;
      y0 = y1 = y;
      first = false;
    }
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  };
  for (const auto& s : series) {
    for (const auto& p : s.points) include(p.real(), p.imag());
  }
  if (guide == PlotGuide::unit_circle) {
    include(-1.0, -1.0);
    include(1.0, 1.0);
  }
  if (guide == PlotGuide::critical_line) {
    include(0.0, 0.0);
    include(1.0, 0.0);
  }
  if (first) include(0.0, 0.0);
  const double pad_x = 0.1 * std::max(x1 - x0, 1.0);
  const double pad_y = 0.1 * std::max(y1 - y0, 1.0);
  const Frame fr{x0 - pad_x, x1 + pad_x, y0 - pad_y, y1 + pad_y};

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"0 0 480 480\">\n";
  out << "<rect width=\"480\" height=\"480\" fill=\"white\"/>\n";
  out << "<text x=\"240\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
      << escape(title) << "</text>\n";
  // frame and axes through the origin when visible
  out << "<rect x=\"" << Frame::margin << "\" y=\"" << Frame::margin << "\" width=\"" << Frame::size - 2 * Frame::margin
      << "\" height=\"" << Frame::size - 2 * Frame::margin << "\" fill=\"none\" stroke=\"#999\"/>\n";
  if (fr.x0 < 0 && fr.x1 > 0) {
    out << "<line x1=\"" << fmt(fr.px(0)) << "\" y1=\"" << fmt(fr.py(fr.y0)) << "\" x2=\"" << fmt(fr.px(0))
        << "\" y2=\"" << fmt(fr.py(fr.y1)) << "\" stroke=\"#ccc\"/>\n";
  }
  if (fr.y0 < 0 && fr.y1 > 0) {
    out << "<line x1=\"" << fmt(fr.px(fr.x0)) << "\" y1=\"" << fmt(fr.py(0)) << "\" x2=\"" << fmt(fr.px(fr.x1))
        << "\" y2=\"" << fmt(fr.py(0)) << "\" stroke=\"#ccc\"/>\n";
  }
  if (guide == PlotGuide::unit_circle) {
    out << "<ellipse cx=\"" << fmt(fr.px(0)) << "\" cy=\"" << fmt(fr.py(0)) << "\" rx=\""
        << fmt(fr.px(1) - fr.px(0)) << "\" ry=\"" << fmt(fr.py(0) - fr.py(1))
        << "\" fill=\"none\" stroke=\"#4a90d9\" stroke-dasharray=\"4 3\"/>\n";
  } else if (guide == PlotGuide::critical_line) {
    out << "<line x1=\"" << fmt(fr.px(0.5)) << "\" y1=\"" << fmt(fr.py(fr.y0)) << "\" x2=\"" << fmt(fr.px(0.5))
        << "\" y2=\"" << fmt(fr.py(fr.y1)) << "\" stroke=\"#4a90d9\" stroke-dasharray=\"4 3\"/>\n";
  }
  // tick labels at the frame corners
  const double bottom = Frame::size - Frame::margin;
  out << "<g font-family=\"sans-serif\" font-size=\"10\" fill=\"#333\">\n";
  out << "<text x=\"" << Frame::margin << "\" y=\"" << bottom + 14 << "\">" << fmt(fr.x0) << "</text>\n";
  out << "<text x=\"" << Frame::size - Frame::margin << "\" y=\"" << bottom + 14 << "\" text-anchor=\"end\">"
      << fmt(fr.x1) << "</text>\n";
  out << "<text x=\"" << Frame::margin - 4 << "\" y=\"" << bottom << "\" text-anchor=\"end\">" << fmt(fr.y0)
      << "</text>\n";
  out << "<text x=\"" << Frame::margin - 4 << "\" y=\"" << Frame::margin + 8 << "\" text-anchor=\"end\">"
      << fmt(fr.y1) << "</text>\n";
  out << "<text x=\"240\" y=\"" << bottom + 30 << "\" text-anchor=\"middle\">" << escape(x_label) << "</text>\n";
  out << "<text x=\"14\" y=\"240\" text-anchor=\"middle\" transform=\"rotate(-90 14 240)\">" << escape(y_label)
      << "</text>\n";
  out << "</g>\n";

  double legend_y = Frame::margin + 14;
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      out << "<circle cx=\"" << fmt(fr.px(p.real())) << "\" cy=\"" << fmt(fr.py(p.imag())) << "\" r=\"3.5\" fill=\""
          << s.color << "\"/>\n";
    }
    out << "<circle cx=\"" << Frame::size - Frame::margin - 110 << "\" cy=\"" << legend_y - 3 << "\" r=\"3.5\" fill=\""
        << s.color << "\"/>\n";
    out << "<text x=\"" << Frame::size - Frame::margin - 102 << "\" y=\"" << legend_y
        << "\" font-family=\"sans-serif\" font-size=\"10\">" << escape(s.label) << "</text>\n";
    legend_y += 14;
  }
  out << "</svg>\n";
}

}  // namespace zetaperiod
