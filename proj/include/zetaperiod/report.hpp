#pragma once

// End-to-end analysis of one newform and its serialization to JSON, CSV and
// SVG.

#include "zetaperiod/hilbert_ehrhart.hpp"
#include "zetaperiod/zeta.hpp"

#include <json.hpp>

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace zetaperiod {

struct Analysis {
  NewformData form;  // coefficients are not serialized
  bool sign_detected = false;
  double precision = 1e-12;  // relative truncation target
  CompletedLValues lvalues;
  Poly<Rational> period_exact;
  Poly<double> period;
  RootSet period_roots;
  ZetaPolynomial direct;
  ZetaPolynomial rv;
  VerificationReport verification;
  double generating_function_residual = 0.0;
  double moment_identity_residual = 0.0;
  BlochKatoVector bloch_kato;

  bool passed() const;
};

/// Full pipeline. With no recorded sign the sign is detected first.
Analysis analyze(const NewformData& form, double precision = 1e-12);

/// The built-in discriminant form with enough coefficients for `precision`.
NewformData delta_for_precision(double precision);

nlohmann::json to_json(const Analysis& a);
nlohmann::json to_json(const ConvergenceTable& t);
nlohmann::json roots_json(const std::vector<std::complex<double>>& roots);

/// `kind,re,im` rows for the period and zeta roots.
void write_roots_csv(const Analysis& a, std::ostream& out);

enum class PlotGuide { unit_circle, critical_line, none };

struct ScatterSeries {
  std::string label;
  std::string color;
  std::vector<std::complex<double>> points;  // (x, y)
};

/// Static scatter plot with axes and an optional guide curve.
void write_scatter_svg(std::ostream& out, const std::string& title, const std::vector<ScatterSeries>& series,
                       PlotGuide guide, const std::string& x_label = "Re", const std::string& y_label = "Im");

}  // namespace zetaperiod
