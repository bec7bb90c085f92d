#include "zetaperiod/zeta.hpp"

#include "zetaperiod/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace zetaperiod {

std::string to_string(ZetaRoute r) { return r == ZetaRoute::direct ? "direct" : "rv_transform"; }

namespace {

void check_eps(int eps) {
  if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
}

Poly<double> round_poly(const Poly<Rational>& p) { return poly_cast<double>(p); }

}  // namespace

std::vector<Rational> weighted_moments_exact(const CompletedLValues& lv) {
  const int k = lv.size() + 1;
  const Rational inv_fact(BigInt(1), factorial(k - 2));
  std::vector<Rational> weighted(k - 1);
  for (int j = 0; j <= k - 2; ++j) weighted[j] = Rational(binomial(k - 2, j)) * exact_rational(lv.at(j + 1));
  std::vector<Rational> out(k - 1, Rational(0));
  for (int m = 0; m <= k - 2; ++m) {
    for (int j = 0; j <= k - 2; ++j) {
      // 0^0 = 1
      BigInt power = 1;
      for (int e = 0; e < m; ++e) power *= j;
      out[m] += weighted[j] * Rational(power);
    }
    out[m] *= inv_fact;
  }
  return out;
}

std::vector<double> weighted_moments(const CompletedLValues& lv, int weight) {
  if (lv.size() != weight - 1) throw std::invalid_argument("L-value vector does not match the weight");
  std::vector<double> out;
  for (const auto& m : weighted_moments_exact(lv)) out.push_back(to_double(m));
  return out;
}

ZetaPolynomial zeta_direct(std::span<const Rational> moments, int weight, int eps,
                           const StirlingTable& stirling) {
  check_eps(eps);
  const int d = weight - 2;
  if (static_cast<int>(moments.size()) != d + 1) throw std::invalid_argument("need k-1 moments");
  if (stirling.n_max() < d) throw std::invalid_argument("Stirling table too small");
  std::vector<Rational> coeffs(d + 1, Rational(0));
  for (int h = 0; h <= d; ++h) {
    Rational inner(0);
    for (int m = 0; m <= d - h; ++m) {
      const BigInt& s = stirling(d, m + h);
      if (s == 0) continue;
      inner += Rational(binomial(m + h, h) * s) * moments[m];
    }
    // (-s)^h
    coeffs[h] = (h % 2 == 0 ? inner : Rational(-inner)) * eps;
  }
  ZetaPolynomial out;
  out.route = ZetaRoute::direct;
  out.eps = eps;
  out.weight = weight;
  out.poly = round_poly(Poly<Rational>(std::move(coeffs)));
  out.normalization = normalize(out.poly);
  for (const auto& m : moments) out.moments.push_back(to_double(m));
  return out;
}

ZetaPolynomial zeta_direct(std::span<const double> moments, int weight, int eps,
                           const StirlingTable& stirling) {
  std::vector<Rational> exact;
  exact.reserve(moments.size());
  for (double m : moments) exact.push_back(exact_rational(m));
  return zeta_direct(std::span<const Rational>(exact), weight, eps, stirling);
}

ZetaPolynomial zeta_direct(const CompletedLValues& lv) {
  const auto moments = weighted_moments_exact(lv);
  return zeta_direct(std::span<const Rational>(moments), lv.weight, lv.sign,
                     StirlingTable::shared(lv.weight - 2));
}

Poly<Rational> rv_transform(const Poly<Rational>& u) {
  if (u.is_zero() || evaluate(u, Rational(1)) == 0) throw ValueAtOneVanishes("u(1) = 0; divide out (1 - z) first");
  const int e = u.degree();
  const auto h = series_coeffs_of_ratio(u, e + 1, e + 1);
  std::vector<std::pair<Rational, Rational>> nodes;
  for (int n = 0; n <= e; ++n) nodes.emplace_back(Rational(n), h[n]);
  return reflect(newton_interpolate(nodes, e));
}

Poly<double> rv_transform(const Poly<double>& u) {
  double total = 0.0;
  for (double c : u.coeffs()) total += std::abs(c);
  if (u.is_zero() || std::abs(evaluate(u, 1.0)) <= 1e-10 * total) {
    throw ValueAtOneVanishes("u(1) is numerically zero; divide out (1 - z) first");
  }
  return round_poly(rv_transform(poly_cast<Rational>(u)));
}

ZetaPolynomial zeta_via_rv(const Poly<Rational>& rf, int weight, int eps) {
  check_eps(eps);
  ZetaPolynomial out;
  out.route = ZetaRoute::rv_transform;
  out.eps = eps;
  out.weight = weight;
  Poly<Rational> u = rf;
  if (eps == -1) {
    auto [quotient, remainder] = divide_linear(rf, Rational(1));
    double total = 0.0;
    for (const auto& c : rf.coeffs()) total += std::abs(to_double(c));
    out.division_remainder = total > 0.0 ? std::abs(to_double(remainder)) / total : 0.0;
    if (!(out.division_remainder < 1e-8)) {
      std::ostringstream msg;
      msg << "R_f(1) is not negligible (relative " << out.division_remainder
          << "); the expected simple zero at z = 1 is missing";
      throw RemainderTooLarge(msg.str());
    }
    // R_f(z) / (1 - z) = -quotient
    u = -quotient;
  }
  Poly<Rational> z = rv_transform(u);
  z *= Rational(eps);
  out.poly = round_poly(z);
  return out;
}

ZetaPolynomial zeta_via_rv(const Poly<double>& rf, int weight, int eps) {
  return zeta_via_rv(poly_cast<Rational>(rf), weight, eps);
}

BlochKatoVector bloch_kato_moments(const CompletedLValues& lv, const NewformData& data) {
  const int k = data.weight;
  if (lv.size() != k - 1) throw std::invalid_argument("L-value vector does not match the weight");
  const double a = conductor_scale(data.level);
  BlochKatoVector out;
  out.ctilde.assign(k - 1, 0.0);
  for (int j = 0; j <= k - 2; ++j) {
    const double lambda = lv.at(j + 1);
    if (std::abs(lambda) <= 2.0 * lv.err_bound) continue;
    const double scale = std::pow(a, j + 1);
    const double l_value = lambda / (scale * std::tgamma(j + 1.0));
    out.ctilde[j] = scale * l_value / std::tgamma(k - 1.0 - j);
  }
  return out;
}

double moment_identity_residual(const BlochKatoVector& bk, std::span<const double> moments) {
  const int size = static_cast<int>(bk.ctilde.size());
  if (static_cast<int>(moments.size()) != size) throw std::invalid_argument("moment count mismatch");
  double worst = 0.0;
  for (int m = 0; m < size; ++m) {
    double sum = 0.0;
    double scale = 0.0;
    for (int j = 0; j < size; ++j) {
      const double term = bk.ctilde[j] * std::pow(static_cast<double>(j), m);
      sum += term;
      scale += std::abs(term);
    }
    scale = std::max(scale, std::abs(moments[m]));
    if (scale == 0.0) continue;
    worst = std::max(worst, std::abs(moments[m] - sum) / scale);
  }
  return worst;
}

double coefficient_discrepancy(const Poly<double>& a, const Poly<double>& b) {
  const int d = std::max(a.degree(), b.degree());
  double worst = 0.0;
  for (int i = 0; i <= d; ++i) {
    const double x = a.coeff(i);
    const double y = b.coeff(i);
    const double scale = std::max(std::abs(x), std::abs(y));
    if (scale == 0.0) continue;
    worst = std::max(worst, std::abs(x - y) / scale);
  }
  return worst;
}

double generating_function_residual(const ZetaPolynomial& zp, const Poly<Rational>& rf, int count) {
  const int k = zp.weight;
  const auto h = series_coeffs_of_ratio(rf, k - 1, count);
  const Poly<Rational> z = poly_cast<Rational>(zp.poly);
  double largest = 0.0;
  for (const auto& v : h) largest = std::max(largest, std::abs(to_double(v)));
  double worst = 0.0;
  for (int n = 0; n < count; ++n) {
    const Rational value = evaluate(z, Rational(-n)) * zp.eps;
    const double scale = std::max(std::abs(to_double(h[n])), largest * std::numeric_limits<double>::epsilon());
    if (scale == 0.0) continue;
    worst = std::max(worst, std::abs(to_double(Rational(value - h[n]))) / scale);
  }
  return worst;
}

std::optional<double> root_height_bound(int weight, int eps) {
  if (weight < 6) return std::nullopt;
  const double k = weight;
  return eps == 1 ? (k - 3.0) * (k - 3.5) : (k - 4.0) * (k - 4.5);
}

VerificationReport verify(const ZetaPolynomial& zp, const ZetaPolynomial* other,
                          const VerificationTolerances& tol) {
  VerificationReport rep;
  rep.degree = zp.poly.degree();
  rep.expected_degree = zp.expected_degree();
  rep.degree_ok = rep.degree == rep.expected_degree;
  if (!rep.degree_ok) {
    rep.failures.push_back("degree " + std::to_string(rep.degree) + " != expected " +
                           std::to_string(rep.expected_degree));
  }

  rep.functional_residual = poly_reflect_functional(zp.poly, zp.eps);
  rep.functional_ok = rep.functional_residual < tol.functional;
  if (!rep.functional_ok) rep.failures.push_back("functional equation residual too large");

  if (zp.poly.degree() >= 1) {
    try {
      rep.roots = find_roots(zp.poly);
      for (const auto& r : rep.roots.roots) {
        rep.max_re_deviation = std::max(rep.max_re_deviation, std::abs(r.real() - 0.5));
        rep.max_height = std::max(rep.max_height, std::abs(r.imag()));
      }
      rep.rh_ok = rep.max_re_deviation < tol.critical_line;
    } catch (const NoConvergence& e) {
      rep.rh_ok = false;
      rep.max_re_deviation = std::numeric_limits<double>::infinity();
      rep.failures.push_back(std::string("root finding: ") + e.what());
    }
  } else {
    rep.rh_ok = true;
  }
  if (!rep.rh_ok) rep.failures.push_back("roots off the critical line");

  rep.height_bound = root_height_bound(zp.weight, zp.eps);
  if (rep.height_bound) {
    rep.height_ok = rep.max_height < *rep.height_bound;
    if (!rep.height_ok) rep.failures.push_back("root height exceeds the bound");
  }

  if (other) {
    rep.cross_route = coefficient_discrepancy(zp.poly, other->poly);
    rep.cross_ok = *rep.cross_route < tol.cross_route;
    if (!rep.cross_ok) rep.failures.push_back("routes disagree");
  }
  return rep;
}

}  // namespace zetaperiod
