#pragma once

// Zeta-polynomials Z_f(s) assembled two ways:
//
//  * direct: Z_f(s) = eps sum_h (-s)^h sum_m C(m+h, h) s(k-2, m+h) M_f(m),
//    with weighted moments M_f(m) = (1/(k-2)!) sum_j C(k-2, j) Lambda(f, j+1) j^m;
//  * transform: eps H(-s), where H interpolates the power-series
//    coefficients of R_f(z) / (1-z)^(k-1) (with the factor (1-z) cancelled
//    first when eps = -1).
//
// Both are carried out in exact rational arithmetic on the double-valued
// L-values, so the routes agree up to the final rounding whenever the
// algebra is right.

#include "zetaperiod/combinatorics.hpp"
#include "zetaperiod/lvalues.hpp"
#include "zetaperiod/poly.hpp"
#include "zetaperiod/roots.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zetaperiod {

enum class ZetaRoute { direct, rv_transform };

std::string to_string(ZetaRoute r);

struct ZetaPolynomial {
  Poly<double> poly;  // in the variable s
  ZetaRoute route = ZetaRoute::direct;
  std::string source;
  int eps = 1;
  int weight = 0;
  std::vector<double> moments;  // M_f(0..k-2); empty on the transform route
  Normalization normalization;  // leading terms cut on the direct route
  double division_remainder = 0.0;  // relative |R_f(1)| when (1-z) was divided out

  int expected_degree() const { return eps == 1 ? weight - 2 : weight - 3; }
};

/// C~(j+1) = (sqrt(N)/2pi)^(j+1) L(f, j+1) / (k-2-j)!, zero where L vanishes.
struct BlochKatoVector {
  std::vector<double> ctilde;
};

std::vector<Rational> weighted_moments_exact(const CompletedLValues& lv);
std::vector<double> weighted_moments(const CompletedLValues& lv, int weight);

/// R_f(z) = sum_j C(k-2, j) Lambda(f, k-1-j) z^j.
template <class T = double>
Poly<T> period_polynomial(const CompletedLValues& lv, int weight) {
  if (lv.size() != weight - 1) throw std::invalid_argument("L-value vector does not match the weight");
  std::vector<T> c(weight - 1);
  for (int j = 0; j <= weight - 2; ++j) {
    c[j] = scalar_cast<T>(binomial(weight - 2, j)) * scalar_cast<T>(lv.at(weight - 1 - j));
  }
  return Poly<T>(std::move(c));
}

ZetaPolynomial zeta_direct(std::span<const Rational> moments, int weight, int eps,
                           const StirlingTable& stirling);
/// Moments are read as exact dyadic rationals.
ZetaPolynomial zeta_direct(std::span<const double> moments, int weight, int eps,
                           const StirlingTable& stirling);
ZetaPolynomial zeta_direct(const CompletedLValues& lv);

/// Z(s) = H(-s) where H(n) is the n-th coefficient of u(z) / (1-z)^(deg u + 1).
/// Throws ValueAtOneVanishes when u(1) is zero (exact) or below 1e-10 of
/// sum |u_i| (double).
Poly<Rational> rv_transform(const Poly<Rational>& u);
Poly<double> rv_transform(const Poly<double>& u);

/// Throws RemainderTooLarge when eps = -1 and |R_f(1)| >= 1e-8 sum |R_i|.
ZetaPolynomial zeta_via_rv(const Poly<Rational>& rf, int weight, int eps);
ZetaPolynomial zeta_via_rv(const Poly<double>& rf, int weight, int eps);

BlochKatoVector bloch_kato_moments(const CompletedLValues& lv, const NewformData& data);

/// max over m of |M_f(m) - sum_j C~(j+1) j^m| / sum_j |C~(j+1) j^m|.
double moment_identity_residual(const BlochKatoVector& bk, std::span<const double> moments);

/// max_i |a_i - b_i| / max(|a_i|, |b_i|), treating missing coefficients as 0.
double coefficient_discrepancy(const Poly<double>& a, const Poly<double>& b);

/// max over n = 0..count-1 of |eps Z(-n) - h_n| / |h_n|, where h_n are the
/// power-series coefficients of R_f(z) / (1-z)^(k-1).
double generating_function_residual(const ZetaPolynomial& zp, const Poly<Rational>& rf, int count);

struct VerificationTolerances {
  double functional = 1e-9;
  double critical_line = 1e-8;
  double cross_route = 1e-9;
};

struct VerificationReport {
  double functional_residual = 0.0;
  bool functional_ok = false;
  double max_re_deviation = 0.0;
  bool rh_ok = false;
  std::optional<double> cross_route;
  bool cross_ok = true;
  int degree = -1;
  int expected_degree = -1;
  bool degree_ok = false;
  double max_height = 0.0;
  std::optional<double> height_bound;  // only stated for k >= 6
  bool height_ok = true;
  RootSet roots;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Strict bound on |Im rho| for k >= 6: (k-3)(k-7/2) for eps = +1 and
/// (k-4)(k-9/2) for eps = -1.
std::optional<double> root_height_bound(int weight, int eps);

VerificationReport verify(const ZetaPolynomial& zp, const ZetaPolynomial* other = nullptr,
                          const VerificationTolerances& tol = {});

}  // namespace zetaperiod
