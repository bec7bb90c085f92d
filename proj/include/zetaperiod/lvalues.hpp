#pragma once

// Completed critical values Lambda(f, s), s = 1..k-1, from the two-tail
// series
//
//   Lambda(f, s) = sum_n a_n (A/n)^s Gamma(s, n c / A)
//                + eps sum_n a_n (A/n)^(k-s) Gamma(k-s, n / (c A)),
//
// with A = sqrt(N) / (2 pi) and split parameter c > 0. Any c gives the same
// value when eps is the true sign; c = 1 is the default.

#include "zetaperiod/newform.hpp"

#include <Eigen/Core>

namespace zetaperiod {

struct CompletedLValues {
  Eigen::VectorXd values;  // values[j] = Lambda(f, j+1)
  double err_bound = 0.0;  // common bound on the absolute error of every entry
  int terms_used = 0;
  int level = 1;
  int weight = 0;
  int sign = 1;

  /// Lambda(f, s) for 1 <= s <= k-1.
  double at(int s) const { return values[s - 1]; }
  int size() const { return static_cast<int>(values.size()); }
};

/// Gamma(m, x) = (m-1)! e^-x sum_{i<m} x^i / i!, for integer m >= 1, x > 0.
double gamma_upper_int(int m, double x);

/// sqrt(N) / (2 pi).
double conductor_scale(int level);

/// 1e-12 (or `relative`) times A^(k-1) (k-2)!, the size of the largest entry.
double default_target_err(int level, int weight, double relative = 1e-12);

/// Proven bound on the sum of all dropped terms when both tails stop at n_max.
double tail_bound(int level, int weight, int n_max, double split = 1.0);

/// Smallest n_max whose tail bound is below target_err.
int truncation_point(int level, int weight, double target_err, double split = 1.0);

/// All k-1 values with both tails stopped at n_max (no coefficient check
/// beyond n_max <= available coefficients).
CompletedLValues critical_values_truncated(const NewformData& data, int sign, int n_max,
                                           double split = 1.0);

CompletedLValues all_critical_values(const NewformData& data, int sign, double target_err,
                                     double split = 1.0);
/// Uses data.sign; throws UnknownSign when it is not set.
CompletedLValues all_critical_values(const NewformData& data, double target_err);
CompletedLValues all_critical_values(const NewformData& data);

double completed_lvalue(const NewformData& data, int s, double target_err);
double completed_lvalue(const NewformData& data, int s, int sign, double target_err,
                        double split = 1.0);

struct SignDetection {
  int sign = 0;
  double residual_plus = 0.0;   // split-consistency residual assuming eps = +1
  double residual_minus = 0.0;  // same for eps = -1
};

/// The sign eps for which the series evaluated at split 1 and at split 1.25
/// agree to within `rel_tol` of max |Lambda|. Throws AmbiguousSign when not
/// exactly one sign passes, and ValidationError when data.sign disagrees.
SignDetection detect_sign_report(const NewformData& data, double rel_tol = 1e-6);
int detect_sign(const NewformData& data, double rel_tol = 1e-6);

/// data.sign when known, otherwise detect_sign(data).
int resolve_sign(const NewformData& data);

}  // namespace zetaperiod
