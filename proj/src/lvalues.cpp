#include "zetaperiod/lvalues.hpp"

#include "zetaperiod/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace zetaperiod {

double gamma_upper_int(int m, double x) {
  if (m < 1) throw std::invalid_argument("gamma_upper_int needs m >= 1");
  if (!(x > 0.0)) throw std::invalid_argument("gamma_upper_int needs x > 0");
  // terms[i] = (m-1)!/i! x^i
  std::vector<double> terms(m);
  terms[0] = 1.0;
  for (int i = 2; i < m; ++i) terms[0] *= i;
  for (int i = 1; i < m; ++i) terms[i] = terms[i - 1] * x / i;
  std::sort(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += t;
  return std::exp(-x) * sum;
}

double conductor_scale(int level) { return std::sqrt(static_cast<double>(level)) / (2.0 * std::numbers::pi); }

double default_target_err(int level, int weight, double relative) {
  const double a = conductor_scale(level);
  return relative * std::pow(a, weight - 1) * std::tgamma(static_cast<double>(weight - 1));
}

namespace {

double slow_rate(int level, double split) { return conductor_scale(level) * std::max(split, 1.0 / split); }

int first_admissible(int weight, double b) {
  return std::max(1, static_cast<int>(std::ceil(2.0 * (weight - 1) * b)));
}

}  // namespace

double tail_bound(int level, int weight, int n_max, double split) {
  // Each dropped term is at most 2 C A n^p e^(-n/B) with p = (k-1)/2, using
  // |a_n| <= d(n) n^p <= n^(p+1) and Gamma(m, x) <= 2 x^(m-1) e^-x for
  // x >= 2(m-1). Summing both tails and bounding the sum by an integral gives
  // 8 C A B M^p e^(-M/B), valid for M >= 2(k-1)B.
  const double a = conductor_scale(level);
  const double b = slow_rate(level, split);
  const double c = std::pow(std::max(split, 1.0 / split), weight - 2);
  const double p = 0.5 * (weight - 1);
  const int m = std::max(n_max, first_admissible(weight, b));
  const double log_bound = std::log(8.0 * c * a * b) + p * std::log(static_cast<double>(m)) - m / b;
  return std::exp(log_bound);
}

int truncation_point(int level, int weight, double target_err, double split) {
  if (!(target_err > 0.0)) throw std::invalid_argument("target error must be positive");
  const double b = slow_rate(level, split);
  int m = first_admissible(weight, b);
  while (tail_bound(level, weight, m, split) >= target_err) {
    ++m;
    if (m > 100000000) throw std::runtime_error("truncation point out of range");
  }
  return m;
}

CompletedLValues critical_values_truncated(const NewformData& data, int sign, int n_max, double split) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (n_max > data.coefficient_count()) throw InsufficientCoefficients(n_max, data.coefficient_count());
  const int k = data.weight;
  const double a = conductor_scale(data.level);
  CompletedLValues out;
  out.values = Eigen::VectorXd::Zero(k - 1);
  out.terms_used = n_max;
  out.level = data.level;
  out.weight = k;
  out.sign = sign;

  Eigen::VectorXd magnitude_sum = Eigen::VectorXd::Zero(k - 1);
  for (int n = 1; n <= n_max; ++n) {
    const double an = data.an(n);
    if (an == 0.0) continue;
    const double ratio = a / n;
    const double x_head = n * split / a;
    const double x_tail = n / (split * a);
    for (int s = 1; s <= k - 1; ++s) {
      const double head = an * std::pow(ratio, s) * gamma_upper_int(s, x_head);
      const double tail = sign * an * std::pow(ratio, k - s) * gamma_upper_int(k - s, x_tail);
      out.values[s - 1] += head + tail;
      magnitude_sum[s - 1] += std::abs(head) + std::abs(tail);
    }
  }
  const double rounding = 32.0 * std::numeric_limits<double>::epsilon() * magnitude_sum.maxCoeff();
  out.err_bound = tail_bound(data.level, k, n_max, split) + rounding;
  return out;
}

CompletedLValues all_critical_values(const NewformData& data, int sign, double target_err, double split) {
  const int n_max = truncation_point(data.level, data.weight, target_err, split);
  return critical_values_truncated(data, sign, n_max, split);
}

CompletedLValues all_critical_values(const NewformData& data, double target_err) {
  if (!data.sign) throw UnknownSign();
  return all_critical_values(data, *data.sign, target_err);
}

CompletedLValues all_critical_values(const NewformData& data) {
  return all_critical_values(data, default_target_err(data.level, data.weight));
}

double completed_lvalue(const NewformData& data, int s, double target_err) {
  if (!data.sign) throw UnknownSign();
  return completed_lvalue(data, s, *data.sign, target_err);
}

double completed_lvalue(const NewformData& data, int s, int sign, double target_err, double split) {
  if (s < 1 || s > data.weight - 1) throw std::invalid_argument("s must lie in [1, k-1]");
  return all_critical_values(data, sign, target_err, split).at(s);
}

SignDetection detect_sign_report(const NewformData& data, double rel_tol) {
  constexpr double kAlternateSplit = 1.25;
  const double target = default_target_err(data.level, data.weight);
  SignDetection out;
  for (int sign : {1, -1}) {
    const auto base = all_critical_values(data, sign, target, 1.0);
    const auto moved = all_critical_values(data, sign, target, kAlternateSplit);
    const double scale = base.values.cwiseAbs().maxCoeff();
    const double diff = (base.values - moved.values).cwiseAbs().maxCoeff();
    const double residual = scale > 0.0 ? diff / scale : std::numeric_limits<double>::infinity();
    (sign == 1 ? out.residual_plus : out.residual_minus) = residual;
  }
  const bool plus_ok = out.residual_plus < rel_tol;
  const bool minus_ok = out.residual_minus < rel_tol;
  if (plus_ok == minus_ok) {
    throw AmbiguousSign("cannot determine the sign: split residuals " + std::to_string(out.residual_plus) +
                        " (+1) and " + std::to_string(out.residual_minus) + " (-1)");
  }
  out.sign = plus_ok ? 1 : -1;
  if (data.sign && *data.sign != out.sign) {
    throw ValidationError("declared sign " + std::to_string(*data.sign) + " contradicts detected sign " +
                          std::to_string(out.sign));
  }
  return out;
}

int detect_sign(const NewformData& data, double rel_tol) { return detect_sign_report(data, rel_tol).sign; }

int resolve_sign(const NewformData& data) { return data.sign ? *data.sign : detect_sign(data); }

}  // namespace zetaperiod
