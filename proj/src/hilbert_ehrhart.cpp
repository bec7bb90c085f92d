#include "zetaperiod/hilbert_ehrhart.hpp"

#include "zetaperiod/combinatorics.hpp"
#include "zetaperiod/errors.hpp"
#include "zetaperiod/lvalues.hpp"
#include "zetaperiod/roots.hpp"
#include "zetaperiod/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <numeric>

namespace zetaperiod {

namespace {

void check_weight(int k, int minimum) {
  if (k < minimum || k % 2 != 0) {
    throw std::invalid_argument("weight must be even and at least " + std::to_string(minimum));
  }
}

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
}

}  // namespace

Poly<Rational> h_plus_poly(int k) {
  check_weight(k, 4);
  return binomial_poly(Rational(k - 2), k - 2) + binomial_poly(Rational(0), k - 2);
}

Poly<Rational> h_minus_poly(int k) {
  check_weight(k, 4);
  Poly<Rational> out;
  for (int j = 0; j <= k - 3; ++j) out += binomial_poly(Rational(k - 3 - j), k - 3);
  return out;
}

HPolyPair build_h_polys(int k) {
  check_weight(k, 6);
  return {k, h_plus_poly(k), h_minus_poly(k)};
}

double hk_function(int k, double t) {
  double sum = 0.0;
  for (int j = 0; j <= k - 3; ++j) sum += std::numbers::pi / 2.0 - std::atan(2.0 * t / (2 * j + 1));
  return sum;
}

std::vector<std::complex<double>> CotSolverResult::zeros() const {
  std::vector<std::complex<double>> out;
  out.reserve(heights.size());
  for (double t : heights) out.emplace_back(0.5, t);
  return out;
}

namespace {

// Solve h_k(t) = target for t > 0; h_k decreases from (k-2)pi/2 towards 0.
double bisect_positive(int k, double target) {
  const double hi_limit = static_cast<double>(k) * k;
  if (!(hk_function(k, hi_limit) < target)) {
    throw BracketFailure("target " + std::to_string(target) + " is below h_k(" + std::to_string(hi_limit) + ")");
  }
  double lo = 0.0;
  double hi = hi_limit;
  for (int iter = 0; iter < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++iter) {
    const double mid = 0.5 * (lo + hi);
    (hk_function(k, mid) > target ? lo : hi) = mid;
  }
  const double t = 0.5 * (lo + hi);
  if (!(std::abs(hk_function(k, t) - target) < 1e-12)) {
    throw BracketFailure("bisection did not reach 1e-12 for target " + std::to_string(target));
  }
  return t;
}

}  // namespace

CotSolverResult solve_hk_zeros(int k, int sign) {
  check_weight(k, 6);
  check_sign(sign);
  CotSolverResult out;
  out.k = k;
  out.sign = sign;
  const double pi = std::numbers::pi;
  if (sign == -1) {
    for (int j = 1; j <= k - 3; ++j) out.targets.push_back(j * pi);
  } else {
    for (int j = 0; j <= k - 3; ++j) out.targets.push_back((j + 0.5) * pi);
  }
  const double full = (k - 2) * pi;
  const double middle = 0.5 * full;
  for (double target : out.targets) {
    if (!(target > 0.0 && target < full)) {
      throw BracketFailure("target " + std::to_string(target) + " outside (0, (k-2)pi)");
    }
    if (std::abs(target - middle) < 1e-13 * full) {
      out.heights.push_back(0.0);
    } else if (target < middle) {
      out.heights.push_back(bisect_positive(k, target));
    } else {
      // h_k(-t) = (k-2)pi - h_k(t)
      out.heights.push_back(-bisect_positive(k, full - target));
    }
  }
  return out;
}

std::uint64_t ehrhart_count(int k, int m, std::uint64_t budget) {
  check_weight(k, 4);
  if (m < 0) throw std::invalid_argument("dilation must be non-negative");
  const int d = k - 3;
  const long double box = std::pow(static_cast<long double>(2 * m + 1), d);
  if (box > static_cast<long double>(budget)) {
    throw TooLarge("enumeration box (2m+1)^" + std::to_string(d) + " exceeds the budget of " +
                   std::to_string(budget));
  }
  const long long mm = m;
  // One task per value of the first coordinate; the rest run as an odometer.
  auto count_slice = [d, mm](long long first) {
    std::vector<long long> x(d, -mm);
    x[0] = first;
    std::uint64_t hits = 0;
    while (true) {
      if (in_dilated_cross_simplex<long long>(x, mm)) ++hits;
      int i = d - 1;
      while (i >= 1 && x[i] == mm) x[i--] = -mm;
      if (i < 1) break;
      ++x[i];
    }
    return hits;
  };
  std::vector<std::future<std::uint64_t>> parts;
  for (long long first = -mm; first <= mm; ++first) {
    parts.push_back(std::async(std::launch::async, count_slice, first));
  }
  std::uint64_t total = 0;
  for (auto& p : parts) total += p.get();
  return total;
}

std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost) {
  const int n = static_cast<int>(cost.rows());
  if (cost.cols() != n) throw std::invalid_argument("assignment needs a square cost matrix");
  if (n == 0) return {};
  // Potentials u (rows), v (columns); way[] records the augmenting path.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = match[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> out(n);
  for (int j = 1; j <= n; ++j) out[match[j] - 1] = j - 1;
  return out;
}

double root_multiset_distance(const std::vector<std::complex<double>>& a,
                              const std::vector<std::complex<double>>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("root multisets differ in size (" + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  }
  const int n = static_cast<int>(a.size());
  Eigen::MatrixXd cost(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) cost(i, j) = std::abs(a[i] - b[j]);
  }
  const auto assignment = min_cost_assignment(cost);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) worst = std::max(worst, cost(i, assignment[i]));
  return worst;
}

std::vector<std::complex<double>> limiting_zeros(int k, int sign) {
  check_sign(sign);
  const Poly<Rational> h = sign == 1 ? h_plus_poly(k) : h_minus_poly(k);
  return find_roots(reflect(h)).roots;
}

namespace {

std::vector<double> ranks(const std::vector<double>& values) {
  const int n = static_cast<int>(values.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
  std::vector<double> out(n);
  for (int i = 0; i < n;) {
    int j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double mean_rank = 0.5 * (i + j);
    for (int t = i; t <= j; ++t) out[order[t]] = mean_rank;
    i = j + 1;
  }
  return out;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  const int n = static_cast<int>(x.size());
  if (n < 2) return 0.0;
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace

ConvergenceTable convergence_study(std::span<const NewformData> family) {
  if (family.empty()) throw std::invalid_argument("empty family");
  ConvergenceTable table;
  table.weight = family.front().weight;
  table.sign = resolve_sign(family.front());
  table.limit_roots = limiting_zeros(table.weight, table.sign);

  for (const auto& data : family) {
    if (data.weight != table.weight) throw ValidationError("family mixes weights");
    const int sign = resolve_sign(data);
    if (sign != table.sign) throw ValidationError("family mixes signs");
    const auto lv = all_critical_values(data, sign, default_target_err(data.level, data.weight));
    const auto direct = zeta_direct(lv);
    const auto rv = zeta_via_rv(period_polynomial<Rational>(lv, data.weight), data.weight, sign);
    const auto report = verify(direct, &rv);
    if (!report.passed()) {
      throw VerificationFailed(data.label + " fails verification: " + report.failures.front());
    }
    ConvergenceRow row;
    row.label = data.label;
    row.level = data.level;
    row.roots = report.roots.roots;
    row.distance = root_multiset_distance(row.roots, table.limit_roots);
    table.rows.push_back(std::move(row));
  }
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const auto& a, const auto& b) { return a.level < b.level; });

  std::vector<double> levels, distances;
  for (const auto& row : table.rows) {
    levels.push_back(row.level);
    distances.push_back(row.distance);
  }
  table.rank_correlation = spearman(levels, distances);
  if (distances.front() > 0.0) table.last_over_first = distances.back() / distances.front();
  return table;
}

}  // namespace zetaperiod
