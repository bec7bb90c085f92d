#include "zetaperiod/hilbert_ehrhart.hpp"

#include "zetaperiod/combinatorics.hpp"
#include "zetaperiod/errors.hpp"
#include "zetaperiod/roots.hpp"
#include "zetaperiod/zeta.hpp"

#include "../support/test_support.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <numbers>

using namespace zetaperiod;
using Q = Rational;

namespace {

// Barycentric coordinates of y with respect to e_1, ..., e_d, -(e_1 + ... + e_d).
Eigen::VectorXd barycentric(const Eigen::VectorXd& y) {
  const int d = static_cast<int>(y.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d + 1, d + 1);
  for (int i = 0; i < d; ++i) {
    a(i, i) = 1.0;
    a(i, d) = -1.0;
  }
  a.row(d).setOnes();
  Eigen::VectorXd rhs(d + 1);
  rhs.head(d) = y;
  rhs[d] = 1.0;
  return a.fullPivLu().solve(rhs);
}

std::vector<double> sorted_imag(const std::vector<std::complex<double>>& z) {
  std::vector<double> out;
  for (const auto& w : z) out.push_back(w.imag());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("H_6 polynomials") {
  const auto h = build_h_polys(6);
  CHECK(h.h_minus == Poly<Q>{Q(1), Q(7, 3), Q(1), Q(2, 3)});
  CHECK(evaluate(h.h_minus, Q(0)) == 1);
  CHECK(evaluate(h.h_minus, Q(1)) == 5);
  CHECK(h.h_plus.degree() == 4);
  CHECK_THROWS_AS(build_h_polys(4), std::invalid_argument);
  CHECK_THROWS_AS(build_h_polys(7), std::invalid_argument);
}

TEST_CASE("degrees and values at integers") {
  for (int k = 4; k <= 24; k += 2) {
    const auto plus = h_plus_poly(k);
    const auto minus = h_minus_poly(k);
    CHECK(plus.degree() == k - 2);
    CHECK(minus.degree() == k - 3);
    for (int n = 0; n <= 12; ++n) {
      CHECK(evaluate(plus, Q(n)) == Q(binomial(n + k - 2, k - 2) + binomial(n, k - 2)));
      BigInt sum = 0;
      for (int j = 0; j <= k - 3; ++j) sum += binomial(n - j + k - 3, k - 3);
      CHECK(evaluate(minus, Q(n)) == Q(sum));
    }
  }
  CHECK(h_minus_poly(4) == Poly<Q>{Q(1), Q(2)});
  CHECK(h_plus_poly(4) == Poly<Q>{Q(1), Q(1), Q(1)});
}

TEST_CASE("H_8^- values against the series of (1 + x + ... + x^5)/(1 - x)^6") {
  const auto h = h_minus_poly(8);
  const Poly<Q> u(std::vector<Q>(6, Q(1)));
  for (int n = 0; n <= 10; ++n) CHECK(evaluate(h, Q(n)) == series_coeffs_of_ratio(u, 6, n + 1).back());
}

TEST_CASE("H_k^- is the transform of 1 + x + ... + x^(k-3)") {
  for (int k = 4; k <= 20; k += 2) {
    const Poly<Q> u(std::vector<Q>(k - 2, Q(1)));
    CHECK(reflect(rv_transform(u)) == h_minus_poly(k));
  }
}

TEST_CASE("roots of H_k(-s) lie on the critical line") {
  for (int k = 4; k <= 20; k += 2) {
    for (int sign : {1, -1}) {
      const auto zeros = limiting_zeros(k, sign);
      CHECK(static_cast<int>(zeros.size()) == (sign == 1 ? k - 2 : k - 3));
      for (const auto& z : zeros) CHECK(std::abs(z.real() - 0.5) < 1e-9);
    }
  }
}

TEST_CASE("h_k is strictly decreasing and reflects through (k-2)pi/2") {
  auto gen = testing::rng(51);
  std::uniform_real_distribution<double> u(1e-3, 200.0);
  for (int k = 6; k <= 30; k += 2) {
    CHECK(hk_function(k, 0.0) == doctest::Approx((k - 2) * std::numbers::pi / 2));
    for (int i = 0; i < 50; ++i) {
      double a = u(gen);
      double b = u(gen);
      if (a > b) std::swap(a, b);
      if (a == b) continue;
      CHECK(hk_function(k, a) > hk_function(k, b));
      CHECK(hk_function(k, -a) == doctest::Approx((k - 2) * std::numbers::pi - hk_function(k, a)));
    }
  }
}

TEST_CASE("k = 6 minus case: heights 0 and +-sqrt(11)/2") {
  const auto r = solve_hk_zeros(6, -1);
  REQUIRE(r.heights.size() == 3);
  CHECK(r.heights[0] == doctest::Approx(std::sqrt(11.0) / 2).epsilon(1e-12));
  CHECK(r.heights[1] == 0.0);
  CHECK(r.heights[2] == doctest::Approx(-std::sqrt(11.0) / 2).epsilon(1e-12));
}

TEST_CASE("cotangent solver against the polynomial root finder") {
  for (int k = 6; k <= 12; k += 2) {
    for (int sign : {1, -1}) {
      const auto r = solve_hk_zeros(k, sign);
      CHECK(std::is_sorted(r.targets.begin(), r.targets.end()));
      for (std::size_t i = 1; i < r.heights.size(); ++i) CHECK(r.heights[i] < r.heights[i - 1]);
      for (std::size_t i = 0; i < r.heights.size(); ++i) {
        CHECK(std::abs(hk_function(k, r.heights[i]) - r.targets[i]) < 1e-12);
      }
      const auto from_poly = sorted_imag(limiting_zeros(k, sign));
      const auto from_cot = sorted_imag(r.zeros());
      REQUIRE(from_poly.size() == from_cot.size());
      for (std::size_t i = 0; i < from_cot.size(); ++i) CHECK(std::abs(from_poly[i] - from_cot[i]) < 1e-9);
    }
  }
  CHECK_THROWS_AS(solve_hk_zeros(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(solve_hk_zeros(6, 0), std::invalid_argument);
}

TEST_CASE("membership test against barycentric coordinates at random points") {
  auto gen = testing::rng(52);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int d = 1; d <= 7; ++d) {
    for (int trial = 0; trial < 400; ++trial) {
      const double m = 1.0 + trial % 3;
      Eigen::VectorXd x(d);
      for (int i = 0; i < d; ++i) x[i] = u(gen);
      const auto lambda = barycentric(x / m);
      if (std::abs(lambda.minCoeff()) < 1e-9) continue;
      std::vector<double> xs(x.data(), x.data() + d);
      CHECK(in_dilated_cross_simplex<double>(xs, m) == (lambda.minCoeff() > 0.0));
    }
  }
}

TEST_CASE("membership of lattice points in exact arithmetic") {
  for (int d = 1; d <= 4; ++d) {
    for (int m = 0; m <= 3; ++m) {
      std::vector<int> x(d, -m);
      while (true) {
        std::vector<Q> xq(x.begin(), x.end());
        Eigen::VectorXd y(d);
        for (int i = 0; i < d; ++i) y[i] = x[i];
        bool expected;
        if (m == 0) {
          expected = std::all_of(x.begin(), x.end(), [](int v) { return v == 0; });
        } else {
          expected = barycentric(y / m).minCoeff() > -1e-9;
        }
        CHECK(in_dilated_cross_simplex<Q>(xq, Q(m)) == expected);
        int i = d - 1;
        while (i >= 0 && x[i] == m) x[i--] = -m;
        if (i < 0) break;
        ++x[i];
      }
    }
  }
}

TEST_CASE("Ehrhart counts") {
  CHECK(ehrhart_count(6, 0) == 1);
  CHECK(ehrhart_count(6, 1) == 5);
  for (int k : {4, 6, 8}) {
    const auto h = h_minus_poly(k);
    for (int m = 0; m <= 5; ++m) CHECK(Q(ehrhart_count(k, m)) == evaluate(h, Q(m)));
  }
  CHECK_THROWS_AS(ehrhart_count(12, 8, 1000000), TooLarge);
  CHECK_THROWS_AS(ehrhart_count(6, -1), std::invalid_argument);
}

TEST_CASE("assignment matches brute force") {
  auto gen = testing::rng(53);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 7;
    Eigen::MatrixXd cost(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) cost(i, j) = u(gen);
    }
    const auto a = min_cost_assignment(cost);
    std::vector<int> seen(n, 0);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      ++seen[a[i]];
      total += cost(i, a[i]);
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int v) { return v == 1; }));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = 1e300;
    do {
      double t = 0.0;
      for (int i = 0; i < n; ++i) t += cost(i, perm[i]);
      best = std::min(best, t);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(total == doctest::Approx(best).epsilon(1e-12));
  }
  CHECK(min_cost_assignment(Eigen::MatrixXd(0, 0)).empty());
}

TEST_CASE("root multiset distance") {
  using C = std::complex<double>;
  auto gen = testing::rng(54);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 6;
    std::vector<C> a, b;
    for (int i = 0; i < n; ++i) {
      a.emplace_back(u(gen), u(gen));
      b.emplace_back(u(gen), u(gen));
    }
    CHECK(root_multiset_distance(a, b) == doctest::Approx(testing::brute_force_match(a, b)));
    CHECK(root_multiset_distance(a, a) == 0.0);
  }
  CHECK_THROWS_AS(root_multiset_distance({C(0)}, {}), std::invalid_argument);
}

TEST_CASE("convergence study") {
  const std::vector<NewformData> one{testing::corpus_entry("7.6.0")};
  const auto single = convergence_study(one);
  REQUIRE(single.rows.size() == 1);
  CHECK(std::isfinite(single.rows[0].distance));
  for (const auto& z : single.rows[0].roots) CHECK(std::abs(z.imag()) < 3.0);

  std::vector<NewformData> family;
  for (const auto* label : {"98.4.0", "5.4.0", "24.4.0"}) family.push_back(testing::corpus_entry(label));
  const auto table = convergence_study(family);
  REQUIRE(table.rows.size() == 3);
  CHECK(table.rows[0].level == 5);
  CHECK(table.rows[2].level == 98);
  const auto w = std::polar(1.0, std::numbers::pi / 3);
  CHECK(testing::brute_force_match(table.limit_roots, {w, std::conj(w)}) < 1e-12);

  std::vector<NewformData> mixed{testing::corpus_entry("5.4.0"), testing::corpus_entry("13.4.0")};
  CHECK_THROWS_AS(convergence_study(mixed), ValidationError);
  std::vector<NewformData> weights{testing::corpus_entry("5.4.0"), testing::corpus_entry("3.6.0")};
  CHECK_THROWS_AS(convergence_study(weights), ValidationError);
}
