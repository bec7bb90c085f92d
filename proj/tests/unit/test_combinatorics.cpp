#include "zetaperiod/combinatorics.hpp"

#include <doctest.h>

#include <thread>

using namespace zetaperiod;

TEST_CASE("Stirling triangle through n = 6") {
  const std::vector<std::vector<int>> rows = {
      {1},
      {0, 1},
      {0, -1, 1},
      {0, 2, -3, 1},
      {0, -6, 11, -6, 1},
      {0, 24, -50, 35, -10, 1},
      {0, -120, 274, -225, 85, -15, 1},
  };
  StirlingTable table(6);
  for (int n = 0; n <= 6; ++n) {
    for (int m = 0; m <= n; ++m) {
      CHECK(table(n, m) == rows[n][m]);
      CHECK(stirling_first(n, m) == rows[n][m]);
    }
    CHECK(table(n, n + 1) == 0);
    CHECK(table(n, -1) == 0);
  }
}

TEST_CASE("Stirling row sums") {
  StirlingTable table(40);
  for (int n = 2; n <= 40; ++n) {
    BigInt sum = 0;
    BigInt abs_sum = 0;
    for (int m = 0; m <= n; ++m) {
      sum += table(n, m);
      abs_sum += abs(table(n, m));
    }
    CHECK(sum == 0);
    CHECK(abs_sum == factorial(n));
  }
}

TEST_CASE("falling factorial equals the product x(x-1)...(x-n+1)") {
  Poly<BigInt> product = Poly<BigInt>::constant(1);
  for (int n = 0; n <= 30; ++n) {
    CHECK(falling_factorial(n) == product);
    for (int m = 0; m <= n; ++m) CHECK(falling_factorial(n).coeff(m) == stirling_first(n, m));
    product *= Poly<BigInt>{BigInt(-n), BigInt(1)};
  }
}

TEST_CASE("falling factorial at integers") {
  for (int n = 0; n <= 12; ++n) {
    const auto p = falling_factorial(n);
    for (int x = n; x <= 20; ++x) CHECK(evaluate(p, BigInt(x)) * factorial(x - n) == factorial(x));
    for (int x = 0; x < n; ++x) CHECK(evaluate(p, BigInt(x)) == 0);
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(0, 0) == 1);
  for (int a = 1; a <= 60; ++a) {
    for (int b = 1; b <= a; ++b) {
      CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
      CHECK(binomial(a, b) == binomial(a, a - b));
    }
  }
}

TEST_CASE("binomial_poly agrees with C(s + shift, d) at integers") {
  for (int d = 0; d <= 8; ++d) {
    for (int shift = -3; shift <= 8; ++shift) {
      const auto p = binomial_poly(Rational(shift), d);
      CHECK(p.degree() == d);
      for (int s = -10; s <= 15; ++s) {
        // generalized binomial x(x-1)...(x-d+1)/d!, valid for negative x too
        Rational expected(1);
        const int x = s + shift;
        for (int i = 0; i < d; ++i) expected *= Rational(x - i);
        expected /= Rational(factorial(d));
        CHECK(evaluate(p, Rational(s)) == expected);
        if (x >= 0) CHECK(evaluate(p, Rational(s)) == Rational(binomial(x, d)));
      }
    }
  }
}

TEST_CASE("binomial_poly with a fractional shift") {
  const auto p = binomial_poly(Rational(1, 2), 2);
  // C(s + 1/2, 2) = (s + 1/2)(s - 1/2)/2
  CHECK(p == Poly<Rational>{Rational(-1, 8), Rational(0), Rational(1, 2)});
}

TEST_CASE("shared Stirling table under concurrent growth") {
  std::vector<std::thread> workers;
  std::vector<int> ok(8, 0);
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([t, &ok] {
      const int n = 20 + 15 * t;
      const auto& table = StirlingTable::shared(n);
      ok[t] = table.n_max() >= n && table(n, n) == 1 && table(n, n - 1) == -BigInt(n) * (n - 1) / 2;
    });
  }
  for (auto& w : workers) w.join();
  for (int v : ok) CHECK(v == 1);
}
