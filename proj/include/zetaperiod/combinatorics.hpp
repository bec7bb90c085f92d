#pragma once

// Exact combinatorics: signed Stirling numbers of the first kind, binomial
// coefficients and the falling-factorial polynomial expansions built on them.

#include "zetaperiod/numeric.hpp"
#include "zetaperiod/poly.hpp"

#include <vector>

namespace zetaperiod {

/// Triangle of s(n, m) for 0 <= m <= n <= n_max, built once by the recurrence
/// s(n, m) = s(n-1, m-1) - (n-1) s(n-1, m).
class StirlingTable {
 public:
  explicit StirlingTable(int n_max);

  int n_max() const { return n_max_; }
  /// Zero for m outside [0, n]. Requires 0 <= n <= n_max.
  const BigInt& operator()(int n, int m) const;

  /// Process-wide immutable table covering at least n_max.
  static const StirlingTable& shared(int n_max);

 private:
  int n_max_;
  std::vector<std::vector<BigInt>> rows_;
};

BigInt stirling_first(int n, int m);

/// C(a, b); zero when b < 0 or b > a.
BigInt binomial(int a, int b);

BigInt factorial(int n);

/// (x)_n = x (x-1) ... (x-n+1) in the monomial basis.
Poly<BigInt> falling_factorial(int n);

/// C(s + shift, d) as a polynomial in s.
Poly<Rational> binomial_poly(const Rational& shift, int degree);

}  // namespace zetaperiod
