#pragma once

// The comparison polynomials
//   H_k^+(s) = C(s+k-2, k-2) + C(s, k-2),
//   H_k^-(s) = sum_{j=0}^{k-3} C(s-j+k-3, k-3),
// the location of the zeros of H_k^{+-}(-s) through
//   h_k(t) = sum_{j=0}^{k-3} arccot(2t / (2j+1)),
// lattice-point counts of the cross-simplex whose Ehrhart polynomial is
// H_k^-, and the distance of Z_f roots from the limiting H_k^{+-}(-s) roots.

#include "zetaperiod/newform.hpp"
#include "zetaperiod/poly.hpp"

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace zetaperiod {

struct HPolyPair {
  int k = 0;
  Poly<Rational> h_plus;   // degree k-2
  Poly<Rational> h_minus;  // degree k-3
};

/// Valid for even k >= 4.
Poly<Rational> h_plus_poly(int k);
Poly<Rational> h_minus_poly(int k);

/// Requires even k >= 6.
HPolyPair build_h_polys(int k);

/// h_k(t) with the continuous branch arccot(x) = pi/2 - atan(x), so that
/// h_k(-t) = (k-2) pi - h_k(t).
double hk_function(int k, double t);

struct CotSolverResult {
  int k = 0;
  int sign = 1;
  std::vector<double> targets;  // increasing
  std::vector<double> heights;  // t with h_k(t) = target; strictly decreasing

  /// 1/2 + i t for every height.
  std::vector<std::complex<double>> zeros() const;
};

/// Zeros of H_k^-(-s) (sign = -1, targets pi..(k-3)pi) or H_k^+(-s)
/// (sign = +1, targets pi/2..(k-5/2)pi) by bisection on h_k.
CotSolverResult solve_hk_zeros(int k, int sign);

/// Integer points p with sum p_i <= m and (d+1) p_i - sum p + m >= 0, i.e.
/// p in m * conv{e_1, ..., e_d, -(e_1 + ... + e_d)}.
template <class T>
bool in_dilated_cross_simplex(std::span<const T> x, const T& m) {
  T sum(0);
  for (const auto& v : x) sum += v;
  if (sum > m) return false;
  const T scale(static_cast<int>(x.size()) + 1);
  for (const auto& v : x) {
    if (scale * v - sum + m < T(0)) return false;
  }
  return true;
}

/// Number of lattice points in the m-th dilate of the (k-3)-dimensional
/// cross-simplex. Throws TooLarge when the enumeration box exceeds `budget`.
std::uint64_t ehrhart_count(int k, int m, std::uint64_t budget = 500'000'000ULL);

/// Minimal-cost perfect matching of a square cost matrix (Hungarian method);
/// result[i] is the column assigned to row i.
std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost);

/// Largest pairwise distance under the minimal-total-distance matching of two
/// equal-size root multisets.
double root_multiset_distance(const std::vector<std::complex<double>>& a,
                              const std::vector<std::complex<double>>& b);

/// Roots of H_k^{+-}(-s) for the sign (k >= 4).
std::vector<std::complex<double>> limiting_zeros(int k, int sign);

struct ConvergenceRow {
  std::string label;
  int level = 0;
  double distance = 0.0;
  std::vector<std::complex<double>> roots;
};

struct ConvergenceTable {
  int weight = 0;
  int sign = 0;
  std::vector<ConvergenceRow> rows;  // sorted by level
  std::vector<std::complex<double>> limit_roots;
  double rank_correlation = 0.0;  // Spearman, level vs distance
  double last_over_first = 1.0;   // distance ratio, largest to smallest level
};

/// Throws ValidationError when the family mixes weights or signs and
/// VerificationFailed when a member's zeta-polynomial fails verification.
ConvergenceTable convergence_study(std::span<const NewformData> family);

}  // namespace zetaperiod
