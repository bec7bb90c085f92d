#pragma once

// Complex root finding: Aberth-Ehrlich simultaneous iteration with a
// companion-matrix fallback, followed by Newton polishing in 50-digit
// arithmetic against the exact coefficients.

#include "zetaperiod/poly.hpp"

#include <complex>
#include <string>
#include <vector>

namespace zetaperiod {

enum class RootMethod { aberth, companion, bisection_hk };

std::string to_string(RootMethod m);

/// Root multiset of a polynomial with per-root backward errors.
///
/// residuals[i] = |p(z_i)| / sum_j |c_j| |z_i|^j, i.e. the relative
/// perturbation of the coefficients that makes z_i an exact root.
struct RootSet {
  std::vector<std::complex<double>> roots;
  std::vector<double> residuals;
  RootMethod method = RootMethod::aberth;
  double tolerance = 0.0;
  int sweeps = 0;

  double max_residual() const;
};

struct RootOptions {
  double tolerance = 1e-11;
  int max_sweeps = 500;
  /// Newton steps in extended precision after the double-precision solve.
  int polish_steps = 4;
  /// Skip Aberth and go straight to the companion matrix (testing aid).
  bool force_companion = false;
};

RootSet find_roots(const Poly<double>& p, const RootOptions& opts = {});
RootSet find_roots(const Poly<std::complex<double>>& p, const RootOptions& opts = {});
RootSet find_roots(const Poly<Rational>& p, const RootOptions& opts = {});

/// Relabel roots so the multiset is closed under conjugation.
void enforce_conjugate_closure(std::vector<std::complex<double>>& roots);

/// prod (z - r) over the roots.
Poly<std::complex<double>> poly_from_roots(const std::vector<std::complex<double>>& roots);

}  // namespace zetaperiod
