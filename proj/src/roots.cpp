#include "zetaperiod/roots.hpp"

#include "zetaperiod/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace zetaperiod {

std::string to_string(RootMethod m) {
  switch (m) {
    case RootMethod::aberth:
      return "aberth";
    case RootMethod::companion:
      return "companion";
    case RootMethod::bisection_hk:
      return "bisection_hk";
  }
  return "unknown";
}

double RootSet::max_residual() const {
  double m = 0.0;
  for (double r : residuals) m = std::max(m, r);
  return m;
}

namespace {

using C = std::complex<double>;

struct Horner {
  C value;
  C deriv;
  double abs_sum;  // sum |c_j| |z|^j
};

Horner horner(const std::vector<C>& c, C z) {
  Horner h{C(0), C(0), 0.0};
  const double az = std::abs(z);
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    h.deriv = h.deriv * z + h.value;
    h.value = h.value * z + c[i];
    h.abs_sum = h.abs_sum * az + std::abs(c[i]);
  }
  return h;
}

struct HighEval {
  HighComplex value;
  HighComplex deriv;
  HighReal abs_sum;
};

HighEval horner_high(const std::vector<HighComplex>& c, const HighComplex& z) {
  HighEval h{HighComplex(0), HighComplex(0), HighReal(0)};
  const HighReal az = abs(z);
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    h.deriv = h.deriv * z + h.value;
    h.value = h.value * z + c[i];
    h.abs_sum = h.abs_sum * az + abs(c[i]);
  }
  return h;
}

double backward_error(const std::vector<HighComplex>& c, const C& z) {
  const HighEval h = horner_high(c, scalar_cast<HighComplex>(z));
  if (h.abs_sum == 0) return 0.0;
  return static_cast<double>(HighReal(abs(h.value) / h.abs_sum));
}

// Returns false when the sweep cap is hit before every root settles.
bool aberth(const std::vector<C>& c, std::vector<C>& z, int max_sweeps, int& sweeps) {
  const int n = static_cast<int>(c.size()) - 1;
  const double eps = std::numeric_limits<double>::epsilon();
  const C center = -c[n - 1] / (static_cast<double>(n) * c[n]);
  double radius = std::pow(std::abs(horner(c, center).value / c[n]), 1.0 / n);
  if (!(radius > 0.0) || !std::isfinite(radius)) radius = 1.0;
  z.resize(n);
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
    z[k] = center + radius * C(std::cos(angle), std::sin(angle));
  }
  std::vector<bool> done(n, false);
  for (sweeps = 1; sweeps <= max_sweeps; ++sweeps) {
    bool all_done = true;
    for (int k = 0; k < n; ++k) {
      if (done[k]) continue;
      const Horner h = horner(c, z[k]);
      if (std::abs(h.value) <= 4.0 * eps * h.abs_sum) {
        done[k] = true;
        continue;
      }
      const C ratio = h.value / h.deriv;
      C repulsion(0);
      for (int j = 0; j < n; ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      const C step = ratio / (1.0 - ratio * repulsion);
      z[k] -= step;
      if (std::abs(step) <= 4.0 * eps * std::abs(z[k])) {
        done[k] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) return true;
  }
  sweeps = max_sweeps;
  return false;
}

std::vector<C> companion_roots(const std::vector<C>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw NoConvergence("companion eigenvalue solver failed");
  std::vector<C> out(n);
  for (int i = 0; i < n; ++i) out[i] = solver.eigenvalues()(i);
  return out;
}

void polish(const std::vector<HighComplex>& c, std::vector<C>& z, int steps) {
  for (auto& root : z) {
    HighComplex w = scalar_cast<HighComplex>(root);
    HighEval h = horner_high(c, w);
    for (int s = 0; s < steps; ++s) {
      if (h.deriv == HighComplex(0)) break;
      const HighComplex next = w - h.value / h.deriv;
      const HighEval hn = horner_high(c, next);
      if (abs(hn.value) >= abs(h.value)) break;
      w = next;
      h = hn;
    }
    root = C(static_cast<double>(w.real()), static_cast<double>(w.imag()));
  }
}

RootSet solve(std::vector<C> c, std::vector<HighComplex> exact, bool real_input,
              const RootOptions& opts) {
  if (c.size() < 2) throw std::invalid_argument("root finding needs degree >= 1");
  for (const auto& x : c) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
      throw std::invalid_argument("root finding needs finite coefficients");
    }
  }
  RootSet out;
  out.tolerance = opts.tolerance;

  // exact zeros at the bottom are roots at the origin
  std::size_t zeros = 0;
  while (zeros + 1 < exact.size() && exact[zeros] == HighComplex(0)) ++zeros;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
  exact.erase(exact.begin(), exact.begin() + static_cast<std::ptrdiff_t>(zeros));

  std::vector<C> z;
  const auto finish = [&](std::vector<C> candidates) {
    polish(exact, candidates, opts.polish_steps);
    if (real_input) enforce_conjugate_closure(candidates);
    std::vector<double> res;
    res.reserve(candidates.size());
    for (const auto& r : candidates) res.push_back(backward_error(exact, r));
    z = std::move(candidates);
    return res;
  };

  std::vector<double> residuals;
  bool ok = false;
  if (c.size() >= 2 && !opts.force_companion) {
    std::vector<C> guess;
    int sweeps = 0;
    const bool settled = aberth(c, guess, opts.max_sweeps, sweeps);
    out.sweeps = sweeps;
    out.method = RootMethod::aberth;
    residuals = finish(std::move(guess));
    ok = settled && std::all_of(residuals.begin(), residuals.end(),
                                [&](double r) { return r < opts.tolerance; });
  }
  if (c.size() >= 2 && !ok) {
    out.method = RootMethod::companion;
    residuals = finish(companion_roots(c));
    ok = std::all_of(residuals.begin(), residuals.end(),
                     [&](double r) { return r < opts.tolerance; });
    if (!ok) {
      std::ostringstream msg;
      msg << "root finding failed for degree " << c.size() - 1 << ": max backward error "
          << *std::max_element(residuals.begin(), residuals.end()) << " above tolerance "
          << opts.tolerance;
      throw NoConvergence(msg.str());
    }
  }
  if (c.size() < 2) z.clear();
  for (std::size_t i = 0; i < zeros; ++i) {
    z.insert(z.begin(), C(0));
    residuals.insert(residuals.begin(), 0.0);
  }
  out.roots = std::move(z);
  out.residuals = std::move(residuals);
  return out;
}

}  // namespace

void enforce_conjugate_closure(std::vector<C>& roots) {
  const std::size_t n = roots.size();
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    used[i] = true;
    const C target = std::conj(roots[i]);
    std::size_t best = n;
    double best_dist = 2.0 * std::abs(roots[i].imag());
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      const double d = std::abs(roots[j] - target);
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    if (best == n) {
      roots[i] = C(roots[i].real(), 0.0);
      continue;
    }
    used[best] = true;
    const double re = 0.5 * (roots[i].real() + roots[best].real());
    const double im = 0.5 * (std::abs(roots[i].imag()) + std::abs(roots[best].imag()));
    roots[i] = C(re, im);
    roots[best] = C(re, -im);
  }
}

Poly<C> poly_from_roots(const std::vector<C>& roots) {
  Poly<C> out = Poly<C>::constant(C(1));
  for (const auto& r : roots) out *= Poly<C>{-r, C(1)};
  return out;
}

RootSet find_roots(const Poly<double>& p, const RootOptions& opts) {
  std::vector<C> c;
  std::vector<HighComplex> exact;
  for (double x : p.coeffs()) {
    c.emplace_back(x);
    exact.push_back(scalar_cast<HighComplex>(x));
  }
  return solve(std::move(c), std::move(exact), true, opts);
}

RootSet find_roots(const Poly<C>& p, const RootOptions& opts) {
  std::vector<C> c(p.coeffs());
  std::vector<HighComplex> exact;
  for (const auto& x : c) exact.push_back(scalar_cast<HighComplex>(x));
  return solve(std::move(c), std::move(exact), false, opts);
}

RootSet find_roots(const Poly<Rational>& p, const RootOptions& opts) {
  std::vector<C> c;
  std::vector<HighComplex> exact;
  for (const auto& x : p.coeffs()) {
    c.emplace_back(to_double(x));
    exact.push_back(scalar_cast<HighComplex>(x));
  }
  return solve(std::move(c), std::move(exact), true, opts);
}

}  // namespace zetaperiod
