#pragma once

// Dense univariate polynomials over exact rationals, reals or complex values.
//
// Coefficient i multiplies z^i. The zero polynomial has no coefficients and
// degree -1. Exact zeros at the top are always trimmed; inexact kinds can be
// cut further with normalize().

#include "zetaperiod/errors.hpp"
#include "zetaperiod/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace zetaperiod {

enum class ScalarKind { rational, real, complex };

template <class T>
constexpr ScalarKind scalar_kind() {
  if constexpr (is_exact_v<T>) {
    return ScalarKind::rational;
  } else if constexpr (is_complex_v<T>) {
    return ScalarKind::complex;
  } else {
    return ScalarKind::real;
  }
}

template <class T>
class Poly {
 public:
  using Scalar = T;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }
  static Poly monomial(int power, const T& c = T(1)) {
    std::vector<T> v(power + 1, T(0));
    v[power] = c;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of z^i; zero outside the stored range.
  T coeff(int i) const {
    if (i < 0 || i > degree()) return T(0);
    return coeffs_[i];
  }
  const T& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  const T& leading() const { return coeffs_.back(); }

  ScalarKind kind() const { return scalar_kind<T>(); }

  Poly& operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const T& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& rhs) {
    *this = *this * rhs;
    return *this;
  }

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator-(Poly p) {
    for (auto& x : p.coeffs_) x = -x;
    return p;
  }
  friend Poly operator*(Poly p, const T& c) { return p *= c; }
  friend Poly operator*(const T& c, Poly p) { return p *= c; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

/// Horner evaluation; the argument type may be wider than the coefficients.
template <class T, class U>
U evaluate(const Poly<T>& p, const U& x) {
  U acc(0);
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + scalar_cast<U>(p[i]);
  return acc;
}

template <class T>
Poly<T> derivative(const Poly<T>& p) {
  if (p.degree() < 1) return Poly<T>();
  std::vector<T> out(p.degree());
  for (int i = 1; i <= p.degree(); ++i) out[i - 1] = p[i] * T(i);
  return Poly<T>(std::move(out));
}

/// p(-s).
template <class T>
Poly<T> reflect(const Poly<T>& p) {
  std::vector<T> out(p.coeffs());
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return Poly<T>(std::move(out));
}

/// p(a*s + b).
template <class T>
Poly<T> compose_affine(const Poly<T>& p, const T& a, const T& b) {
  Poly<T> out;
  const Poly<T> lin{b, a};
  for (int i = p.degree(); i >= 0; --i) out = out * lin + Poly<T>::constant(p[i]);
  return out;
}

template <class To, class From>
Poly<To> poly_cast(const Poly<From>& p) {
  std::vector<To> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(scalar_cast<To>(c));
  return Poly<To>(std::move(out));
}

/// Synthetic division by (z - root): p = (z - root) q + remainder.
template <class T>
std::pair<Poly<T>, T> divide_linear(const Poly<T>& p, const T& root) {
  if (p.degree() < 1) return {Poly<T>(), p.coeff(0)};
  std::vector<T> q(p.degree());
  T carry = p.leading();
  for (int i = p.degree() - 1; i >= 0; --i) {
    q[i] = carry;
    carry = p[i] + carry * root;
  }
  return {Poly<T>(std::move(q)), carry};
}

template <class T>
double max_abs_coeff(const Poly<T>& p) {
  double m = 0.0;
  for (const auto& c : p.coeffs()) m = std::max(m, magnitude(c));
  return m;
}

/// Record of a leading-coefficient truncation.
struct Normalization {
  int dropped = 0;
  double threshold = 0.0;
  double largest_dropped = 0.0;
};

/// Drop leading coefficients below rel_threshold * max|coeff|.
template <class T>
Normalization normalize(Poly<T>& p, double rel_threshold = 1e-10) {
  Normalization info;
  info.threshold = rel_threshold * max_abs_coeff(p);
  std::vector<T> c = p.coeffs();
  while (!c.empty() && magnitude(c.back()) < info.threshold) {
    info.largest_dropped = std::max(info.largest_dropped, magnitude(c.back()));
    c.pop_back();
    ++info.dropped;
  }
  p = Poly<T>(std::move(c));
  return info;
}

/// Scale to leading coefficient one.
template <class T>
Poly<T> monic(const Poly<T>& p) {
  if (p.is_zero()) return p;
  std::vector<T> c = p.coeffs();
  const T lead = c.back();
  for (auto& x : c) x /= lead;
  return Poly<T>(std::move(c));
}

/// First `count` power-series coefficients of numer(z) / (1 - z)^pole_order.
template <class T>
std::vector<T> series_coeffs_of_ratio(const Poly<T>& numer, int pole_order, int count) {
  if (pole_order < 1) throw std::invalid_argument("pole order must be at least 1");
  if (count < 1) throw std::invalid_argument("count must be at least 1");
  // kernel[n] = C(n + pole_order - 1, pole_order - 1), built exactly
  std::vector<BigInt> kernel(count);
  kernel[0] = 1;
  for (int n = 1; n < count; ++n) kernel[n] = kernel[n - 1] * (n + pole_order - 1) / n;
  std::vector<T> out(count, T(0));
  for (int n = 0; n < count; ++n) {
    const int top = std::min(n, numer.degree());
    for (int i = 0; i <= top; ++i) out[n] += numer[i] * scalar_cast<T>(kernel[n - i]);
  }
  return out;
}

/// Unique interpolant of degree <= expected_degree through the given nodes.
template <class T>
Poly<T> newton_interpolate(std::span<const std::pair<T, T>> points, int expected_degree) {
  const int n = static_cast<int>(points.size());
  if (expected_degree < 0 || n != expected_degree + 1) {
    throw std::invalid_argument("interpolation needs exactly degree + 1 nodes");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (points[i].first == points[j].first) throw DuplicateNode("duplicate interpolation node");
    }
  }
  std::vector<T> dd(n);
  for (int i = 0; i < n; ++i) dd[i] = points[i].second;
  for (int level = 1; level < n; ++level) {
    for (int i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
    }
  }
  // Horner over the Newton basis
  Poly<T> out = Poly<T>::constant(dd[n - 1]);
  for (int i = n - 2; i >= 0; --i) {
    out = out * Poly<T>{T(-points[i].first), T(1)} + Poly<T>::constant(dd[i]);
  }
  return out;
}

template <class T>
Poly<T> newton_interpolate(const std::vector<std::pair<T, T>>& points, int expected_degree) {
  return newton_interpolate(std::span<const std::pair<T, T>>(points), expected_degree);
}

/// max |p(s) - eps p(1-s)| / max |p(s)| over an 8x8 grid on [-2,3] x [-2,2].
template <class T>
double poly_reflect_functional(const Poly<T>& p, int eps) {
  using C = std::complex<double>;
  const Poly<C> pc = poly_cast<C>(p);
  double worst = 0.0;
  double scale = 0.0;
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const C s(-2.0 + 5.0 * a / 7.0, -2.0 + 4.0 * b / 7.0);
      const C v = evaluate(pc, s);
      const C w = evaluate(pc, C(1.0) - s);
      worst = std::max(worst, std::abs(v - static_cast<double>(eps) * w));
      scale = std::max(scale, std::abs(v));
    }
  }
  return scale == 0.0 ? 0.0 : worst / scale;
}

}  // namespace zetaperiod
