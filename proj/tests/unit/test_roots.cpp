#include "zetaperiod/roots.hpp"

#include "../support/test_support.hpp"

#include <doctest.h>

#include <numbers>

using namespace zetaperiod;
using C = std::complex<double>;

namespace {

std::vector<C> random_roots(std::mt19937_64& gen, int n, bool conjugate_pairs) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<C> out;
  while (static_cast<int>(out.size()) < n) {
    if (conjugate_pairs && static_cast<int>(out.size()) + 2 <= n && u(gen) > 0) {
      const C z(u(gen), std::abs(u(gen)) + 0.1);
      out.push_back(z);
      out.push_back(std::conj(z));
    } else {
      out.emplace_back(u(gen), conjugate_pairs ? 0.0 : u(gen));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("small exact cases") {
  const auto cubic = find_roots(Poly<double>{-6.0, 11.0, -6.0, 1.0});
  REQUIRE(cubic.roots.size() == 3);
  CHECK(testing::brute_force_match(cubic.roots, {C(1), C(2), C(3)}) < 1e-12);

  const auto circle = find_roots(Poly<double>{1.0, 0.0, 1.0});
  CHECK(testing::brute_force_match(circle.roots, {C(0, 1), C(0, -1)}) < 1e-14);

  const auto with_zero = find_roots(Poly<double>{0.0, -1.0, 0.0, 1.0});
  CHECK(testing::brute_force_match(with_zero.roots, {C(0), C(1), C(-1)}) < 1e-14);
}

TEST_CASE("sixth roots of unity") {
  // z^2 - z + 1 has roots exp(+-i pi / 3)
  const auto r = find_roots(Poly<Rational>{Rational(1), Rational(-1), Rational(1)});
  const C w = std::polar(1.0, std::numbers::pi / 3);
  CHECK(testing::brute_force_match(r.roots, {w, std::conj(w)}) < 1e-14);
}

TEST_CASE("random real polynomials: recovery, residuals and conjugate closure") {
  auto gen = testing::rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 7;
    const auto roots = random_roots(gen, n, true);
    const auto pc = poly_from_roots(roots);
    std::vector<double> real(pc.size());
    for (std::size_t i = 0; i < real.size(); ++i) real[i] = pc[i].real();
    const auto found = find_roots(Poly<double>(real));
    REQUIRE(found.roots.size() == roots.size());
    CHECK(testing::brute_force_match(found.roots, roots) < 1e-7);
    CHECK(found.max_residual() < found.tolerance);
    for (const auto& z : found.roots) {
      const auto hit = std::count_if(found.roots.begin(), found.roots.end(),
                                     [&](const C& w) { return std::abs(w - std::conj(z)) < 1e-9; });
      CHECK(hit >= 1);
    }
  }
}

TEST_CASE("random complex polynomials, both methods") {
  auto gen = testing::rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 7;
    const auto roots = random_roots(gen, n, false);
    const auto p = poly_from_roots(roots);
    const auto aberth = find_roots(p);
    RootOptions opts;
    opts.force_companion = true;
    const auto companion = find_roots(p, opts);
    CHECK(companion.method == RootMethod::companion);
    CHECK(testing::brute_force_match(aberth.roots, roots) < 1e-7);
    CHECK(testing::brute_force_match(companion.roots, roots) < 1e-7);
  }
}

TEST_CASE("Wilkinson-type polynomial of degree 12") {
  Poly<Rational> p = Poly<Rational>::constant(Rational(1));
  for (int i = 1; i <= 12; ++i) p *= Poly<Rational>{Rational(-i), Rational(1)};
  auto r = find_roots(p).roots;
  std::sort(r.begin(), r.end(), [](const C& a, const C& b) { return a.real() < b.real(); });
  for (int i = 1; i <= 12; ++i) CHECK(std::abs(r[i - 1] - C(i, 0.0)) < 1e-9);
}

TEST_CASE("conjugate closure relabels near-conjugates") {
  std::vector<C> roots{C(1, 2 + 1e-12), C(1 + 1e-12, -2), C(3, 0)};
  enforce_conjugate_closure(roots);
  CHECK(roots[0] == std::conj(roots[1]));
}

TEST_CASE("degenerate input") {
  CHECK_THROWS(find_roots(Poly<double>()));
  CHECK_THROWS(find_roots(Poly<double>{3.0}));
  CHECK(to_string(RootMethod::aberth) == "aberth");
}
