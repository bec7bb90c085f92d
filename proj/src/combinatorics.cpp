#include "zetaperiod/combinatorics.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace zetaperiod {

StirlingTable::StirlingTable(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw std::invalid_argument("Stirling table size must be non-negative");
  rows_.resize(n_max + 1);
  rows_[0] = {BigInt(1)};
  for (int n = 1; n <= n_max; ++n) {
    auto& row = rows_[n];
    const auto& prev = rows_[n - 1];
    row.assign(n + 1, BigInt(0));
    for (int m = 1; m <= n; ++m) {
      const BigInt diag = prev[m - 1];
      const BigInt up = m <= n - 1 ? prev[m] : BigInt(0);
      row[m] = diag - BigInt(n - 1) * up;
    }
  }
}

const BigInt& StirlingTable::operator()(int n, int m) const {
  static const BigInt zero(0);
  if (n < 0 || n > n_max_) throw std::out_of_range("Stirling index beyond table");
  if (m < 0 || m > n) return zero;
  return rows_[n][m];
}

const StirlingTable& StirlingTable::shared(int n_max) {
  static std::mutex mutex;
  static std::shared_ptr<const StirlingTable> cached;
  std::lock_guard lock(mutex);
  if (!cached || cached->n_max() < n_max) {
    // Older tables stay alive for callers still holding references.
    static std::vector<std::shared_ptr<const StirlingTable>> retired;
    if (cached) retired.push_back(cached);
    cached = std::make_shared<const StirlingTable>(std::max(n_max, 32));
  }
  return *cached;
}

BigInt stirling_first(int n, int m) {
  if (n < 0 || m < 0 || m > n) return BigInt(0);
  return StirlingTable::shared(n)(n, m);
}

BigInt binomial(int a, int b) {
  if (b < 0 || a < 0 || b > a) return BigInt(0);
  b = std::min(b, a - b);
  BigInt out = 1;
  for (int i = 1; i <= b; ++i) out = out * (a - b + i) / i;
  return out;
}

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

Poly<BigInt> falling_factorial(int n) {
  Poly<BigInt> out = Poly<BigInt>::constant(BigInt(1));
  for (int i = 0; i < n; ++i) out *= Poly<BigInt>{BigInt(-i), BigInt(1)};
  return out;
}

Poly<Rational> binomial_poly(const Rational& shift, int degree) {
  if (degree < 0) throw std::invalid_argument("binomial polynomial degree must be non-negative");
  // (s + shift)_d = sum_m s(d, m) (s + shift)^m, then divide by d!
  const auto& table = StirlingTable::shared(degree);
  const Poly<Rational> lin{shift, Rational(1)};
  Poly<Rational> power = Poly<Rational>::constant(Rational(1));
  Poly<Rational> acc;
  for (int m = 0; m <= degree; ++m) {
    if (m > 0) power *= lin;
    const BigInt& s = table(degree, m);
    if (s != 0) acc += power * Rational(s);
  }
  return acc * Rational(BigInt(1), factorial(degree));
}

}  // namespace zetaperiod
