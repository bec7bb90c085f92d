#include "zetaperiod/newform.hpp"

#include "zetaperiod/errors.hpp"

#include "../support/test_support.hpp"

#include <doctest.h>

#include <numeric>
#include <sstream>

using namespace zetaperiod;

namespace {

BigInt ipow(int base, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Ramanujan tau values") {
  const auto tau = delta_coefficients(12);
  const std::vector<long long> expected{1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920, 534612, -370944};
  REQUIRE(tau.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(tau[i] == expected[i]);
}

TEST_CASE("tau is multiplicative and satisfies the Hecke recursion") {
  const int count = 400;
  const auto tau = delta_coefficients(count);
  auto t = [&](int n) { return tau[n - 1]; };
  for (int m = 2; m <= count; ++m) {
    for (int n = 2; m * n <= count; ++n) {
      if (std::gcd(m, n) == 1) CHECK(t(m * n) == t(m) * t(n));
    }
  }
  // tau(p^(r+1)) = tau(p) tau(p^r) - p^11 tau(p^(r-1))
  for (int p = 2; p * p <= count; ++p) {
    if (!is_prime(p)) continue;
    for (int pr = p; pr * p <= count; pr *= p) {
      CHECK(t(pr * p) == t(p) * t(pr) - ipow(p, 11) * (pr == p ? BigInt(1) : t(pr / p)));
    }
  }
}

TEST_CASE("delta passes validation, including the Deligne bound") {
  CHECK_NOTHROW(validate(delta_newform(300)));
  const auto d = delta_newform();
  CHECK(d.level == 1);
  CHECK(d.weight == 12);
  CHECK(d.sign == 1);
  CHECK(d.coefficient_count() == 64);
}

TEST_CASE("divisor counts") {
  CHECK(divisor_count(1) == 1);
  CHECK(divisor_count(12) == 6);
  CHECK(divisor_count(36) == 9);
  CHECK(divisor_count(97) == 2);
}

TEST_CASE("validation failures") {
  auto base = delta_newform(10);
  auto bad = base;
  bad.weight = 11;
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = base;
  bad.weight = 2;
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = base;
  bad.level = 0;
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = base;
  bad.coeffs[0] = Coefficient(2);
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = base;
  bad.sign = 3;
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = base;
  // |a_2| may not exceed 2 * 2^(11/2) ~ 90.5
  bad.coeffs[1] = Coefficient(91);
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad.coeffs[1] = Coefficient(90.5);
  CHECK_NOTHROW(validate(bad));
  bad.coeffs[1] = Coefficient(90.6);
  CHECK_THROWS_AS(validate(bad), ValidationError);
}

TEST_CASE("corpus files load and validate") {
  const auto corpus = testing::load_corpus();
  CHECK(corpus.size() >= 16);
  for (const auto& f : corpus) {
    CHECK(f.sign.has_value());
    CHECK(f.coefficient_count() >= 100);
    CHECK(f.coeffs[0] == Coefficient(1));
  }
}

TEST_CASE("JSON input forms") {
  std::istringstream in(R"({"label":"x","level":11,"weight":4,"sign":null,"an":[1,"-2",-1.0,2]})");
  const auto f = load_newform(in, InputFormat::json);
  CHECK(!f.sign);
  CHECK(f.coeffs[1] == Coefficient(-2));
  CHECK(f.coeffs[2].is_exact());
  CHECK(f.an(4) == 2.0);

  std::istringstream broken(R"({"level":11,"weight":4,"an":[1,)");
  CHECK_THROWS_AS(load_newform(broken, InputFormat::json), ParseError);
  std::istringstream no_level(R"({"weight":4,"an":[1]})");
  CHECK_THROWS_AS(load_newform(no_level, InputFormat::json), ParseError);
}

TEST_CASE("CSV input forms") {
  std::istringstream in("# label=t level=5 weight=4 sign=1\nn,an\n1,1\n2,-4\n3,2\n");
  const auto f = load_newform(in, InputFormat::csv);
  CHECK(f.level == 5);
  CHECK(f.sign == 1);
  CHECK(f.coefficient_count() == 3);

  std::istringstream bare("n,an\n1,1\n2,0\n");
  CHECK_THROWS_AS(load_newform(bare, InputFormat::csv), ParseError);
  std::istringstream bare_again("n,an\n1,1\n2,0\n");
  NewformHeader header{"h", 7, 4, std::nullopt};
  CHECK(load_newform(bare_again, InputFormat::csv, header).level == 7);

  std::istringstream gap("# level=5 weight=4\nn,an\n1,1\n3,2\n");
  CHECK_THROWS_AS(load_newform(gap, InputFormat::csv), ParseError);
  std::istringstream junk("# level=5 weight=4\nn,an\n1,1\n2,abc\n");
  CHECK_THROWS_AS(load_newform(junk, InputFormat::csv), ParseError);
}

TEST_CASE("missing and unknown files") {
  CHECK_THROWS_AS(load_newform_file("/nonexistent/file.json"), ParseError);
  CHECK_THROWS_AS(load_newform_file(std::string(ZETAPERIOD_CORPUS_DIR) + "/../corpus"), ParseError);
}

TEST_CASE("round trip through JSON and CSV on random data") {
  auto gen = testing::rng(31);
  std::uniform_int_distribution<int> unit(-1, 1);
  std::uniform_real_distribution<double> real(-1.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    NewformData f;
    f.label = "r." + std::to_string(trial);
    f.level = 1 + trial;
    f.weight = 4 + 4 * (trial % 10);
    if (trial % 3 != 0) f.sign = trial % 2 ? 1 : -1;
    f.coeffs.emplace_back(1);
    // |a_n| <= n^((k-2)/2) stays inside the Deligne bound
    for (int n = 2; n <= 60; ++n) {
      const BigInt scale = ipow(n, (f.weight - 2) / 2);
      if ((trial + n) % 2 == 0) {
        f.coeffs.emplace_back(BigInt(unit(gen)) * scale);
      } else {
        f.coeffs.emplace_back(real(gen) * to_double(scale));
      }
    }
    for (auto format : {InputFormat::json, InputFormat::csv}) {
      std::stringstream buf;
      save_newform(f, buf, format);
      CHECK(load_newform(buf, format) == f);
    }
  }
}
