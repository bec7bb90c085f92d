#pragma once

#include "zetaperiod/numeric.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace zetaperiod {

/// One Fourier coefficient: exact when integral, a double otherwise.
class Coefficient {
 public:
  Coefficient() : value_(BigInt(0)) {}
  Coefficient(BigInt v) : value_(std::move(v)) {}
  Coefficient(int v) : value_(BigInt(v)) {}
  Coefficient(long long v) : value_(BigInt(v)) {}
  Coefficient(double v);

  bool is_exact() const { return std::holds_alternative<BigInt>(value_); }
  const BigInt& exact() const { return std::get<BigInt>(value_); }
  double to_double() const;

  friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.value_ == b.value_; }

 private:
  std::variant<BigInt, double> value_;
};

/// A normalized newform f in S_k(Gamma_0(N)) given by its first M coefficients.
struct NewformData {
  std::string label;
  int level = 1;
  int weight = 12;
  std::optional<int> sign;  // +1, -1 or unknown
  std::vector<Coefficient> coeffs;  // coeffs[0] is a_1

  int coefficient_count() const { return static_cast<int>(coeffs.size()); }
  /// a_n for 1 <= n <= coefficient_count().
  double an(int n) const { return coeffs[n - 1].to_double(); }

  friend bool operator==(const NewformData&, const NewformData&) = default;
};

enum class InputFormat { json, csv };

/// Metadata for formats that carry only the coefficient table.
struct NewformHeader {
  std::string label;
  int level = 0;
  int weight = 0;
  std::optional<int> sign;
};

/// tau(1), ..., tau(count): coefficients of q prod (1 - q^n)^24.
std::vector<BigInt> delta_coefficients(int count);

/// The discriminant form as NewformData (level 1, weight 12, sign +1).
NewformData delta_newform(int count = 64);

int divisor_count(int n);

/// Throws ValidationError on odd weight, weight < 4, a_1 != 1, level < 1,
/// a bad sign value, or a Deligne-bound violation |a_n| > d(n) n^((k-1)/2).
void validate(const NewformData& data);

/// JSON: {"label", "level", "weight", "sign": 1|-1|null, "an": [...]}.
/// CSV: header `n,an`, rows n = 1, 2, ...; level, weight, sign and label come
/// from `# key=value` comment lines before the header or from `header`.
NewformData load_newform(std::istream& in, InputFormat format,
                         const std::optional<NewformHeader>& header = std::nullopt);

/// Format chosen from the extension (.json or .csv).
NewformData load_newform_file(const std::string& path);

void save_newform(const NewformData& data, std::ostream& out, InputFormat format);

}  // namespace zetaperiod
