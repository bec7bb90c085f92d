#include "zetaperiod/newform.hpp"

#include "zetaperiod/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace zetaperiod {

namespace {

using json = nlohmann::json;

// Truncated power series product, keeping terms below q^len.
std::vector<BigInt> series_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                               std::size_t len) {
  std::vector<BigInt> out(len, BigInt(0));
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

bool is_integral(double x) { return std::isfinite(x) && std::floor(x) == x && std::abs(x) < 9.0e15; }

Coefficient coefficient_from_json(const json& v, std::size_t index) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Coefficient(BigInt(v.get<std::uint64_t>()));
    return Coefficient(BigInt(v.get<std::int64_t>()));
  }
  if (v.is_number_float()) return Coefficient(v.get<double>());
  if (v.is_string()) {
    const auto text = v.get<std::string>();
    try {
      return Coefficient(BigInt(text));
    } catch (const std::runtime_error&) {
      throw ParseError("an[" + std::to_string(index) + "] is not an integer string: " + text);
    }
  }
  throw ParseError("an[" + std::to_string(index) + "] is not a number");
}

Coefficient coefficient_from_text(const std::string& text, int line) {
  const bool looks_integral = text.find_first_of(".eE") == std::string::npos;
  try {
    if (looks_integral) return Coefficient(BigInt(text));
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return Coefficient(v);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": bad coefficient '" + text + "'");
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad " + what + ": '" + text + "'");
  }
}

NewformData load_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("newform JSON must be an object");
  NewformData data;
  try {
    data.label = doc.value("label", std::string());
    if (!doc.contains("level") || !doc["level"].is_number_integer()) throw ParseError("missing integer 'level'");
    if (!doc.contains("weight") || !doc["weight"].is_number_integer()) throw ParseError("missing integer 'weight'");
    data.level = doc["level"].get<int>();
    data.weight = doc["weight"].get<int>();
    if (doc.contains("sign") && !doc["sign"].is_null()) {
      if (!doc["sign"].is_number_integer()) throw ParseError("'sign' must be 1, -1 or null");
      data.sign = doc["sign"].get<int>();
    }
    if (!doc.contains("an") || !doc["an"].is_array()) throw ParseError("missing array 'an'");
    const auto& an = doc["an"];
    data.coeffs.reserve(an.size());
    for (std::size_t i = 0; i < an.size(); ++i) data.coeffs.push_back(coefficient_from_json(an[i], i));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad newform JSON: ") + e.what());
  }
  return data;
}

NewformData load_csv(std::istream& in, const std::optional<NewformHeader>& header) {
  NewformData data;
  bool have_level = false;
  bool have_weight = false;
  if (header) {
    data.label = header->label;
    data.level = header->level;
    data.weight = header->weight;
    data.sign = header->sign;
    have_level = header->level > 0;
    have_weight = header->weight > 0;
  }
  std::string line;
  int lineno = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream fields(line.substr(1));
      std::string kv;
      while (fields >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = kv.substr(0, eq);
        const std::string value = kv.substr(eq + 1);
        if (key == "label") {
          data.label = value;
        } else if (key == "level") {
          data.level = parse_int(value, "level");
          have_level = true;
        } else if (key == "weight") {
          data.weight = parse_int(value, "weight");
          have_weight = true;
        } else if (key == "sign") {
          if (value == "null" || value == "unknown") {
            data.sign.reset();
          } else {
            data.sign = parse_int(value, "sign");
          }
        }
      }
      continue;
    }
    if (!seen_header) {
      if (line != "n,an") throw ParseError("CSV header must be 'n,an', got '" + line + "'");
      seen_header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected 'n,an'");
    const int n = parse_int(trim(line.substr(0, comma)), "index on line " + std::to_string(lineno));
    if (n != data.coefficient_count() + 1) {
      throw ParseError("line " + std::to_string(lineno) + ": rows must run n = 1, 2, ... in order");
    }
    data.coeffs.push_back(coefficient_from_text(trim(line.substr(comma + 1)), lineno));
  }
  if (!seen_header) throw ParseError("CSV input has no 'n,an' header");
  if (!have_level || !have_weight) throw ParseError("CSV input lacks level/weight metadata");
  return data;
}

}  // namespace

Coefficient::Coefficient(double v) {
  if (is_integral(v)) {
    value_ = BigInt(static_cast<long long>(v));
  } else {
    value_ = v;
  }
}

double Coefficient::to_double() const {
  if (const auto* e = std::get_if<BigInt>(&value_)) return zetaperiod::to_double(*e);
  return std::get<double>(value_);
}

std::vector<BigInt> delta_coefficients(int count) {
  if (count < 1) throw std::invalid_argument("count must be at least 1");
  const auto len = static_cast<std::size_t>(count);  // need prod(1-q^n)^24 through q^(count-1)
  // Euler's pentagonal theorem: prod (1 - q^n) = sum_j (-1)^j q^(j(3j-1)/2), j in Z
  std::vector<BigInt> eta(len, BigInt(0));
  for (long long j = 0;; ++j) {
    bool any = false;
    for (long long sj : {j, -j}) {
      if (j == 0 && any) break;
      const long long e = sj * (3 * sj - 1) / 2;
      if (e < static_cast<long long>(len)) {
        eta[e] += (j % 2 == 0) ? 1 : -1;
        any = true;
      }
    }
    if (!any) break;
  }
  // eta^24 by repeated squaring: 24 = 16 + 8
  std::vector<BigInt> p2 = series_mul(eta, eta, len);
  std::vector<BigInt> p4 = series_mul(p2, p2, len);
  std::vector<BigInt> p8 = series_mul(p4, p4, len);
  std::vector<BigInt> p16 = series_mul(p8, p8, len);
  return series_mul(p16, p8, len);
}

NewformData delta_newform(int count) {
  NewformData d;
  d.label = "1.12.a.a";
  d.level = 1;
  d.weight = 12;
  d.sign = 1;
  for (auto& t : delta_coefficients(count)) d.coeffs.emplace_back(std::move(t));
  return d;
}

int divisor_count(int n) {
  int c = 0;
  for (int d = 1; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) c += (d * d == n) ? 1 : 2;
  }
  return c;
}

void validate(const NewformData& data) {
  if (data.level < 1) throw ValidationError("level must be positive");
  if (data.weight < 4) throw ValidationError("weight must be at least 4");
  if (data.weight % 2 != 0) throw ValidationError("weight must be even");
  if (data.sign && *data.sign != 1 && *data.sign != -1) throw ValidationError("sign must be +1 or -1");
  if (data.coeffs.empty()) throw ValidationError("no Fourier coefficients");
  if (!(data.coeffs[0] == Coefficient(BigInt(1)))) throw ValidationError("a_1 must equal 1");
  const int k = data.weight;
  for (int n = 1; n <= data.coefficient_count(); ++n) {
    const Coefficient& a = data.coeffs[n - 1];
    const int d = divisor_count(n);
    bool ok = true;
    if (a.is_exact()) {
      // a^2 <= d^2 n^(k-1), exactly
      const BigInt lhs = a.exact() * a.exact();
      BigInt rhs = BigInt(d) * d;
      for (int i = 0; i < k - 1; ++i) rhs *= n;
      ok = lhs <= rhs;
    } else {
      const double bound = d * std::pow(static_cast<double>(n), 0.5 * (k - 1));
      ok = std::isfinite(a.to_double()) && std::abs(a.to_double()) <= bound * (1.0 + 1e-12);
    }
    if (!ok) throw ValidationError("a_" + std::to_string(n) + " violates the Deligne bound");
  }
}

NewformData load_newform(std::istream& in, InputFormat format, const std::optional<NewformHeader>& header) {
  NewformData data = format == InputFormat::json ? load_json(in) : load_csv(in, header);
  validate(data);
  return data;
}

NewformData load_newform_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  const auto dot = path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  if (ext == "json") return load_newform(in, InputFormat::json);
  if (ext == "csv") return load_newform(in, InputFormat::csv);
  throw ParseError("unknown newform file extension: " + path);
}

void save_newform(const NewformData& data, std::ostream& out, InputFormat format) {
  if (format == InputFormat::json) {
    json doc;
    doc["label"] = data.label;
    doc["level"] = data.level;
    doc["weight"] = data.weight;
    doc["sign"] = data.sign ? json(*data.sign) : json(nullptr);
    json an = json::array();
    for (const auto& c : data.coeffs) {
      if (!c.is_exact()) {
        an.push_back(c.to_double());
      } else if (c.exact() >= std::numeric_limits<std::int64_t>::min() &&
                 c.exact() <= std::numeric_limits<std::int64_t>::max()) {
        an.push_back(c.exact().convert_to<std::int64_t>());
      } else {
        an.push_back(c.exact().str());
      }
    }
    doc["an"] = std::move(an);
    out << doc.dump() << '\n';
    return;
  }
  out << "# label=" << data.label << " level=" << data.level << " weight=" << data.weight
      << " sign=" << (data.sign ? std::to_string(*data.sign) : std::string("null")) << '\n';
  out << "n,an\n";
  out.precision(17);
  for (int n = 1; n <= data.coefficient_count(); ++n) {
    const auto& c = data.coeffs[n - 1];
    out << n << ',';
    if (c.is_exact()) {
      out << c.exact().str();
    } else {
      std::ostringstream v;
      v.precision(17);
      v << std::scientific << c.to_double();
      out << v.str();
    }
    out << '\n';
  }
}

}  // namespace zetaperiod
