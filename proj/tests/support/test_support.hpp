#pragma once

#include "zetaperiod/newform.hpp"

#include <algorithm>
#include <complex>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace zetaperiod::testing {

inline std::vector<NewformData> load_corpus() {
  std::vector<std::filesystem::path> paths;
  for (const auto& e : std::filesystem::directory_iterator(ZETAPERIOD_CORPUS_DIR)) {
    if (e.path().extension() == ".json") paths.push_back(e.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<NewformData> out;
  for (const auto& p : paths) out.push_back(load_newform_file(p.string()));
  return out;
}

inline NewformData corpus_entry(const std::string& label) {
  return load_newform_file(std::string(ZETAPERIOD_CORPUS_DIR) + "/" + label + ".json");
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Largest |a_i - b_pi(i)| under the pairing pi of least total distance,
/// by brute force over permutations.
inline double brute_force_match(const std::vector<std::complex<double>>& a,
                                const std::vector<std::complex<double>>& b) {
  std::vector<int> perm(b.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  double best_total = 1e300;
  double best_worst = 0.0;
  do {
    double total = 0.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double d = std::abs(a[i] - b[perm[i]]);
      total += d;
      worst = std::max(worst, d);
    }
    if (total < best_total) {
      best_total = total;
      best_worst = worst;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best_worst;
}

}  // namespace zetaperiod::testing
