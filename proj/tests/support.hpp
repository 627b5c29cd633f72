#pragma once

#include <optional>
#include <random>
#include <vector>

#include "tropt/matrix.hpp"

namespace testsupport {

using tropt::Mat;
using tropt::Scalar;
using tropt::SemifieldId;

inline constexpr std::nullopt_t nn = std::nullopt;  // null entry in literals

inline constexpr SemifieldId kAllSemifields[] = {
    SemifieldId::MaxPlus, SemifieldId::MinPlus, SemifieldId::MaxTimes,
    SemifieldId::MinTimes};

// Representations in [-9, 9] for the plus semifields and log-uniform in
// [0.25, 4] for the times ones, keeping products well inside the range
// where an absolute 1e-9 tolerance is meaningful.
inline double rand_rep(SemifieldId s, std::mt19937& rng) {
  if (tropt::times_based(s)) {
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    return std::exp2(d(rng));
  }
  std::uniform_real_distribution<double> d(-9.0, 9.0);
  return d(rng);
}

inline Scalar rand_scalar(SemifieldId s, std::mt19937& rng,
                          double null_prob = 0.0) {
  if (null_prob > 0.0 && std::bernoulli_distribution(null_prob)(rng)) {
    return Scalar::null(s);
  }
  return Scalar::finite(s, rand_rep(s, rng));
}

inline Mat rand_mat(SemifieldId s, int rows, int cols, std::mt19937& rng,
                    double null_prob = 0.0) {
  Mat m(s, rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m.set(i, j, rand_scalar(s, rng, null_prob));
    }
  }
  return m;
}

inline Mat rand_regular_column(SemifieldId s, int n, std::mt19937& rng) {
  return rand_mat(s, n, 1, rng);
}

// Scales the matrix so its spectral radius becomes one, which forces
// tr_sum <= one. Nullopt when there is no cycle to scale by.
inline std::optional<Mat> normalized_to_unit_radius(const Mat& m) {
  const Scalar radius = spectral_radius(m);
  if (radius.is_null()) return std::nullopt;
  return scalar_mul(inv(radius), m);
}

// max-plus literals
inline Mat mp(const std::vector<std::vector<std::optional<double>>>& rows) {
  return Mat::from_values(SemifieldId::MaxPlus, rows);
}
inline Mat mpcol(const std::vector<std::optional<double>>& entries) {
  return Mat::column_of(SemifieldId::MaxPlus, entries);
}
inline Scalar mps(double v) {
  return Scalar::finite(SemifieldId::MaxPlus, v);
}

// All compositions (i_1, ..., i_k) of `total` into k non-negative parts.
inline std::vector<std::vector<int>> compositions(int k, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 0);
  const auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == k - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (k > 0) rec(rec, 0, total);
  return out;
}

}  // namespace testsupport
