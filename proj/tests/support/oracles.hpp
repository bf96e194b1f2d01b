// Copyright 2026 The Camocodec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Independent reference implementations the tests compare the library
// against. Everything here is deliberately naive: direct O(n^2) transforms,
// textbook recurrences, explicit pair counting. None of it calls into the
// production DSP, PCA or metrics code paths it checks.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace oracles {

// Forward DFT, X[k] = sum_n x[n] e^{-2 pi i k n / N}. O(n^2).
inline std::vector<std::complex<double>> naive_dft(
    std::span<const std::complex<double>> x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double ang =
          -2.0 * std::numbers::pi * static_cast<double>(k) *
          static_cast<double>(i) / static_cast<double>(n);
      acc += x[i] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    out[k] = acc;
  }
  return out;
}

// Orthonormal DCT-II by direct cosine summation.
inline std::vector<double> naive_dct2(std::span<const double> input,
                                      std::size_t n_out) {
  const std::size_t n = input.size();
  std::vector<double> out(n_out, 0.0);
  for (std::size_t k = 0; k < n_out; ++k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      acc += input[i] * std::cos(std::numbers::pi *
                                 static_cast<double>(2 * i + 1) *
                                 static_cast<double>(k) /
                                 (2.0 * static_cast<double>(n)));
    out[k] = acc * (k == 0 ? std::sqrt(1.0 / static_cast<double>(n))
                           : std::sqrt(2.0 / static_cast<double>(n)));
  }
  return out;
}

// DCT-III, the inverse of the orthonormal DCT-II above (full-length input).
inline std::vector<double> naive_dct3(std::span<const double> coeffs) {
  const std::size_t n = coeffs.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = coeffs[0] * std::sqrt(1.0 / static_cast<double>(n));
    for (std::size_t k = 1; k < n; ++k)
      acc += coeffs[k] * std::sqrt(2.0 / static_cast<double>(n)) *
             std::cos(std::numbers::pi * static_cast<double>(2 * i + 1) *
                      static_cast<double>(k) / (2.0 * static_cast<double>(n)));
    out[i] = acc;
  }
  return out;
}

struct NaiveMfccParams {
  int n_fft = 1024;
  int hop = 221;
  int n_mels = 26;
  int n_coeffs = 13;
  int target_dim = 1228;
  double fmin = 20.0;
  double fmax = 0.0;  // 0 means half the sample rate
};

// Full MFCC descriptor built from first principles: direct DFT per frame,
// explicit triangle weights, direct DCT. Mirrors the documented definition,
// not the library's code.
inline std::vector<double> naive_mfcc(std::span<const double> samples,
                                      double sample_rate,
                                      const NaiveMfccParams& p) {
  const int n_fft = p.n_fft;
  const int n_bins = n_fft / 2 + 1;
  const std::size_t n_frames = (samples.size() - 1) / p.hop + 1;
  const double fmax = p.fmax > 0.0 ? p.fmax : sample_rate / 2.0;

  auto mel_of = [](double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); };
  auto hz_of = [](double mel) {
    return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
  };

  const double mel_lo = mel_of(p.fmin);
  const double mel_hi = mel_of(fmax);
  std::vector<double> corners(p.n_mels + 2);
  for (int m = 0; m < p.n_mels + 2; ++m)
    corners[m] = hz_of(mel_lo + (mel_hi - mel_lo) * m / (p.n_mels + 1));

  std::vector<double> window(n_fft);
  for (int i = 0; i < n_fft; ++i)
    window[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / n_fft);

  std::vector<double> desc;
  desc.reserve(n_frames * p.n_coeffs);
  std::vector<double> frame(n_fft), power(n_bins), mel_db(p.n_mels);
  for (std::size_t t = 0; t < n_frames; ++t) {
    const std::size_t start = t * p.hop;
    for (int i = 0; i < n_fft; ++i) {
      const std::size_t idx = start + i;
      frame[i] = (idx < samples.size() ? samples[idx] : 0.0) * window[i];
    }
    for (int k = 0; k < n_bins; ++k) {
      double re = 0.0, im = 0.0;
      for (int i = 0; i < n_fft; ++i) {
        const double ang = 2.0 * std::numbers::pi * k * i / n_fft;
        re += frame[i] * std::cos(ang);
        im -= frame[i] * std::sin(ang);
      }
      power[k] = re * re + im * im;
    }
    for (int m = 0; m < p.n_mels; ++m) {
      const double lo = corners[m], mid = corners[m + 1], hi = corners[m + 2];
      double acc = 0.0;
      for (int k = 0; k < n_bins; ++k) {
        const double f = k * sample_rate / n_fft;
        const double w =
            std::max(0.0, std::min((f - lo) / (mid - lo), (hi - f) / (hi - mid)));
        acc += w * power[k];
      }
      mel_db[m] = 10.0 * std::log10(std::max(acc, 1e-10));
    }
    auto coeffs = naive_dct2(mel_db, static_cast<std::size_t>(p.n_coeffs));
    desc.insert(desc.end(), coeffs.begin(), coeffs.end());
  }
  desc.resize(static_cast<std::size_t>(p.target_dim), 0.0);
  return desc;
}

/// AUC as the Mann-Whitney statistic: the fraction of positive/negative pairs
// ranked correctly, ties counting one half.
inline double mann_whitney_auc(std::span<const int> labels,
                               std::span<const double> scores) {
  double wins = 0.0;
  long pairs = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == 0) continue;
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (labels[j] != 0) continue;
      ++pairs;
      if (scores[i] > scores[j])
        wins += 1.0;
      else if (scores[i] == scores[j])
        wins += 0.5;
    }
  }
  if (pairs == 0) throw std::runtime_error("need both classes for pair counts");
  return wins / static_cast<double>(pairs);
}

struct SymEig {
  std::vector<double> values;                 // descending
  std::vector<std::vector<double>> vectors;   // vectors[i] pairs values[i]
};

// Cyclic Jacobi eigendecomposition of a symmetric matrix.
inline SymEig jacobi_eigen_sym(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale += a[i][j] * a[i][j];
  scale = std::sqrt(scale);

  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (std::sqrt(off) <= 1e-15 * std::max(scale, 1e-300)) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta =
            0.5 * std::atan2(2.0 * a[p][q], a[q][q] - a[p][p]);
        const double c = std::cos(theta), s = std::sin(theta);
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a[x][x] > a[y][y]; });

  SymEig out;
  out.values.resize(n);
  out.vectors.assign(n, std::vector<double>(n));
  for (std::size_t r = 0; r < n; ++r) {
    out.values[r] = a[order[r]][order[r]];
    for (std::size_t k = 0; k < n; ++k) out.vectors[r][k] = v[k][order[r]];
  }
  return out;
}

// Eigendecomposition of the sample covariance (n-1 denominator) of data
// rows, with each eigenvector oriented so its largest-magnitude coordinate
// is positive.
inline SymEig covariance_eigen(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  const std::size_t dim = rows.empty() ? 0 : rows[0].size();
  std::vector<double> mean(dim, 0.0);
  for (const auto& r : rows)
    for (std::size_t j = 0; j < dim; ++j) mean[j] += r[j];
  for (double& m : mean) m /= static_cast<double>(n);

  std::vector<std::vector<double>> cov(dim, std::vector<double>(dim, 0.0));
  for (const auto& r : rows)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        cov[i][j] += (r[i] - mean[i]) * (r[j] - mean[j]);
  for (auto& row : cov)
    for (double& x : row) x /= static_cast<double>(n - 1);

  SymEig eig = jacobi_eigen_sym(std::move(cov));
  for (auto& vec : eig.vectors) {
    std::size_t arg = 0;
    for (std::size_t j = 1; j < vec.size(); ++j)
      if (std::abs(vec[j]) > std::abs(vec[arg])) arg = j;
    if (vec[arg] < 0.0)
      for (double& x : vec) x = -x;
  }
  return eig;
}

// Central finite difference of a scalar function of a parameter vector.
template <typename LossFn>
inline std::vector<double> central_differences(LossFn&& loss,
                                               std::vector<double> params,
                                               double eps) {
  std::vector<double> grad(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double keep = params[i];
    params[i] = keep + eps;
    const double hi = loss(params);
    params[i] = keep - eps;
    const double lo = loss(params);
    params[i] = keep;
    grad[i] = (hi - lo) / (2.0 * eps);
  }
  return grad;
}

}  // namespace oracles
