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

#include "camocodec/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "camocodec/error.hpp"
#include "camocodec/numeric.hpp"

namespace camocodec::dsp {

void fft(std::vector<std::complex<double>>& buf, bool inverse) {
  const std::size_t n = buf.size();
  if (n == 0) return;
  if ((n & (n - 1)) != 0)
    raise(errc::invalid_argument, "fft size must be a power of two");

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(buf[i], buf[j]);
  }

  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = buf[i + k];
        std::complex<double> v = buf[i + k + len / 2] * w;
        buf[i + k] = u + v;
        buf[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }

  if (inverse) {
    for (auto& x : buf) x /= static_cast<double>(n);
  }
}

std::vector<double> hann_window(int size) {
  if (size <= 0) raise(errc::invalid_argument, "window size must be positive");
  std::vector<double> w(size);
  for (int i = 0; i < size; ++i)
    w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / size);
  return w;
}

double hz_to_mel(double hz) {
  if (hz < 0.0) raise(errc::invalid_argument, "frequency must be non-negative");
  return 2595.0 * std::log10(1.0 + hz / 700.0);
}

double mel_to_hz(double mel) {
  if (mel < 0.0) raise(errc::invalid_argument, "mel value must be non-negative");
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

std::vector<std::vector<double>> mel_filterbank(int n_mels, int n_fft,
                                                double sample_rate,
                                                double fmin, double fmax) {
  if (n_mels <= 0) raise(errc::invalid_argument, "n_mels must be positive");
  if (fmax <= 0.0) fmax = sample_rate / 2.0;
  if (fmin < 0.0 || fmin >= fmax)
    raise(errc::invalid_config, "mel filterbank needs 0 <= fmin < fmax");

  const int n_bins = n_fft / 2 + 1;
  double mel_lo = hz_to_mel(fmin);
  double mel_hi = hz_to_mel(fmax);
  std::vector<double> corners(n_mels + 2);
  for (int m = 0; m < n_mels + 2; ++m)
    corners[m] = mel_to_hz(mel_lo + (mel_hi - mel_lo) * m / (n_mels + 1));

  std::vector<std::vector<double>> fb(n_mels, std::vector<double>(n_bins, 0.0));
  for (int m = 0; m < n_mels; ++m) {
    double lo = corners[m], mid = corners[m + 1], hi = corners[m + 2];
    for (int k = 0; k < n_bins; ++k) {
      double f = k * sample_rate / n_fft;
      if (f <= lo || f >= hi) continue;
      fb[m][k] = f <= mid ? (f - lo) / (mid - lo) : (hi - f) / (hi - mid);
    }
  }
  return fb;
}

std::vector<std::vector<double>> stft_magnitudes(std::span<const double> samples,
                                                 int n_fft, int hop) {
  if (!is_power_of_two(n_fft))
    raise(errc::invalid_config, "n_fft must be a power of two");
  if (hop <= 0) raise(errc::invalid_config, "hop must be positive");
  if (samples.empty())
    raise(errc::clip_too_short, "cannot analyze an empty clip");

  const int n_bins = n_fft / 2 + 1;
  const std::size_t n_frames = (samples.size() - 1) / hop + 1;
  const std::vector<double> window = hann_window(n_fft);

  std::vector<std::vector<double>> mags(n_frames, std::vector<double>(n_bins));
  std::vector<std::complex<double>> buf(n_fft);
  for (std::size_t t = 0; t < n_frames; ++t) {
    std::size_t start = t * hop;
    for (int i = 0; i < n_fft; ++i) {
      std::size_t idx = start + i;
      double s = idx < samples.size() ? samples[idx] : 0.0;
      buf[i] = {s * window[i], 0.0};
    }
    fft(buf);
    for (int k = 0; k < n_bins; ++k) mags[t][k] = std::abs(buf[k]);
  }
  return mags;
}

std::vector<std::vector<double>> mel_spectrogram_db(std::span<const double> samples,
                                                    double sample_rate,
                                                    const MfccConfig& cfg) {
  auto mags = stft_magnitudes(samples, cfg.n_fft, cfg.hop);
  auto fb = mel_filterbank(cfg.n_mels, cfg.n_fft, sample_rate, cfg.fmin, cfg.fmax);

  std::vector<std::vector<double>> mel(mags.size(),
                                       std::vector<double>(cfg.n_mels));
  const int n_bins = cfg.n_fft / 2 + 1;
  for (std::size_t t = 0; t < mags.size(); ++t) {
    for (int m = 0; m < cfg.n_mels; ++m) {
      double acc = 0.0;
      for (int k = 0; k < n_bins; ++k)
        acc += fb[m][k] * mags[t][k] * mags[t][k];
      mel[t][m] = 10.0 * std::log10(std::max(acc, 1e-10));
    }
  }
  return mel;
}

std::vector<double> dct2_orthonormal(std::span<const double> input, int n_out) {
  const int n = static_cast<int>(input.size());
  if (n == 0) raise(errc::invalid_argument, "dct input must be non-empty");
  if (n_out <= 0 || n_out > n)
    raise(errc::invalid_argument, "dct output length out of range");

  std::vector<double> out(n_out);
  const double scale0 = std::sqrt(1.0 / n);
  const double scale = std::sqrt(2.0 / n);
  for (int k = 0; k < n_out; ++k) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
      acc += input[i] * std::cos(std::numbers::pi * (2 * i + 1) * k / (2.0 * n));
    out[k] = acc * (k == 0 ? scale0 : scale);
  }
  return out;
}

double spectral_centroid(std::span<const double> frame_magnitudes,
                         std::span<const double> bin_freqs) {
  if (frame_magnitudes.size() != bin_freqs.size())
    raise(errc::dimension_mismatch,
          "centroid needs matching magnitude and frequency lengths");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < frame_magnitudes.size(); ++i) {
    if (frame_magnitudes[i] < 0.0)
      raise(errc::invalid_argument, "magnitudes must be non-negative");
    num += bin_freqs[i] * frame_magnitudes[i];
    den += frame_magnitudes[i];
  }
  return den > 0.0 ? num / den : 0.0;
}

std::vector<double> mfcc_descriptor(std::span<const double> samples,
                                    double sample_rate, const MfccConfig& cfg) {
  if (cfg.n_coeffs <= 0 || cfg.n_coeffs > cfg.n_mels)
    raise(errc::invalid_config, "n_coeffs must lie in [1, n_mels]");
  if (cfg.target_dim <= 0)
    raise(errc::invalid_config, "target_dim must be positive");

  auto mel = mel_spectrogram_db(samples, sample_rate, cfg);
  std::vector<double> desc;
  desc.reserve(mel.size() * cfg.n_coeffs);
  for (const auto& frame : mel) {
    auto coeffs = dct2_orthonormal(frame, cfg.n_coeffs);
    desc.insert(desc.end(), coeffs.begin(), coeffs.end());
  }
  desc.resize(static_cast<std::size_t>(cfg.target_dim), 0.0);
  return desc;
}

}  // namespace camocodec::dsp
