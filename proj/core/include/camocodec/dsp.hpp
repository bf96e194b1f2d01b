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

#pragma once

#include <complex>
#include <span>
#include <vector>

namespace camocodec::dsp {

struct MfccConfig {
  int n_fft = 1024;      // power of two
  int hop = 221;         // matches the encoder frame length at 22050 Hz
  int n_mels = 26;
  int n_coeffs = 13;
  int target_dim = 1228;
  double fmin = 20.0;
  double fmax = 0.0;     // 0 means Nyquist
};

// In-place radix-2 decimation-in-time transform. size must be a power of two.
void fft(std::vector<std::complex<double>>& buf, bool inverse = false);

// Periodic Hann window, w[n] = 0.5 - 0.5 cos(2 pi n / size).
std::vector<double> hann_window(int size);

// HTK-flavored mel scale.
double hz_to_mel(double hz);
double mel_to_hz(double mel);

// Rows are mel filters, columns are the n_fft/2 + 1 one-sided bins.
// Triangles have n_mels + 2 corner frequencies spaced evenly in mel.
std::vector<std::vector<double>> mel_filterbank(int n_mels, int n_fft,
                                                double sample_rate,
                                                double fmin, double fmax);

// One-sided magnitude spectrogram: n_frames x (n_fft/2 + 1). Frames start at
// multiples of hop; the last partial frame is zero padded.
std::vector<std::vector<double>> stft_magnitudes(std::span<const double> samples,
                                                 int n_fft, int hop);

// Mel power spectrogram in dB: 10 log10(max(p, 1e-10)) after filterbank
// application to squared magnitudes.
std::vector<std::vector<double>> mel_spectrogram_db(std::span<const double> samples,
                                                    double sample_rate,
                                                    const MfccConfig& cfg);

// Orthonormal DCT-II of one frame.
std::vector<double> dct2_orthonormal(std::span<const double> input, int n_out);

// Magnitude-weighted mean frequency of one spectrum frame; 0 for an
// all-zero frame.
double spectral_centroid(std::span<const double> frame_magnitudes,
                         std::span<const double> bin_freqs);

// Full descriptor: per-frame MFCCs (first n_coeffs of the DCT of the dB mel
// frame) concatenated frame-major, then truncated or zero padded to
// target_dim.
std::vector<double> mfcc_descriptor(std::span<const double> samples,
                                    double sample_rate, const MfccConfig& cfg);

}  // namespace camocodec::dsp
