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

#include <filesystem>
#include <span>
#include <vector>

#include "camocodec/raster.hpp"

namespace camocodec::sonify {

struct EncodeConfig {
  int rows = 128;
  int cols = 128;
  double frame_seconds = 0.010;
  double f_min = 200.0;
  double f_max = 8000.0;
  double sample_rate = 22050.0;
  double peak = 0.89;
};

// Samples per image column: round-half-away(frame_seconds * sample_rate).
int frame_length(const EncodeConfig& cfg);

// Oscillator frequency of each image row. Row 0 sits at f_max, the last row
// at f_min, spacing linear in Hz.
std::vector<double> row_frequencies(const EncodeConfig& cfg);

// Additive synthesis without the final peak rescale. Column t of the image
// drives the oscillator amplitudes over samples [t*L, (t+1)*L); phases are
// continuous across columns because every oscillator runs on the global
// sample clock.
std::vector<double> synthesize_raw(const raster::GrayImage& img,
                                   const EncodeConfig& cfg);

// synthesize_raw followed by a global rescale that puts max |sample| exactly
// at cfg.peak. An all-zero image stays all-zero. The seed is reserved for
// randomized-phase variants; the deterministic scheme ignores it.
std::vector<double> encode(const raster::GrayImage& img, const EncodeConfig& cfg,
                           std::uint64_t seed = 0);

// Recovers a rows x cols intensity grid from an encoded clip. Per column,
// the known oscillator bank is fit by ridge-regularized least squares; the
// resulting amplitude grid is min-max normalized to [0, 1].
raster::GrayImage decode(std::span<const double> samples, const EncodeConfig& cfg);

// Pearson correlation between img and decode(encode(img, cfg, seed)).
// Returns 0 when either side is constant.
double roundtrip_fidelity(const raster::GrayImage& img, const EncodeConfig& cfg,
                          std::uint64_t seed = 0);

// Mono 16-bit PCM, canonical 44-byte header.
void write_wav(std::span<const double> samples, double sample_rate,
               const std::filesystem::path& path);

struct WavData {
  double sample_rate = 0.0;
  std::vector<double> samples;
};

WavData read_wav(const std::filesystem::path& path);

}  // namespace camocodec::sonify
