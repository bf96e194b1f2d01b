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

#include "camocodec/sonify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include "binio.hpp"
#include "camocodec/error.hpp"
#include "camocodec/numeric.hpp"

namespace camocodec::sonify {
namespace {

void validate(const EncodeConfig& cfg) {
  if (cfg.rows < 2 || cfg.cols < 1)
    raise(errc::invalid_config, "encoder needs rows >= 2 and cols >= 1");
  if (cfg.sample_rate <= 0.0 || cfg.frame_seconds <= 0.0)
    raise(errc::invalid_config, "sample_rate and frame_seconds must be positive");
  if (cfg.f_min <= 0.0 || cfg.f_max <= cfg.f_min)
    raise(errc::invalid_config, "need 0 < f_min < f_max");
  if (cfg.f_max >= cfg.sample_rate / 2.0)
    raise(errc::invalid_config, "f_max must stay below Nyquist");
  if (cfg.peak <= 0.0 || cfg.peak > 1.0)
    raise(errc::invalid_config, "peak must lie in (0, 1]");
}

}  // namespace

int frame_length(const EncodeConfig& cfg) {
  return static_cast<int>(std::lround(cfg.frame_seconds * cfg.sample_rate));
}

std::vector<double> row_frequencies(const EncodeConfig& cfg) {
  validate(cfg);
  std::vector<double> freqs(cfg.rows);
  const double step = (cfg.f_max - cfg.f_min) / (cfg.rows - 1);
  for (int r = 0; r < cfg.rows; ++r) freqs[r] = cfg.f_max - r * step;
  return freqs;
}

std::vector<double> synthesize_raw(const raster::GrayImage& img,
                                   const EncodeConfig& cfg) {
  validate(cfg);
  if (img.height != cfg.rows || img.width != cfg.cols)
    raise(errc::dimension_mismatch,
          "image is " + std::to_string(img.width) + "x" +
              std::to_string(img.height) + ", encoder expects " +
              std::to_string(cfg.cols) + "x" + std::to_string(cfg.rows));

  const int L = frame_length(cfg);
  const auto freqs = row_frequencies(cfg);
  const std::size_t total = static_cast<std::size_t>(L) * cfg.cols;
  std::vector<double> out(total, 0.0);

  // Per-oscillator recurrence: s(n+1), c(n+1) from s(n), c(n) via the
  // rotation by 2 pi f / fs. Amplitudes switch at column boundaries while
  // the oscillator phase keeps running, so columns join without clicks.
  const double inv_rows = 1.0 / cfg.rows;
  for (int r = 0; r < cfg.rows; ++r) {
    const double w = 2.0 * std::numbers::pi * freqs[r] / cfg.sample_rate;
    const double cw = std::cos(w), sw = std::sin(w);
    double s = 0.0, c = 1.0;  // sin(0), cos(0)
    std::size_t n = 0;
    for (int t = 0; t < cfg.cols; ++t) {
      const double a = img.at(r, t) * inv_rows;
      for (int i = 0; i < L; ++i, ++n) {
        out[n] += a * s;
        const double s2 = s * cw + c * sw;
        c = c * cw - s * sw;
        s = s2;
      }
    }
  }
  return out;
}

std::vector<double> encode(const raster::GrayImage& img, const EncodeConfig& cfg,
                           std::uint64_t /*seed*/) {
  std::vector<double> out = synthesize_raw(img, cfg);
  double maxabs = 0.0;
  for (double v : out) maxabs = std::max(maxabs, std::abs(v));
  if (maxabs > 0.0) {
    const double scale = cfg.peak / maxabs;
    for (double& v : out) {
      // Pin the extreme samples so the normalized peak lands on cfg.peak
      // exactly instead of one rounding step away.
      if (std::abs(v) == maxabs)
        v = std::copysign(cfg.peak, v);
      else
        v *= scale;
    }
  }
  return out;
}

raster::GrayImage decode(std::span<const double> samples, const EncodeConfig& cfg) {
  validate(cfg);
  const int L = frame_length(cfg);
  const std::size_t needed = static_cast<std::size_t>(L) * cfg.cols;
  if (samples.size() < needed)
    raise(errc::clip_too_short,
          "decode needs " + std::to_string(needed) + " samples, got " +
              std::to_string(samples.size()));

  const auto freqs = row_frequencies(cfg);
  const int R = cfg.rows;

  // The columns of B hold each oscillator sampled over one frame, phased by
  // the frame's global start index. B only depends on the frame index mod
  // the oscillator periods, but rebuilding per column keeps this simple and
  // the Gram solve dominates anyway.
  Eigen::MatrixXd B(L, R);
  Eigen::MatrixXd G(R, R);
  Eigen::VectorXd y(L), rhs(R), a(R);

  raster::GrayImage img;
  img.width = cfg.cols;
  img.height = R;
  img.data.assign(static_cast<std::size_t>(cfg.cols) * R, 0.0);

  for (int t = 0; t < cfg.cols; ++t) {
    const std::size_t start = static_cast<std::size_t>(t) * L;
    for (int r = 0; r < R; ++r) {
      const double w = 2.0 * std::numbers::pi * freqs[r] / cfg.sample_rate;
      for (int i = 0; i < L; ++i)
        B(i, r) = std::sin(w * static_cast<double>(start + i));
    }
    for (int i = 0; i < L; ++i) y(i) = samples[start + i];

    G.noalias() = B.transpose() * B;
    // Tiny ridge keeps the Gram solve stable when neighboring oscillators
    // are nearly collinear over a single short frame.
    const double ridge = 1e-8 * G.trace() / R;
    G.diagonal().array() += ridge;
    rhs.noalias() = B.transpose() * y;
    a = G.ldlt().solve(rhs);

    for (int r = 0; r < R; ++r) img.at(r, t) = a(r);
  }

  double lo = img.data[0], hi = img.data[0];
  for (double v : img.data) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi > lo) {
    const double inv = 1.0 / (hi - lo);
    for (double& v : img.data) v = (v - lo) * inv;
  } else {
    std::fill(img.data.begin(), img.data.end(), 0.0);
  }
  return img;
}

double roundtrip_fidelity(const raster::GrayImage& img, const EncodeConfig& cfg,
                          std::uint64_t seed) {
  const raster::GrayImage back = decode(encode(img, cfg, seed), cfg);
  return pearson_correlation(img.data, back.data);
}

void write_wav(std::span<const double> samples, double sample_rate,
               const std::filesystem::path& path) {
  if (sample_rate <= 0.0)
    raise(errc::invalid_argument, "sample rate must be positive");
  std::ofstream os(path, std::ios::binary);
  if (!os) raise(errc::io_error, "cannot create " + path.string());

  const std::uint32_t sr = static_cast<std::uint32_t>(std::lround(sample_rate));
  const std::uint32_t data_bytes = static_cast<std::uint32_t>(samples.size() * 2);

  os.write("RIFF", 4);
  binio::write_le<std::uint32_t>(os, 36 + data_bytes);
  os.write("WAVE", 4);
  os.write("fmt ", 4);
  binio::write_le<std::uint32_t>(os, 16);        // PCM fmt chunk size
  binio::write_le<std::uint16_t>(os, 1);         // PCM
  binio::write_le<std::uint16_t>(os, 1);         // mono
  binio::write_le<std::uint32_t>(os, sr);
  binio::write_le<std::uint32_t>(os, sr * 2);    // byte rate
  binio::write_le<std::uint16_t>(os, 2);         // block align
  binio::write_le<std::uint16_t>(os, 16);        // bits per sample
  os.write("data", 4);
  binio::write_le<std::uint32_t>(os, data_bytes);

  for (double s : samples) {
    long q = std::llround(s * 32767.0);
    q = std::clamp(q, -32768L, 32767L);
    binio::write_le<std::int16_t>(os, static_cast<std::int16_t>(q));
  }
  if (!os) raise(errc::io_error, "short write to " + path.string());
}

WavData read_wav(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) raise(errc::file_not_found, "cannot open " + path.string());

  char tag[4];
  is.read(tag, 4);
  if (!is || std::string(tag, 4) != "RIFF")
    raise(errc::bad_magic, path.string() + ": not a RIFF file");
  binio::read_le<std::uint32_t>(is, "riff size");
  is.read(tag, 4);
  if (!is || std::string(tag, 4) != "WAVE")
    raise(errc::bad_magic, path.string() + ": not a WAVE file");

  WavData wav;
  std::uint16_t channels = 0, bits = 0;
  bool have_fmt = false;
  while (is.read(tag, 4)) {
    std::uint32_t chunk = binio::read_le<std::uint32_t>(is, "chunk size");
    std::string id(tag, 4);
    if (id == "fmt ") {
      std::uint16_t fmt = binio::read_le<std::uint16_t>(is, "audio format");
      channels = binio::read_le<std::uint16_t>(is, "channels");
      std::uint32_t sr = binio::read_le<std::uint32_t>(is, "sample rate");
      binio::read_le<std::uint32_t>(is, "byte rate");
      binio::read_le<std::uint16_t>(is, "block align");
      bits = binio::read_le<std::uint16_t>(is, "bits per sample");
      if (fmt != 1 || channels != 1 || bits != 16)
        raise(errc::unsupported_format,
              path.string() + ": only mono 16-bit PCM is supported");
      wav.sample_rate = sr;
      if (chunk > 16) is.seekg(chunk - 16, std::ios::cur);
      have_fmt = true;
    } else if (id == "data") {
      if (!have_fmt)
        raise(errc::unsupported_format, path.string() + ": data before fmt");
      const std::size_t n = chunk / 2;
      wav.samples.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::int16_t q = binio::read_le<std::int16_t>(is, "sample");
        wav.samples[i] = std::clamp(q / 32767.0, -1.0, 1.0);
      }
      return wav;
    } else {
      is.seekg(chunk + (chunk & 1), std::ios::cur);
    }
  }
  raise(errc::truncated, path.string() + ": no data chunk");
}

}  // namespace camocodec::sonify
