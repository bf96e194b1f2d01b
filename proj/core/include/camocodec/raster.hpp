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

#include <cstdint>
#include <filesystem>
#include <vector>

namespace camocodec::raster {

// Raw raster as stored on disk: 8-bit intensities, row-major, 1 (gray) or
// 3 (RGB) interleaved channels.
struct RasterImage {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<std::uint8_t> data;
};

// Normalized single-channel raster, values in [0, 1]. Canonical input of the
// audio encoder and the baseline classifier.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<double> data;  // row-major, height*width

  double& at(int row, int col) { return data[static_cast<std::size_t>(row) * width + col]; }
  double at(int row, int col) const { return data[static_cast<std::size_t>(row) * width + col]; }
};

// Reads a binary PGM (P5) or PPM (P6) with maxval 255. Distinct errors for
// missing file, unsupported magic, truncated payload and maxval != 255.
RasterImage load_image(const std::filesystem::path& path);

// Emits canonical P5: "P5\n<w> <h>\n255\n" + payload. Requires channels == 1.
void write_pgm(const RasterImage& img, const std::filesystem::path& path);

// GrayImage counterpart; values quantized as round(v * 255).
void write_pgm(const GrayImage& img, const std::filesystem::path& path);

// 3-channel pixels map through BT.601 luma (0.299 R + 0.587 G + 0.114 B),
// then everything is scaled by 1/255.
GrayImage to_grayscale(const RasterImage& img);

// Corner-aligned bilinear resampling. A 1-wide target samples the first
// row/column.
GrayImage resize_bilinear(const GrayImage& img, int out_h, int out_w);

}  // namespace camocodec::raster
