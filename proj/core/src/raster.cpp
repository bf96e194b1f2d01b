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

#include "camocodec/raster.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include "camocodec/error.hpp"

namespace camocodec::raster {
namespace {

// Skips whitespace and '#' comments between header tokens.
int next_header_int(std::istream& is, const std::filesystem::path& path,
                    const char* what) {
  int c = is.get();
  while (c != EOF) {
    if (std::isspace(c)) {
      c = is.get();
    } else if (c == '#') {
      while (c != EOF && c != '\n') c = is.get();
    } else {
      break;
    }
  }
  if (c == EOF)
    raise(errc::truncated, path.string() + ": header ended before " + what);
  if (!std::isdigit(c))
    raise(errc::unsupported_format,
          path.string() + ": bad character in header field " + what);
  long value = 0;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + (c - '0');
    if (value > 1'000'000'000)
      raise(errc::unsupported_format, path.string() + ": header field " +
                                          what + " out of range");
    c = is.get();
  }
  if (c != EOF) is.unget();
  return static_cast<int>(value);
}

}  // namespace

RasterImage load_image(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) raise(errc::file_not_found, "cannot open image " + path.string());

  char magic[2] = {0, 0};
  is.read(magic, 2);
  if (!is) raise(errc::truncated, path.string() + ": no magic number");
  int channels = 0;
  if (magic[0] == 'P' && magic[1] == '5') {
    channels = 1;
  } else if (magic[0] == 'P' && magic[1] == '6') {
    channels = 3;
  } else {
    raise(errc::bad_magic, path.string() + ": expected P5 or P6, got '" +
                               std::string(magic, 2) + "'");
  }

  RasterImage img;
  img.channels = channels;
  img.width = next_header_int(is, path, "width");
  img.height = next_header_int(is, path, "height");
  int maxval = next_header_int(is, path, "maxval");
  if (img.width <= 0 || img.height <= 0)
    raise(errc::unsupported_format, path.string() + ": non-positive dimensions");
  if (maxval != 255)
    raise(errc::bad_maxval,
          path.string() + ": maxval " + std::to_string(maxval) +
              " unsupported, expected 255");
  is.get();  // single whitespace byte after maxval

  std::size_t n = static_cast<std::size_t>(img.width) * img.height * channels;
  img.data.resize(n);
  is.read(reinterpret_cast<char*>(img.data.data()),
          static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(is.gcount()) != n)
    raise(errc::truncated, path.string() + ": pixel payload cut short");
  return img;
}

void write_pgm(const RasterImage& img, const std::filesystem::path& path) {
  if (img.channels != 1)
    raise(errc::invalid_argument, "write_pgm needs a single-channel image");
  std::ofstream os(path, std::ios::binary);
  if (!os) raise(errc::io_error, "cannot create " + path.string());
  os << "P5\n" << img.width << ' ' << img.height << "\n255\n";
  os.write(reinterpret_cast<const char*>(img.data.data()),
           static_cast<std::streamsize>(img.data.size()));
  if (!os) raise(errc::io_error, "short write to " + path.string());
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path) {
  RasterImage raw;
  raw.width = img.width;
  raw.height = img.height;
  raw.channels = 1;
  raw.data.resize(img.data.size());
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    double v = std::clamp(img.data[i], 0.0, 1.0);
    raw.data[i] = static_cast<std::uint8_t>(std::lround(v * 255.0));
  }
  write_pgm(raw, path);
}

GrayImage to_grayscale(const RasterImage& img) {
  GrayImage out;
  out.width = img.width;
  out.height = img.height;
  out.data.resize(static_cast<std::size_t>(img.width) * img.height);
  const std::size_t n = out.data.size();
  if (img.channels == 1) {
    for (std::size_t i = 0; i < n; ++i) out.data[i] = img.data[i] / 255.0;
  } else if (img.channels == 3) {
    for (std::size_t i = 0; i < n; ++i) {
      double r = img.data[3 * i];
      double g = img.data[3 * i + 1];
      double b = img.data[3 * i + 2];
      out.data[i] = (0.299 * r + 0.587 * g + 0.114 * b) / 255.0;
    }
  } else {
    raise(errc::unsupported_format,
          "grayscale conversion expects 1 or 3 channels, got " +
              std::to_string(img.channels));
  }
  return out;
}

GrayImage resize_bilinear(const GrayImage& img, int out_h, int out_w) {
  if (out_h <= 0 || out_w <= 0)
    raise(errc::invalid_argument, "resize target must be positive");
  if (img.width <= 0 || img.height <= 0)
    raise(errc::invalid_argument, "resize source must be non-empty");

  GrayImage out;
  out.width = out_w;
  out.height = out_h;
  out.data.resize(static_cast<std::size_t>(out_w) * out_h);

  // Corner alignment: output corners sample input corners exactly. A 1-wide
  // target degenerates to the first source row/column.
  double sy = out_h > 1 ? static_cast<double>(img.height - 1) / (out_h - 1) : 0.0;
  double sx = out_w > 1 ? static_cast<double>(img.width - 1) / (out_w - 1) : 0.0;

  for (int r = 0; r < out_h; ++r) {
    double fy = r * sy;
    int y0 = static_cast<int>(fy);
    int y1 = std::min(y0 + 1, img.height - 1);
    double wy = fy - y0;
    for (int c = 0; c < out_w; ++c) {
      double fx = c * sx;
      int x0 = static_cast<int>(fx);
      int x1 = std::min(x0 + 1, img.width - 1);
      double wx = fx - x0;
      double top = img.at(y0, x0) * (1.0 - wx) + img.at(y0, x1) * wx;
      double bot = img.at(y1, x0) * (1.0 - wx) + img.at(y1, x1) * wx;
      out.at(r, c) = top * (1.0 - wy) + bot * wy;
    }
  }
  return out;
}

}  // namespace camocodec::raster
