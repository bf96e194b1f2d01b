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

#include "camocodec/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "camocodec/error.hpp"
#include "camocodec/rng.hpp"

namespace camocodec::synthetic {
namespace {

// splitmix64 finalizer; derives stable per-image seeds from (seed, split,
// class, index) without coupling images to generation order.
std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace

raster::GrayImage make_image(int class_index, int size, std::uint64_t seed) {
  if (class_index < 0 || class_index >= 3)
    raise(errc::invalid_argument, "class index must be 0, 1 or 2");
  if (size < 12)
    raise(errc::invalid_argument, "fixture images need size >= 12");

  SeededRng rng(seed);
  raster::GrayImage img;
  img.width = size;
  img.height = size;
  img.data.resize(static_cast<std::size_t>(size) * size);
  for (double& v : img.data) v = 0.05 + 0.05 * rng.uniform();

  // Each class keeps its bright bands inside one vertical third of the
  // image, i.e. one third of the oscillator bank, so classes stay apart
  // after columns collapse into a frequency profile.
  const int zone_h = size / 3;
  const int zone_top = class_index * zone_h;
  const int zone_bot = class_index == 2 ? size : zone_top + zone_h;

  const int n_bands = 3 + static_cast<int>(rng.index(3));
  for (int b = 0; b < n_bands; ++b) {
    const int width = 1 + static_cast<int>(rng.index(3));
    const int span = std::max(1, zone_bot - zone_top - width);
    const int row0 = zone_top + static_cast<int>(rng.index(span));
    const double level = 0.7 + 0.3 * rng.uniform();
    const double cycles = 1.0 + 2.0 * rng.uniform();
    const double phase = 2.0 * std::numbers::pi * rng.uniform();
    for (int r = row0; r < std::min(row0 + width, size); ++r) {
      for (int c = 0; c < size; ++c) {
        double mod =
            0.8 + 0.2 * std::sin(2.0 * std::numbers::pi * cycles * c / size + phase);
        img.at(r, c) = std::clamp(std::max(img.at(r, c), level * mod), 0.0, 1.0);
      }
    }
  }
  return img;
}

void write_fixture(const FixtureConfig& cfg, const std::filesystem::path& root) {
  if (cfg.train_per_class <= 0 || cfg.val_per_class <= 0)
    raise(errc::invalid_config, "fixture needs positive per-class counts");

  std::filesystem::create_directories(root);
  std::ofstream manifest(root / "manifest.csv");
  if (!manifest)
    raise(errc::io_error, "cannot create " + (root / "manifest.csv").string());
  manifest << "path,label,split\n";

  const auto& names = class_names();
  for (int split_id = 0; split_id < 2; ++split_id) {
    const std::string split = split_id == 0 ? "train" : "val";
    const int count = split_id == 0 ? cfg.train_per_class : cfg.val_per_class;
    for (int c = 0; c < static_cast<int>(names.size()); ++c) {
      std::filesystem::create_directories(root / split / names[c]);
      for (int i = 0; i < count; ++i) {
        std::uint64_t seed = mix(mix(mix(cfg.seed, split_id), c), i);
        raster::GrayImage img = make_image(c, cfg.size, seed);
        char leaf[64];
        std::snprintf(leaf, sizeof(leaf), "%s_%03d.pgm", names[c].c_str(), i);
        std::filesystem::path rel =
            std::filesystem::path(split) / names[c] / leaf;
        raster::write_pgm(img, root / rel);
        manifest << rel.generic_string() << ',' << names[c] << ',' << split
                 << '\n';
      }
    }
  }
  if (!manifest)
    raise(errc::io_error, "short write to fixture manifest");
}

}  // namespace camocodec::synthetic
