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
#include <string>
#include <vector>

#include "camocodec/raster.hpp"

namespace camocodec::synthetic {

struct FixtureConfig {
  int size = 64;              // square images
  int train_per_class = 60;
  int val_per_class = 20;
  std::uint64_t seed = 7;
};

inline const std::vector<std::string>& class_names() {
  static const std::vector<std::string> names = {"army_base", "bamboo_forest",
                                                 "desert_road"};
  return names;
}

// One textured image of the given class. Classes differ by which vertical
// zone carries the bright band structure, so they stay separable after the
// audio round trip collapses columns into a frequency profile.
raster::GrayImage make_image(int class_index, int size, std::uint64_t seed);

// Writes <root>/{train,val}/<class>/<class>_NNN.pgm for every sample plus a
// manifest.csv next to them.
void write_fixture(const FixtureConfig& cfg, const std::filesystem::path& root);

}  // namespace camocodec::synthetic
