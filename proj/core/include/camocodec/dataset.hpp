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
#include <string>
#include <vector>

#include "camocodec/dsp.hpp"
#include "camocodec/sonify.hpp"

namespace camocodec::dataset {

struct ManifestEntry {
  std::filesystem::path path;  // resolved against the manifest's directory
  std::string label;
  std::string split;  // "train" or "val"
};

struct Manifest {
  std::vector<ManifestEntry> entries;
  std::vector<std::string> class_names;  // unique labels, first-appearance order
};

// CSV with header "path,label,split". Relative image paths resolve against
// the directory containing the manifest file. Class ids follow first
// appearance so report rows keep the manifest's class order.
Manifest load_manifest(const std::filesystem::path& path);

struct ClassBalance {
  std::vector<std::string> class_names;
  std::vector<int> train_counts;  // aligned with class_names
  std::vector<int> val_counts;
  bool balanced = true;  // all train counts equal and all val counts equal
};

ClassBalance class_balance(const Manifest& manifest);

struct FeatureSet {
  std::vector<std::string> class_names;
  std::vector<int> labels;            // index into class_names
  std::vector<std::vector<double>> features;
};

// Encodes every manifest image of the requested split and extracts its
// descriptor. Work is spread over threads; outputs land at the entry's
// index, so the result is independent of scheduling. On multiple failures
// the error of the lowest-index entry wins.
FeatureSet build_features(const Manifest& manifest, const std::string& split,
                          const sonify::EncodeConfig& enc_cfg,
                          const dsp::MfccConfig& mfcc_cfg);

// Flattens grayscale pixels of each image to a vector, bypassing the audio
// stage. Used by the raster baseline.
FeatureSet build_pixel_features(const Manifest& manifest, const std::string& split,
                                int rows, int cols);

void save_features(const FeatureSet& fs, const std::filesystem::path& path);
FeatureSet load_features(const std::filesystem::path& path);

struct PcaResult {
  std::vector<double> mean;                        // dim
  std::vector<std::vector<double>> components;     // k x dim
  std::vector<double> explained_variance;          // k, descending
  std::vector<double> explained_variance_ratio;    // k
  std::vector<std::vector<double>> projected;      // n x k
};

// Principal axes of the centered data via SVD. Each component is oriented so
// its largest-magnitude coordinate is positive. `projected` holds the scores
// of the fitted rows.
PcaResult pca(const std::vector<std::vector<double>>& rows, int k);

// Scores of arbitrary rows under a fitted model: (x - mean) . component per
// component.
std::vector<std::vector<double>> pca_transform(
    const PcaResult& model, const std::vector<std::vector<double>>& rows);

}  // namespace camocodec::dataset
