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
#include <optional>
#include <string>

#include "camocodec/dnn.hpp"
#include "camocodec/dsp.hpp"
#include "camocodec/sonify.hpp"

namespace camocodec::pipeline {

// The raw-pixel baseline trains on images downscaled to size x size instead
// of MFCC descriptors; it gets its own training knobs so both arms can be
// tuned independently.
struct BaselineConfig {
  int size = 64;
  dnn::TrainConfig train;
};

struct PipelineConfig {
  std::filesystem::path manifest;  // required by every stage that reads images
  std::filesystem::path out_dir = "out";
  sonify::EncodeConfig encode;
  dsp::MfccConfig mfcc;
  dnn::TrainConfig train;
  BaselineConfig baseline;
  dnn::GridAxes grid;
};

// Strict JSON loader: unknown keys and type mismatches raise invalid_config.
// Absent keys keep their defaults. Relative manifest paths resolve against
// the config file's directory.
PipelineConfig load_config(const std::filesystem::path& path);

struct StageOptions {
  std::filesystem::path out_dir;        // overrides config when non-empty
  std::optional<std::uint64_t> seed;    // overrides train.seed
  bool spectrograms = false;            // encode: also emit mel spectrograms
};

// Each stage returns its wall-clock seconds and appends a row to
// <out>/timings/<stage>.csv. Artifacts land under the out directory:
//
//   wav/<label>/<stem>.wav            encode
//   spectrograms/<label>/<stem>.pgm   encode --spectrograms
//   features/{train,val}.camf        featurize
//   model/audio.camn + history       train
//   model/grid_search.csv            grid
//   eval/...                          eval (report, confusion, ROC/PR, PCA)
//   model/baseline.camn + eval/...   baseline
//   compare/summary.{txt,csv}        compare
double cmd_encode(const PipelineConfig& cfg, const StageOptions& opt);
double cmd_featurize(const PipelineConfig& cfg, const StageOptions& opt);
double cmd_train(const PipelineConfig& cfg, const StageOptions& opt);
double cmd_grid(const PipelineConfig& cfg, const StageOptions& opt);
double cmd_eval(const PipelineConfig& cfg, const StageOptions& opt);
double cmd_baseline(const PipelineConfig& cfg, const StageOptions& opt);
double cmd_compare(const PipelineConfig& cfg, const StageOptions& opt);

}  // namespace camocodec::pipeline
