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

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "camocodec/error.hpp"
#include "camocodec/metrics.hpp"
#include "camocodec/pipeline.hpp"

namespace {

struct Args {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  bool spectrograms = false;
};

void add_common(CLI::App* sub, Args& args) {
  sub->add_option("--config", args.config,
                  "JSON pipeline config; defaults apply when omitted");
  sub->add_option("--out", args.out, "output directory (overrides the config)");
  sub->add_option("--seed", args.seed, "training seed (overrides the config)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"camocodec: hide raster images in audio and classify the clips"};
  app.require_subcommand(1);

  Args args;
  auto* encode =
      app.add_subcommand("encode", "render every manifest image as a WAV clip");
  add_common(encode, args);
  encode->add_flag("--spectrograms", args.spectrograms,
                   "also write mel spectrogram images");
  add_common(app.add_subcommand(
                 "featurize", "extract cepstral descriptors for both splits"),
             args);
  add_common(app.add_subcommand("train", "fit the audio classifier"), args);
  add_common(app.add_subcommand("grid", "hyperparameter grid search"), args);
  add_common(app.add_subcommand(
                 "eval", "report, confusion, ROC/PR curves and PCA projections"),
             args);
  add_common(app.add_subcommand(
                 "baseline", "train and evaluate the raw-pixel baseline"),
             args);
  add_common(app.add_subcommand(
                 "compare", "summarize audio pipeline vs baseline"),
             args);

  CLI11_PARSE(app, argc, argv);

  try {
    camocodec::pipeline::PipelineConfig cfg;
    if (!args.config.empty())
      cfg = camocodec::pipeline::load_config(args.config);

    camocodec::pipeline::StageOptions opt;
    opt.out_dir = args.out;
    opt.seed = args.seed;
    opt.spectrograms = args.spectrograms;

    const std::string stage = app.get_subcommands().front()->get_name();
    double secs = 0.0;
    if (stage == "encode") secs = cmd_encode(cfg, opt);
    else if (stage == "featurize") secs = cmd_featurize(cfg, opt);
    else if (stage == "train") secs = cmd_train(cfg, opt);
    else if (stage == "grid") secs = cmd_grid(cfg, opt);
    else if (stage == "eval") secs = cmd_eval(cfg, opt);
    else if (stage == "baseline") secs = cmd_baseline(cfg, opt);
    else if (stage == "compare") secs = cmd_compare(cfg, opt);

    std::cout << stage << " finished in "
              << camocodec::metrics::format_duration(secs) << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
