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
#include <string>

#include "CLI11.hpp"
#include "camocodec/synthetic.hpp"

int main(int argc, char** argv) {
  CLI::App app{"camocodec-synth: banded texture fixture generator"};

  std::string out = "fixture";
  camocodec::synthetic::FixtureConfig cfg;
  app.add_option("--out", out, "fixture root directory");
  app.add_option("--size", cfg.size, "square image size in pixels");
  app.add_option("--train-per-class", cfg.train_per_class,
                 "training samples per class");
  app.add_option("--val-per-class", cfg.val_per_class,
                 "validation samples per class");
  app.add_option("--seed", cfg.seed, "master seed");

  CLI11_PARSE(app, argc, argv);

  try {
    camocodec::synthetic::write_fixture(cfg, out);
    const auto classes = camocodec::synthetic::class_names().size();
    std::cout << "wrote " << classes * (cfg.train_per_class + cfg.val_per_class)
              << " images (" << classes << " classes) under " << out << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
