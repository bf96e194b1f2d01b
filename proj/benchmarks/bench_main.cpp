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

#include <benchmark/benchmark.h>

#include <vector>

#include "camocodec/dnn.hpp"
#include "camocodec/dsp.hpp"
#include "camocodec/metrics.hpp"
#include "camocodec/raster.hpp"
#include "camocodec/rng.hpp"
#include "camocodec/sonify.hpp"

namespace {

using camocodec::SeededRng;

camocodec::raster::GrayImage random_image(int size, std::uint64_t seed) {
  camocodec::raster::GrayImage img;
  img.width = img.height = size;
  img.data.resize(static_cast<std::size_t>(size) * size);
  SeededRng rng(seed);
  for (double& v : img.data) v = rng.uniform();
  return img;
}

void BM_encode(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const auto img = random_image(size, 11);
  camocodec::sonify::EncodeConfig cfg;
  cfg.rows = cfg.cols = size;
  for (auto _ : state) {
    auto samples = camocodec::sonify::encode(img, cfg);
    benchmark::DoNotOptimize(samples.data());
  }
  state.SetItemsProcessed(state.iterations() * size * size);
}
BENCHMARK(BM_encode)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_decode(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const auto img = random_image(size, 12);
  camocodec::sonify::EncodeConfig cfg;
  cfg.rows = cfg.cols = size;
  const auto samples = camocodec::sonify::encode(img, cfg);
  for (auto _ : state) {
    auto back = camocodec::sonify::decode(samples, cfg);
    benchmark::DoNotOptimize(back.data.data());
  }
}
BENCHMARK(BM_decode)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_mfcc_descriptor(benchmark::State& state) {
  const std::size_t len = static_cast<std::size_t>(state.range(0));
  SeededRng rng(13);
  std::vector<double> clip(len);
  for (double& s : clip) s = rng.uniform(-1.0, 1.0);
  const camocodec::dsp::MfccConfig cfg;
  for (auto _ : state) {
    auto d = camocodec::dsp::mfcc_descriptor(clip, 22050.0, cfg);
    benchmark::DoNotOptimize(d.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(len));
}
BENCHMARK(BM_mfcc_descriptor)->Arg(22050)->Arg(44100)->Unit(benchmark::kMillisecond);

void BM_train_step(benchmark::State& state) {
  const int dim = 256;
  SeededRng rng(14);
  std::vector<std::vector<double>> x(32, std::vector<double>(dim));
  std::vector<int> y(32);
  for (auto& row : x)
    for (double& v : row) v = rng.uniform(-1.0, 1.0);
  for (int& label : y) label = static_cast<int>(rng.index(3));

  camocodec::dnn::DenseNet net({dim, 128, 64, 3},
                               camocodec::dnn::Activation::relu);
  net.init_weights(camocodec::dnn::InitMode::glorot_uniform, rng);
  std::vector<double> grad;
  for (auto _ : state) {
    const double loss = net.loss_and_gradient(x, y, 0.2, true, rng, grad);
    benchmark::DoNotOptimize(loss);
    benchmark::DoNotOptimize(grad.data());
  }
}
BENCHMARK(BM_train_step)->Unit(benchmark::kMicrosecond);

void BM_roc_curve(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  SeededRng rng(15);
  std::vector<int> labels(n);
  std::vector<double> scores(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = rng.uniform() < 0.5 ? 1 : 0;
    scores[i] = rng.uniform();
  }
  labels[0] = 1;
  labels[n - 1] = 0;
  for (auto _ : state) {
    auto roc = camocodec::metrics::roc_curve(labels, scores);
    benchmark::DoNotOptimize(roc.auc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}
BENCHMARK(BM_roc_curve)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
