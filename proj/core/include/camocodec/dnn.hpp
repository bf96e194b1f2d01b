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
#include <span>
#include <string>
#include <vector>

#include "camocodec/rng.hpp"

namespace camocodec::dnn {

enum class Activation { relu, tanh_fn, sigmoid, linear };
enum class Optimizer { sgd, adam };
enum class InitMode { glorot_uniform, uniform_small, normal_small };

Activation parse_activation(const std::string& name);
Optimizer parse_optimizer(const std::string& name);
InitMode parse_init_mode(const std::string& name);
std::string to_string(Activation a);
std::string to_string(Optimizer o);
std::string to_string(InitMode m);

struct TrainConfig {
  std::vector<int> hidden = {512, 128};
  Activation activation = Activation::relu;
  InitMode init_mode = InitMode::glorot_uniform;
  Optimizer optimizer = Optimizer::adam;
  double learn_rate = 1e-3;
  double momentum = 0.0;          // sgd only
  double dropout_rate = 0.2;
  double weight_constraint = 0.0; // 0 disables the max-norm clamp
  int batch_size = 32;
  int epochs = 50;
  std::uint64_t seed = 42;
};

// Fully connected softmax classifier. Layer l maps sizes[l] -> sizes[l+1];
// weights are stored row-major with shape in x out, so a column holds the
// fan-in of one output unit (the unit the max-norm constraint clamps).
class DenseNet {
 public:
  DenseNet() = default;
  DenseNet(std::vector<int> sizes, Activation activation);

  void init_weights(InitMode mode, SeededRng& rng);

  // Probabilities for a batch, dropout off.
  std::vector<std::vector<double>> predict_proba(
      const std::vector<std::vector<double>>& x) const;
  std::vector<int> predict(const std::vector<std::vector<double>>& x) const;

  // Mean cross-entropy over the batch plus accuracy, dropout off.
  std::pair<double, double> evaluate(const std::vector<std::vector<double>>& x,
                                     std::span<const int> y) const;

  const std::vector<int>& sizes() const { return sizes_; }
  Activation activation() const { return activation_; }

  // Flat parameter access, weights-then-bias per layer. Gradient checks and
  // the optimizers drive the net through this view.
  std::size_t parameter_count() const;
  std::vector<double> parameters() const;
  void set_parameters(std::span<const double> flat);

  // Mean batch loss and its parameter gradient. When `training` is set,
  // inverted dropout with the given rate runs on hidden activations, with
  // masks drawn from rng.
  double loss_and_gradient(const std::vector<std::vector<double>>& x,
                           std::span<const int> y, double dropout_rate,
                           bool training, SeededRng& rng,
                           std::vector<double>& grad) const;

  // Scales any weight column whose L2 norm exceeds max_norm back onto the
  // ball. Biases are untouched.
  void apply_max_norm(double max_norm);

  void save(const std::filesystem::path& path) const;
  static DenseNet load(const std::filesystem::path& path);

 private:
  friend class Trainer;
  std::vector<int> sizes_;
  Activation activation_ = Activation::relu;
  std::vector<std::vector<double>> weights_;  // per layer, in*out row-major
  std::vector<std::vector<double>> biases_;   // per layer, out
};

struct EpochStats {
  int epoch = 0;
  double train_loss = 0.0;
  double train_acc = 0.0;
  double val_loss = 0.0;
  double val_acc = 0.0;
  double seconds = 0.0;
};

struct TrainResult {
  std::vector<EpochStats> history;
  double final_val_acc = 0.0;
  double final_val_loss = 0.0;
  double total_seconds = 0.0;
};

// Mini-batch trainer. Reinitializes the net from cfg.init_mode, then drives
// weight init, epoch shuffles (Fisher-Yates) and dropout masks from one
// stream seeded with cfg.seed, so a run is a pure function of config and
// data. Each epoch walks consecutive batches of the shuffled order, applies
// the optimizer update and, when configured, the max-norm clamp. Train-side
// history averages pre-update batch stats (loss with dropout active,
// accuracy without); val-side is a post-epoch evaluation pass.
TrainResult train(DenseNet& net, const TrainConfig& cfg,
                  const std::vector<std::vector<double>>& x_train,
                  std::span<const int> y_train,
                  const std::vector<std::vector<double>>& x_val,
                  std::span<const int> y_val);

struct GridPoint {
  TrainConfig config;
  double val_acc = 0.0;
  double val_loss = 0.0;
  double seconds = 0.0;
};

struct GridAxes {
  std::vector<int> batch_size;
  std::vector<int> epochs;
  std::vector<Optimizer> optimizer;
  std::vector<double> learn_rate;
  std::vector<double> momentum;
  std::vector<InitMode> init_mode;
  std::vector<Activation> activation;
  std::vector<double> dropout_rate;
  std::vector<double> weight_constraint;
  std::vector<int> neurons;  // width of the first hidden layer
};

struct GridResult {
  std::vector<GridPoint> points;  // enumeration order
  std::size_t best_index = 0;     // highest val_acc, earliest wins ties
};

// Cartesian product over the axes in declaration order; the last axis varies
// fastest. Every point trains from the same base config and seed. All ten
// axes must be non-empty; callers that want a fixed value for an axis pass
// a singleton list.
GridResult grid_search(const GridAxes& axes, const TrainConfig& base,
                       const std::vector<std::vector<double>>& x_train,
                       std::span<const int> y_train,
                       const std::vector<std::vector<double>>& x_val,
                       std::span<const int> y_val);

}  // namespace camocodec::dnn
