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

#include "camocodec/dnn.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>

#include "binio.hpp"
#include "camocodec/error.hpp"
#include "camocodec/numeric.hpp"

namespace camocodec::dnn {
namespace {

constexpr std::uint32_t kModelVersion = 1;
constexpr double kProbFloor = 1e-12;

using camocodec::RowMatrixXd;
using MatMap = Eigen::Map<RowMatrixXd>;
using ConstMatMap = Eigen::Map<const RowMatrixXd>;

RowMatrixXd to_matrix(const std::vector<std::vector<double>>& rows,
                      std::size_t dim) {
  RowMatrixXd m(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim)
      raise(errc::dimension_mismatch, "batch rows have mixed dimensions");
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

void apply_activation(RowMatrixXd& z, Activation act) {
  switch (act) {
    case Activation::relu:
      z = z.cwiseMax(0.0);
      break;
    case Activation::tanh_fn:
      z = z.array().tanh();
      break;
    case Activation::sigmoid:
      z = (1.0 / (1.0 + (-z.array()).exp()));
      break;
    case Activation::linear:
      break;
  }
}

// Derivative through the activation, expressed with the pre-activation z and
// the activation output a (whichever is cheaper per kind).
RowMatrixXd activation_grad(const RowMatrixXd& z, const RowMatrixXd& a,
                            Activation act) {
  switch (act) {
    case Activation::relu:
      return (z.array() > 0.0).cast<double>();
    case Activation::tanh_fn:
      return 1.0 - a.array().square();
    case Activation::sigmoid:
      return a.array() * (1.0 - a.array());
    case Activation::linear:
      return RowMatrixXd::Ones(z.rows(), z.cols());
  }
  raise(errc::invalid_argument, "unknown activation");
}

void softmax_rows(RowMatrixXd& z) {
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    double mx = z.row(i).maxCoeff();
    z.row(i) = (z.row(i).array() - mx).exp();
    z.row(i) /= z.row(i).sum();
  }
}

}  // namespace

Activation parse_activation(const std::string& name) {
  if (name == "relu") return Activation::relu;
  if (name == "tanh") return Activation::tanh_fn;
  if (name == "sigmoid") return Activation::sigmoid;
  if (name == "linear") return Activation::linear;
  raise(errc::invalid_config, "unknown activation '" + name + "'");
}

Optimizer parse_optimizer(const std::string& name) {
  if (name == "sgd") return Optimizer::sgd;
  if (name == "adam") return Optimizer::adam;
  raise(errc::invalid_config, "unknown optimizer '" + name + "'");
}

InitMode parse_init_mode(const std::string& name) {
  if (name == "glorot_uniform") return InitMode::glorot_uniform;
  if (name == "uniform_small") return InitMode::uniform_small;
  if (name == "normal_small") return InitMode::normal_small;
  raise(errc::invalid_config, "unknown init mode '" + name + "'");
}

std::string to_string(Activation a) {
  switch (a) {
    case Activation::relu: return "relu";
    case Activation::tanh_fn: return "tanh";
    case Activation::sigmoid: return "sigmoid";
    case Activation::linear: return "linear";
  }
  return "?";
}

std::string to_string(Optimizer o) {
  return o == Optimizer::sgd ? "sgd" : "adam";
}

std::string to_string(InitMode m) {
  switch (m) {
    case InitMode::glorot_uniform: return "glorot_uniform";
    case InitMode::uniform_small: return "uniform_small";
    case InitMode::normal_small: return "normal_small";
  }
  return "?";
}

DenseNet::DenseNet(std::vector<int> sizes, Activation activation)
    : sizes_(std::move(sizes)), activation_(activation) {
  if (sizes_.size() < 2)
    raise(errc::invalid_config, "network needs an input and an output layer");
  for (int s : sizes_)
    if (s <= 0) raise(errc::invalid_config, "layer sizes must be positive");
  weights_.resize(sizes_.size() - 1);
  biases_.resize(sizes_.size() - 1);
  for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
    weights_[l].assign(static_cast<std::size_t>(sizes_[l]) * sizes_[l + 1], 0.0);
    biases_[l].assign(sizes_[l + 1], 0.0);
  }
}

void DenseNet::init_weights(InitMode mode, SeededRng& rng) {
  for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
    const int fan_in = sizes_[l];
    const int fan_out = sizes_[l + 1];
    switch (mode) {
      case InitMode::glorot_uniform: {
        double limit = std::sqrt(6.0 / (fan_in + fan_out));
        for (double& w : weights_[l]) w = rng.uniform(-limit, limit);
        break;
      }
      case InitMode::uniform_small:
        for (double& w : weights_[l]) w = rng.uniform(-0.05, 0.05);
        break;
      case InitMode::normal_small:
        for (double& w : weights_[l]) w = rng.normal(0.0, 0.05);
        break;
    }
    std::fill(biases_[l].begin(), biases_[l].end(), 0.0);
  }
}

std::vector<std::vector<double>> DenseNet::predict_proba(
    const std::vector<std::vector<double>>& x) const {
  if (x.empty()) return {};
  RowMatrixXd a = to_matrix(x, static_cast<std::size_t>(sizes_.front()));
  for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
    ConstMatMap w(weights_[l].data(), sizes_[l], sizes_[l + 1]);
    Eigen::Map<const Eigen::RowVectorXd> b(biases_[l].data(), sizes_[l + 1]);
    RowMatrixXd z = (a * w).rowwise() + b;
    if (l + 2 < sizes_.size()) {
      apply_activation(z, activation_);
    } else {
      softmax_rows(z);
    }
    a = std::move(z);
  }

  std::vector<std::vector<double>> out(x.size(),
                                       std::vector<double>(sizes_.back()));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (int c = 0; c < sizes_.back(); ++c)
      out[i][c] = a(static_cast<Eigen::Index>(i), c);
  return out;
}

std::vector<int> DenseNet::predict(const std::vector<std::vector<double>>& x) const {
  auto proba = predict_proba(x);
  std::vector<int> labels(proba.size());
  for (std::size_t i = 0; i < proba.size(); ++i) {
    labels[i] = static_cast<int>(
        std::max_element(proba[i].begin(), proba[i].end()) - proba[i].begin());
  }
  return labels;
}

std::pair<double, double> DenseNet::evaluate(
    const std::vector<std::vector<double>>& x, std::span<const int> y) const {
  if (x.size() != y.size())
    raise(errc::dimension_mismatch, "evaluate: x and y differ in length");
  if (x.empty()) raise(errc::invalid_argument, "evaluate: empty batch");

  auto proba = predict_proba(x);
  double loss = 0.0;
  int correct = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    int label = y[i];
    if (label < 0 || label >= sizes_.back())
      raise(errc::invalid_argument, "label out of range");
    loss -= std::log(std::max(proba[i][label], kProbFloor));
    int pred = static_cast<int>(
        std::max_element(proba[i].begin(), proba[i].end()) - proba[i].begin());
    if (pred == label) ++correct;
  }
  return {loss / static_cast<double>(x.size()),
          static_cast<double>(correct) / static_cast<double>(x.size())};
}

std::size_t DenseNet::parameter_count() const {
  std::size_t n = 0;
  for (std::size_t l = 0; l < weights_.size(); ++l)
    n += weights_[l].size() + biases_[l].size();
  return n;
}

std::vector<double> DenseNet::parameters() const {
  std::vector<double> flat;
  flat.reserve(parameter_count());
  for (std::size_t l = 0; l < weights_.size(); ++l) {
    flat.insert(flat.end(), weights_[l].begin(), weights_[l].end());
    flat.insert(flat.end(), biases_[l].begin(), biases_[l].end());
  }
  return flat;
}

void DenseNet::set_parameters(std::span<const double> flat) {
  if (flat.size() != parameter_count())
    raise(errc::dimension_mismatch, "parameter vector has wrong length");
  std::size_t off = 0;
  for (std::size_t l = 0; l < weights_.size(); ++l) {
    std::copy_n(flat.begin() + off, weights_[l].size(), weights_[l].begin());
    off += weights_[l].size();
    std::copy_n(flat.begin() + off, biases_[l].size(), biases_[l].begin());
    off += biases_[l].size();
  }
}

double DenseNet::loss_and_gradient(const std::vector<std::vector<double>>& x,
                                   std::span<const int> y, double dropout_rate,
                                   bool training, SeededRng& rng,
                                   std::vector<double>& grad) const {
  if (x.size() != y.size())
    raise(errc::dimension_mismatch, "loss: x and y differ in length");
  if (x.empty()) raise(errc::invalid_argument, "loss: empty batch");
  if (dropout_rate < 0.0 || dropout_rate >= 1.0)
    raise(errc::invalid_config, "dropout rate must lie in [0, 1)");

  const std::size_t n_layers = weights_.size();
  const Eigen::Index batch = static_cast<Eigen::Index>(x.size());
  const bool drop = training && dropout_rate > 0.0;

  std::vector<RowMatrixXd> acts(n_layers + 1);   // acts[0] = input
  std::vector<RowMatrixXd> zs(n_layers);         // pre-activations
  std::vector<RowMatrixXd> masks(drop ? n_layers : 0);
  // Undropped hidden activations; tanh and sigmoid derivatives must see the
  // activation value, not the masked one.
  std::vector<RowMatrixXd> pre_drop(drop ? n_layers : 0);

  acts[0] = to_matrix(x, static_cast<std::size_t>(sizes_.front()));
  for (std::size_t l = 0; l < n_layers; ++l) {
    ConstMatMap w(weights_[l].data(), sizes_[l], sizes_[l + 1]);
    Eigen::Map<const Eigen::RowVectorXd> b(biases_[l].data(), sizes_[l + 1]);
    zs[l] = (acts[l] * w).rowwise() + b;
    RowMatrixXd a = zs[l];
    if (l + 1 < n_layers) {
      apply_activation(a, activation_);
      if (drop) {
        // Inverted dropout: masks are 0 or 1/(1-rate), drawn row-major so
        // the stream consumption is independent of the matrix backend.
        RowMatrixXd mask(batch, sizes_[l + 1]);
        const double keep_scale = 1.0 / (1.0 - dropout_rate);
        for (Eigen::Index i = 0; i < batch; ++i)
          for (int j = 0; j < sizes_[l + 1]; ++j)
            mask(i, j) = rng.uniform() >= dropout_rate ? keep_scale : 0.0;
        pre_drop[l] = a;
        a = a.cwiseProduct(mask);
        masks[l] = std::move(mask);
      }
    } else {
      softmax_rows(a);
    }
    acts[l + 1] = std::move(a);
  }

  double loss = 0.0;
  RowMatrixXd delta = acts[n_layers];  // softmax output
  for (Eigen::Index i = 0; i < batch; ++i) {
    int label = y[i];
    if (label < 0 || label >= sizes_.back())
      raise(errc::invalid_argument, "label out of range");
    loss -= std::log(std::max(delta(i, label), kProbFloor));
    delta(i, label) -= 1.0;
  }
  loss /= static_cast<double>(batch);
  delta /= static_cast<double>(batch);  // d(mean CE)/d(logits)

  grad.assign(parameter_count(), 0.0);
  std::vector<std::size_t> offsets(n_layers);
  std::size_t off = 0;
  for (std::size_t l = 0; l < n_layers; ++l) {
    offsets[l] = off;
    off += weights_[l].size() + biases_[l].size();
  }

  for (std::size_t l = n_layers; l-- > 0;) {
    MatMap dw(grad.data() + offsets[l], sizes_[l], sizes_[l + 1]);
    Eigen::Map<Eigen::RowVectorXd> db(
        grad.data() + offsets[l] + weights_[l].size(), sizes_[l + 1]);
    dw.noalias() = acts[l].transpose() * delta;
    db = delta.colwise().sum();
    if (l > 0) {
      ConstMatMap w(weights_[l].data(), sizes_[l], sizes_[l + 1]);
      RowMatrixXd upstream = delta * w.transpose();
      if (drop) upstream = upstream.cwiseProduct(masks[l - 1]);
      delta = upstream.cwiseProduct(activation_grad(
          zs[l - 1], drop ? pre_drop[l - 1] : acts[l], activation_));
    }
  }
  return loss;
}

void DenseNet::apply_max_norm(double max_norm) {
  if (max_norm <= 0.0)
    raise(errc::invalid_argument, "max_norm must be positive");
  for (std::size_t l = 0; l < weights_.size(); ++l) {
    MatMap w(weights_[l].data(), sizes_[l], sizes_[l + 1]);
    for (int j = 0; j < sizes_[l + 1]; ++j) {
      double norm = w.col(j).norm();
      if (norm > max_norm) w.col(j) *= max_norm / norm;
    }
  }
}

void DenseNet::save(const std::filesystem::path& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) raise(errc::io_error, "cannot create " + path.string());
  os.write("CAMN", 4);
  binio::write_le<std::uint32_t>(os, kModelVersion);
  binio::write_le<std::uint32_t>(os, static_cast<std::uint32_t>(sizes_.size()));
  for (int s : sizes_) binio::write_le<std::uint32_t>(os, static_cast<std::uint32_t>(s));
  binio::write_le<std::uint32_t>(os, static_cast<std::uint32_t>(activation_));
  for (std::size_t l = 0; l < weights_.size(); ++l) {
    for (double v : weights_[l]) binio::write_le<double>(os, v);
    for (double v : biases_[l]) binio::write_le<double>(os, v);
  }
  if (!os) raise(errc::io_error, "short write to " + path.string());
}

DenseNet DenseNet::load(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) raise(errc::file_not_found, "cannot open " + path.string());
  char magic[4];
  is.read(magic, 4);
  if (!is || std::string(magic, 4) != "CAMN")
    raise(errc::bad_magic, path.string() + ": not a model file");
  std::uint32_t version = binio::read_le<std::uint32_t>(is, "version");
  if (version != kModelVersion)
    raise(errc::unsupported_format,
          path.string() + ": model version " + std::to_string(version));

  std::uint32_t n_sizes = binio::read_le<std::uint32_t>(is, "layer count");
  if (n_sizes < 2 || n_sizes > 64)
    raise(errc::unsupported_format, path.string() + ": implausible layer count");
  std::vector<int> sizes(n_sizes);
  for (auto& s : sizes) {
    std::uint32_t v = binio::read_le<std::uint32_t>(is, "layer size");
    if (v == 0 || v > (1u << 24))
      raise(errc::unsupported_format, path.string() + ": implausible layer size");
    s = static_cast<int>(v);
  }
  std::uint32_t act = binio::read_le<std::uint32_t>(is, "activation");
  if (act > 3)
    raise(errc::unsupported_format, path.string() + ": unknown activation id");

  DenseNet net(std::move(sizes), static_cast<Activation>(act));
  for (std::size_t l = 0; l < net.weights_.size(); ++l) {
    for (double& v : net.weights_[l]) v = binio::read_le<double>(is, "weight");
    for (double& v : net.biases_[l]) v = binio::read_le<double>(is, "bias");
  }
  return net;
}

namespace {

// Optimizer state over the flat parameter vector.
struct OptimizerState {
  Optimizer kind = Optimizer::sgd;
  double lr = 0.0;
  double momentum = 0.0;
  std::vector<double> velocity;  // sgd
  std::vector<double> m, v;      // adam moments
  long long t = 0;

  static constexpr double kBeta1 = 0.9;
  static constexpr double kBeta2 = 0.999;
  static constexpr double kEps = 1e-8;

  OptimizerState(Optimizer kind, double lr, double momentum, std::size_t n)
      : kind(kind), lr(lr), momentum(momentum) {
    if (kind == Optimizer::sgd) {
      velocity.assign(n, 0.0);
    } else {
      m.assign(n, 0.0);
      v.assign(n, 0.0);
    }
  }

  void step(std::vector<double>& params, const std::vector<double>& grad) {
    if (kind == Optimizer::sgd) {
      for (std::size_t i = 0; i < params.size(); ++i) {
        velocity[i] = momentum * velocity[i] - lr * grad[i];
        params[i] += velocity[i];
      }
    } else {
      ++t;
      const double bc1 = 1.0 - std::pow(kBeta1, static_cast<double>(t));
      const double bc2 = 1.0 - std::pow(kBeta2, static_cast<double>(t));
      for (std::size_t i = 0; i < params.size(); ++i) {
        m[i] = kBeta1 * m[i] + (1.0 - kBeta1) * grad[i];
        v[i] = kBeta2 * v[i] + (1.0 - kBeta2) * grad[i] * grad[i];
        double mhat = m[i] / bc1;
        double vhat = v[i] / bc2;
        params[i] -= lr * mhat / (std::sqrt(vhat) + kEps);
      }
    }
  }
};

}  // namespace

TrainResult train(DenseNet& net, const TrainConfig& cfg,
                  const std::vector<std::vector<double>>& x_train,
                  std::span<const int> y_train,
                  const std::vector<std::vector<double>>& x_val,
                  std::span<const int> y_val) {
  if (x_train.size() != y_train.size() || x_val.size() != y_val.size())
    raise(errc::dimension_mismatch, "train: features and labels differ in length");
  if (x_train.empty() || x_val.empty())
    raise(errc::invalid_argument, "train: empty split");
  if (cfg.batch_size <= 0 || cfg.epochs < 0)
    raise(errc::invalid_config, "need batch_size > 0 and epochs >= 0");
  if (cfg.learn_rate <= 0.0)
    raise(errc::invalid_config, "learn_rate must be positive");
  if (cfg.momentum < 0.0 || cfg.momentum >= 1.0)
    raise(errc::invalid_config, "momentum must lie in [0, 1)");

  SeededRng rng(cfg.seed);
  net.init_weights(cfg.init_mode, rng);

  std::vector<double> params = net.parameters();
  OptimizerState opt(cfg.optimizer, cfg.learn_rate, cfg.momentum, params.size());

  const std::size_t n = x_train.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  TrainResult result;
  result.history.reserve(cfg.epochs);

  std::vector<double> grad;
  std::vector<std::vector<double>> batch_x;
  std::vector<int> batch_y;

  const auto run_start = std::chrono::steady_clock::now();
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    const auto epoch_start = std::chrono::steady_clock::now();
    rng.shuffle(order);

    double loss_sum = 0.0;
    double acc_sum = 0.0;
    for (std::size_t begin = 0; begin < n; begin += cfg.batch_size) {
      const std::size_t end = std::min(n, begin + cfg.batch_size);
      batch_x.assign(end - begin, {});
      batch_y.assign(end - begin, 0);
      for (std::size_t i = begin; i < end; ++i) {
        batch_x[i - begin] = x_train[order[i]];
        batch_y[i - begin] = y_train[order[i]];
      }

      double loss = net.loss_and_gradient(batch_x, batch_y, cfg.dropout_rate,
                                          /*training=*/true, rng, grad);
      // Pre-update batch accuracy for the history row, dropout off.
      auto batch_pred = net.predict(batch_x);
      int correct = 0;
      for (std::size_t i = 0; i < batch_y.size(); ++i)
        if (batch_pred[i] == batch_y[i]) ++correct;

      const double w = static_cast<double>(end - begin);
      loss_sum += loss * w;
      acc_sum += static_cast<double>(correct);

      opt.step(params, grad);
      net.set_parameters(params);
      if (cfg.weight_constraint > 0.0) {
        net.apply_max_norm(cfg.weight_constraint);
        params = net.parameters();
      }
    }

    auto [val_loss, val_acc] = net.evaluate(x_val, y_val);
    EpochStats stats;
    stats.epoch = epoch + 1;
    stats.train_loss = loss_sum / static_cast<double>(n);
    stats.train_acc = acc_sum / static_cast<double>(n);
    stats.val_loss = val_loss;
    stats.val_acc = val_acc;
    stats.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - epoch_start)
                        .count();
    result.history.push_back(stats);
  }

  result.total_seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - run_start)
                             .count();
  if (result.history.empty()) {
    // epochs == 0: the model is just the seeded initialization.
    auto [val_loss, val_acc] = net.evaluate(x_val, y_val);
    result.final_val_loss = val_loss;
    result.final_val_acc = val_acc;
  } else {
    result.final_val_loss = result.history.back().val_loss;
    result.final_val_acc = result.history.back().val_acc;
  }
  return result;
}

GridResult grid_search(const GridAxes& axes, const TrainConfig& base,
                       const std::vector<std::vector<double>>& x_train,
                       std::span<const int> y_train,
                       const std::vector<std::vector<double>>& x_val,
                       std::span<const int> y_val) {
  if (x_train.empty())
    raise(errc::invalid_argument, "grid search: empty training split");

  const int input_dim = static_cast<int>(x_train[0].size());
  int n_classes = 0;
  for (int y : y_train) n_classes = std::max(n_classes, y + 1);
  for (int y : y_val) n_classes = std::max(n_classes, y + 1);

  auto need = [](bool empty, const char* axis) {
    if (empty)
      raise(errc::invalid_argument,
            std::string("grid search: empty axis '") + axis + "'");
  };
  need(axes.batch_size.empty(), "batch_size");
  need(axes.epochs.empty(), "epochs");
  need(axes.optimizer.empty(), "optimizer");
  need(axes.learn_rate.empty(), "learn_rate");
  need(axes.momentum.empty(), "momentum");
  need(axes.init_mode.empty(), "init_mode");
  need(axes.activation.empty(), "activation");
  need(axes.dropout_rate.empty(), "dropout_rate");
  need(axes.weight_constraint.empty(), "weight_constraint");
  need(axes.neurons.empty(), "neurons");

  GridResult result;
  for (int bs : axes.batch_size)
  for (int ep : axes.epochs)
  for (Optimizer op : axes.optimizer)
  for (double lr : axes.learn_rate)
  for (double mom : axes.momentum)
  for (InitMode im : axes.init_mode)
  for (Activation act : axes.activation)
  for (double dr : axes.dropout_rate)
  for (double wc : axes.weight_constraint)
  for (int nw : axes.neurons) {
    TrainConfig cfg = base;
    cfg.batch_size = bs;
    cfg.epochs = ep;
    cfg.optimizer = op;
    cfg.learn_rate = lr;
    cfg.momentum = mom;
    cfg.init_mode = im;
    cfg.activation = act;
    cfg.dropout_rate = dr;
    cfg.weight_constraint = wc;
    if (nw > 0) {
      if (cfg.hidden.empty()) cfg.hidden = {nw};
      else cfg.hidden[0] = nw;
    }

    std::vector<int> sizes;
    sizes.push_back(input_dim);
    sizes.insert(sizes.end(), cfg.hidden.begin(), cfg.hidden.end());
    sizes.push_back(n_classes);
    DenseNet net(sizes, cfg.activation);

    TrainResult tr = train(net, cfg, x_train, y_train, x_val, y_val);
    GridPoint point;
    point.config = cfg;
    point.val_acc = tr.final_val_acc;
    point.val_loss = tr.final_val_loss;
    point.seconds = tr.total_seconds;
    result.points.push_back(std::move(point));

    if (result.points.back().val_acc > result.points[result.best_index].val_acc)
      result.best_index = result.points.size() - 1;
  }
  return result;
}

}  // namespace camocodec::dnn
