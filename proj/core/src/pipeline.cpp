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

#include "camocodec/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "camocodec/dataset.hpp"
#include "camocodec/error.hpp"
#include "camocodec/metrics.hpp"
#include "camocodec/raster.hpp"
#include "json.hpp"
#include "parallel.hpp"

namespace camocodec::pipeline {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Lossless float text; parses back to the same double.
std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt2_signed(double v) {
  long long cents = std::llround(v * 100.0);
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%s%lld.%02lld", cents < 0 ? "-" : "+",
                std::llabs(cents) / 100, std::llabs(cents) % 100);
  return buf;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double stop() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& section) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = std::any_of(allowed.begin(), allowed.end(),
                             [&](const char* k) { return it.key() == k; });
    if (!known)
      raise(errc::invalid_config,
            "unknown key '" + it.key() + "' in " + section);
  }
}

template <typename T>
void fetch(const json& obj, const char* key, T& out, const std::string& section) {
  if (!obj.contains(key)) return;
  try {
    obj.at(key).get_to(out);
  } catch (const json::exception&) {
    raise(errc::invalid_config,
          "bad value for '" + std::string(key) + "' in " + section);
  }
}

template <typename T, typename Parse>
void fetch_enum_list(const json& obj, const char* key, std::vector<T>& out,
                     Parse parse, const std::string& section) {
  if (!obj.contains(key)) return;
  std::vector<std::string> names;
  fetch(obj, key, names, section);
  out.clear();
  for (const auto& n : names) out.push_back(parse(n));
}

fs::path require_manifest(const PipelineConfig& cfg) {
  if (cfg.manifest.empty())
    raise(errc::invalid_config, "config is missing 'manifest'");
  return cfg.manifest;
}

fs::path stage_out(const PipelineConfig& cfg, const StageOptions& opt) {
  return opt.out_dir.empty() ? cfg.out_dir : opt.out_dir;
}

dnn::TrainConfig effective_train(const PipelineConfig& cfg,
                                 const StageOptions& opt) {
  dnn::TrainConfig tc = cfg.train;
  if (opt.seed) tc.seed = *opt.seed;
  return tc;
}

dnn::TrainConfig effective_baseline(const PipelineConfig& cfg,
                                    const StageOptions& opt) {
  dnn::TrainConfig tc = cfg.baseline.train;
  if (opt.seed) tc.seed = *opt.seed;
  return tc;
}

void write_timing(const fs::path& out, const std::string& stage, double secs) {
  fs::create_directories(out / "timings");
  std::ofstream os(out / "timings" / (stage + ".csv"));
  if (!os) raise(errc::io_error, "cannot write timing record for " + stage);
  os << "stage,seconds,formatted\n";
  os << stage << ',' << g17(secs) << ',' << metrics::format_duration(secs)
     << '\n';
}

double read_timing(const fs::path& out, const std::string& stage) {
  fs::path path = out / "timings" / (stage + ".csv");
  std::ifstream is(path);
  if (!is)
    raise(errc::missing_artifact,
          path.string() + " not found; run the " + stage + " stage first");
  std::string header, row;
  if (!std::getline(is, header) || !std::getline(is, row))
    raise(errc::malformed_csv, path.string() + ": expected one data row");
  std::stringstream ss(row);
  std::string stage_field, seconds_field;
  if (!std::getline(ss, stage_field, ',') || !std::getline(ss, seconds_field, ','))
    raise(errc::malformed_csv, path.string() + ": bad row");
  try {
    return std::stod(seconds_field);
  } catch (const std::exception&) {
    raise(errc::malformed_csv, path.string() + ": bad seconds value");
  }
}

raster::GrayImage load_gray_resized(const fs::path& path, int rows, int cols) {
  raster::GrayImage gray = raster::to_grayscale(raster::load_image(path));
  if (gray.height == rows && gray.width == cols) return gray;
  return raster::resize_bilinear(gray, rows, cols);
}

// Frames x mels dB grid rendered with the high band on top, matching the
// orientation of the source image.
raster::GrayImage render_mel(const std::vector<std::vector<double>>& mel) {
  const int w = static_cast<int>(mel.size());
  const int h = static_cast<int>(mel[0].size());
  double lo = mel[0][0], hi = mel[0][0];
  for (const auto& col : mel)
    for (double v : col) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  raster::GrayImage img;
  img.width = w;
  img.height = h;
  img.data.assign(static_cast<std::size_t>(w) * h, 0.0);
  if (hi > lo) {
    for (int r = 0; r < h; ++r)
      for (int c = 0; c < w; ++c)
        img.at(r, c) = (mel[c][h - 1 - r] - lo) / (hi - lo);
  }
  return img;
}

dataset::FeatureSet require_features(const fs::path& out, const std::string& split) {
  fs::path path = out / "features" / (split + ".camf");
  if (!fs::exists(path))
    raise(errc::missing_artifact,
          path.string() + " not found; run the featurize stage first");
  return dataset::load_features(path);
}

dnn::DenseNet require_model(const fs::path& out, const std::string& name) {
  fs::path path = out / "model" / name;
  if (!fs::exists(path))
    raise(errc::missing_artifact,
          path.string() + " not found; run the train stage first");
  return dnn::DenseNet::load(path);
}

// The trailing seconds column is the one wall-clock field that lives outside
// timings/; rerun comparisons treat it as a timing record.
void write_history(const fs::path& path, const std::vector<dnn::EpochStats>& hist) {
  std::ofstream os(path);
  if (!os) raise(errc::io_error, "cannot create " + path.string());
  os << "epoch,train_loss,train_acc,val_loss,val_acc,seconds\n";
  for (const auto& e : hist) {
    os << e.epoch << ',' << g17(e.train_loss) << ',' << g17(e.train_acc) << ','
       << g17(e.val_loss) << ',' << g17(e.val_acc) << ',' << g17(e.seconds)
       << '\n';
  }
}

dnn::DenseNet make_net(int input_dim, const dnn::TrainConfig& tc, int n_classes) {
  std::vector<int> sizes;
  sizes.push_back(input_dim);
  sizes.insert(sizes.end(), tc.hidden.begin(), tc.hidden.end());
  sizes.push_back(n_classes);
  return dnn::DenseNet(sizes, tc.activation);
}

struct EvalArtifacts {
  metrics::Report report;
  std::vector<std::pair<std::string, double>> summary;  // metric,value rows
};

// Shared by the audio model and the raster baseline: report, confusion
// matrix, per-class ROC and PR curves, and a metric summary CSV. `prefix`
// distinguishes the two artifact families inside <out>/eval.
EvalArtifacts write_eval_suite(const fs::path& out, const std::string& prefix,
                               const dnn::DenseNet& net,
                               const dataset::FeatureSet& val) {
  fs::create_directories(out / "eval");
  const auto proba = net.predict_proba(val.features);
  const int k = static_cast<int>(val.class_names.size());

  std::vector<int> preds(proba.size());
  for (std::size_t i = 0; i < proba.size(); ++i)
    preds[i] = static_cast<int>(
        std::max_element(proba[i].begin(), proba[i].end()) - proba[i].begin());

  EvalArtifacts art;
  art.report = metrics::classification_report(val.labels, preds, val.class_names);

  {
    std::ofstream os(out / "eval" / (prefix + "report.txt"));
    os << metrics::format_report(art.report);
  }
  {
    std::ofstream os(out / "eval" / (prefix + "confusion.csv"));
    auto cm = metrics::confusion_matrix(val.labels, preds, k);
    os << "class";
    for (const auto& n : val.class_names) os << ',' << n;
    os << '\n';
    for (int i = 0; i < k; ++i) {
      os << val.class_names[i];
      for (int j = 0; j < k; ++j) os << ',' << cm[i][j];
      os << '\n';
    }
  }

  auto ovr = metrics::one_vs_rest_curves(val.labels, proba, k);
  for (int c = 0; c < k; ++c) {
    // A class without validation samples gets header-only curve files so
    // the artifact set stays uniform across runs.
    {
      std::ofstream os(out / "eval" / (prefix + "roc_" + val.class_names[c] + ".csv"));
      os << "threshold,fpr,tpr\n";
      if (ovr.defined[c]) {
        const auto& roc = ovr.roc[c];
        for (std::size_t i = 0; i < roc.fpr.size(); ++i)
          os << g17(roc.thresholds[i]) << ',' << g17(roc.fpr[i]) << ','
             << g17(roc.tpr[i]) << '\n';
      }
    }
    {
      std::ofstream os(out / "eval" / (prefix + "pr_" + val.class_names[c] + ".csv"));
      os << "threshold,recall,precision\n";
      if (ovr.defined[c]) {
        const auto& pr = ovr.pr[c];
        for (std::size_t i = 0; i < pr.recall.size(); ++i)
          os << g17(pr.thresholds[i]) << ',' << g17(pr.recall[i]) << ','
             << g17(pr.precision[i]) << '\n';
      }
    }
  }

  art.summary = {
      {"accuracy", art.report.accuracy},
      {"macro_precision", art.report.macro_precision},
      {"macro_recall", art.report.macro_recall},
      {"macro_f1", art.report.macro_f1},
      {"weighted_f1", art.report.weighted_f1},
      {"mean_roc_auc", ovr.mean_auc},
      {"mean_average_precision", ovr.mean_average_precision},
  };
  {
    std::ofstream os(out / "eval" / (prefix + "metrics.csv"));
    os << "metric,value\n";
    for (const auto& [name, value] : art.summary)
      os << name << ',' << g17(value) << '\n';
  }
  return art;
}

// TrainConfig fields shared by the "train" and "baseline" sections.
void fetch_train_fields(const json& t, dnn::TrainConfig& tc,
                        const std::string& section) {
  fetch(t, "hidden", tc.hidden, section);
  std::string name;
  if (t.contains("activation")) {
    fetch(t, "activation", name, section);
    tc.activation = dnn::parse_activation(name);
  }
  if (t.contains("init_mode")) {
    fetch(t, "init_mode", name, section);
    tc.init_mode = dnn::parse_init_mode(name);
  }
  if (t.contains("optimizer")) {
    fetch(t, "optimizer", name, section);
    tc.optimizer = dnn::parse_optimizer(name);
  }
  fetch(t, "learn_rate", tc.learn_rate, section);
  fetch(t, "momentum", tc.momentum, section);
  fetch(t, "dropout_rate", tc.dropout_rate, section);
  fetch(t, "weight_constraint", tc.weight_constraint, section);
  fetch(t, "batch_size", tc.batch_size, section);
  fetch(t, "epochs", tc.epochs, section);
  fetch(t, "seed", tc.seed, section);
}

constexpr std::initializer_list<const char*> kTrainKeys = {
    "hidden",       "activation", "init_mode",         "optimizer",
    "learn_rate",   "momentum",   "dropout_rate",      "weight_constraint",
    "batch_size",   "epochs",     "seed"};

std::vector<std::pair<std::string, double>> read_metric_rows(const fs::path& path) {
  std::ifstream is(path);
  if (!is)
    raise(errc::missing_artifact,
          path.string() + " not found; run the eval stage first");
  std::string line;
  if (!std::getline(is, line) || line != "metric,value")
    raise(errc::malformed_csv, path.string() + ": bad header");
  std::vector<std::pair<std::string, double>> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      raise(errc::malformed_csv, path.string() + ": bad row '" + line + "'");
    try {
      rows.emplace_back(line.substr(0, comma), std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      raise(errc::malformed_csv, path.string() + ": bad value in '" + line + "'");
    }
  }
  return rows;
}

}  // namespace

PipelineConfig load_config(const fs::path& path) {
  std::ifstream is(path);
  if (!is) raise(errc::file_not_found, "cannot open config " + path.string());
  json j;
  try {
    is >> j;
  } catch (const json::exception& e) {
    raise(errc::invalid_config,
          path.string() + ": JSON parse failure: " + e.what());
  }
  if (!j.is_object())
    raise(errc::invalid_config, path.string() + ": top level must be an object");
  check_keys(j,
             {"manifest", "out_dir", "seed", "encode", "mfcc", "train",
              "baseline", "grid"},
             "config");

  PipelineConfig cfg;
  std::string manifest_str, out_str;
  fetch(j, "manifest", manifest_str, "config");
  fetch(j, "out_dir", out_str, "config");
  if (!manifest_str.empty()) {
    fs::path m = manifest_str;
    cfg.manifest = m.is_absolute() ? m : path.parent_path() / m;
  }
  if (!out_str.empty()) cfg.out_dir = out_str;

  // The top-level seed covers both training arms; a seed inside "train" or
  // "baseline" overrides it for that arm, and --seed overrides everything.
  if (j.contains("seed")) {
    std::uint64_t seed = 0;
    fetch(j, "seed", seed, "config");
    cfg.train.seed = seed;
    cfg.baseline.train.seed = seed;
  }

  if (j.contains("encode")) {
    const json& e = j.at("encode");
    check_keys(e,
               {"rows", "cols", "frame_seconds", "f_min", "f_max",
                "sample_rate", "peak"},
               "encode");
    fetch(e, "rows", cfg.encode.rows, "encode");
    fetch(e, "cols", cfg.encode.cols, "encode");
    fetch(e, "frame_seconds", cfg.encode.frame_seconds, "encode");
    fetch(e, "f_min", cfg.encode.f_min, "encode");
    fetch(e, "f_max", cfg.encode.f_max, "encode");
    fetch(e, "sample_rate", cfg.encode.sample_rate, "encode");
    fetch(e, "peak", cfg.encode.peak, "encode");
  }

  if (j.contains("mfcc")) {
    const json& m = j.at("mfcc");
    check_keys(m,
               {"n_fft", "hop", "n_mels", "n_coeffs", "target_dim", "fmin",
                "fmax"},
               "mfcc");
    fetch(m, "n_fft", cfg.mfcc.n_fft, "mfcc");
    fetch(m, "hop", cfg.mfcc.hop, "mfcc");
    fetch(m, "n_mels", cfg.mfcc.n_mels, "mfcc");
    fetch(m, "n_coeffs", cfg.mfcc.n_coeffs, "mfcc");
    fetch(m, "target_dim", cfg.mfcc.target_dim, "mfcc");
    fetch(m, "fmin", cfg.mfcc.fmin, "mfcc");
    fetch(m, "fmax", cfg.mfcc.fmax, "mfcc");
  }

  if (j.contains("train")) {
    const json& t = j.at("train");
    check_keys(t, kTrainKeys, "train");
    fetch_train_fields(t, cfg.train, "train");
  }

  if (j.contains("baseline")) {
    const json& b = j.at("baseline");
    std::initializer_list<const char*> keys = {
        "size",        "hidden",     "activation",        "init_mode",
        "optimizer",   "learn_rate", "momentum",          "dropout_rate",
        "weight_constraint", "batch_size", "epochs",      "seed"};
    check_keys(b, keys, "baseline");
    fetch(b, "size", cfg.baseline.size, "baseline");
    fetch_train_fields(b, cfg.baseline.train, "baseline");
  }

  if (j.contains("grid")) {
    const json& g = j.at("grid");
    check_keys(g,
               {"batch_size", "epochs", "optimizer", "learn_rate", "momentum",
                "init_mode", "activation", "dropout_rate", "weight_constraint",
                "neurons"},
               "grid");
    // An omitted axis later collapses to the base config's value; writing
    // an explicitly empty list is almost certainly a mistake.
    for (auto it = g.begin(); it != g.end(); ++it)
      if (it.value().is_array() && it.value().empty())
        raise(errc::invalid_config, "empty axis '" + it.key() + "' in grid");
    fetch(g, "batch_size", cfg.grid.batch_size, "grid");
    fetch(g, "epochs", cfg.grid.epochs, "grid");
    fetch_enum_list(g, "optimizer", cfg.grid.optimizer, dnn::parse_optimizer,
                    "grid");
    fetch(g, "learn_rate", cfg.grid.learn_rate, "grid");
    fetch(g, "momentum", cfg.grid.momentum, "grid");
    fetch_enum_list(g, "init_mode", cfg.grid.init_mode, dnn::parse_init_mode,
                    "grid");
    fetch_enum_list(g, "activation", cfg.grid.activation,
                    dnn::parse_activation, "grid");
    fetch(g, "dropout_rate", cfg.grid.dropout_rate, "grid");
    fetch(g, "weight_constraint", cfg.grid.weight_constraint, "grid");
    fetch(g, "neurons", cfg.grid.neurons, "grid");
  }
  return cfg;
}

double cmd_encode(const PipelineConfig& cfg, const StageOptions& opt) {
  Timer timer;
  const fs::path out = stage_out(cfg, opt);
  auto manifest = dataset::load_manifest(require_manifest(cfg));

  // Directories first, then a per-file fan-out; each entry writes only its
  // own outputs, so order never matters.
  for (const auto& entry : manifest.entries) {
    fs::create_directories(out / "wav" / entry.label);
    if (opt.spectrograms) fs::create_directories(out / "spectrograms" / entry.label);
  }

  internal::parallel_for(manifest.entries.size(), [&](std::size_t i) {
    const auto& entry = manifest.entries[i];
    raster::GrayImage img =
        load_gray_resized(entry.path, cfg.encode.rows, cfg.encode.cols);
    std::vector<double> clip = sonify::encode(img, cfg.encode);

    fs::path wav = out / "wav" / entry.label / (entry.path.stem().string() + ".wav");
    sonify::write_wav(clip, cfg.encode.sample_rate, wav);

    if (opt.spectrograms) {
      auto mel = dsp::mel_spectrogram_db(clip, cfg.encode.sample_rate, cfg.mfcc);
      fs::path pgm = out / "spectrograms" / entry.label /
                     (entry.path.stem().string() + ".pgm");
      raster::write_pgm(render_mel(mel), pgm);
    }
  });

  double secs = timer.stop();
  write_timing(out, "encode", secs);
  return secs;
}

double cmd_featurize(const PipelineConfig& cfg, const StageOptions& opt) {
  Timer timer;
  const fs::path out = stage_out(cfg, opt);
  auto manifest = dataset::load_manifest(require_manifest(cfg));

  fs::create_directories(out / "features");
  for (const std::string split : {"train", "val"}) {
    auto fset = dataset::build_features(manifest, split, cfg.encode, cfg.mfcc);
    dataset::save_features(fset, out / "features" / (split + ".camf"));
  }

  double secs = timer.stop();
  write_timing(out, "featurize", secs);
  return secs;
}

double cmd_train(const PipelineConfig& cfg, const StageOptions& opt) {
  Timer timer;
  const fs::path out = stage_out(cfg, opt);
  auto train_set = require_features(out, "train");
  auto val_set = require_features(out, "val");

  dnn::TrainConfig tc = effective_train(cfg, opt);
  dnn::DenseNet net = make_net(static_cast<int>(train_set.features[0].size()),
                               tc, static_cast<int>(train_set.class_names.size()));
  dnn::TrainResult result = dnn::train(net, tc, train_set.features,
                                       train_set.labels, val_set.features,
                                       val_set.labels);

  fs::create_directories(out / "model");
  net.save(out / "model" / "audio.camn");
  write_history(out / "model" / "audio_history.csv", result.history);

  double secs = timer.stop();
  write_timing(out, "train", secs);
  return secs;
}

double cmd_grid(const PipelineConfig& cfg, const StageOptions& opt) {
  Timer timer;
  const fs::path out = stage_out(cfg, opt);
  auto train_set = require_features(out, "train");
  auto val_set = require_features(out, "val");

  dnn::TrainConfig tc = effective_train(cfg, opt);

  // Axes the config left out become singletons holding the base value, so
  // the search space only grows along the axes the user actually listed.
  dnn::GridAxes axes = cfg.grid;
  if (axes.batch_size.empty()) axes.batch_size = {tc.batch_size};
  if (axes.epochs.empty()) axes.epochs = {tc.epochs};
  if (axes.optimizer.empty()) axes.optimizer = {tc.optimizer};
  if (axes.learn_rate.empty()) axes.learn_rate = {tc.learn_rate};
  if (axes.momentum.empty()) axes.momentum = {tc.momentum};
  if (axes.init_mode.empty()) axes.init_mode = {tc.init_mode};
  if (axes.activation.empty()) axes.activation = {tc.activation};
  if (axes.dropout_rate.empty()) axes.dropout_rate = {tc.dropout_rate};
  if (axes.weight_constraint.empty())
    axes.weight_constraint = {tc.weight_constraint};
  if (axes.neurons.empty())
    axes.neurons = {tc.hidden.empty() ? 0 : tc.hidden[0]};

  dnn::GridResult gr = dnn::grid_search(axes, tc, train_set.features,
                                        train_set.labels, val_set.features,
                                        val_set.labels);

  fs::create_directories(out / "model");
  fs::create_directories(out / "timings");
  std::ofstream os(out / "model" / "grid_search.csv");
  std::ofstream ts(out / "timings" / "grid_points.csv");
  if (!os || !ts) raise(errc::io_error, "cannot create grid search outputs");
  os << "batch_size,epochs,optimizer,learn_rate,momentum,init_mode,activation,"
        "dropout_rate,weight_constraint,neurons,val_acc,val_loss,best\n";
  ts << "index,seconds,formatted\n";
  for (std::size_t i = 0; i < gr.points.size(); ++i) {
    const auto& p = gr.points[i];
    os << p.config.batch_size << ',' << p.config.epochs << ','
       << dnn::to_string(p.config.optimizer) << ',' << g17(p.config.learn_rate)
       << ',' << g17(p.config.momentum) << ','
       << dnn::to_string(p.config.init_mode) << ','
       << dnn::to_string(p.config.activation) << ','
       << g17(p.config.dropout_rate) << ',' << g17(p.config.weight_constraint)
       << ',' << (p.config.hidden.empty() ? 0 : p.config.hidden[0]) << ','
       << g17(p.val_acc) << ',' << g17(p.val_loss) << ','
       << (i == gr.best_index ? 1 : 0) << '\n';
    ts << i << ',' << g17(p.seconds) << ','
       << metrics::format_duration(p.seconds) << '\n';
  }

  // The winner is retrained from the same seed and shipped as the model, so
  // a grid run leaves the same artifacts behind as a plain train run.
  const dnn::TrainConfig best = gr.points[gr.best_index].config;
  dnn::DenseNet net = make_net(static_cast<int>(train_set.features[0].size()),
                               best, static_cast<int>(train_set.class_names.size()));
  dnn::TrainResult result = dnn::train(net, best, train_set.features,
                                       train_set.labels, val_set.features,
                                       val_set.labels);
  net.save(out / "model" / "audio.camn");
  write_history(out / "model" / "audio_history.csv", result.history);

  double secs = timer.stop();
  write_timing(out, "grid", secs);
  return secs;
}

double cmd_eval(const PipelineConfig& cfg, const StageOptions& opt) {
  Timer timer;
  const fs::path out = stage_out(cfg, opt);
  auto val_set = require_features(out, "val");
  dnn::DenseNet net = require_model(out, "audio.camn");

  write_eval_suite(out, "", net, val_set);

  // 2D and 3D principal-component projections of the validation descriptors.
  for (int k : {2, 3}) {
    auto p = dataset::pca(val_set.features, k);
    std::ofstream os(out / "eval" / ("pca_k" + std::to_string(k) + ".csv"));
    os << "label";
    for (int c = 1; c <= k; ++c) os << ",pc" << c;
    os << '\n';
    for (std::size_t i = 0; i < p.projected.size(); ++i) {
      os << val_set.class_names[val_set.labels[i]];
      for (int c = 0; c < k; ++c) os << ',' << g17(p.projected[i][c]);
      os << '\n';
    }
  }

  double secs = timer.stop();
  write_timing(out, "eval", secs);
  return secs;
}

double cmd_baseline(const PipelineConfig& cfg, const StageOptions& opt) {
  Timer timer;
  const fs::path out = stage_out(cfg, opt);
  auto manifest = dataset::load_manifest(require_manifest(cfg));

  const int size = cfg.baseline.size;
  auto train_set = dataset::build_pixel_features(manifest, "train", size, size);
  auto val_set = dataset::build_pixel_features(manifest, "val", size, size);

  dnn::TrainConfig tc = effective_baseline(cfg, opt);
  dnn::DenseNet net = make_net(static_cast<int>(train_set.features[0].size()),
                               tc, static_cast<int>(train_set.class_names.size()));
  dnn::TrainResult result = dnn::train(net, tc, train_set.features,
                                       train_set.labels, val_set.features,
                                       val_set.labels);

  fs::create_directories(out / "model");
  net.save(out / "model" / "baseline.camn");
  write_history(out / "model" / "baseline_history.csv", result.history);
  write_eval_suite(out, "baseline_", net, val_set);

  double secs = timer.stop();
  write_timing(out, "baseline", secs);
  return secs;
}

double cmd_compare(const PipelineConfig& cfg, const StageOptions& opt) {
  Timer timer;
  const fs::path out = stage_out(cfg, opt);

  auto audio = read_metric_rows(out / "eval" / "metrics.csv");
  auto baseline = read_metric_rows(out / "eval" / "baseline_metrics.csv");
  double audio_secs = read_timing(out, "train");
  double baseline_secs = read_timing(out, "baseline");
  double ratio = audio_secs > 0.0 ? baseline_secs / audio_secs : 0.0;

  std::map<std::string, double> baseline_map(baseline.begin(), baseline.end());

  fs::create_directories(out / "compare");
  {
    std::ofstream os(out / "compare" / "summary.csv");
    if (!os) raise(errc::io_error, "cannot create compare summary");
    os << "metric,audio,baseline\n";
    for (const auto& [name, value] : audio) {
      auto it = baseline_map.find(name);
      if (it == baseline_map.end())
        raise(errc::payload_mismatch,
              "baseline metrics are missing '" + name + "'");
      os << name << ',' << g17(value) << ',' << g17(it->second) << '\n';
    }
    os << "train_seconds," << g17(audio_secs) << ',' << g17(baseline_secs)
       << '\n';
    os << "speed_ratio," << g17(ratio) << ',' << g17(1.0) << '\n';
  }
  {
    std::ofstream os(out / "compare" / "summary.txt");
    if (!os) raise(errc::io_error, "cannot create compare summary");
    os << "audio pipeline vs raster baseline\n\n";
    char row[160];
    std::snprintf(row, sizeof(row), "%-24s %10s %10s %10s\n", "metric", "audio",
                  "baseline", "delta");
    os << row;
    for (const auto& [name, value] : audio) {
      double b = baseline_map.at(name);
      std::snprintf(row, sizeof(row), "%-24s %10.4f %10.4f %10s\n",
                    name.c_str(), value, b, fmt2_signed(value - b).c_str());
      os << row;
    }
    os << '\n';
    os << "training time (audio)    " << metrics::format_duration(audio_secs)
       << '\n';
    os << "training time (baseline) " << metrics::format_duration(baseline_secs)
       << '\n';
    std::snprintf(row, sizeof(row), "speed ratio (baseline/audio) %.2f\n",
                  ratio);
    os << row;
  }

  double secs = timer.stop();
  write_timing(out, "compare", secs);
  return secs;
}

}  // namespace camocodec::pipeline
