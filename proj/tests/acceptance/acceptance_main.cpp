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

// Release gate. Each criterion prints exactly one PASS/FAIL line; the
// process exits non-zero when any selected criterion fails. An optional
// argument limits the run to one criterion number.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "camocodec/dataset.hpp"
#include "camocodec/dnn.hpp"
#include "camocodec/dsp.hpp"
#include "camocodec/metrics.hpp"
#include "camocodec/pipeline.hpp"
#include "camocodec/raster.hpp"
#include "camocodec/rng.hpp"
#include "camocodec/sonify.hpp"
#include "camocodec/synthetic.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using camocodec::SeededRng;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; the first few distinct messages become the FAIL detail.
struct Checker {
  bool ok = true;
  std::string notes;
  int reported = 0;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (reported < 4) {
      if (!notes.empty()) notes += "; ";
      notes += what;
    } else if (reported == 4) {
      notes += "; ...";
    }
    ++reported;
  }

  Outcome done(const std::string& success_detail) const {
    return {ok, ok ? success_detail : notes};
  }
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. The derived f1 and average cells of the reference result tables follow
//    from their precision/recall cells through the report formulas.

Outcome criterion_1() {
  struct Row {
    double p, r, f1;
  };
  struct Table {
    std::vector<Row> rows;      // equal per-class support
    double accuracy;
    double macro_p, macro_r, macro_f1;
    double weighted_p, weighted_r, weighted_f1;
  };
  const std::vector<Table> tables = {
      {{{0.93, 0.85, 0.89}, {0.95, 0.95, 0.95}, {0.88, 0.96, 0.92}},
       0.92, 0.92, 0.92, 0.92, 0.92, 0.92, 0.92},
      {{{0.86, 0.82, 0.84}, {0.84, 0.91, 0.87}, {0.91, 0.88, 0.89}},
       0.87, 0.87, 0.87, 0.87, 0.87, 0.87, 0.87},
  };
  const double tol = 0.005;

  Checker ck;
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const Table& tab = tables[t];
    double sum_p = 0.0, sum_r = 0.0, sum_f1 = 0.0;
    for (std::size_t c = 0; c < tab.rows.size(); ++c) {
      const Row& row = tab.rows[c];
      const double f1 = camocodec::metrics::f1_score(row.p, row.r);
      ck.require(std::abs(f1 - row.f1) <= tol,
                 "table " + std::to_string(t + 1) + " row " +
                     std::to_string(c + 1) + ": recomputed f1 " + num(f1) +
                     " vs printed " + num(row.f1));
      sum_p += row.p;
      sum_r += row.r;
      sum_f1 += f1;
    }
    const double k = static_cast<double>(tab.rows.size());
    ck.require(std::abs(sum_p / k - tab.macro_p) <= tol,
               "table " + std::to_string(t + 1) + ": macro precision");
    ck.require(std::abs(sum_r / k - tab.macro_r) <= tol,
               "table " + std::to_string(t + 1) + ": macro recall");
    ck.require(std::abs(sum_f1 / k - tab.macro_f1) <= tol,
               "table " + std::to_string(t + 1) + ": macro f1");
    // Supports are equal, so the weighted averages must equal the macros.
    ck.require(std::abs(sum_p / k - tab.weighted_p) <= tol,
               "table " + std::to_string(t + 1) + ": weighted precision");
    ck.require(std::abs(sum_r / k - tab.weighted_r) <= tol,
               "table " + std::to_string(t + 1) + ": weighted recall");
    ck.require(std::abs(sum_f1 / k - tab.weighted_f1) <= tol,
               "table " + std::to_string(t + 1) + ": weighted f1");
    // With balanced supports the accuracy is the mean recall.
    ck.require(std::abs(sum_r / k - tab.accuracy) <= tol,
               "table " + std::to_string(t + 1) + ": accuracy vs mean recall");
  }
  return ck.done("every derived f1 and average lands within 0.005 of its printed value");
}

// ---------------------------------------------------------------------------
// 2. Wall-clock rendering of the two reference durations, byte for byte.

Outcome criterion_2() {
  Checker ck;
  const std::string a = camocodec::metrics::format_duration(844.589522);
  const std::string b = camocodec::metrics::format_duration(77.319555);
  ck.require(a == "0 : 14 : 04.589522", "844.589522 rendered as '" + a + "'");
  ck.require(b == "0 : 01 : 17.319555", "77.319555 rendered as '" + b + "'");
  return ck.done("both reference durations render byte-exactly");
}

// ---------------------------------------------------------------------------
// 3. The production MFCC pipeline against a naive reference implementation
//    (direct DFT, explicit triangles, direct DCT) on random clips.

Outcome criterion_3() {
  Checker ck;
  SeededRng rng(303);
  const double sr = 22050.0;
  const camocodec::dsp::MfccConfig cfg;  // production defaults
  const oracles::NaiveMfccParams ref;    // mirrors those defaults

  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t len = 221 + rng.index(22050 - 221 + 1);  // up to 1 s
    std::vector<double> clip(len);
    for (double& s : clip) s = rng.uniform(-1.0, 1.0);

    const auto fast = camocodec::dsp::mfcc_descriptor(clip, sr, cfg);
    const auto slow = oracles::naive_mfcc(clip, sr, ref);
    if (fast.size() != slow.size()) {
      ck.require(false, "descriptor length mismatch on trial " +
                            std::to_string(trial));
      continue;
    }
    for (std::size_t i = 0; i < fast.size(); ++i)
      worst = std::max(worst, std::abs(fast[i] - slow[i]));
  }
  ck.require(worst <= 1e-6,
             "worst absolute deviation from the naive reference: " + num(worst));
  return ck.done("20 random clips agree with the naive reference within 1e-6 (worst " +
                 num(worst) + ")");
}

// ---------------------------------------------------------------------------
// 4. Analytic gradients against central finite differences for every
//    activation on a 5-4-3 network.

Outcome criterion_4() {
  using camocodec::dnn::Activation;
  Checker ck;
  double worst = 0.0;

  for (Activation act : {Activation::relu, Activation::tanh_fn,
                         Activation::sigmoid, Activation::linear}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      SeededRng rng(seed * 131);
      std::vector<std::vector<double>> x(6, std::vector<double>(5));
      std::vector<int> y(6);
      for (auto& row : x)
        for (double& v : row) v = rng.uniform(-1.0, 1.0);
      for (int& label : y) label = static_cast<int>(rng.index(3));

      camocodec::dnn::DenseNet net({5, 4, 3}, act);
      net.init_weights(camocodec::dnn::InitMode::glorot_uniform, rng);
      auto params = net.parameters();
      for (double& v : params) v += rng.uniform(-0.1, 0.1);  // nonzero biases
      net.set_parameters(params);

      std::vector<double> grad;
      SeededRng unused(0);
      net.loss_and_gradient(x, y, 0.0, false, unused, grad);

      camocodec::dnn::DenseNet probe({5, 4, 3}, act);
      const auto fd = oracles::central_differences(
          [&](const std::vector<double>& p) {
            probe.set_parameters(p);
            return probe.evaluate(x, y).first;
          },
          params, 1e-5);

      for (std::size_t i = 0; i < grad.size(); ++i) {
        const double rel = std::abs(grad[i] - fd[i]) /
                           std::max({1.0, std::abs(grad[i]), std::abs(fd[i])});
        worst = std::max(worst, rel);
      }
    }
  }
  ck.require(worst <= 1e-4, "worst relative gradient error: " + num(worst));
  return ck.done(
      "four activations x ten seeds agree with finite differences (worst " +
      num(worst) + ")");
}

// ---------------------------------------------------------------------------
// 5. Audio round trip: random images survive encode + decode with high
//    pixel correlation.

Outcome criterion_5() {
  Checker ck;
  SeededRng rng(505);
  camocodec::sonify::EncodeConfig cfg;
  cfg.rows = 64;
  cfg.cols = 64;

  double worst = 1.0;
  for (int trial = 0; trial < 20; ++trial) {
    camocodec::raster::GrayImage img;
    img.width = img.height = 64;
    img.data.resize(64 * 64);
    for (double& v : img.data) v = rng.uniform();

    const double fid = camocodec::sonify::roundtrip_fidelity(img, cfg);
    worst = std::min(worst, fid);
    ck.require(fid >= 0.90, "trial " + std::to_string(trial) +
                                ": fidelity " + num(fid) + " < 0.90");
  }
  return ck.done("20 random 64x64 round trips, lowest fidelity " + num(worst));
}

// ---------------------------------------------------------------------------
// 6. Trapezoid ROC AUC equals the pair-counting statistic; the two exact
//    endpoint cases come out exactly.

Outcome criterion_6() {
  Checker ck;
  SeededRng rng(606);

  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.index(49);  // up to 50
    std::vector<int> labels(n);
    std::vector<double> scores(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = rng.uniform() < 0.5 ? 1 : 0;
      scores[i] = 0.1 * static_cast<double>(rng.index(10));  // force ties
    }
    labels[0] = 1;  // both classes present
    labels[n - 1] = 0;

    const auto roc = camocodec::metrics::roc_curve(labels, scores);
    const double mw = oracles::mann_whitney_auc(labels, scores);
    worst = std::max(worst, std::abs(roc.auc - mw));
  }
  ck.require(worst <= 1e-12,
             "worst |trapezoid - pair count| = " + num(worst));

  const std::vector<int> labels = {0, 0, 1, 1};
  const std::vector<double> perfect = {0.1, 0.2, 0.8, 0.9};
  const auto hi = camocodec::metrics::roc_curve(labels, perfect);
  ck.require(hi.auc == 1.0, "perfect ranking auc " + num(hi.auc) + " != 1.0");

  const std::vector<double> flat = {0.5, 0.5, 0.5, 0.5};
  const auto mid = camocodec::metrics::roc_curve(labels, flat);
  ck.require(mid.auc == 0.5, "all-tied auc " + num(mid.auc) + " != 0.5");

  return ck.done("200 random score sets match pair counting within 1e-12, "
                 "exact endpoints hold");
}

// ---------------------------------------------------------------------------
// 7. PCA against a covariance eigendecomposition oracle, plus full-rank
//    reconstruction.

Outcome criterion_7() {
  Checker ck;
  SeededRng rng(707);

  double worst_axis = 0.0, worst_rec = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + static_cast<int>(rng.index(19));        // up to 20
    const int n = d + 2 + static_cast<int>(rng.index(49 - d));  // up to 50
    std::vector<std::vector<double>> rows(n, std::vector<double>(d));
    for (auto& row : rows)
      for (double& v : row) v = rng.uniform(-3.0, 3.0);

    const auto p = camocodec::dataset::pca(rows, d);
    const auto eig = oracles::covariance_eigen(rows);

    for (int c = 0; c < d; ++c) {
      worst_axis = std::max(
          worst_axis, std::abs(p.explained_variance[c] - eig.values[c]));
      for (int j = 0; j < d; ++j)
        worst_axis = std::max(
            worst_axis, std::abs(p.components[c][j] - eig.vectors[c][j]));
    }

    for (int i = 0; i < n; ++i)
      for (int j = 0; j < d; ++j) {
        double rec = p.mean[j];
        for (int c = 0; c < d; ++c)
          rec += p.projected[i][c] * p.components[c][j];
        worst_rec = std::max(worst_rec, std::abs(rec - rows[i][j]));
      }
  }
  ck.require(worst_axis <= 1e-8,
             "worst axis/variance deviation from the eigen oracle: " +
                 num(worst_axis));
  ck.require(worst_rec <= 1e-8,
             "worst full-rank reconstruction error: " + num(worst_rec));
  return ck.done("20 random matrices match the eigen oracle (axes " +
                 num(worst_axis) + ", reconstruction " + num(worst_rec) + ")");
}

// ---------------------------------------------------------------------------
// 8. End-to-end on the shipped synthetic fixture with the default config.

Outcome criterion_8() {
  Checker ck;
  testing::TempDir tmp("acceptance-e2e");

  camocodec::synthetic::FixtureConfig fx;  // 3 classes, 60 + 20, 64x64
  camocodec::synthetic::write_fixture(fx, tmp / "data");

  camocodec::pipeline::PipelineConfig cfg;  // default encode/mfcc/train
  cfg.manifest = tmp / "data" / "manifest.csv";
  cfg.out_dir = tmp / "out";

  camocodec::pipeline::cmd_encode(cfg, {});
  camocodec::pipeline::cmd_featurize(cfg, {});
  camocodec::pipeline::cmd_train(cfg, {});
  camocodec::pipeline::cmd_eval(cfg, {});

  const fs::path out = cfg.out_dir;
  auto net = camocodec::dnn::DenseNet::load(out / "model/audio.camn");
  auto val = camocodec::dataset::load_features(out / "features/val.camf");
  const auto [loss, acc] = net.evaluate(val.features, val.labels);
  ck.require(acc >= 0.70, "validation accuracy " + num(acc) + " < 0.70");

  for (const char* rel :
       {"eval/report.txt", "eval/confusion.csv", "eval/metrics.csv",
        "eval/pca_k2.csv", "eval/pca_k3.csv"})
    ck.require(fs::exists(out / rel), std::string("missing artifact ") + rel);
  for (const auto& cls : camocodec::synthetic::class_names()) {
    ck.require(fs::exists(out / "eval" / ("roc_" + cls + ".csv")),
               "missing roc curve for " + cls);
    ck.require(fs::exists(out / "eval" / ("pr_" + cls + ".csv")),
               "missing pr curve for " + cls);
  }
  return ck.done("validation accuracy " + num(acc) +
                 ", evaluation artifacts all present");
}

// ---------------------------------------------------------------------------
// 9. Well-separated Gaussian blobs at full descriptor width.

struct BlobData {
  std::vector<std::vector<double>> x_train, x_val;
  std::vector<int> y_train, y_val;
};

BlobData make_blob_data() {
  const int dim = 1228;
  const double a = 6.0 / std::sqrt(2.0);  // pairwise mean distance 6 sigma
  SeededRng rng(99);
  BlobData d;
  auto sample = [&](int cls) {
    std::vector<double> row(dim);
    for (double& v : row) v = rng.normal(0.0, 1.0);
    row[cls] += a;
    return row;
  };
  for (int cls = 0; cls < 3; ++cls)
    for (int i = 0; i < 50; ++i) {
      d.x_train.push_back(sample(cls));
      d.y_train.push_back(cls);
    }
  for (int cls = 0; cls < 3; ++cls)
    for (int i = 0; i < 20; ++i) {
      d.x_val.push_back(sample(cls));
      d.y_val.push_back(cls);
    }
  return d;
}

Outcome criterion_9() {
  Checker ck;
  BlobData data = make_blob_data();

  camocodec::dnn::TrainConfig cfg;  // defaults: 512/128, adam, 50 epochs
  camocodec::dnn::DenseNet net({1228, 512, 128, 3}, cfg.activation);
  const auto result = camocodec::dnn::train(net, cfg, data.x_train, data.y_train,
                                            data.x_val, data.y_val);
  ck.require(result.final_val_acc >= 0.95,
             "validation accuracy " + num(result.final_val_acc) + " < 0.95");
  ck.require(result.history.size() == 50,
             "expected 50 epochs, got " + std::to_string(result.history.size()));
  return ck.done("validation accuracy " + num(result.final_val_acc) +
                 " after 50 epochs");
}

// ---------------------------------------------------------------------------
// 10. Rerunning the stochastic criteria with their seeds reproduces every
//     artifact bit for bit.

std::string strip_last_field(const std::string& line) {
  const auto pos = line.rfind(',');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

Outcome criterion_10() {
  Checker ck;

  // Round-trip workload: the encoded waveform and its WAV bytes.
  {
    testing::TempDir tmp("acceptance-det5");
    SeededRng rng(505);
    camocodec::sonify::EncodeConfig cfg;
    cfg.rows = 64;
    cfg.cols = 64;
    for (int trial = 0; trial < 3; ++trial) {
      camocodec::raster::GrayImage img;
      img.width = img.height = 64;
      img.data.resize(64 * 64);
      for (double& v : img.data) v = rng.uniform();

      const auto clip_a = camocodec::sonify::encode(img, cfg);
      const auto clip_b = camocodec::sonify::encode(img, cfg);
      ck.require(clip_a == clip_b, "encode is not sample-deterministic");

      const auto wav_a = tmp / ("a" + std::to_string(trial) + ".wav");
      const auto wav_b = tmp / ("b" + std::to_string(trial) + ".wav");
      camocodec::sonify::write_wav(clip_a, cfg.sample_rate, wav_a);
      camocodec::sonify::write_wav(clip_b, cfg.sample_rate, wav_b);
      ck.require(testing::read_file(wav_a) == testing::read_file(wav_b),
                 "wav bytes differ between reruns");
    }
  }

  // End-to-end workload: two full runs over one fixture.
  {
    testing::TempDir tmp("acceptance-det8");
    camocodec::synthetic::FixtureConfig fx;
    camocodec::synthetic::write_fixture(fx, tmp / "data");
    camocodec::synthetic::write_fixture(fx, tmp / "data2");
    ck.require(testing::read_file(tmp / "data/manifest.csv") ==
                   testing::read_file(tmp / "data2/manifest.csv"),
               "fixture manifests differ");

    camocodec::pipeline::PipelineConfig cfg;
    cfg.manifest = tmp / "data" / "manifest.csv";

    auto run = [&](const fs::path& out) {
      camocodec::pipeline::StageOptions opt;
      opt.out_dir = out;
      camocodec::pipeline::cmd_encode(cfg, opt);
      camocodec::pipeline::cmd_featurize(cfg, opt);
      camocodec::pipeline::cmd_train(cfg, opt);
      camocodec::pipeline::cmd_eval(cfg, opt);
    };
    run(tmp / "run_a");
    run(tmp / "run_b");

    for (const auto& entry :
         fs::recursive_directory_iterator(tmp / "run_a")) {
      if (!entry.is_regular_file()) continue;
      const std::string rel =
          fs::relative(entry.path(), tmp / "run_a").generic_string();
      if (rel.rfind("timings/", 0) == 0) continue;  // wall clock
      const fs::path other = tmp / "run_b" / rel;
      if (!fs::exists(other)) {
        ck.require(false, "second run lacks " + rel);
        continue;
      }
      if (rel == "model/audio_history.csv") {
        const auto a = testing::read_lines(entry.path());
        const auto b = testing::read_lines(other);
        bool same = a.size() == b.size();
        for (std::size_t i = 0; same && i < a.size(); ++i)
          same = strip_last_field(a[i]) == strip_last_field(b[i]);
        ck.require(same, "history rows differ outside the seconds column");
        continue;
      }
      ck.require(testing::read_file(entry.path()) == testing::read_file(other),
                 "artifact differs between reruns: " + rel);
    }
  }

  // Blob workload: identical parameters and identical serialized models.
  {
    testing::TempDir tmp("acceptance-det9");
    BlobData data = make_blob_data();
    camocodec::dnn::TrainConfig cfg;
    cfg.epochs = 5;  // determinism needs the stream, not the convergence

    camocodec::dnn::DenseNet net_a({1228, 512, 128, 3}, cfg.activation);
    camocodec::dnn::DenseNet net_b({1228, 512, 128, 3}, cfg.activation);
    const auto res_a = camocodec::dnn::train(net_a, cfg, data.x_train,
                                             data.y_train, data.x_val, data.y_val);
    const auto res_b = camocodec::dnn::train(net_b, cfg, data.x_train,
                                             data.y_train, data.x_val, data.y_val);
    ck.require(net_a.parameters() == net_b.parameters(),
               "trained blob parameters differ");
    ck.require(res_a.final_val_acc == res_b.final_val_acc,
               "blob validation accuracy differs");
    net_a.save(tmp / "a.camn");
    net_b.save(tmp / "b.camn");
    ck.require(testing::read_file(tmp / "a.camn") ==
                   testing::read_file(tmp / "b.camn"),
               "serialized blob models differ");
  }

  return ck.done("round-trip, end-to-end and blob workloads reproduce bit-identically");
}

// ---------------------------------------------------------------------------
// 11. Serialization: WAV quantization, feature and model round trips, and
//     the canonical silent-second file size.

Outcome criterion_11() {
  Checker ck;
  testing::TempDir tmp("acceptance-io");

  {
    SeededRng rng(1111);
    std::vector<double> samples(500);
    for (double& s : samples) s = rng.uniform(-1.0, 1.0);
    samples.push_back(1.0);
    samples.push_back(-1.0);
    samples.push_back(0.0);

    camocodec::sonify::write_wav(samples, 22050.0, tmp / "q.wav");
    const auto back = camocodec::sonify::read_wav(tmp / "q.wav");
    ck.require(back.sample_rate == 22050.0, "sample rate did not survive");
    bool exact = back.samples.size() == samples.size();
    for (std::size_t i = 0; exact && i < samples.size(); ++i) {
      long long q = std::llround(samples[i] * 32767.0);
      q = std::clamp(q, -32768LL, 32767LL);
      exact = back.samples[i] == static_cast<double>(q) / 32767.0;
    }
    ck.require(exact, "wav samples are not quantized-exact");
  }

  {
    SeededRng rng(1112);
    camocodec::dataset::FeatureSet fs_out;
    fs_out.class_names = {"north", "south", "east"};
    for (int i = 0; i < 9; ++i) {
      fs_out.labels.push_back(i % 3);
      std::vector<double> row(17);
      for (double& v : row) v = rng.uniform(-1e6, 1e6);
      fs_out.features.push_back(std::move(row));
    }
    camocodec::dataset::save_features(fs_out, tmp / "f.camf");
    const auto fs_in = camocodec::dataset::load_features(tmp / "f.camf");
    ck.require(fs_in.class_names == fs_out.class_names &&
                   fs_in.labels == fs_out.labels &&
                   fs_in.features == fs_out.features,
               "feature file round trip is not exact");
  }

  {
    SeededRng rng(1113);
    camocodec::dnn::DenseNet net({7, 5, 3},
                                 camocodec::dnn::Activation::sigmoid);
    net.init_weights(camocodec::dnn::InitMode::normal_small, rng);
    net.save(tmp / "m.camn");
    const auto back = camocodec::dnn::DenseNet::load(tmp / "m.camn");
    ck.require(back.sizes() == net.sizes() &&
                   back.activation() == net.activation() &&
                   back.parameters() == net.parameters(),
               "model round trip is not exact");
  }

  {
    const std::vector<double> silence(22050, 0.0);
    camocodec::sonify::write_wav(silence, 22050.0, tmp / "s.wav");
    const auto size = fs::file_size(tmp / "s.wav");
    ck.require(size == 44144, "silent second is " + std::to_string(size) +
                                  " bytes, expected 44144");
  }

  return ck.done("wav quantization, feature/model round trips and file size all exact");
}

// ---------------------------------------------------------------------------

struct Entry {
  int id;
  double budget_seconds;  // 0 = no budget enforced
  Outcome (*fn)();
};

const Entry kEntries[] = {
    {1, 1.0, criterion_1},    {2, 1.0, criterion_2},
    {3, 30.0, criterion_3},   {4, 10.0, criterion_4},
    {5, 60.0, criterion_5},   {6, 10.0, criterion_6},
    {7, 10.0, criterion_7},   {8, 600.0, criterion_8},
    {9, 60.0, criterion_9},   {10, 0.0, criterion_10},
    {11, 10.0, criterion_11},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 11) {
      std::fprintf(stderr, "usage: %s [criterion 1..11]\n", argv[0]);
      return 2;
    }
  }

  bool all_pass = true;
  for (const Entry& entry : kEntries) {
    if (only != 0 && entry.id != only) continue;

    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = entry.fn();
    } catch (const std::exception& e) {
      outcome = {false, std::string("unexpected exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();

    if (entry.budget_seconds > 0.0 && secs > entry.budget_seconds) {
      outcome.pass = false;
      outcome.detail += " [exceeded the " + num(entry.budget_seconds) +
                        " s budget]";
    }

    std::printf("criterion %d: %s  %s  (%.2f s)\n", entry.id,
                outcome.pass ? "PASS" : "FAIL", outcome.detail.c_str(), secs);
    std::fflush(stdout);
    all_pass = all_pass && outcome.pass;
  }
  return all_pass ? 0 : 1;
}
