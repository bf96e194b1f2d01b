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

#include "camocodec/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <sstream>

#include "camocodec/error.hpp"

namespace camocodec::metrics {
namespace {

// Two decimals, ties away from zero, so 0.885 renders as 0.89.
std::string fmt2(double x) {
  long long cents = std::llround(x * 100.0);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%lld.%02lld", cents < 0 ? "-" : "",
                std::llabs(cents) / 100, std::llabs(cents) % 100);
  return buf;
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

struct Sweep {
  std::vector<double> thresholds;  // descending unique scores
  std::vector<long> tp;            // cumulative at each threshold
  std::vector<long> fp;
  long n_pos = 0;
  long n_neg = 0;
};

// Walks scores in descending order, collapsing tied scores into one step.
Sweep sweep_scores(std::span<const int> labels, std::span<const double> scores) {
  if (labels.size() != scores.size())
    raise(errc::dimension_mismatch, "labels and scores differ in length");
  if (labels.empty())
    raise(errc::invalid_argument, "cannot rank an empty score set");

  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] > scores[b];
  });

  Sweep sw;
  for (int y : labels) (y != 0 ? sw.n_pos : sw.n_neg)++;

  long tp = 0, fp = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    (labels[order[i]] != 0 ? tp : fp)++;
    bool last_of_tie =
        i + 1 == order.size() || scores[order[i + 1]] != scores[order[i]];
    if (last_of_tie) {
      sw.thresholds.push_back(scores[order[i]]);
      sw.tp.push_back(tp);
      sw.fp.push_back(fp);
    }
  }
  return sw;
}

}  // namespace

std::vector<std::vector<int>> confusion_matrix(std::span<const int> y_true,
                                               std::span<const int> y_pred,
                                               int n_classes) {
  if (y_true.size() != y_pred.size())
    raise(errc::dimension_mismatch, "y_true and y_pred differ in length");
  std::vector<std::vector<int>> cm(n_classes, std::vector<int>(n_classes, 0));
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    int t = y_true[i], p = y_pred[i];
    if (t < 0 || t >= n_classes || p < 0 || p >= n_classes)
      raise(errc::invalid_argument, "label outside [0, n_classes)");
    cm[t][p]++;
  }
  return cm;
}

double f1_score(double precision, double recall) {
  const double pr = precision + recall;
  return pr > 0.0 ? 2.0 * precision * recall / pr : 0.0;
}

Report classification_report(std::span<const int> y_true,
                             std::span<const int> y_pred,
                             const std::vector<std::string>& class_names) {
  const int k = static_cast<int>(class_names.size());
  auto cm = confusion_matrix(y_true, y_pred, k);

  Report rep;
  rep.class_names = class_names;
  rep.per_class.resize(k);
  rep.total_support = static_cast<int>(y_true.size());

  int correct = 0;
  for (int c = 0; c < k; ++c) {
    long tp = cm[c][c];
    long pred_c = 0, true_c = 0;
    for (int j = 0; j < k; ++j) {
      pred_c += cm[j][c];
      true_c += cm[c][j];
    }
    correct += cm[c][c];

    ClassMetrics& m = rep.per_class[c];
    m.support = static_cast<int>(true_c);
    m.degenerate = pred_c == 0 || true_c == 0;
    m.precision = pred_c > 0 ? static_cast<double>(tp) / pred_c : 0.0;
    m.recall = true_c > 0 ? static_cast<double>(tp) / true_c : 0.0;
    m.f1 = f1_score(m.precision, m.recall);
    if (m.precision + m.recall == 0.0) m.degenerate = true;
  }

  rep.accuracy =
      rep.total_support > 0 ? static_cast<double>(correct) / rep.total_support : 0.0;
  for (int c = 0; c < k; ++c) {
    const ClassMetrics& m = rep.per_class[c];
    rep.macro_precision += m.precision / k;
    rep.macro_recall += m.recall / k;
    rep.macro_f1 += m.f1 / k;
    if (rep.total_support > 0) {
      double w = static_cast<double>(m.support) / rep.total_support;
      rep.weighted_precision += w * m.precision;
      rep.weighted_recall += w * m.recall;
      rep.weighted_f1 += w * m.f1;
    }
  }
  return rep;
}

std::string format_report(const Report& report) {
  std::size_t name_w = 12;
  for (const auto& n : report.class_names) name_w = std::max(name_w, n.size());
  const std::size_t col_w = 10;

  std::ostringstream os;
  os << std::string(name_w, ' ') << pad_left("precision", col_w)
     << pad_left("recall", col_w) << pad_left("f1-score", col_w)
     << pad_left("support", col_w) << "\n\n";

  auto row = [&](const std::string& name, const std::string& p,
                 const std::string& r, const std::string& f1, int support) {
    os << pad_left(name, name_w) << pad_left(p, col_w) << pad_left(r, col_w)
       << pad_left(f1, col_w) << pad_left(std::to_string(support), col_w)
       << "\n";
  };

  for (std::size_t c = 0; c < report.class_names.size(); ++c) {
    const ClassMetrics& m = report.per_class[c];
    row(report.class_names[c], fmt2(m.precision), fmt2(m.recall), fmt2(m.f1),
        m.support);
  }
  os << "\n";
  row("accuracy", "", "", fmt2(report.accuracy), report.total_support);
  row("macro avg", fmt2(report.macro_precision), fmt2(report.macro_recall),
      fmt2(report.macro_f1), report.total_support);
  row("weighted avg", fmt2(report.weighted_precision),
      fmt2(report.weighted_recall), fmt2(report.weighted_f1),
      report.total_support);
  return os.str();
}

RocCurve roc_curve(std::span<const int> labels, std::span<const double> scores) {
  Sweep sw = sweep_scores(labels, scores);
  if (sw.n_pos == 0 || sw.n_neg == 0)
    raise(errc::invalid_argument,
          "roc_curve needs at least one positive and one negative");

  RocCurve curve;
  curve.fpr.push_back(0.0);
  curve.tpr.push_back(0.0);
  curve.thresholds.push_back(std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < sw.thresholds.size(); ++i) {
    curve.fpr.push_back(static_cast<double>(sw.fp[i]) / sw.n_neg);
    curve.tpr.push_back(static_cast<double>(sw.tp[i]) / sw.n_pos);
    curve.thresholds.push_back(sw.thresholds[i]);
  }

  double auc = 0.0;
  for (std::size_t i = 1; i < curve.fpr.size(); ++i) {
    auc += (curve.fpr[i] - curve.fpr[i - 1]) *
           (curve.tpr[i] + curve.tpr[i - 1]) * 0.5;
  }
  curve.auc = auc;
  return curve;
}

PrCurve pr_curve(std::span<const int> labels, std::span<const double> scores) {
  Sweep sw = sweep_scores(labels, scores);
  if (sw.n_pos == 0)
    raise(errc::invalid_argument, "pr_curve needs at least one positive");

  PrCurve curve;
  curve.recall.push_back(0.0);
  curve.precision.push_back(1.0);
  curve.thresholds.push_back(std::numeric_limits<double>::infinity());

  double ap = 0.0;
  double prev_recall = 0.0;
  for (std::size_t i = 0; i < sw.thresholds.size(); ++i) {
    double recall = static_cast<double>(sw.tp[i]) / sw.n_pos;
    double precision = static_cast<double>(sw.tp[i]) / (sw.tp[i] + sw.fp[i]);
    curve.recall.push_back(recall);
    curve.precision.push_back(precision);
    curve.thresholds.push_back(sw.thresholds[i]);
    ap += (recall - prev_recall) * precision;
    prev_recall = recall;
  }
  curve.average_precision = ap;
  return curve;
}

OneVsRestCurves one_vs_rest_curves(std::span<const int> y_true,
                                   const std::vector<std::vector<double>>& probs,
                                   int n_classes) {
  if (y_true.size() != probs.size())
    raise(errc::dimension_mismatch, "labels and probability rows differ in length");
  if (n_classes < 2)
    raise(errc::invalid_argument, "one-vs-rest needs at least two classes");
  for (const auto& row : probs)
    if (row.size() != static_cast<std::size_t>(n_classes))
      raise(errc::dimension_mismatch, "probability row width != n_classes");

  OneVsRestCurves out;
  out.roc.resize(n_classes);
  out.pr.resize(n_classes);
  out.defined.assign(n_classes, false);

  std::vector<double> scores(y_true.size());
  std::vector<int> binary(y_true.size());
  int n_defined = 0;
  for (int c = 0; c < n_classes; ++c) {
    bool any_pos = false, any_neg = false;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
      binary[i] = y_true[i] == c ? 1 : 0;
      scores[i] = probs[i][c];
      (binary[i] ? any_pos : any_neg) = true;
    }
    // A class missing from y_true (or covering all of it) has no sweep.
    if (!any_pos || !any_neg) continue;
    out.roc[c] = roc_curve(binary, scores);
    out.pr[c] = pr_curve(binary, scores);
    out.defined[c] = true;
    out.mean_auc += out.roc[c].auc;
    out.mean_average_precision += out.pr[c].average_precision;
    ++n_defined;
  }
  if (n_defined > 0) {
    out.mean_auc /= n_defined;
    out.mean_average_precision /= n_defined;
  }
  return out;
}

std::string format_duration(double seconds) {
  long long total_us = std::llround(seconds * 1e6);
  if (total_us < 0)
    raise(errc::invalid_argument, "duration must be non-negative");
  long long h = total_us / 3'600'000'000LL;
  long long rem = total_us % 3'600'000'000LL;
  long long m = rem / 60'000'000LL;
  rem %= 60'000'000LL;
  long long s = rem / 1'000'000LL;
  long long us = rem % 1'000'000LL;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%lld : %02lld : %02lld.%06lld", h, m, s, us);
  return buf;
}

}  // namespace camocodec::metrics
