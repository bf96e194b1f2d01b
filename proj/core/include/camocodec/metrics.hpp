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

#include <span>
#include <string>
#include <vector>

namespace camocodec::metrics {

// confusion[i][j] counts samples of true class i predicted as class j.
std::vector<std::vector<int>> confusion_matrix(std::span<const int> y_true,
                                               std::span<const int> y_pred,
                                               int n_classes);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  int support = 0;
  bool degenerate = false;  // some denominator was zero
};

struct Report {
  std::vector<std::string> class_names;
  std::vector<ClassMetrics> per_class;
  double accuracy = 0.0;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  double weighted_precision = 0.0;
  double weighted_recall = 0.0;
  double weighted_f1 = 0.0;
  int total_support = 0;
};

// Harmonic mean of precision and recall; 0 when both are 0.
double f1_score(double precision, double recall);

Report classification_report(std::span<const int> y_true,
                             std::span<const int> y_pred,
                             const std::vector<std::string>& class_names);

// Fixed-width text table, two decimals, one row per class plus accuracy and
// macro/weighted averages.
std::string format_report(const Report& report);

struct RocCurve {
  std::vector<double> fpr;         // starts at 0
  std::vector<double> tpr;         // starts at 0
  std::vector<double> thresholds;  // descending unique scores; leading +inf
  double auc = 0.0;
};

// Binary ROC via a descending sweep over unique score values; tied scores
// advance in a single step. AUC is the trapezoid integral of the curve.
RocCurve roc_curve(std::span<const int> labels, std::span<const double> scores);

struct PrCurve {
  std::vector<double> recall;     // starts at 0
  std::vector<double> precision;  // starts at 1
  std::vector<double> thresholds;
  double average_precision = 0.0;
};

// Binary precision/recall curve on the same sweep; AP is the step-function
// sum  sum_k (R_k - R_{k-1}) P_k.
PrCurve pr_curve(std::span<const int> labels, std::span<const double> scores);

struct OneVsRestCurves {
  std::vector<RocCurve> roc;      // indexed by class
  std::vector<PrCurve> pr;        // indexed by class
  std::vector<bool> defined;      // false when a class is absent from y_true
  double mean_auc = 0.0;          // means over defined classes only
  double mean_average_precision = 0.0;
};

// Per-class one-vs-rest curves from a probability matrix (n x n_classes).
// A class with no true samples cannot be swept; its slot is flagged
// undefined and skipped by the means, the remaining classes still get
// their curves.
OneVsRestCurves one_vs_rest_curves(std::span<const int> y_true,
                                   const std::vector<std::vector<double>>& probs,
                                   int n_classes);

// Wall-clock rendering used in run summaries: "H : MM : SS.UUUUUU" with
// microsecond fraction, e.g. 844.589522 s -> "0 : 14 : 04.589522".
std::string format_duration(double seconds);

}  // namespace camocodec::metrics
