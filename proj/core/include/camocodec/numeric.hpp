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

#include <Eigen/Core>
#include <cmath>
#include <span>

namespace camocodec {

// Row-major so matrices serialize/deserialize as flat row-major float64.
using RowMatrixXd =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Pearson correlation; 0 when either side has zero variance (the degenerate
// convention used by roundtrip_fidelity).
inline double pearson_correlation(std::span<const double> a,
                                  std::span<const double> b) {
  const std::size_t n = a.size();
  if (n == 0 || n != b.size()) return 0.0;
  // An exactly constant side has zero variance even when its rounded mean
  // does not reproduce the common value bit for bit.
  bool const_a = true, const_b = true;
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const_a = const_a && a[i] == a[0];
    const_b = const_b && b[i] == b[0];
    ma += a[i];
    mb += b[i];
  }
  if (const_a || const_b) return 0.0;
  ma /= static_cast<double>(n);
  mb /= static_cast<double>(n);
  double saa = 0.0, sbb = 0.0, sab = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    saa += da * da;
    sbb += db * db;
    sab += da * db;
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace camocodec
