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

#include "camocodec/dataset.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "binio.hpp"
#include "camocodec/error.hpp"
#include "camocodec/numeric.hpp"
#include "camocodec/raster.hpp"
#include "parallel.hpp"

namespace camocodec::dataset {
namespace {

constexpr std::uint32_t kFeatureVersion = 1;

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

int class_index(const std::vector<std::string>& names, const std::string& label) {
  auto it = std::find(names.begin(), names.end(), label);
  if (it == names.end())
    raise(errc::invalid_argument, "unknown label " + label);
  return static_cast<int>(it - names.begin());
}

using internal::parallel_for;

std::vector<const ManifestEntry*> select_split(const Manifest& manifest,
                                               const std::string& split) {
  if (split != "train" && split != "val")
    raise(errc::unknown_split, "split must be 'train' or 'val', got '" + split + "'");
  std::vector<const ManifestEntry*> out;
  for (const auto& e : manifest.entries)
    if (e.split == split) out.push_back(&e);
  if (out.empty())
    raise(errc::unknown_split, "manifest has no '" + split + "' entries");
  return out;
}

raster::GrayImage load_gray_resized(const std::filesystem::path& path, int rows,
                                    int cols) {
  raster::RasterImage raw = raster::load_image(path);
  raster::GrayImage gray = raster::to_grayscale(raw);
  if (gray.height == rows && gray.width == cols) return gray;
  return raster::resize_bilinear(gray, rows, cols);
}

}  // namespace

Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) raise(errc::file_not_found, "cannot open manifest " + path.string());

  std::string line;
  if (!std::getline(is, line))
    raise(errc::malformed_csv, path.string() + ": empty manifest");
  {
    auto head = split_csv_line(line);
    if (head != std::vector<std::string>{"path", "label", "split"})
      raise(errc::malformed_csv,
            path.string() + ": header must be 'path,label,split'");
  }

  Manifest manifest;
  const std::filesystem::path base = path.parent_path();
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 3)
      raise(errc::malformed_csv, path.string() + ":" + std::to_string(line_no) +
                                     ": expected 3 fields, got " +
                                     std::to_string(fields.size()));
    ManifestEntry e;
    std::filesystem::path img = fields[0];
    e.path = img.is_absolute() ? img : base / img;
    e.label = fields[1];
    e.split = fields[2];
    if (e.label.empty())
      raise(errc::malformed_csv,
            path.string() + ":" + std::to_string(line_no) + ": empty label");
    if (e.split != "train" && e.split != "val")
      raise(errc::unknown_split, path.string() + ":" + std::to_string(line_no) +
                                     ": split '" + e.split +
                                     "' is not 'train' or 'val'");
    if (std::find(manifest.class_names.begin(), manifest.class_names.end(),
                  e.label) == manifest.class_names.end())
      manifest.class_names.push_back(e.label);
    manifest.entries.push_back(std::move(e));
  }
  if (manifest.entries.empty())
    raise(errc::malformed_csv, path.string() + ": no data rows");
  return manifest;
}

ClassBalance class_balance(const Manifest& manifest) {
  ClassBalance bal;
  bal.class_names = manifest.class_names;
  bal.train_counts.assign(bal.class_names.size(), 0);
  bal.val_counts.assign(bal.class_names.size(), 0);
  for (const auto& e : manifest.entries) {
    int c = class_index(bal.class_names, e.label);
    (e.split == "train" ? bal.train_counts : bal.val_counts)[c]++;
  }
  auto all_equal = [](const std::vector<int>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) ==
           v.end();
  };
  bal.balanced = all_equal(bal.train_counts) && all_equal(bal.val_counts);
  return bal;
}

FeatureSet build_features(const Manifest& manifest, const std::string& split,
                          const sonify::EncodeConfig& enc_cfg,
                          const dsp::MfccConfig& mfcc_cfg) {
  auto entries = select_split(manifest, split);

  FeatureSet fs;
  fs.class_names = manifest.class_names;
  fs.labels.resize(entries.size());
  fs.features.resize(entries.size());

  parallel_for(entries.size(), [&](std::size_t i) {
    const ManifestEntry& e = *entries[i];
    raster::GrayImage img = load_gray_resized(e.path, enc_cfg.rows, enc_cfg.cols);
    std::vector<double> clip = sonify::encode(img, enc_cfg);
    fs.features[i] = dsp::mfcc_descriptor(clip, enc_cfg.sample_rate, mfcc_cfg);
    fs.labels[i] = class_index(fs.class_names, e.label);
  });
  return fs;
}

FeatureSet build_pixel_features(const Manifest& manifest, const std::string& split,
                                int rows, int cols) {
  auto entries = select_split(manifest, split);

  FeatureSet fs;
  fs.class_names = manifest.class_names;
  fs.labels.resize(entries.size());
  fs.features.resize(entries.size());

  parallel_for(entries.size(), [&](std::size_t i) {
    const ManifestEntry& e = *entries[i];
    raster::GrayImage img = load_gray_resized(e.path, rows, cols);
    fs.features[i] = std::move(img.data);
    fs.labels[i] = class_index(fs.class_names, e.label);
  });
  return fs;
}

void save_features(const FeatureSet& fs, const std::filesystem::path& path) {
  if (fs.labels.size() != fs.features.size())
    raise(errc::dimension_mismatch, "labels and features differ in length");
  const std::size_t dim = fs.features.empty() ? 0 : fs.features[0].size();
  for (const auto& f : fs.features)
    if (f.size() != dim)
      raise(errc::dimension_mismatch, "feature rows have mixed dimensions");

  std::ofstream os(path, std::ios::binary);
  if (!os) raise(errc::io_error, "cannot create " + path.string());

  os.write("CAMF", 4);
  binio::write_le<std::uint32_t>(os, kFeatureVersion);
  binio::write_le<std::uint64_t>(os, fs.features.size());
  binio::write_le<std::uint64_t>(os, dim);
  binio::write_le<std::uint32_t>(os, static_cast<std::uint32_t>(fs.class_names.size()));
  for (const auto& name : fs.class_names) {
    binio::write_le<std::uint32_t>(os, static_cast<std::uint32_t>(name.size()));
    os.write(name.data(), static_cast<std::streamsize>(name.size()));
  }
  for (int label : fs.labels)
    binio::write_le<std::uint32_t>(os, static_cast<std::uint32_t>(label));
  for (const auto& fvec : fs.features)
    for (double v : fvec) binio::write_le<double>(os, v);
  if (!os) raise(errc::io_error, "short write to " + path.string());
}

FeatureSet load_features(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) raise(errc::file_not_found, "cannot open " + path.string());

  char magic[4];
  is.read(magic, 4);
  if (!is || std::string(magic, 4) != "CAMF")
    raise(errc::bad_magic, path.string() + ": not a feature file");
  std::uint32_t version = binio::read_le<std::uint32_t>(is, "version");
  if (version != kFeatureVersion)
    raise(errc::unsupported_format,
          path.string() + ": feature version " + std::to_string(version));

  const std::uint64_t n = binio::read_le<std::uint64_t>(is, "sample count");
  const std::uint64_t dim = binio::read_le<std::uint64_t>(is, "dimension");
  if (n > 0 && dim == 0)
    raise(errc::unsupported_format, path.string() + ": zero-dimensional features");
  const std::uint32_t k = binio::read_le<std::uint32_t>(is, "class count");

  FeatureSet fs;
  fs.class_names.resize(k);
  for (std::uint32_t c = 0; c < k; ++c) {
    std::uint32_t len = binio::read_le<std::uint32_t>(is, "class name length");
    std::string name(len, '\0');
    is.read(name.data(), len);
    if (!is) raise(errc::truncated, path.string() + ": class name cut short");
    fs.class_names[c] = std::move(name);
  }

  fs.labels.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint32_t label = binio::read_le<std::uint32_t>(is, "label");
    if (label >= k)
      raise(errc::unsupported_format, path.string() + ": label out of range");
    fs.labels[i] = static_cast<int>(label);
  }

  fs.features.assign(n, std::vector<double>(dim));
  for (auto& fvec : fs.features)
    for (double& v : fvec) v = binio::read_le<double>(is, "feature value");
  return fs;
}

PcaResult pca(const std::vector<std::vector<double>>& rows, int k) {
  const std::size_t n = rows.size();
  if (n < 2) raise(errc::invalid_argument, "pca needs at least two samples");
  const std::size_t dim = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != dim)
      raise(errc::dimension_mismatch, "pca rows have mixed dimensions");
  if (k < 1 || static_cast<std::size_t>(k) > std::min(n, dim))
    raise(errc::invalid_argument, "pca component count out of range");

  Eigen::MatrixXd x(n, dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < dim; ++j) x(i, j) = rows[i][j];

  Eigen::RowVectorXd mean = x.colwise().mean();
  x.rowwise() -= mean;

  Eigen::BDCSVD<Eigen::MatrixXd> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();

  double total_var = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    total_var += sv(i) * sv(i) / static_cast<double>(n - 1);

  PcaResult result;
  result.mean.assign(mean.data(), mean.data() + dim);
  result.components.resize(k);
  result.explained_variance.resize(k);
  result.explained_variance_ratio.resize(k);

  Eigen::MatrixXd comps = svd.matrixV().leftCols(k).transpose();  // k x dim
  for (int c = 0; c < k; ++c) {
    // Deterministic orientation: the largest-magnitude coordinate points up.
    Eigen::Index arg = 0;
    comps.row(c).cwiseAbs().maxCoeff(&arg);
    if (comps(c, arg) < 0.0) comps.row(c) = -comps.row(c);

    Eigen::RowVectorXd row = comps.row(c);
    result.components[c].assign(row.data(), row.data() + dim);

    double var = sv(c) * sv(c) / static_cast<double>(n - 1);
    result.explained_variance[c] = var;
    result.explained_variance_ratio[c] = total_var > 0.0 ? var / total_var : 0.0;
  }

  Eigen::MatrixXd proj = x * comps.transpose();  // n x k
  result.projected.assign(n, std::vector<double>(k));
  for (std::size_t i = 0; i < n; ++i)
    for (int c = 0; c < k; ++c) result.projected[i][c] = proj(i, c);
  return result;
}

std::vector<std::vector<double>> pca_transform(
    const PcaResult& model, const std::vector<std::vector<double>>& rows) {
  const std::size_t dim = model.mean.size();
  const std::size_t k = model.components.size();
  std::vector<std::vector<double>> out(rows.size(), std::vector<double>(k));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim)
      raise(errc::dimension_mismatch, "pca_transform row dimension mismatch");
    for (std::size_t c = 0; c < k; ++c) {
      double acc = 0.0;
      for (std::size_t j = 0; j < dim; ++j)
        acc += (rows[i][j] - model.mean[j]) * model.components[c][j];
      out[i][c] = acc;
    }
  }
  return out;
}

}  // namespace camocodec::dataset
