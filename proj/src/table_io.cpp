// Copyright 2026 The Authors.
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

#include "stack/table_io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "stack/errors.hpp"

namespace stack {
namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    const auto first = field.find_first_not_of(" \t\r");
    const auto last = field.find_last_not_of(" \t\r");
    out.push_back(first == std::string::npos ? std::string() : field.substr(first, last - first + 1));
  }
  return out;
}

template <typename T>
T parse_number(const std::string& text, std::size_t line_no) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw IoError("line " + std::to_string(line_no) + ": cannot parse '" + text + "'");
  }
  return value;
}

std::vector<std::vector<std::string>> read_rows(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("CSV is empty (a header line is required)");
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    rows.push_back(split_fields(line));
  }
  return rows;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

std::vector<int> load_labels_csv(std::istream& in) {
  const auto rows = read_rows(in);
  std::vector<int> labels;
  labels.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != 1) throw IoError("line " + std::to_string(r + 2) + ": expected one label column");
    const int v = parse_number<int>(rows[r][0], r + 2);
    if (v < 0) throw IoError("line " + std::to_string(r + 2) + ": labels must be non-negative");
    labels.push_back(v);
  }
  return labels;
}

std::vector<int> load_labels_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  return load_labels_csv(in);
}

void save_labels_csv(const std::vector<int>& labels, const std::filesystem::path& path) {
  auto out = open_output(path);
  out << "label\n";
  for (int v : labels) out << v << '\n';
}

Matrix load_features_csv(std::istream& in) {
  const auto rows = read_rows(in);
  if (rows.empty()) return Matrix(0, 0);
  const std::size_t width = rows.front().size();
  Matrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(width));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) throw IoError("line " + std::to_string(r + 2) + ": ragged feature row");
    for (std::size_t c = 0; c < width; ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = parse_number<double>(rows[r][c], r + 2);
    }
  }
  return out;
}

Matrix load_features_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  return load_features_csv(in);
}

void save_features_csv(const Matrix& features, const std::filesystem::path& path) {
  auto out = open_output(path);
  for (Eigen::Index c = 0; c < features.cols(); ++c) out << (c ? ",f" : "f") << c;
  out << '\n' << std::setprecision(17);
  for (Eigen::Index r = 0; r < features.rows(); ++r) {
    for (Eigen::Index c = 0; c < features.cols(); ++c) out << (c ? "," : "") << features(r, c);
    out << '\n';
  }
}

}  // namespace stack
