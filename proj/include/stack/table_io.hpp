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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "stack/graph.hpp"

namespace stack {

// Node tables as CSV: one header line, then one row per node id in order.
// Labels have a single integer column; features have F real columns.

std::vector<int> load_labels_csv(std::istream& in);
std::vector<int> load_labels_csv(const std::filesystem::path& path);
void save_labels_csv(const std::vector<int>& labels, const std::filesystem::path& path);

Matrix load_features_csv(std::istream& in);
Matrix load_features_csv(const std::filesystem::path& path);
void save_features_csv(const Matrix& features, const std::filesystem::path& path);

}  // namespace stack
