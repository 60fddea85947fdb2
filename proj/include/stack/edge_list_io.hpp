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
#include <string>

#include "stack/graph.hpp"

namespace stack {

// Edge-list text format:
//   first non-comment line: node count n
//   then one "u v" pair per line, 0-based, p < q, sorted lexicographically.
// Lines starting with '#' and blank lines are ignored on input.

void save_edge_list(const Graph& g, std::ostream& sink);
void save_edge_list(const Graph& g, const std::filesystem::path& path);

/// Throws IoError on malformed content, an index >= n, or an explicit self-loop.
Graph load_edge_list(std::istream& source);
Graph load_edge_list(const std::filesystem::path& path);

std::string to_edge_list_string(const Graph& g);

}  // namespace stack
