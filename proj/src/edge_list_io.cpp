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

#include "stack/edge_list_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "stack/errors.hpp"

namespace stack {
namespace {

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

}  // namespace

void save_edge_list(const Graph& g, std::ostream& sink) {
  sink << g.num_nodes() << '\n';
  for (const NodePair& e : g.edges()) sink << e.p << ' ' << e.q << '\n';
  if (!sink) throw IoError("failed writing edge list");
}

void save_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  save_edge_list(g, out);
}

std::string to_edge_list_string(const Graph& g) {
  std::ostringstream out;
  save_edge_list(g, out);
  return out.str();
}

Graph load_edge_list(std::istream& source) {
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  std::vector<std::pair<NodeId, NodeId>> pairs;
  while (std::getline(source, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream fields(line);
    std::string extra;
    if (n < 0) {
      if (!(fields >> n) || (fields >> extra) || n <= 0) {
        throw IoError("line " + std::to_string(line_no) + ": expected a positive node count");
      }
      continue;
    }
    long long u = 0;
    long long v = 0;
    if (!(fields >> u >> v) || (fields >> extra)) {
      throw IoError("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw IoError("line " + std::to_string(line_no) + ": node index out of range");
    }
    if (u == v) throw IoError("line " + std::to_string(line_no) + ": explicit self-loop");
    pairs.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  if (n < 0) throw IoError("edge list has no node-count header");
  return Graph::from_edge_list(static_cast<std::size_t>(n), pairs);
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return load_edge_list(in);
}

}  // namespace stack
