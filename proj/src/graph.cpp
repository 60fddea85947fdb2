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

#include "stack/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stack/errors.hpp"

namespace stack {

void FilterParams::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ValidationError("filter alpha must lie in [0, 1]");
  if (k < 1) throw ValidationError("filter power k must be >= 1");
}

Graph Graph::from_edge_list(std::size_t n, std::span<const std::pair<NodeId, NodeId>> pairs) {
  if (n == 0) throw ValidationError("graph must have at least one node");
  Graph g;
  g.adjacency_.resize(n);
  for (const auto& [u, v] : pairs) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw ValidationError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") has an index out of range for n = " + std::to_string(n));
    }
    if (u == v) {
      throw ValidationError("explicit self-loop on node " + std::to_string(u) +
                            " (self-loops are implicit)");
    }
    g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  std::size_t twice_edges = 0;
  for (auto& row : g.adjacency_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    twice_edges += row.size();
  }
  g.num_edges_ = twice_edges / 2;
  return g;
}

void Graph::check_node(NodeId u) const {
  if (u < 0 || static_cast<std::size_t>(u) >= num_nodes()) {
    throw ValidationError("node " + std::to_string(u) + " out of range");
  }
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto& row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

Vector Graph::degrees() const {
  Vector d(static_cast<Eigen::Index>(num_nodes()));
  for (std::size_t i = 0; i < num_nodes(); ++i) {
    d(static_cast<Eigen::Index>(i)) = static_cast<double>(adjacency_[i].size() + 1);
  }
  return d;
}

double Graph::min_degree() const {
  std::size_t best = adjacency_.empty() ? 0 : adjacency_.front().size();
  for (const auto& row : adjacency_) best = std::min(best, row.size());
  return static_cast<double>(best + 1);
}

std::vector<NodePair> Graph::edges() const {
  std::vector<NodePair> out;
  out.reserve(num_edges_);
  for (std::size_t u = 0; u < num_nodes(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (static_cast<std::size_t>(v) > u) out.push_back({static_cast<NodeId>(u), v});
    }
  }
  return out;
}

void Graph::apply(const EdgeFlip& f) {
  check_node(f.p);
  check_node(f.q);
  if (f.p == f.q) throw ValidationError("self-loops cannot be flipped");
  if (f.delta != 1 && f.delta != -1) throw ValidationError("flip delta must be +1 or -1");
  auto& row_p = adjacency_[static_cast<std::size_t>(f.p)];
  auto& row_q = adjacency_[static_cast<std::size_t>(f.q)];
  auto it_p = std::lower_bound(row_p.begin(), row_p.end(), f.q);
  const bool present = it_p != row_p.end() && *it_p == f.q;
  if (f.delta == 1) {
    if (present) throw ValidationError("cannot insert existing edge {" + std::to_string(f.p) + ", " + std::to_string(f.q) + "}");
    row_p.insert(it_p, f.q);
    row_q.insert(std::lower_bound(row_q.begin(), row_q.end(), f.p), f.p);
    ++num_edges_;
  } else {
    if (!present) throw ValidationError("cannot delete missing edge {" + std::to_string(f.p) + ", " + std::to_string(f.q) + "}");
    row_p.erase(it_p);
    row_q.erase(std::lower_bound(row_q.begin(), row_q.end(), f.p));
    --num_edges_;
  }
}

Matrix Graph::adjacency_matrix() const {
  const auto n = static_cast<Eigen::Index>(num_nodes());
  Matrix a = Matrix::Identity(n, n);
  for (Eigen::Index u = 0; u < n; ++u) {
    for (NodeId v : adjacency_[static_cast<std::size_t>(u)]) a(u, v) = 1.0;
  }
  return a;
}

Graph flip(const Graph& g, const EdgeFlip& f) {
  Graph out = g;
  out.apply(f);
  return out;
}

EdgeFlip toggle_of(const Graph& g, NodeId u, NodeId v) {
  const NodeId p = std::min(u, v);
  const NodeId q = std::max(u, v);
  return {p, q, g.has_edge(p, q) ? -1 : 1};
}

Matrix filter_matrix(const Graph& g, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ValidationError("filter alpha must lie in [0, 1]");
  const Vector d = g.degrees();
  const Vector left = d.array().pow(-alpha);
  const Vector right = d.array().pow(alpha - 1.0);
  return left.asDiagonal() * g.adjacency_matrix() * right.asDiagonal();
}

std::size_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

NodePair pair_from_index(std::size_t n, std::size_t index) {
  // Row p starts at offset p*(2n - p - 1)/2.
  auto offset = [n](std::size_t p) { return p * (2 * n - p - 1) / 2; };
  std::size_t lo = 0;
  std::size_t hi = n - 1;
  while (lo + 1 < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (offset(mid) <= index) lo = mid; else hi = mid;
  }
  const std::size_t p = lo;
  const std::size_t q = p + 1 + (index - offset(p));
  return {static_cast<NodeId>(p), static_cast<NodeId>(q)};
}

}  // namespace stack
