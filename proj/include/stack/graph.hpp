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

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace stack {

using NodeId = int;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// An unordered node pair {p, q}, normalized so that p < q.
struct NodePair {
  NodeId p = 0;
  NodeId q = 0;

  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

/// A single off-diagonal toggle. delta is +1 for an insertion and -1 for a
/// deletion; the matching degree change lands on both endpoints.
struct EdgeFlip {
  NodeId p = 0;
  NodeId q = 0;
  int delta = 1;

  NodePair pair() const { return {p, q}; }
  EdgeFlip inverse() const { return {p, q, -delta}; }

  friend bool operator==(const EdgeFlip&, const EdgeFlip&) = default;
};

/// Parameters of the filter S = D^-alpha A D^(alpha-1) and its power order.
struct FilterParams {
  double alpha = 0.5;
  int k = 1;

  void validate() const;
};

/// Undirected, unweighted graph. Every node carries an implicit unit
/// self-loop: A_ii = 1 and d_i = 1 + |N(i)|. Self-loops are never stored in
/// the edge set and can never be flipped.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from (u, v) pairs; duplicates and mirrored pairs collapse.
  /// Throws ValidationError on n == 0, out-of-range indices, or u == v.
  static Graph from_edge_list(std::size_t n, std::span<const std::pair<NodeId, NodeId>> pairs);

  std::size_t num_nodes() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  bool has_edge(NodeId u, NodeId v) const;

  /// Off-diagonal neighbors of u, sorted ascending.
  const std::vector<NodeId>& neighbors(NodeId u) const { return adjacency_[static_cast<std::size_t>(u)]; }

  /// Row sum of A including the self-loop.
  double degree(NodeId u) const { return static_cast<double>(adjacency_[static_cast<std::size_t>(u)].size() + 1); }
  Vector degrees() const;
  double min_degree() const;

  /// All edges as sorted (p < q) pairs in lexicographic order.
  std::vector<NodePair> edges() const;

  /// Toggles f in place. Throws ValidationError when f.delta disagrees with
  /// the current membership of {p, q} or when p == q.
  void apply(const EdgeFlip& f);

  /// Dense adjacency with the unit diagonal.
  Matrix adjacency_matrix() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  void check_node(NodeId u) const;

  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t num_edges_ = 0;
};

/// Returns a copy of g with f applied.
Graph flip(const Graph& g, const EdgeFlip& f);

/// Builds the flip that toggles {u, v} in g (deletion if present).
EdgeFlip toggle_of(const Graph& g, NodeId u, NodeId v);

/// Dense S = D^-alpha A D^(alpha-1).
Matrix filter_matrix(const Graph& g, double alpha);

/// Number of unordered off-diagonal pairs, n(n-1)/2.
std::size_t pair_count(std::size_t n);

/// Maps an index in [0, n(n-1)/2) to its pair in row-major order.
NodePair pair_from_index(std::size_t n, std::size_t index);

}  // namespace stack
