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

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "stack/generators.hpp"
#include "stack/graph.hpp"

namespace testing {

using stack::Graph;
using stack::Matrix;
using stack::NodeId;
using stack::Vector;

inline Graph make_graph(std::size_t n, std::vector<std::pair<NodeId, NodeId>> pairs) {
  return Graph::from_edge_list(n, pairs);
}

inline Graph path3() { return make_graph(3, {{0, 1}, {1, 2}}); }
inline Graph k3() { return make_graph(3, {{0, 1}, {0, 2}, {1, 2}}); }
inline Graph k2() { return make_graph(2, {{0, 1}}); }

inline Graph star(int leaves) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (int i = 1; i <= leaves; ++i) pairs.emplace_back(0, i);
  return make_graph(static_cast<std::size_t>(leaves + 1), pairs);
}

// Dense adjacency with unit diagonal, built straight from neighbor lists.
inline Matrix dense_adjacency(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  Matrix a = Matrix::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (NodeId j : g.neighbors(static_cast<NodeId>(i))) a(i, j) = 1.0;
  }
  return a;
}

inline Vector dense_degrees(const Graph& g) { return dense_adjacency(g).rowwise().sum(); }

inline Matrix dense_filter(const Graph& g, double alpha) {
  const Matrix a = dense_adjacency(g);
  const Vector d = a.rowwise().sum();
  Matrix s(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      s(i, j) = a(i, j) * std::pow(d(i), -alpha) * std::pow(d(j), alpha - 1.0);
    }
  }
  return s;
}

// Eigenvalues of a general square matrix (real parts), descending.
inline std::vector<double> general_eigenvalues_desc(const Matrix& m) {
  Eigen::EigenSolver<Matrix> solver(m, false);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(solver.eigenvalues()(i).real());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline std::vector<double> symmetric_eigenvalues_desc(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline std::vector<double> to_std(const Vector& v) { return {v.data(), v.data() + v.size()}; }

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// Elementwise Frobenius distance between (S'^k) and (S^k) for the symmetric filter.
inline double l1_bruteforce(const Graph& g, const Graph& h, int k) {
  Matrix s = dense_filter(g, 0.5);
  Matrix t = dense_filter(h, 0.5);
  Matrix sk = s;
  Matrix tk = t;
  for (int i = 1; i < k; ++i) {
    sk = sk * s;
    tk = tk * t;
  }
  double total = 0.0;
  for (Eigen::Index i = 0; i < s.rows(); ++i) {
    for (Eigen::Index j = 0; j < s.cols(); ++j) total += (tk(i, j) - sk(i, j)) * (tk(i, j) - sk(i, j));
  }
  return total;
}

inline double l2_formula(const std::vector<double>& lam, const std::vector<double>& lam_pert, int k) {
  double a = 0.0;
  double b = 0.0;
  for (double x : lam) a += std::pow(x, 2 * k);
  for (double x : lam_pert) b += std::pow(x, 2 * k);
  return (std::sqrt(b) - std::sqrt(a)) * (std::sqrt(b) - std::sqrt(a));
}

}  // namespace testing
