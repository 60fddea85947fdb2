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

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stack/graph.hpp"
#include "stack/spectral.hpp"

namespace stack {

// First-order maintenance of the generalized eigensystem under single edge
// flips, plus the orthogonality diagnostic that decides when to recompute.

/// Eigenvalue update for a flip: lambda_k + dA (2 u_kp u_kq - lambda_k (u_kp^2 + u_kq^2)).
/// `es` must be D-normalized for the pre-flip degrees. O(N).
Vector approx_eigenvalues_flip(const EigenSystem& es, const EdgeFlip& f);

/// Same update for a continuous weight change dA_pq = dA_qp = weight (with
/// matching dD_pp = dD_qq = weight).
Vector approx_eigenvalues_weighted(const EigenSystem& es, NodeId p, NodeId q, double weight);

/// Classical first-order eigenvector correction summing over all other modes.
/// O(N^2) per vector and only valid for a simple spectrum: throws
/// NumericalError when two eigenvalues are closer than gap_tolerance.
/// Kept as a reference for tests; the attack loop uses the power update.
Matrix approx_eigenvectors_first_order(const EigenSystem& es, NodeId p, NodeId q, double weight,
                                       double gap_tolerance = 1e-8);
Matrix approx_eigenvectors_first_order(const EigenSystem& es, const EdgeFlip& f,
                                       double gap_tolerance = 1e-8);

/// Rows p and q of (D + dD)^-1 (A + dA) - D^-1 A; every other row is zero.
struct DeltaC {
  NodeId p = 0;
  NodeId q = 0;
  std::vector<std::pair<NodeId, double>> row_p;
  std::vector<std::pair<NodeId, double>> row_q;

  std::size_t nonzeros() const;
  /// (Delta C x)_p and (Delta C x)_q for a column x.
  template <typename Column>
  std::pair<double, double> apply(const Column& x) const {
    double vp = 0.0;
    double vq = 0.0;
    for (const auto& [j, c] : row_p) vp += c * x(j);
    for (const auto& [j, c] : row_q) vq += c * x(j);
    return {vp, vq};
  }
  Matrix dense(std::size_t n) const;
};

/// `g` is the graph before the flip.
DeltaC build_delta_c(const Graph& g, const EdgeFlip& f);

/// Power-iteration style eigenvector update. Each column is first rescaled to
/// unit 2-norm, then
///   |lambda_k| >  zero_tol: u'_k = sign(lambda_k) u_k + (dC u_k) / |lambda_k|
///   |lambda_k| <= zero_tol: u'_k = dC u_k / ||dC u_k||_2
/// Only entries p and q move in the first branch. Returns nullopt when the
/// second branch meets dC u_k = 0, meaning an exact recompute is required.
std::optional<RowMatrix> approx_eigenvectors_power(const EigenSystem& es, const DeltaC& dc,
                                                   double zero_tol = 1e-6);

/// Scales every column so that u^T D' u = 1. Throws ValidationError on a zero column.
RowMatrix d_renormalize(const RowMatrix& vectors, const Graph& g_pert);
void d_renormalize_in_place(RowMatrix& vectors, const Graph& g_pert);

struct OrthoMode {
  enum class Kind { Exact, Sampled };
  Kind kind = Kind::Exact;
  std::size_t samples = 4096;
  std::uint64_t seed = 0;

  static OrthoMode exact() { return {}; }
  static OrthoMode sampled(std::size_t m, std::uint64_t seed) { return {Kind::Sampled, m, seed}; }
  /// Exact up to 1500 nodes, 4096 sampled pairs beyond.
  static OrthoMode automatic(std::size_t n, std::uint64_t seed = 0);
};

/// Mean absolute off-diagonal entry of U^T D' U over the N(N-1) ordered
/// pairs, or over `samples` distinct ordered pairs in sampled mode.
double ortho_error(const RowMatrix& vectors, const Graph& g_pert, const OrthoMode& mode);

}  // namespace stack
