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

#include "stack/graph.hpp"

namespace stack {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Generalized eigenpairs of the pencil (A, D): A u_i = lambda_i D u_i.
///
/// Eigenvalues are stored in non-increasing order when freshly computed;
/// column i of `vectors` is u_i. Row-major storage keeps the per-node slice
/// (u_1p, ..., u_Np) contiguous, which is what the flip scoring reads.
struct EigenSystem {
  Vector lambdas;
  RowMatrix vectors;
  // True when vectors satisfy U^T D U = I for the degree matrix they were
  // computed or last renormalized against (diagonal only after updates).
  bool d_orthonormal = false;

  Eigen::Index size() const { return lambdas.size(); }
};

/// Exact solve through the symmetric reduction D^-1/2 A D^-1/2 = V L V^T with
/// U = D^-1/2 V. Throws NumericalError if the dense solver fails.
EigenSystem generalized_eigh(const Graph& g);

/// Dense symmetric solve of D^-1/2 A D^-1/2, eigenvalues only, non-increasing.
Vector generalized_eigenvalues(const Graph& g);

/// Exact attack objective ||S'^k - S^k||_F^2 with the symmetric filter.
double l1_objective(const Graph& g, const Graph& g_pert, int k);

/// Sum of lambda_i^(2k).
double spectral_power_sum(const Vector& lambdas, int k);

/// Spectrum-only lower bound (sqrt(sum lam'^2k) - sqrt(sum lam^2k))^2.
double l2_lower_bound(const Vector& lambdas, const Vector& lambdas_pert, int k);

/// Same bound with the baseline root sqrt(sum lam^2k) precomputed.
double l2_from_power_sum(double baseline_root, double power_sum_pert);

}  // namespace stack
