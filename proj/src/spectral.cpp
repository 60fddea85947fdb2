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

#include "stack/spectral.hpp"

#include <cmath>

#include "stack/errors.hpp"

namespace stack {
namespace {

Matrix symmetric_filter(const Graph& g) { return filter_matrix(g, 0.5); }

Matrix matrix_power(const Matrix& s, int k) {
  Matrix out = s;
  for (int i = 1; i < k; ++i) out = (out * s).eval();
  return out;
}

}  // namespace

EigenSystem generalized_eigh(const Graph& g) {
  const Matrix s = symmetric_filter(g);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(s, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw NumericalError("generalized eigensolve did not converge");

  const Vector inv_sqrt_d = g.degrees().array().rsqrt();
  EigenSystem es;
  es.lambdas = solver.eigenvalues().reverse();
  es.vectors = inv_sqrt_d.asDiagonal() * solver.eigenvectors().rowwise().reverse();
  es.d_orthonormal = true;
  return es;
}

Vector generalized_eigenvalues(const Graph& g) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetric_filter(g), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("generalized eigensolve did not converge");
  return solver.eigenvalues().reverse();
}

double l1_objective(const Graph& g, const Graph& g_pert, int k) {
  if (g.num_nodes() != g_pert.num_nodes()) throw ValidationError("l1_objective: node counts differ");
  if (k < 1) throw ValidationError("l1_objective: k must be >= 1");
  return (matrix_power(symmetric_filter(g_pert), k) - matrix_power(symmetric_filter(g), k)).squaredNorm();
}

double spectral_power_sum(const Vector& lambdas, int k) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < lambdas.size(); ++i) {
    const double sq = lambdas(i) * lambdas(i);
    double term = sq;
    for (int j = 1; j < k; ++j) term *= sq;
    total += term;
  }
  return total;
}

double l2_from_power_sum(double baseline_root, double power_sum_pert) {
  const double gap = std::sqrt(power_sum_pert) - baseline_root;
  return gap * gap;
}

double l2_lower_bound(const Vector& lambdas, const Vector& lambdas_pert, int k) {
  if (lambdas.size() != lambdas_pert.size()) throw ValidationError("l2_lower_bound: length mismatch");
  if (k < 1) throw ValidationError("l2_lower_bound: k must be >= 1");
  return l2_from_power_sum(std::sqrt(spectral_power_sum(lambdas, k)), spectral_power_sum(lambdas_pert, k));
}

}  // namespace stack
