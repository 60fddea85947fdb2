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

#include "stack/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "stack/errors.hpp"
#include "stack/rng.hpp"

namespace stack {
namespace {

// Below this the zero-eigenvalue branch treats dC u_k as the zero vector.
// Columns are unit-norm and dC entries are O(1), so anything smaller is
// round-off from eigenvector entries that vanish near p and q.
constexpr double kZeroUpdateNorm = 1e-12;

void check_flip_nodes(const EigenSystem& es, NodeId p, NodeId q) {
  if (p < 0 || q < 0 || p >= es.vectors.rows() || q >= es.vectors.rows() || p == q) {
    throw ValidationError("flip endpoints out of range for eigensystem");
  }
}

}  // namespace

Vector approx_eigenvalues_weighted(const EigenSystem& es, NodeId p, NodeId q, double weight) {
  check_flip_nodes(es, p, q);
  const auto up = es.vectors.row(p);
  const auto uq = es.vectors.row(q);
  Vector out(es.size());
  for (Eigen::Index k = 0; k < es.size(); ++k) {
    const double lam = es.lambdas(k);
    out(k) = lam + weight * (2.0 * up(k) * uq(k) - lam * (up(k) * up(k) + uq(k) * uq(k)));
  }
  return out;
}

Vector approx_eigenvalues_flip(const EigenSystem& es, const EdgeFlip& f) {
  return approx_eigenvalues_weighted(es, f.p, f.q, static_cast<double>(f.delta));
}

Matrix approx_eigenvectors_first_order(const EigenSystem& es, NodeId p, NodeId q, double weight,
                                       double gap_tolerance) {
  check_flip_nodes(es, p, q);
  const Eigen::Index n = es.size();
  std::vector<double> sorted(es.lambdas.data(), es.lambdas.data() + n);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] - sorted[i - 1] <= gap_tolerance) {
      throw NumericalError("first-order eigenvector update needs a simple spectrum");
    }
  }
  const auto up = es.vectors.row(p);
  const auto uq = es.vectors.row(q);
  // coeff(i, k) is the weight of u_i in the corrected u'_k.
  Matrix coeff(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double lam = es.lambdas(k);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k) {
        coeff(i, k) = 1.0 - 0.5 * weight * (up(k) * up(k) + uq(k) * uq(k));
      } else {
        const double num = up(i) * uq(k) + uq(i) * up(k) - lam * (up(i) * up(k) + uq(i) * uq(k));
        coeff(i, k) = weight * num / (lam - es.lambdas(i));
      }
    }
  }
  return es.vectors * coeff;
}

Matrix approx_eigenvectors_first_order(const EigenSystem& es, const EdgeFlip& f, double gap_tolerance) {
  return approx_eigenvectors_first_order(es, f.p, f.q, static_cast<double>(f.delta), gap_tolerance);
}

std::size_t DeltaC::nonzeros() const { return row_p.size() + row_q.size(); }

Matrix DeltaC::dense(std::size_t n) const {
  const auto size = static_cast<Eigen::Index>(n);
  Matrix out = Matrix::Zero(size, size);
  for (const auto& [j, c] : row_p) out(p, j) = c;
  for (const auto& [j, c] : row_q) out(q, j) = c;
  return out;
}

DeltaC build_delta_c(const Graph& g, const EdgeFlip& f) {
  if (f.p == f.q) throw ValidationError("self-loops cannot be flipped");
  if ((f.delta == 1) == g.has_edge(f.p, f.q)) throw ValidationError("flip inconsistent with graph");
  const double old_pq = f.delta == 1 ? 0.0 : 1.0;
  const double new_pq = 1.0 - old_pq;

  auto row = [&](NodeId r, NodeId other) {
    const double d_old = g.degree(r);
    const double d_new = d_old + f.delta;
    std::vector<NodeId> cols = g.neighbors(r);
    cols.push_back(r);
    cols.push_back(other);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    std::vector<std::pair<NodeId, double>> entries;
    entries.reserve(cols.size());
    for (NodeId j : cols) {
      const double a_old = j == other ? old_pq : 1.0;
      const double a_new = j == other ? new_pq : 1.0;
      entries.emplace_back(j, a_new / d_new - a_old / d_old);
    }
    return entries;
  };

  DeltaC dc;
  dc.p = f.p;
  dc.q = f.q;
  dc.row_p = row(f.p, f.q);
  dc.row_q = row(f.q, f.p);
  return dc;
}

std::optional<RowMatrix> approx_eigenvectors_power(const EigenSystem& es, const DeltaC& dc,
                                                   double zero_tol) {
  RowMatrix out = es.vectors;
  for (Eigen::Index k = 0; k < out.cols(); ++k) {
    auto col = out.col(k);
    const double norm = col.norm();
    if (norm == 0.0) throw ValidationError("eigenvector column has zero norm");
    col /= norm;
    const auto [vp, vq] = dc.apply(col);
    const double lam = es.lambdas(k);
    if (std::abs(lam) > zero_tol) {
      if (lam < 0.0) col = -col;
      col(dc.p) += vp / std::abs(lam);
      col(dc.q) += vq / std::abs(lam);
    } else {
      const double update_norm = std::hypot(vp, vq);
      if (update_norm <= kZeroUpdateNorm) return std::nullopt;
      col.setZero();
      col(dc.p) = vp / update_norm;
      col(dc.q) = vq / update_norm;
    }
  }
  return out;
}

void d_renormalize_in_place(RowMatrix& vectors, const Graph& g_pert) {
  if (static_cast<std::size_t>(vectors.rows()) != g_pert.num_nodes()) {
    throw ValidationError("d_renormalize: row count differs from node count");
  }
  const Vector d = g_pert.degrees();
  const Eigen::RowVectorXd weights = d.transpose() * vectors.array().square().matrix();
  for (Eigen::Index k = 0; k < weights.size(); ++k) {
    if (!(weights(k) > 0.0)) throw ValidationError("d_renormalize: zero column");
  }
  vectors *= weights.array().rsqrt().matrix().asDiagonal();
}

RowMatrix d_renormalize(const RowMatrix& vectors, const Graph& g_pert) {
  RowMatrix out = vectors;
  d_renormalize_in_place(out, g_pert);
  return out;
}

OrthoMode OrthoMode::automatic(std::size_t n, std::uint64_t seed) {
  return n <= 1500 ? exact() : sampled(4096, seed);
}

double ortho_error(const RowMatrix& vectors, const Graph& g_pert, const OrthoMode& mode) {
  const Eigen::Index n = vectors.cols();
  if (n < 2) return 0.0;
  const Vector d = g_pert.degrees();
  const auto ordered_pairs = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1);

  if (mode.kind == OrthoMode::Kind::Exact) {
    const Matrix gram = vectors.transpose() * (d.asDiagonal() * vectors);
    const double total = gram.cwiseAbs().sum() - gram.diagonal().cwiseAbs().sum();
    return total / static_cast<double>(ordered_pairs);
  }

  if (mode.samples == 0) throw ValidationError("sampled ortho_error needs at least one pair");
  Rng rng(mode.seed);
  const auto picks = sample_distinct(ordered_pairs, std::min<std::uint64_t>(mode.samples, ordered_pairs), rng);
  double total = 0.0;
  for (std::uint64_t t : picks) {
    const auto i = static_cast<Eigen::Index>(t / static_cast<std::uint64_t>(n - 1));
    auto j = static_cast<Eigen::Index>(t % static_cast<std::uint64_t>(n - 1));
    if (j >= i) ++j;
    total += std::abs((vectors.col(i).array() * d.array() * vectors.col(j).array()).sum());
  }
  return total / static_cast<double>(picks.size());
}

}  // namespace stack
