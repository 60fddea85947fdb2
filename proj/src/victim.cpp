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

#include "stack/victim.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>

#include "stack/errors.hpp"
#include "stack/rng.hpp"

namespace stack {
namespace {

std::vector<int> row_argmax(const Matrix& m) {
  std::vector<int> out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Eigen::Index best = 0;
    for (Eigen::Index c = 1; c < m.cols(); ++c) {
      if (m(i, c) > m(i, best)) best = c;
    }
    out[static_cast<std::size_t>(i)] = static_cast<int>(best);
  }
  return out;
}

void check_split_matches(const Graph& g, const LabeledSplit& split) {
  if (split.labels.size() != g.num_nodes()) throw ValidationError("split size differs from node count");
}

}  // namespace

int LabeledSplit::num_classes() const {
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

void LabeledSplit::validate() const {
  const std::size_t n = labels.size();
  if (train_mask.size() != n || val_mask.size() != n || test_mask.size() != n) {
    throw ValidationError("split masks must cover every node");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] < 0) throw ValidationError("labels must be non-negative");
    if (int(train_mask[i]) + int(val_mask[i]) + int(test_mask[i]) > 1) {
      throw ValidationError("split masks overlap at node " + std::to_string(i));
    }
  }
  std::vector<bool> seen(static_cast<std::size_t>(num_classes()), false);
  for (std::size_t i = 0; i < n; ++i) {
    if (train_mask[i]) seen[static_cast<std::size_t>(labels[i])] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    std::cerr << "warning: some classes have no training node\n";
  }
}

LabeledSplit make_split(const std::vector<int>& labels, std::uint64_t seed) {
  const std::size_t n = labels.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.shuffle(order);
  const auto n_train = static_cast<std::size_t>(std::llround(0.1 * static_cast<double>(n)));
  const auto n_val = static_cast<std::size_t>(std::llround(0.1 * static_cast<double>(n)));
  LabeledSplit split;
  split.labels = labels;
  split.train_mask.assign(n, false);
  split.val_mask.assign(n, false);
  split.test_mask.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < n_train) split.train_mask[order[i]] = true;
    else if (i < n_train + n_val) split.val_mask[order[i]] = true;
    else split.test_mask[order[i]] = true;
  }
  return split;
}

std::vector<int> label_propagation(const Graph& g, const LabeledSplit& split, const LabelPropagationOptions& opts) {
  check_split_matches(g, split);
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  const int classes = split.num_classes();
  if (std::none_of(split.train_mask.begin(), split.train_mask.end(), [](bool b) { return b; })) {
    throw ValidationError("label propagation needs at least one training node");
  }
  Matrix f = Matrix::Constant(n, classes, 1.0 / classes);
  auto clamp_rows = [&](Matrix& m) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!split.train_mask[static_cast<std::size_t>(i)]) continue;
      m.row(i).setZero();
      m(i, split.labels[static_cast<std::size_t>(i)]) = 1.0;
    }
  };
  clamp_rows(f);
  Matrix next(n, classes);
  for (int it = 0; it < opts.max_iter; ++it) {
    for (Eigen::Index i = 0; i < n; ++i) {
      Eigen::RowVectorXd acc = f.row(i);
      for (NodeId j : g.neighbors(static_cast<NodeId>(i))) acc += f.row(j);
      next.row(i) = acc / g.degree(static_cast<NodeId>(i));
    }
    clamp_rows(next);
    const double change = (next - f).cwiseAbs().rowwise().sum().maxCoeff();
    f.swap(next);
    if (opts.observer) opts.observer(f);
    if (change < opts.tol) break;
  }
  return row_argmax(f);
}

Matrix propagate_features(const Graph& g, const Matrix& features, int k) {
  if (k < 1) throw ValidationError("propagation order k must be >= 1");
  if (features.rows() != static_cast<Eigen::Index>(g.num_nodes())) {
    throw ValidationError("feature table needs one row per node");
  }
  const Vector inv_sqrt_d = g.degrees().array().rsqrt();
  Matrix h = features;
  Matrix next(h.rows(), h.cols());
  for (int step = 0; step < k; ++step) {
    const Matrix scaled = inv_sqrt_d.asDiagonal() * h;
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
      Eigen::RowVectorXd acc = scaled.row(i);
      for (NodeId j : g.neighbors(static_cast<NodeId>(i))) acc += scaled.row(j);
      next.row(i) = acc * inv_sqrt_d(i);
    }
    h.swap(next);
  }
  return h;
}

Matrix train_linear_surrogate(const Graph& g, const Matrix& features, const LabeledSplit& split, int k,
                              SurrogateTraining training) {
  check_split_matches(g, split);
  const Matrix h = propagate_features(g, features, k);
  const int classes = split.num_classes();
  std::vector<Eigen::Index> rows;
  std::vector<bool> present(static_cast<std::size_t>(std::max(classes, 0)), false);
  for (std::size_t i = 0; i < split.labels.size(); ++i) {
    if (split.train_mask[i]) {
      rows.push_back(static_cast<Eigen::Index>(i));
      present[static_cast<std::size_t>(split.labels[i])] = true;
    }
  }
  if (std::count(present.begin(), present.end(), true) < 2) {
    throw ValidationError("surrogate training needs at least two classes in the training set");
  }
  const auto m = static_cast<Eigen::Index>(rows.size());
  Matrix x(m, h.cols());
  Matrix y = Matrix::Zero(m, classes);
  for (Eigen::Index r = 0; r < m; ++r) {
    x.row(r) = h.row(rows[static_cast<std::size_t>(r)]);
    y(r, split.labels[static_cast<std::size_t>(rows[static_cast<std::size_t>(r)])]) = 1.0;
  }
  Matrix w = Matrix::Zero(h.cols(), classes);
  for (int epoch = 0; epoch < training.epochs; ++epoch) {
    Matrix logits = x * w;
    for (Eigen::Index r = 0; r < m; ++r) {
      auto row = logits.row(r);
      row.array() -= row.maxCoeff();
      row = row.array().exp().matrix();
      row /= row.sum();
    }
    w -= training.lr * (x.transpose() * (logits - y)) / static_cast<double>(m);
  }
  return w;
}

std::vector<int> surrogate_predict(const Graph& g, const Matrix& features, const Matrix& weights, int k) {
  return row_argmax(propagate_features(g, features, k) * weights);
}

}  // namespace stack
