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
#include <functional>
#include <vector>

#include "stack/graph.hpp"

namespace stack {

/// Per-node labels with disjoint train/validation/test masks.
struct LabeledSplit {
  std::vector<int> labels;
  std::vector<bool> train_mask;
  std::vector<bool> val_mask;
  std::vector<bool> test_mask;

  int num_classes() const;
  /// Throws ValidationError on overlapping masks, size mismatch, or negative
  /// labels; warns when a class has no training node.
  void validate() const;
};

/// Seeded uniform shuffle split into 10% train, 10% validation, 80% test.
LabeledSplit make_split(const std::vector<int>& labels, std::uint64_t seed);

struct LabelPropagationOptions {
  int max_iter = 1000;
  double tol = 1e-6;
  // Called with the label distribution after every iteration (tests use it).
  std::function<void(const Matrix&)> observer;
};

/// Clamped label propagation F <- D^-1 A F. Training rows start one-hot and
/// are re-clamped after each step; other rows start uniform so that every
/// row stays a probability vector. Predictions are row argmaxes with ties
/// going to the lowest class.
std::vector<int> label_propagation(const Graph& g, const LabeledSplit& split,
                                   const LabelPropagationOptions& opts = {});

/// H = S_sym^k X.
Matrix propagate_features(const Graph& g, const Matrix& features, int k);

struct SurrogateTraining {
  int epochs = 500;
  double lr = 0.1;
};

/// Softmax regression of labels on S_sym^k X over the training rows, full
/// batch gradient descent from W = 0. Returns W (F x C).
Matrix train_linear_surrogate(const Graph& g, const Matrix& features, const LabeledSplit& split, int k,
                              SurrogateTraining training = {});

/// Row argmax of S_sym^k X W.
std::vector<int> surrogate_predict(const Graph& g, const Matrix& features, const Matrix& weights, int k);

}  // namespace stack
