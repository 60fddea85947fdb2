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

#include <span>

namespace stack {

// Macro-averaged classification scores over classes [0, n_classes). Each
// class counts equally; a zero denominator makes that class contribute 0.
double macro_precision(std::span<const int> truth, std::span<const int> pred, int n_classes);
double macro_recall(std::span<const int> truth, std::span<const int> pred, int n_classes);
double macro_f1(std::span<const int> truth, std::span<const int> pred, int n_classes);

struct MacroScores {
  double f1 = 0.0;
  double precision = 0.0;
  double recall = 0.0;
};
MacroScores macro_scores(std::span<const int> truth, std::span<const int> pred, int n_classes);

// Correlation coefficients. Both throw ValidationError for mismatched or
// too-short inputs and NumericalError when either side is constant.
double pearson(std::span<const double> xs, std::span<const double> ys);
/// Pearson on average ranks (ties share the mean rank).
double spearman(std::span<const double> xs, std::span<const double> ys);

}  // namespace stack
