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
#include <vector>

#include "stack/attack.hpp"

namespace stack::detail {

// l2 score of one flip with the baseline root sqrt(sum lam^2k) precomputed.
double fast_score(const EigenSystem& es, double baseline_root, const EdgeFlip& f, int k);

// Scores every candidate against a read-only snapshot; the output order
// matches `candidates` regardless of the thread count.
std::vector<double> score_all(const EigenSystem& es, double baseline_root,
                              const std::vector<EdgeFlip>& candidates, int k, unsigned threads);

// Index of the best finite score; ties go to the earliest entry. Returns
// candidates.size() when nothing finite remains.
std::size_t argmax_finite(const std::vector<double>& scores, bool& warned);

unsigned resolve_threads(unsigned requested);

// Fills final_l2_exact / final_l1 / perturbed.
void finalize(AttackResult& result, const Graph& original, const Vector& lambdas_original,
              const Graph& perturbed, int k);

}  // namespace stack::detail
