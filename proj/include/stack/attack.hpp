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
#include <string>
#include <string_view>
#include <vector>

#include "stack/graph.hpp"
#include "stack/perturbation.hpp"
#include "stack/spectral.hpp"

namespace stack {

struct AttackConfig {
  int budget = 1;                       // number of flips
  int k = 1;                            // filter power order
  double tau = 0.03;                    // restart threshold
  std::size_t candidate_size = 20000;
  std::uint64_t seed = 0;
  std::optional<OrthoMode> ortho;       // unset: exact up to 1500 nodes, sampled beyond
  double zero_tol = 1e-6;
  unsigned threads = 0;                 // 0: STACK_THREADS, else hardware concurrency

  /// Throws ValidationError. Warns on stderr when the budget exceeds |E|.
  void validate(const Graph& g) const;
};

struct AttackResult {
  std::string attacker;
  std::vector<EdgeFlip> flips;
  // Selection-time score of each flip: the approximate l2 value for the
  // spectral attackers, the ranking key for the heuristics.
  std::vector<double> scores;
  // Full objective (margin + gamma * l2) for the targeted attacker.
  std::vector<double> objectives;
  int restarts = 0;
  std::vector<double> restart_ortho_errors;
  double final_l2_exact = 0.0;
  double final_l1 = 0.0;
  bool exhausted = false;  // candidates ran out before the budget
  Graph perturbed;
};

/// size distinct unordered pairs drawn uniformly from all n(n-1)/2 pairs,
/// each turned into a deletion if the edge exists and an insertion
/// otherwise. Sorted by (p, q).
std::vector<EdgeFlip> sample_candidates(const Graph& g, std::size_t size, std::uint64_t seed);

/// Approximate l2 damage of flipping f on top of es_current, measured
/// against the spectrum of the original graph.
double score_candidate(const EigenSystem& es_current, const Vector& lambdas_original,
                       const EdgeFlip& f, int k);

/// Greedy selection with first-order eigensystem updates and restarts.
AttackResult run_stack(const Graph& g, const AttackConfig& cfg);

/// As run_stack without the error-triggered restart (STACK-r).
AttackResult run_stack_no_restart(const Graph& g, const AttackConfig& cfg);

/// One-shot ranking of single-flip scores against the original eigensystem
/// (STACK-r-d).
AttackResult run_stack_independent(const Graph& g, const AttackConfig& cfg);

enum class BaselineStrategy { Random, Degree, Betweenness, Eigenvector, SmallDegree, SmallBetweenness, SmallEigenvector };

/// Accepts random, deg, betw, eigen, small-deg, small-betw, small-eigen
/// (underscores also accepted).
BaselineStrategy parse_baseline(std::string_view name);
std::string_view baseline_name(BaselineStrategy s);

/// Heuristic flips ranked by endpoint-centrality sums on the original graph.
AttackResult run_baseline(const Graph& g, const AttackConfig& cfg, BaselineStrategy strategy);

/// Linear surrogate softmax(S^k X W) used by the gray-box extension.
struct SurrogateSpec {
  Matrix features;  // N x F
  Matrix weights;   // F x C
  int k = 1;
  NodeId target = 0;
  double gamma = 0.0;
  int base_class = 0;
};

/// max_{c != c0} (S^k X W)_{v c} - (S^k X W)_{v c0} with the symmetric filter.
double surrogate_margin(const Graph& g, const SurrogateSpec& spec);

/// Greedy structure-only targeted attack maximizing margin + gamma * l2.
AttackResult run_targeted_ext(const Graph& g, const SurrogateSpec& spec, const AttackConfig& cfg);

}  // namespace stack
