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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include "attack_internal.hpp"
#include "stack/errors.hpp"
#include "stack/rng.hpp"

namespace stack {

std::vector<EdgeFlip> sample_candidates(const Graph& g, std::size_t size, std::uint64_t seed) {
  const std::size_t total = pair_count(g.num_nodes());
  if (size < 1) throw ValidationError("candidate set size must be >= 1");
  if (size > total) {
    throw ValidationError("candidate set size " + std::to_string(size) + " exceeds the " +
                          std::to_string(total) + " available pairs");
  }
  Rng rng(seed);
  std::vector<EdgeFlip> out;
  out.reserve(size);
  for (std::uint64_t index : sample_distinct(total, size, rng)) {
    const NodePair pq = pair_from_index(g.num_nodes(), index);
    out.push_back(toggle_of(g, pq.p, pq.q));
  }
  return out;
}

double score_candidate(const EigenSystem& es_current, const Vector& lambdas_original, const EdgeFlip& f,
                       int k) {
  if (lambdas_original.size() != es_current.size()) {
    throw ValidationError("score_candidate: spectrum sizes differ");
  }
  if (k < 1) throw ValidationError("score_candidate: k must be >= 1");
  if (f.p < 0 || f.q < 0 || f.p >= es_current.size() || f.q >= es_current.size() || f.p == f.q) {
    throw ValidationError("score_candidate: flip out of range");
  }
  return detail::fast_score(es_current, std::sqrt(spectral_power_sum(lambdas_original, k)), f, k);
}

namespace detail {

double fast_score(const EigenSystem& es, double baseline_root, const EdgeFlip& f, int k) {
  const double* up = es.vectors.row(f.p).data();
  const double* uq = es.vectors.row(f.q).data();
  const double* lam = es.lambdas.data();
  const double w = static_cast<double>(f.delta);
  const Eigen::Index n = es.size();
  double total = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double l = lam[i] + w * (2.0 * up[i] * uq[i] - lam[i] * (up[i] * up[i] + uq[i] * uq[i]));
    const double sq = l * l;
    double term = sq;
    for (int j = 1; j < k; ++j) term *= sq;
    total += term;
  }
  return l2_from_power_sum(baseline_root, total);
}

std::vector<double> score_all(const EigenSystem& es, double baseline_root,
                              const std::vector<EdgeFlip>& candidates, int k, unsigned threads) {
  std::vector<double> scores(candidates.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) scores[i] = fast_score(es, baseline_root, candidates[i], k);
  };
  const std::size_t n = candidates.size();
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(1, n / 256));
  if (workers <= 1) {
    work(0, n);
    return scores;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin < end) pool.emplace_back(work, begin, end);
  }
  pool.clear();  // joins
  return scores;
}

std::size_t argmax_finite(const std::vector<double>& scores, bool& warned) {
  std::size_t best = scores.size();
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i])) {
      if (!warned) {
        std::cerr << "warning: skipping candidate with non-finite score\n";
        warned = true;
      }
      continue;
    }
    if (best == scores.size() || scores[i] > scores[best]) best = i;
  }
  return best;
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("STACK_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void finalize(AttackResult& result, const Graph& original, const Vector& lambdas_original,
              const Graph& perturbed, int k) {
  result.final_l2_exact = l2_lower_bound(lambdas_original, generalized_eigenvalues(perturbed), k);
  result.final_l1 = l1_objective(original, perturbed, k);
  result.perturbed = perturbed;
}

}  // namespace detail
}  // namespace stack
