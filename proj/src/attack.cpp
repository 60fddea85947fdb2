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
#include <iostream>
#include <numeric>

#include "attack_internal.hpp"
#include "stack/centrality.hpp"
#include "stack/eigen_tracker.hpp"
#include "stack/errors.hpp"
#include "stack/rng.hpp"

namespace stack {

void AttackConfig::validate(const Graph& g) const {
  if (budget < 1) throw ValidationError("budget must be >= 1");
  if (k < 1) throw ValidationError("k must be >= 1");
  if (!(tau > 0.0)) throw ValidationError("restart threshold tau must be positive");
  if (candidate_size < static_cast<std::size_t>(budget)) {
    throw ValidationError("candidate set size must be at least the budget");
  }
  if (!(zero_tol >= 0.0)) throw ValidationError("zero_tol must be non-negative");
  if (static_cast<std::size_t>(budget) > g.num_edges()) {
    std::cerr << "warning: budget " << budget << " exceeds the edge count " << g.num_edges() << "\n";
  }
}

namespace {

AttackResult run_greedy(const Graph& g, const AttackConfig& cfg, bool restart_on_error, const char* name) {
  cfg.validate(g);
  AttackResult result;
  result.attacker = name;

  EigenSystem exact = generalized_eigh(g);
  const Vector lambdas_original = exact.lambdas;
  const double baseline_root = std::sqrt(spectral_power_sum(lambdas_original, cfg.k));

  TrackerOptions opts;
  opts.tau = cfg.tau;
  opts.restart_on_error = restart_on_error;
  opts.ortho = cfg.ortho.value_or(OrthoMode::automatic(g.num_nodes(), cfg.seed));
  opts.zero_tol = cfg.zero_tol;
  EigenTracker tracker(g, std::move(exact), opts);

  std::vector<EdgeFlip> candidates = sample_candidates(g, cfg.candidate_size, cfg.seed);
  const unsigned threads = detail::resolve_threads(cfg.threads);
  bool warned = false;

  while (static_cast<int>(result.flips.size()) < cfg.budget) {
    // Drop candidates whose fixed delta no longer matches the graph.
    std::erase_if(candidates, [&](const EdgeFlip& c) {
      return (c.delta == 1) == tracker.graph().has_edge(c.p, c.q);
    });
    const std::vector<double> scores =
        detail::score_all(tracker.system(), baseline_root, candidates, cfg.k, threads);
    const std::size_t best = detail::argmax_finite(scores, warned);
    if (best == candidates.size()) {
      result.exhausted = true;
      break;
    }
    const EdgeFlip chosen = candidates[best];
    result.flips.push_back(chosen);
    result.scores.push_back(scores[best]);
    tracker.apply(chosen);
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best));
  }

  result.restarts = tracker.restarts();
  result.restart_ortho_errors = tracker.post_restart_errors();
  detail::finalize(result, g, lambdas_original, tracker.graph(), cfg.k);
  return result;
}

// g with every flip applied in order.
Graph apply_all(const Graph& g, const std::vector<EdgeFlip>& flips) {
  Graph out = g;
  for (const EdgeFlip& f : flips) out.apply(f);
  return out;
}

}  // namespace

AttackResult run_stack(const Graph& g, const AttackConfig& cfg) {
  return run_greedy(g, cfg, true, "stack");
}

AttackResult run_stack_no_restart(const Graph& g, const AttackConfig& cfg) {
  return run_greedy(g, cfg, false, "stack-r");
}

AttackResult run_stack_independent(const Graph& g, const AttackConfig& cfg) {
  cfg.validate(g);
  AttackResult result;
  result.attacker = "stack-r-d";
  const EigenSystem exact = generalized_eigh(g);
  const double baseline_root = std::sqrt(spectral_power_sum(exact.lambdas, cfg.k));
  const std::vector<EdgeFlip> candidates = sample_candidates(g, cfg.candidate_size, cfg.seed);
  const std::vector<double> scores =
      detail::score_all(exact, baseline_root, candidates, cfg.k, detail::resolve_threads(cfg.threads));

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (std::isfinite(scores[i])) order.push_back(i);
  }
  if (order.size() != candidates.size()) std::cerr << "warning: skipping candidates with non-finite score\n";
  // Candidates are already in (p, q) order, so a stable sort keeps the tie-break.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  const std::size_t take = std::min<std::size_t>(order.size(), static_cast<std::size_t>(cfg.budget));
  for (std::size_t i = 0; i < take; ++i) {
    result.flips.push_back(candidates[order[i]]);
    result.scores.push_back(scores[order[i]]);
  }
  result.exhausted = take < static_cast<std::size_t>(cfg.budget);
  detail::finalize(result, g, exact.lambdas, apply_all(g, result.flips), cfg.k);
  return result;
}

BaselineStrategy parse_baseline(std::string_view name) {
  std::string key(name);
  std::replace(key.begin(), key.end(), '_', '-');
  if (key == "random") return BaselineStrategy::Random;
  if (key == "deg") return BaselineStrategy::Degree;
  if (key == "betw") return BaselineStrategy::Betweenness;
  if (key == "eigen") return BaselineStrategy::Eigenvector;
  if (key == "small-deg") return BaselineStrategy::SmallDegree;
  if (key == "small-betw") return BaselineStrategy::SmallBetweenness;
  if (key == "small-eigen") return BaselineStrategy::SmallEigenvector;
  throw ValidationError("unknown baseline strategy '" + std::string(name) + "'");
}

std::string_view baseline_name(BaselineStrategy s) {
  switch (s) {
    case BaselineStrategy::Random: return "random";
    case BaselineStrategy::Degree: return "deg";
    case BaselineStrategy::Betweenness: return "betw";
    case BaselineStrategy::Eigenvector: return "eigen";
    case BaselineStrategy::SmallDegree: return "small-deg";
    case BaselineStrategy::SmallBetweenness: return "small-betw";
    case BaselineStrategy::SmallEigenvector: return "small-eigen";
  }
  return "unknown";
}

AttackResult run_baseline(const Graph& g, const AttackConfig& cfg, BaselineStrategy strategy) {
  cfg.validate(g);
  AttackResult result;
  result.attacker = std::string(baseline_name(strategy));
  std::vector<EdgeFlip> candidates = sample_candidates(g, cfg.candidate_size, cfg.seed);
  const auto budget = std::min<std::size_t>(candidates.size(), static_cast<std::size_t>(cfg.budget));

  if (strategy == BaselineStrategy::Random) {
    Rng rng(cfg.seed ^ 0x5bd1e995ULL);
    rng.shuffle(candidates);
    for (std::size_t i = 0; i < budget; ++i) {
      result.flips.push_back(candidates[i]);
      result.scores.push_back(0.0);
    }
  } else {
    std::vector<double> centrality;
    bool ascending = false;
    switch (strategy) {
      case BaselineStrategy::SmallDegree: ascending = true; [[fallthrough]];
      case BaselineStrategy::Degree: centrality = degree_centrality(g); break;
      case BaselineStrategy::SmallBetweenness: ascending = true; [[fallthrough]];
      case BaselineStrategy::Betweenness: centrality = betweenness_centrality(g); break;
      case BaselineStrategy::SmallEigenvector: ascending = true; [[fallthrough]];
      case BaselineStrategy::Eigenvector: centrality = eigenvector_centrality(g); break;
      case BaselineStrategy::Random: break;
    }
    std::vector<double> keys(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      keys[i] = centrality[candidates[i].p] + centrality[candidates[i].q];
    }
    std::vector<std::size_t> order(candidates.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return ascending ? keys[a] < keys[b] : keys[a] > keys[b];
    });
    for (std::size_t i = 0; i < budget; ++i) {
      result.flips.push_back(candidates[order[i]]);
      result.scores.push_back(keys[order[i]]);
    }
  }
  result.exhausted = budget < static_cast<std::size_t>(cfg.budget);
  detail::finalize(result, g, generalized_eigenvalues(g), apply_all(g, result.flips), cfg.k);
  return result;
}

}  // namespace stack
