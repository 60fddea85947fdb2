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

#include <cmath>
#include <limits>

#include "attack_internal.hpp"
#include "stack/eigen_tracker.hpp"
#include "stack/errors.hpp"

namespace stack {
namespace {

void validate_spec(const Graph& g, const SurrogateSpec& spec) {
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  if (spec.features.rows() != n) throw ValidationError("surrogate features need one row per node");
  if (spec.weights.rows() != spec.features.cols()) throw ValidationError("surrogate weights must be F x C");
  if (spec.weights.cols() < 2) throw ValidationError("surrogate needs at least two classes");
  if (spec.k < 1) throw ValidationError("surrogate k must be >= 1");
  if (spec.target < 0 || spec.target >= n) throw ValidationError("target node out of range");
  if (spec.base_class < 0 || spec.base_class >= spec.weights.cols()) throw ValidationError("base class out of range");
  if (!(spec.gamma >= 0.0)) throw ValidationError("gamma must be non-negative");
}

}  // namespace

double surrogate_margin(const Graph& g, const SurrogateSpec& spec) {
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  const Vector inv_sqrt_d = g.degrees().array().rsqrt();
  // Row v of S^k, built as S^k e_v since S is symmetric.
  Vector row = Vector::Zero(n);
  row(spec.target) = 1.0;
  Vector next(n);
  for (int step = 0; step < spec.k; ++step) {
    const Vector scaled = row.cwiseProduct(inv_sqrt_d);
    for (Eigen::Index i = 0; i < n; ++i) {
      double acc = scaled(i);
      for (NodeId j : g.neighbors(static_cast<NodeId>(i))) acc += scaled(j);
      next(i) = acc * inv_sqrt_d(i);
    }
    row.swap(next);
  }
  const Eigen::RowVectorXd logits = (row.transpose() * spec.features) * spec.weights;
  double best_other = -std::numeric_limits<double>::infinity();
  for (Eigen::Index c = 0; c < logits.size(); ++c) {
    if (c != spec.base_class) best_other = std::max(best_other, logits(c));
  }
  return best_other - logits(spec.base_class);
}

AttackResult run_targeted_ext(const Graph& g, const SurrogateSpec& spec, const AttackConfig& cfg) {
  cfg.validate(g);
  validate_spec(g, spec);
  AttackResult result;
  result.attacker = "stack-targeted";

  EigenSystem exact = generalized_eigh(g);
  const Vector lambdas_original = exact.lambdas;
  const double baseline_root = std::sqrt(spectral_power_sum(lambdas_original, cfg.k));
  TrackerOptions opts;
  opts.tau = cfg.tau;
  opts.ortho = cfg.ortho.value_or(OrthoMode::automatic(g.num_nodes(), cfg.seed));
  opts.zero_tol = cfg.zero_tol;
  EigenTracker tracker(g, std::move(exact), opts);

  std::vector<EdgeFlip> candidates = sample_candidates(g, cfg.candidate_size, cfg.seed);
  Graph work = g;
  bool warned = false;
  while (static_cast<int>(result.flips.size()) < cfg.budget) {
    std::erase_if(candidates, [&](const EdgeFlip& c) { return (c.delta == 1) == work.has_edge(c.p, c.q); });
    std::vector<double> objective(candidates.size());
    std::vector<double> l2(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      l2[i] = detail::fast_score(tracker.system(), baseline_root, candidates[i], cfg.k);
      work.apply(candidates[i]);
      const double margin = surrogate_margin(work, spec);
      work.apply(candidates[i].inverse());
      // gamma = 0 must not turn an infinite l2 into NaN.
      objective[i] = spec.gamma == 0.0 ? margin : margin + spec.gamma * l2[i];
    }
    const std::size_t best = detail::argmax_finite(objective, warned);
    if (best == candidates.size()) {
      result.exhausted = true;
      break;
    }
    const EdgeFlip chosen = candidates[best];
    result.flips.push_back(chosen);
    result.scores.push_back(l2[best]);
    result.objectives.push_back(objective[best]);
    tracker.apply(chosen);
    work.apply(chosen);
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best));
  }
  result.restarts = tracker.restarts();
  result.restart_ortho_errors = tracker.post_restart_errors();
  detail::finalize(result, g, lambdas_original, work, cfg.k);
  return result;
}

}  // namespace stack
