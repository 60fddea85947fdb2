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

#include "stack/eigen_tracker.hpp"

#include <utility>

namespace stack {

EigenTracker::EigenTracker(Graph g, TrackerOptions opts)
    : graph_(std::move(g)), opts_(opts) {
  system_ = generalized_eigh(graph_);
}

EigenTracker::EigenTracker(Graph g, EigenSystem exact, TrackerOptions opts)
    : graph_(std::move(g)), system_(std::move(exact)), opts_(opts) {}

OrthoMode EigenTracker::step_mode() const {
  OrthoMode mode = opts_.ortho;
  // Fresh sample of pairs at each step.
  mode.seed += steps_;
  return mode;
}

void EigenTracker::restart() {
  system_ = generalized_eigh(graph_);
  ++restarts_;
  post_restart_errors_.push_back(ortho_error(system_.vectors, graph_, step_mode()));
}

StepOutcome EigenTracker::apply(const EdgeFlip& f) {
  StepOutcome outcome;
  ++steps_;
  Vector lambdas = approx_eigenvalues_flip(system_, f);
  const DeltaC dc = build_delta_c(graph_, f);
  auto vectors = approx_eigenvectors_power(system_, dc, opts_.zero_tol);
  graph_.apply(f);

  if (!vectors) {
    outcome.zero_vector = true;
    outcome.restarted = true;
    restart();
    return outcome;
  }
  system_.lambdas = std::move(lambdas);
  system_.vectors = std::move(*vectors);
  d_renormalize_in_place(system_.vectors, graph_);
  system_.d_orthonormal = false;

  if (opts_.restart_on_error) {
    outcome.epsilon = ortho_error(system_.vectors, graph_, step_mode());
    if (outcome.epsilon > opts_.tau) {
      outcome.restarted = true;
      restart();
    }
  }
  return outcome;
}

}  // namespace stack
