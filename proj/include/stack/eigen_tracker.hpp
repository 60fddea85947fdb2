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

#include <limits>
#include <vector>

#include "stack/graph.hpp"
#include "stack/perturbation.hpp"
#include "stack/spectral.hpp"

namespace stack {

struct TrackerOptions {
  double tau = 0.03;              // restart threshold on the orthogonality error
  bool restart_on_error = true;   // false disables the threshold check only
  OrthoMode ortho;
  double zero_tol = 1e-6;
};

struct StepOutcome {
  bool restarted = false;
  bool zero_vector = false;  // restart forced by the zero-eigenvalue branch
  double epsilon = std::numeric_limits<double>::quiet_NaN();
};

/// Keeps an approximate eigensystem in sync with a graph under a stream of
/// flips. Each step updates eigenvalues to first order, eigenvectors with the
/// power update, renormalizes against the new degrees, and falls back to an
/// exact solve when the update degenerates or the orthogonality error
/// exceeds tau.
class EigenTracker {
 public:
  EigenTracker(Graph g, TrackerOptions opts);
  EigenTracker(Graph g, EigenSystem exact, TrackerOptions opts);

  const Graph& graph() const { return graph_; }
  const EigenSystem& system() const { return system_; }
  int restarts() const { return restarts_; }
  /// Orthogonality error measured right after each restart.
  const std::vector<double>& post_restart_errors() const { return post_restart_errors_; }

  StepOutcome apply(const EdgeFlip& f);

  /// Exact recomputation for the current graph; counts as a restart.
  void restart();

 private:
  OrthoMode step_mode() const;

  Graph graph_;
  EigenSystem system_;
  TrackerOptions opts_;
  int restarts_ = 0;
  std::size_t steps_ = 0;
  std::vector<double> post_restart_errors_;
};

}  // namespace stack
