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

#include <vector>

#include "stack/graph.hpp"

namespace stack {

// Node centralities used by the heuristic baselines. Implicit self-loops are
// ignored everywhere here.

/// Off-diagonal neighbour count.
std::vector<double> degree_centrality(const Graph& g);

/// Brandes betweenness, counting each unordered endpoint pair once and
/// excluding the endpoints themselves. Unnormalized.
std::vector<double> betweenness_centrality(const Graph& g);

struct PowerIterationOptions {
  int max_iterations = 1000;
  double tolerance = 1e-10;  // on the infinity-norm change between iterates
};

/// Dominant eigenvector of the adjacency, unit 2-norm and non-negative.
/// Iterates with (A_offdiag + I), which has the same eigenvectors and avoids
/// oscillation on bipartite graphs. Throws NumericalError if it stalls.
std::vector<double> eigenvector_centrality(const Graph& g, PowerIterationOptions opts = {});

}  // namespace stack
