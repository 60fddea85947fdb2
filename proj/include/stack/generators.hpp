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
#include <vector>

#include "stack/graph.hpp"

namespace stack {

// Random graph models. All are deterministic per seed and never produce
// stored self-loops.

/// G(n, p): each of the n(n-1)/2 pairs independently with probability p.
Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Preferential attachment from m isolated seed nodes; each new node adds m
/// edges, so the result has exactly (n - m) * m edges.
Graph gen_barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);

/// Ring lattice where each node links to its ring_k nearest neighbours, then
/// each lattice edge is rewired with probability p_rewire.
Graph gen_watts_strogatz(std::size_t n, std::size_t ring_k, double p_rewire, std::uint64_t seed);

/// Holme-Kim growth: preferential attachment with triad closure step taken
/// with probability p_triangle after each random edge.
Graph gen_powerlaw_cluster(std::size_t n, std::size_t m, double p_triangle, std::uint64_t seed);

struct LabeledGraph {
  Graph graph;
  std::vector<int> labels;
};

/// Equal-size contiguous blocks; intra-block pairs link with p_in and
/// inter-block pairs with p_out.
LabeledGraph gen_planted_partition(std::size_t n, std::size_t n_blocks, double p_in, double p_out,
                                   std::uint64_t seed);

}  // namespace stack
