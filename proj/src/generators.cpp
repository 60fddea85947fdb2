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

#include "stack/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "stack/errors.hpp"
#include "stack/rng.hpp"

namespace stack {
namespace {

using PairList = std::vector<std::pair<NodeId, NodeId>>;

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError(std::string(name) + " must lie in [0, 1]");
}

void check_nodes(std::size_t n) {
  if (n == 0) throw ValidationError("generator needs n >= 1");
}

// m distinct entries drawn uniformly from a multiset (repeats weight the draw).
std::vector<NodeId> random_subset(const std::vector<NodeId>& seq, std::size_t m, Rng& rng) {
  std::set<NodeId> targets;
  while (targets.size() < m) targets.insert(seq[rng.below(seq.size())]);
  return {targets.begin(), targets.end()};
}

}  // namespace

Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  check_nodes(n);
  check_probability(p, "edge probability p");
  Rng rng(seed);
  PairList pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) pairs.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
  }
  return Graph::from_edge_list(n, pairs);
}

Graph gen_barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < 1 || m >= n) throw ValidationError("barabasi-albert requires 1 <= m < n");
  Rng rng(seed);
  PairList pairs;
  std::vector<NodeId> targets(m);
  for (std::size_t i = 0; i < m; ++i) targets[i] = static_cast<NodeId>(i);
  std::vector<NodeId> repeated;
  for (std::size_t source = m; source < n; ++source) {
    const auto s = static_cast<NodeId>(source);
    for (NodeId t : targets) pairs.emplace_back(s, t);
    repeated.insert(repeated.end(), targets.begin(), targets.end());
    repeated.insert(repeated.end(), m, s);
    targets = random_subset(repeated, m, rng);
  }
  return Graph::from_edge_list(n, pairs);
}

Graph gen_watts_strogatz(std::size_t n, std::size_t ring_k, double p_rewire, std::uint64_t seed) {
  check_nodes(n);
  check_probability(p_rewire, "rewiring probability");
  if (ring_k % 2 != 0 || ring_k >= n) throw ValidationError("watts-strogatz requires even ring_k < n");
  Rng rng(seed);
  Graph g = Graph::from_edge_list(n, PairList{});
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t j = 1; j <= ring_k / 2; ++j) {
      g.apply(toggle_of(g, static_cast<NodeId>(u), static_cast<NodeId>((u + j) % n)));
    }
  }
  // Rewire the lattice edge (u, u+j) to (u, w) for a fresh uniform w.
  for (std::size_t j = 1; j <= ring_k / 2; ++j) {
    for (std::size_t u = 0; u < n; ++u) {
      if (!rng.bernoulli(p_rewire)) continue;
      const auto a = static_cast<NodeId>(u);
      const auto b = static_cast<NodeId>((u + j) % n);
      if (g.neighbors(a).size() + 1 >= n) continue;
      NodeId w = static_cast<NodeId>(rng.below(n));
      while (w == a || g.has_edge(a, w)) w = static_cast<NodeId>(rng.below(n));
      if (!g.has_edge(a, b)) continue;
      g.apply(toggle_of(g, a, b));
      g.apply(toggle_of(g, a, w));
    }
  }
  return g;
}

Graph gen_powerlaw_cluster(std::size_t n, std::size_t m, double p_triangle, std::uint64_t seed) {
  if (m < 1 || m >= n) throw ValidationError("powerlaw-cluster requires 1 <= m < n");
  check_probability(p_triangle, "triangle probability");
  Rng rng(seed);
  Graph g = Graph::from_edge_list(n, PairList{});
  std::vector<NodeId> repeated(m);
  for (std::size_t i = 0; i < m; ++i) repeated[i] = static_cast<NodeId>(i);
  for (std::size_t source = m; source < n; ++source) {
    const auto s = static_cast<NodeId>(source);
    std::vector<NodeId> possible = random_subset(repeated, m, rng);
    NodeId target = possible.back();
    possible.pop_back();
    g.apply({std::min(s, target), std::max(s, target), 1});
    repeated.push_back(target);
    std::size_t count = 1;
    while (count < m) {
      if (rng.bernoulli(p_triangle)) {
        std::vector<NodeId> closable;
        for (NodeId nbr : g.neighbors(target)) {
          if (nbr != s && !g.has_edge(s, nbr)) closable.push_back(nbr);
        }
        if (!closable.empty()) {
          const NodeId nbr = closable[rng.below(closable.size())];
          g.apply({std::min(s, nbr), std::max(s, nbr), 1});
          repeated.push_back(nbr);
          ++count;
          continue;
        }
      }
      // Fall back to a preferential target not yet linked to the source.
      while (!possible.empty() && g.has_edge(s, possible.back())) possible.pop_back();
      if (possible.empty()) break;
      target = possible.back();
      possible.pop_back();
      g.apply({std::min(s, target), std::max(s, target), 1});
      repeated.push_back(target);
      ++count;
    }
    repeated.insert(repeated.end(), m, s);
  }
  return g;
}

LabeledGraph gen_planted_partition(std::size_t n, std::size_t n_blocks, double p_in, double p_out,
                                   std::uint64_t seed) {
  check_nodes(n);
  check_probability(p_in, "p_in");
  check_probability(p_out, "p_out");
  if (!(p_in > p_out)) throw ValidationError("planted partition requires p_in > p_out");
  if (n_blocks == 0 || n % n_blocks != 0) throw ValidationError("n must be divisible by n_blocks");
  const std::size_t block = n / n_blocks;
  LabeledGraph out;
  out.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.labels[i] = static_cast<int>(i / block);
  Rng rng(seed);
  PairList pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const double p = out.labels[u] == out.labels[v] ? p_in : p_out;
      if (rng.bernoulli(p)) pairs.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
  }
  out.graph = Graph::from_edge_list(n, pairs);
  return out;
}

}  // namespace stack
