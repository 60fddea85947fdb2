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

#include "stack/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "stack/errors.hpp"

namespace stack {

std::vector<double> degree_centrality(const Graph& g) {
  std::vector<double> out(g.num_nodes());
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    out[i] = static_cast<double>(g.neighbors(static_cast<NodeId>(i)).size());
  }
  return out;
}

std::vector<double> betweenness_centrality(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<double> cb(n, 0.0);
  std::vector<NodeId> order;
  std::vector<std::vector<NodeId>> preds(n);
  std::vector<double> sigma(n);
  std::vector<int> dist(n);
  std::vector<double> dep(n);
  order.reserve(n);

  for (std::size_t s = 0; s < n; ++s) {
    order.clear();
    for (std::size_t i = 0; i < n; ++i) preds[i].clear();
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(dep.begin(), dep.end(), 0.0);
    sigma[s] = 1.0;
    dist[s] = 0;

    std::queue<NodeId> frontier;
    frontier.push(static_cast<NodeId>(s));
    while (!frontier.empty()) {
      const NodeId v = frontier.front();
      frontier.pop();
      order.push_back(v);
      for (NodeId w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          frontier.push(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId v : preds[w]) dep[v] += sigma[v] / sigma[w] * (1.0 + dep[w]);
      if (static_cast<std::size_t>(w) != s) cb[w] += dep[w];
    }
  }
  // Each unordered pair was accumulated from both endpoints.
  for (double& c : cb) c *= 0.5;
  return cb;
}

std::vector<double> eigenvector_centrality(const Graph& g, PowerIterationOptions opts) {
  const std::size_t n = g.num_nodes();
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> next(n);
  for (int it = 0; it < opts.max_iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = x[i];
      for (NodeId j : g.neighbors(static_cast<NodeId>(i))) acc += x[j];
      next[i] = acc;
    }
    double norm = 0.0;
    for (double v : next) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0.0) throw NumericalError("eigenvector centrality collapsed to zero");
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= norm;
      change = std::max(change, std::abs(next[i] - x[i]));
    }
    x.swap(next);
    if (change < opts.tolerance) return x;
  }
  throw NumericalError("eigenvector centrality did not converge in " +
                       std::to_string(opts.max_iterations) + " iterations");
}

}  // namespace stack
